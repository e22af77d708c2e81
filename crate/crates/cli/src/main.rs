//! `steinhaus` command-line tool.
//!
//! Exit codes: 0 success, 2 input or parse error, 3 domain error (bounds,
//! non-triangular lengths), 4 failed internal cross-check.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use steinhaus::binomial::{minor_bareiss, minor_vandermonde, triangular_minor_closed_form, RowSelection};
use steinhaus::generating::{
    census, d3_orbits, delahan_index_set, enumerate_generating, is_generating,
    is_generating_brute_force, DEFAULT_ENUMERATION_BOUND,
};
use steinhaus::graph::{embed_with, extract, graph_from_seq, universal_parameter, w_set, SolveStrategy};
use steinhaus::{BitRow, Error, IndexSet, SimpleGraph, SteinhausTriangle, Symmetry};

/// Largest size the `check --brute-force` oracle runs on.
const BRUTE_FORCE_LIMIT: usize = 5;

#[derive(Parser)]
#[command(name = "steinhaus", version, about = "Steinhaus triangles, Steinhaus graphs and universal embeddings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the triangle determined by a top row, right side or left side.
    Triangle {
        /// Top row as a 0/1 string.
        seq: Option<String>,
        #[arg(long, value_name = "BITS")]
        from_right: Option<String>,
        #[arg(long, value_name = "BITS")]
        from_left: Option<String>,
        /// Rotate by 120 or 240 degrees; repeatable, applied in order.
        #[arg(long, value_parser = ["120", "240"])]
        rotate: Vec<String>,
        /// Mirror every row (applied after rotations).
        #[arg(long)]
        reflect: bool,
        #[arg(long)]
        pretty: bool,
    },
    /// Enumerate generating index sets of the size-n triangle.
    Gensets {
        n: usize,
        #[arg(long)]
        count_only: bool,
        /// Group the sets under the six triangle symmetries.
        #[arg(long)]
        orbits: bool,
        #[arg(long, env = "STEINHAUS_ENUM_BOUND", default_value_t = DEFAULT_ENUMERATION_BOUND)]
        bound: usize,
    },
    /// Decide whether each index set in a file is generating.
    Check {
        /// File with one `n; (i,j) ...` line per set, or `-` for stdin.
        file: PathBuf,
        /// Also run the exhaustive projection oracle (n <= 5).
        #[arg(long)]
        brute_force: bool,
    },
    /// Exact binomial minors.
    Minor {
        /// Strictly increasing row indices.
        rows: Vec<u64>,
        /// Column indices (distinct); defaults to 0..n-1.
        #[arg(long, num_args = 1..)]
        cols: Option<Vec<u64>>,
        /// Evaluate the triangular-number product for this n instead.
        #[arg(long, value_name = "N", conflicts_with_all = ["rows", "cols"])]
        closed_form_n: Option<usize>,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },
    /// Find the Steinhaus graph whose induced subgraph on W_n is the input.
    Embed {
        /// Edge-list file, or `-` for stdin.
        file: Option<PathBuf>,
        /// Print the index set A_N (N defaults to the input's vertex count).
        #[arg(long, value_name = "N", num_args = 0..=1)]
        show_index_set: Option<Option<usize>>,
        /// Extract again and compare with the input.
        #[arg(long)]
        verify: bool,
        /// Print the Steinhaus graph in DOT instead of the sequence.
        #[arg(long)]
        dot: bool,
        #[arg(long, value_enum, default_value_t = Solver::Block)]
        solver: Solver,
    },
    /// Induced subgraph on W_n of the Steinhaus graph of a sequence.
    Extract {
        seq: String,
        #[arg(long)]
        dot: bool,
        /// With --dot, label each vertex with its vertex in the big graph.
        #[arg(long, requires = "dot")]
        annotate: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Vandermonde,
    Bareiss,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum Solver {
    Block,
    Generic,
    CrossCheck,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Self { code: 2, message: message.into() }
    }

    fn domain(message: impl Into<String>) -> Self {
        Self { code: 3, message: message.into() }
    }

    fn internal(message: impl Into<String>) -> Self {
        Self { code: 4, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_)
            | Error::InvalidSelection(_)
            | Error::DuplicatePosition { .. }
            | Error::DuplicateVertex(_)
            | Error::VertexOutOfRange { .. } => 2,
            Error::CrossCheck(_) | Error::NonIntegerQuotient(_) => 4,
            _ => 3,
        };
        Self { code, message: e.to_string() }
    }
}

type Output = Result<String, Failure>;

fn read_input(path: &PathBuf) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::input(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
    }
}

fn parse_bits(s: &str) -> Result<BitRow, Failure> {
    s.trim().parse().map_err(Failure::from)
}

fn cmd_triangle(
    seq: Option<String>,
    from_right: Option<String>,
    from_left: Option<String>,
    rotate: &[String],
    reflect: bool,
    pretty: bool,
) -> Output {
    let mut t = match (seq, from_right, from_left) {
        (Some(s), None, None) => SteinhausTriangle::from_top_row(&parse_bits(&s)?),
        (None, Some(r), None) => SteinhausTriangle::from_right_side(&parse_bits(&r)?),
        (None, None, Some(l)) => SteinhausTriangle::from_left_side(&parse_bits(&l)?),
        _ => return Err(Failure::input("give exactly one of SEQ, --from-right, --from-left")),
    };
    for angle in rotate {
        t = t.transform(if angle == "120" { Symmetry::Rotate120 } else { Symmetry::Rotate240 });
    }
    if reflect {
        t = t.reflect();
    }
    Ok(if pretty { t.to_pretty() } else { t.to_text() })
}

fn cmd_gensets(n: usize, count_only: bool, orbits: bool, bound: usize) -> Output {
    let sets = enumerate_generating(n, bound)?;
    let mut out = String::new();
    if count_only {
        writeln!(out, "{}", census(n, bound)?).unwrap();
        if orbits {
            writeln!(out, "orbits={}", d3_orbits(&sets)?.len()).unwrap();
        }
    } else if orbits {
        let classes = d3_orbits(&sets)?;
        writeln!(out, "orbits={}", classes.len()).unwrap();
        for orbit in classes {
            writeln!(out, "members={} {}", orbit.members.len(), orbit.representative).unwrap();
        }
    } else {
        for set in sets {
            writeln!(out, "{set}").unwrap();
        }
    }
    Ok(out)
}

fn cmd_check(file: &PathBuf, brute_force: bool) -> Output {
    let text = read_input(file)?;
    let mut out = String::new();
    let mut disagreement = None;
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let set: IndexSet = line
            .parse()
            .map_err(|e: Error| Failure::input(format!("line {}: {e}", lineno + 1)))?;
        let verdict = is_generating(&set)?;
        write!(out, "{set} => {}", if verdict { "generating" } else { "not_generating" }).unwrap();
        if brute_force {
            if set.size() <= BRUTE_FORCE_LIMIT {
                let oracle = is_generating_brute_force(&set)?;
                if oracle == verdict {
                    out.push_str(" brute_force=agree");
                } else {
                    out.push_str(" brute_force=DISAGREE");
                    disagreement.get_or_insert(lineno + 1);
                }
            } else {
                out.push_str(" brute_force=skipped");
            }
        }
        out.push('\n');
    }
    if let Some(line) = disagreement {
        print!("{out}");
        return Err(Failure::internal(format!("rank criterion and oracle disagree on line {line}")));
    }
    Ok(out)
}

fn cmd_minor(rows: Vec<u64>, cols: Option<Vec<u64>>, closed_form_n: Option<usize>, method: Method) -> Output {
    if let Some(n) = closed_form_n {
        if n == 0 {
            return Err(Failure::domain("--closed-form-n needs n >= 1"));
        }
        return Ok(format!("{}\n", triangular_minor_closed_form(n)));
    }
    if rows.is_empty() {
        return Err(Failure::input("give at least one row index"));
    }
    let sel = RowSelection::new(rows)?;
    let standard: Vec<u64> = (0..sel.len() as u64).collect();
    let cols = cols.unwrap_or_else(|| standard.clone());
    if cols != standard && !matches!(method, Method::Bareiss) {
        return Err(Failure::domain("the Vandermonde formula needs columns 0..n-1; use --method bareiss"));
    }
    Ok(match method {
        Method::Vandermonde => format!("{}\n", minor_vandermonde(&sel)?),
        Method::Bareiss => format!("{}\n", minor_bareiss(&sel, &cols)?),
        Method::Both => {
            let v = minor_vandermonde(&sel)?;
            let b = minor_bareiss(&sel, &cols)?;
            if v != b {
                println!("{v} {b} MISMATCH");
                return Err(Failure::internal("Vandermonde and Bareiss determinants differ"));
            }
            format!("{v} {b} MATCH\n")
        }
    })
}

fn cmd_embed(
    file: Option<PathBuf>,
    show_index_set: Option<Option<usize>>,
    verify: bool,
    dot: bool,
    solver: Solver,
) -> Output {
    let mut out = String::new();
    let graph = match &file {
        Some(path) => Some(read_input(path)?.parse::<SimpleGraph>()?),
        None => None,
    };
    if let Some(h) = &graph {
        let strategy = match solver {
            Solver::Block => SolveStrategy::BlockForward,
            Solver::Generic => SolveStrategy::Generic,
            Solver::CrossCheck => SolveStrategy::CrossCheck,
        };
        let g = embed_with(h, strategy)?;
        if dot {
            out.push_str(&g.to_dot());
        } else {
            writeln!(out, "order={}", g.order()).unwrap();
            writeln!(out, "S={}", g.seq()).unwrap();
        }
        if verify {
            if extract(&g)? != *h {
                print!("{out}");
                return Err(Failure::internal("extracted graph differs from the input"));
            }
            if !dot {
                out.push_str("VERIFIED\n");
            }
        }
    }
    match show_index_set {
        Some(requested) => {
            let n = match (requested, &graph) {
                (Some(n), _) => n,
                (None, Some(h)) => h.order(),
                (None, None) => return Err(Failure::input("--show-index-set needs N or an input graph")),
            };
            if n == 0 {
                return Err(Failure::domain("A_n is defined for n >= 1"));
            }
            writeln!(out, "{}", delahan_index_set(n).index_set()).unwrap();
        }
        None if graph.is_none() => return Err(Failure::input("missing edge-list file")),
        None => {}
    }
    Ok(out)
}

fn cmd_extract(seq: &str, dot: bool, annotate: bool) -> Output {
    let s = parse_bits(seq)?;
    let g = graph_from_seq(&s);
    let n = universal_parameter(g.order())
        .map_err(|_| Failure::domain(format!("sequence length {} is not a triangular number", s.len())))?;
    let h = extract(&g)?;
    Ok(if dot {
        if annotate {
            let w = w_set(n);
            h.to_dot_with_labels(|v| Some(format!("{v} (w={})", w[v - 1])))
        } else {
            h.to_dot()
        }
    } else {
        h.to_edge_list()
    })
}

fn run(cli: Cli) -> Output {
    match cli.command {
        Command::Triangle { seq, from_right, from_left, rotate, reflect, pretty } => {
            cmd_triangle(seq, from_right, from_left, &rotate, reflect, pretty)
        }
        Command::Gensets { n, count_only, orbits, bound } => cmd_gensets(n, count_only, orbits, bound),
        Command::Check { file, brute_force } => cmd_check(&file, brute_force),
        Command::Minor { rows, cols, closed_form_n, method } => cmd_minor(rows, cols, closed_form_n, method),
        Command::Embed { file, show_index_set, verify, dot, solver } => {
            cmd_embed(file, show_index_set, verify, dot, solver)
        }
        Command::Extract { seq, dot, annotate } => cmd_extract(&seq, dot, annotate),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            let mut stdout = io::stdout().lock();
            let _ = stdout.write_all(out.as_bytes());
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
