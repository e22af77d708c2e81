//! Steinhaus graphs, simple graphs, and the universal embedding.
//!
//! Vertices are numbered from 1. The strict upper triangle of an adjacency
//! matrix is stored as a triangle of rows: cell `(p, q)` holds the pair
//! `(p + 1, p + q + 2)`. For a Steinhaus graph that triangle is exactly the
//! Steinhaus triangle of its sequence.
//!
//! The induced subgraph of a Steinhaus graph of order `t_{n-1} + 1` on
//! `W_n = {t_i + 1}` is an arbitrary graph on `n` vertices, and every such
//! graph arises exactly once. [`embed`] computes the preimage.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::generating::{delahan_index_set, reconstruct, DelahanIndexSet};
use crate::gf2::{BitMatrix, BitRow};
use crate::triangle::{triangular_number, triangular_root, SteinhausTriangle, TrianglePos};

/// Triangle cell holding the adjacency bit of the pair `u < v`.
pub fn pair_to_cell(u: usize, v: usize) -> TrianglePos {
    assert!(1 <= u && u < v, "pair must satisfy 1 <= u < v");
    TrianglePos::new(u - 1, v - u - 1)
}

/// Vertex pair `(u, v)`, `u < v`, stored in triangle cell `p`.
pub fn cell_to_pair(p: TrianglePos) -> (usize, usize) {
    (p.i + 1, p.i + p.j + 2)
}

/// A graph on vertices `1..=n` without loops or multi-edges.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    n: usize,
    upper: Vec<BitRow>,
}

impl SimpleGraph {
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            upper: (1..n).map(|p| BitRow::zeros(n - p)).collect(),
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n);
        for &(a, b) in edges {
            for v in [a, b] {
                if v == 0 || v > n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            if a == b {
                return Err(Error::Parse(format!("loop at vertex {a}")));
            }
            let (u, v) = (a.min(b), a.max(b));
            if g.has_edge(u, v) {
                return Err(Error::Parse(format!("duplicate edge {u} {v}")));
            }
            g.set_edge(u, v, true);
        }
        Ok(g)
    }

    /// Graph whose upper triangle is the given triangle of rows (`γ`).
    pub fn from_upper_triangle(rows: Vec<BitRow>) -> Result<Self> {
        let n = rows.len() + 1;
        for (p, r) in rows.iter().enumerate() {
            if r.len() != n - 1 - p {
                return Err(Error::ShapeMismatch(format!(
                    "upper-triangle row {p} has {} bits, expected {}",
                    r.len(),
                    n - 1 - p
                )));
            }
        }
        Ok(Self { n, upper: rows })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn upper_triangle(&self) -> &[BitRow] {
        &self.upper
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.n {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    /// # Panics
    /// Panics if either vertex is outside `1..=n`.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        assert!(u >= 1 && v >= 1 && u <= self.n && v <= self.n, "vertex out of range");
        if u == v {
            return false;
        }
        let p = pair_to_cell(u.min(v), u.max(v));
        self.upper[p.i].get(p.j)
    }

    pub fn set_edge(&mut self, u: usize, v: usize, present: bool) {
        assert!(u != v, "loops are not allowed");
        let p = pair_to_cell(u.min(v), u.max(v));
        self.upper[p.i].set(p.j, present);
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.upper
            .iter()
            .enumerate()
            .flat_map(|(p, row)| row.ones().map(move |q| cell_to_pair(TrianglePos::new(p, q))))
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.upper.iter().map(BitRow::count_ones).sum()
    }

    /// `G[W]`, relabelled `1..=|W|` in ascending order of `W`.
    pub fn induced_subgraph(&self, w: &[usize]) -> Result<SimpleGraph> {
        let mut verts = w.to_vec();
        verts.sort_unstable();
        for pair in verts.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::DuplicateVertex(pair[0]));
            }
        }
        for &v in &verts {
            self.check_vertex(v)?;
        }
        let m = verts.len();
        let mut sub = SimpleGraph::empty(m);
        for a in 0..m {
            for b in a + 1..m {
                if self.has_edge(verts[a], verts[b]) {
                    sub.set_edge(a + 1, b + 1, true);
                }
            }
        }
        Ok(sub)
    }

    /// Symmetric difference of edge sets.
    pub fn xor(&self, other: &SimpleGraph) -> Result<SimpleGraph> {
        if self.n != other.n {
            return Err(Error::SizeMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(SimpleGraph {
            n: self.n,
            upper: self.upper.iter().zip(&other.upper).map(|(a, b)| a ^ b).collect(),
        })
    }

    /// `n m` followed by one `u v` line per edge.
    pub fn to_edge_list(&self) -> String {
        let edges = self.edges();
        let mut out = format!("{} {}\n", self.n, edges.len());
        for (u, v) in edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    pub fn to_dot(&self) -> String {
        self.to_dot_with_labels(|_| None)
    }

    /// DOT output with an optional extra label per vertex.
    pub fn to_dot_with_labels(&self, label: impl Fn(usize) -> Option<String>) -> String {
        dot(self.n, &self.edges(), label)
    }
}

fn dot(n: usize, edges: &[(usize, usize)], label: impl Fn(usize) -> Option<String>) -> String {
    let mut out = String::from("graph G {\n");
    for v in 1..=n {
        match label(v) {
            Some(text) => out.push_str(&format!("  {v} [label=\"{text}\"];\n")),
            None => out.push_str(&format!("  {v};\n")),
        }
    }
    for (u, v) in edges {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}

impl FromStr for SimpleGraph {
    type Err = Error;

    /// Parses the edge-list format. Loops, duplicate edges, out-of-range
    /// vertices and a wrong edge count are rejected.
    fn from_str(s: &str) -> Result<Self> {
        let mut lines = s.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines.next().ok_or_else(|| Error::Parse("missing `n m` header".into()))?;
        let nums = parse_numbers(header)?;
        let [n, m] = nums[..] else {
            return Err(Error::Parse(format!("header {header:?} must be `n m`")));
        };
        if n == 0 {
            return Err(Error::Parse("graphs need at least one vertex".into()));
        }
        let mut edges = Vec::with_capacity(m);
        for line in lines {
            let nums = parse_numbers(line)?;
            let [u, v] = nums[..] else {
                return Err(Error::Parse(format!("edge line {line:?} must be `u v`")));
            };
            edges.push((u, v));
        }
        if edges.len() != m {
            return Err(Error::Parse(format!("header declares {m} edges, found {}", edges.len())));
        }
        SimpleGraph::from_edges(n, &edges)
    }
}

fn parse_numbers(line: &str) -> Result<Vec<usize>> {
    line.split_whitespace()
        .map(|t| t.parse().map_err(|_| Error::Parse(format!("not a number: {t:?}"))))
        .collect()
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimpleGraph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Graph of order `N` determined by a sequence of `N - 1` bits.
#[derive(Clone, PartialEq, Eq)]
pub struct SteinhausGraph {
    seq: BitRow,
    triangle: SteinhausTriangle,
    adjacency: BitMatrix,
}

pub fn graph_from_seq(seq: &BitRow) -> SteinhausGraph {
    let triangle = SteinhausTriangle::from_top_row(seq);
    let order = seq.len() + 1;
    // upper part: adjacency row p holds triangle row p starting at column p + 1
    let mut rows: Vec<BitRow> = (0..order)
        .map(|p| match triangle.rows().get(p) {
            Some(r) => r.placed_at(order, p + 1),
            None => BitRow::zeros(order),
        })
        .collect();
    for p in 0..triangle.size() {
        let cols: Vec<usize> = triangle.rows()[p].ones().map(|q| p + q + 1).collect();
        for c in cols {
            rows[c].set(p, true);
        }
    }
    let adjacency = BitMatrix::from_rows(order, rows).expect("rows have the graph order");
    SteinhausGraph {
        seq: seq.clone(),
        triangle,
        adjacency,
    }
}

impl SteinhausGraph {
    pub fn order(&self) -> usize {
        self.seq.len() + 1
    }

    pub fn seq(&self) -> &BitRow {
        &self.seq
    }

    /// 0-based adjacency matrix.
    pub fn adjacency(&self) -> &BitMatrix {
        &self.adjacency
    }

    /// The Steinhaus triangle of the sequence (the map `θ`).
    pub fn triangle(&self) -> &SteinhausTriangle {
        &self.triangle
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        assert!(u >= 1 && v >= 1 && u <= self.order() && v <= self.order(), "vertex out of range");
        self.adjacency.get(u - 1, v - 1)
    }

    pub fn to_simple_graph(&self) -> SimpleGraph {
        SimpleGraph {
            n: self.order(),
            upper: self.triangle.rows().to_vec(),
        }
    }

    pub fn xor(&self, other: &SteinhausGraph) -> Result<SteinhausGraph> {
        if self.order() != other.order() {
            return Err(Error::SizeMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(graph_from_seq(&(&self.seq ^ &other.seq)))
    }

    pub fn to_dot(&self) -> String {
        dot(self.order(), &self.to_simple_graph().edges(), |_| None)
    }
}

impl fmt::Debug for SteinhausGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SteinhausGraph(order={}, seq={})", self.order(), self.seq)
    }
}

/// `{t_0 + 1, ..., t_{n-1} + 1}`.
pub fn w_set(n: usize) -> Vec<usize> {
    (0..n).map(|i| triangular_number(i) + 1).collect()
}

/// The `n` with `order == t_{n-1} + 1`.
pub fn universal_parameter(order: usize) -> Result<usize> {
    order
        .checked_sub(1)
        .and_then(triangular_root)
        .map(|r| r + 1)
        .ok_or(Error::NotTriangularOrder(order))
}

/// `G[W_n]` read directly from the adjacency matrix.
pub fn extract_induced(g: &SteinhausGraph) -> Result<SimpleGraph> {
    let n = universal_parameter(g.order())?;
    let w = w_set(n);
    let mut h = SimpleGraph::empty(n);
    for a in 0..n {
        for b in a + 1..n {
            if g.has_edge(w[a], w[b]) {
                h.set_edge(a + 1, b + 1, true);
            }
        }
    }
    Ok(h)
}

/// `G[W_n]` as the triangle of `G` projected onto `A_n`, then read as an
/// upper triangle on `n` vertices.
pub fn extract_projected(g: &SteinhausGraph) -> Result<SimpleGraph> {
    let n = universal_parameter(g.order())?;
    let a = delahan_index_set(n);
    let values = g.triangle().project(a.index_set())?;
    Ok(graph_from_delahan_values(n, &values))
}

/// `G[W_n]` computed both ways; the two must agree.
pub fn extract(g: &SteinhausGraph) -> Result<SimpleGraph> {
    let direct = extract_induced(g)?;
    let projected = extract_projected(g)?;
    if direct != projected {
        return Err(Error::CrossCheck(format!(
            "induced subgraph {direct:?} differs from projection {projected:?}"
        )));
    }
    Ok(direct)
}

/// Value `k = t_r + s` of `A_n` pairs with the vertices `(s + 1, r + 2)` of
/// the small graph, i.e. `(t_s + 1, t_{r+1} + 1)` in the big one.
fn graph_from_delahan_values(n: usize, values: &BitRow) -> SimpleGraph {
    let mut h = SimpleGraph::empty(n);
    for r in 0..n.saturating_sub(1) {
        for s in 0..=r {
            if values.get(triangular_number(r) + s) {
                h.set_edge(s + 1, r + 2, true);
            }
        }
    }
    h
}

fn delahan_values(h: &SimpleGraph) -> BitRow {
    let n = h.order();
    let mut values = BitRow::zeros(triangular_number(n.saturating_sub(1)));
    for r in 0..n.saturating_sub(1) {
        for s in 0..=r {
            if h.has_edge(s + 1, r + 2) {
                values.set(triangular_number(r) + s, true);
            }
        }
    }
    values
}

/// How [`embed_with`] solves for the sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum SolveStrategy {
    /// Forward substitution over the diagonal blocks of `M_{A_n}`.
    #[default]
    BlockForward,
    /// Plain Gauss-Jordan on `M_{A_n}`.
    Generic,
    /// Both, failing with [`Error::CrossCheck`] if they differ.
    CrossCheck,
}

/// The unique Steinhaus graph of order `t_{n-1} + 1` whose induced
/// subgraph on `W_n` is `h`.
///
/// # Panics
/// Panics if `h` has no vertices.
pub fn embed(h: &SimpleGraph) -> SteinhausGraph {
    embed_with(h, SolveStrategy::BlockForward).expect("A_n is generating for every n")
}

pub fn embed_with(h: &SimpleGraph, strategy: SolveStrategy) -> Result<SteinhausGraph> {
    assert!(h.order() >= 1, "graphs need at least one vertex");
    let a: DelahanIndexSet = delahan_index_set(h.order());
    let values = delahan_values(h);
    let triangle = match strategy {
        SolveStrategy::BlockForward => a.reconstruct(&values)?,
        SolveStrategy::Generic => reconstruct(a.index_set(), &values)?,
        SolveStrategy::CrossCheck => {
            let fast = a.reconstruct(&values)?;
            let slow = reconstruct(a.index_set(), &values)?;
            if fast != slow {
                return Err(Error::CrossCheck("block and generic solves disagree".into()));
            }
            fast
        }
    };
    Ok(graph_from_seq(&triangle.top_row()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn seq(s: &str) -> BitRow {
        s.parse().unwrap()
    }

    fn bits(n: usize, v: u64) -> BitRow {
        BitRow::from_bits((0..n).map(|k| (v >> k) & 1 == 1))
    }

    /// Checks rules i)-iv) entry by entry (1-based).
    fn satisfies_rules(g: &SteinhausGraph) -> bool {
        let n = g.order();
        let a = |i: usize, j: usize| g.adjacency().get(i - 1, j - 1);
        (1..=n).all(|i| (1..=n).all(|j| a(i, j) == a(j, i)))
            && (1..=n).all(|i| !a(i, i))
            && (2..=n).all(|j| a(1, j) == g.seq().get(j - 2))
            && (2..=n).all(|i| (i + 1..=n).all(|j| a(i, j) == (a(i - 1, j - 1) ^ a(i - 1, j))))
    }

    #[test]
    fn bridge_is_a_bijection() {
        for n in 1..=30 {
            let mut seen = std::collections::HashSet::new();
            for u in 1..=n {
                for v in u + 1..=n {
                    let p = pair_to_cell(u, v);
                    assert!(p.in_triangle(n - 1));
                    assert_eq!(cell_to_pair(p), (u, v));
                    assert!(seen.insert(p));
                }
            }
            assert_eq!(seen.len(), triangular_number(n - 1));
        }
    }

    #[test]
    fn single_vertex_graph() {
        let g = graph_from_seq(&seq(""));
        assert_eq!(g.order(), 1);
        assert_eq!(g.to_simple_graph().edge_count(), 0);
    }

    #[test]
    fn worked_example_graph() {
        let g = graph_from_seq(&seq("0010100"));
        assert_eq!(g.order(), 8);
        let row1: Vec<usize> = (2..=8).filter(|&v| g.has_edge(1, v)).collect();
        assert_eq!(row1, vec![4, 6]);
        let row2: Vec<bool> = (3..=8).map(|v| g.has_edge(2, v)).collect();
        assert_eq!(row2, vec![false, true, true, true, true, false]);
        assert!(satisfies_rules(&g));
    }

    #[test]
    fn rules_hold_exhaustively_up_to_ten() {
        for len in 0..=10 {
            for v in 0..(1u64 << len) {
                let g = graph_from_seq(&bits(len, v));
                assert!(satisfies_rules(&g), "{g:?}");
            }
        }
    }

    #[test]
    fn w_sets() {
        assert_eq!(w_set(1), vec![1]);
        assert_eq!(w_set(4), vec![1, 2, 4, 7]);
        assert_eq!(w_set(7), vec![1, 2, 4, 7, 11, 16, 22]);
        assert_eq!(*w_set(7).last().unwrap(), triangular_number(6) + 1);
    }

    #[test]
    fn induced_subgraph_examples() {
        let g = graph_from_seq(&seq("110")).to_simple_graph();
        assert_eq!(g.edges(), vec![(1, 2), (1, 3), (2, 4), (3, 4)]);
        assert_eq!(g.induced_subgraph(&[1, 2, 3, 4]).unwrap(), g);
        assert_eq!(g.induced_subgraph(&[3]).unwrap(), SimpleGraph::empty(1));
        let path = g.induced_subgraph(&[4, 1, 2]).unwrap();
        assert_eq!(path.edges(), vec![(1, 2), (2, 3)]);
        assert_eq!(g.induced_subgraph(&[1, 5]), Err(Error::VertexOutOfRange { vertex: 5, n: 4 }));
        assert_eq!(g.induced_subgraph(&[2, 2]), Err(Error::DuplicateVertex(2)));
    }

    #[test]
    fn extract_examples() {
        assert_eq!(extract(&graph_from_seq(&seq(""))).unwrap(), SimpleGraph::empty(1));
        let p3 = extract(&graph_from_seq(&seq("110"))).unwrap();
        assert_eq!(p3.edges(), vec![(1, 2), (2, 3)]);
        assert_eq!(
            extract(&graph_from_seq(&seq("0010100"))),
            Err(Error::NotTriangularOrder(8))
        );
    }

    #[test]
    fn embed_examples() {
        let k1 = embed(&SimpleGraph::empty(1));
        assert_eq!(k1.order(), 1);
        let k2 = embed(&SimpleGraph::from_edges(2, &[(1, 2)]).unwrap());
        assert_eq!(k2.seq(), &seq("1"));
        let p3 = SimpleGraph::from_edges(3, &[(1, 2), (2, 3)]).unwrap();
        let g = embed(&p3);
        assert_eq!(g.order(), 4);
        assert_eq!(g.seq(), &seq("110"));
        // unique among all 8 sequences of length 3
        let matches: Vec<u64> = (0..8)
            .filter(|&v| extract(&graph_from_seq(&bits(3, v))).unwrap() == p3)
            .collect();
        assert_eq!(matches.len(), 1);
    }

    #[test]
    fn bijection_small_orders() {
        for (n, len) in [(3usize, 3usize), (4, 6)] {
            let images: std::collections::HashSet<SimpleGraph> = (0..1u64 << len)
                .map(|v| extract(&graph_from_seq(&bits(len, v))).unwrap())
                .collect();
            assert_eq!(images.len(), 1 << len, "n={n}");
        }
    }

    #[test]
    fn xor_examples() {
        let g = graph_from_seq(&seq("0010100"));
        assert_eq!(g.xor(&g).unwrap().to_simple_graph().edge_count(), 0);
        assert!(g.xor(&graph_from_seq(&seq("01"))).is_err());
        let h = SimpleGraph::from_edges(3, &[(1, 2)]).unwrap();
        assert_eq!(h.xor(&h).unwrap(), SimpleGraph::empty(3));
        assert!(h.xor(&SimpleGraph::empty(4)).is_err());
    }

    #[test]
    fn strategies_agree() {
        let h = SimpleGraph::from_edges(6, &[(1, 2), (2, 5), (3, 6), (4, 6), (1, 6)]).unwrap();
        let a = embed_with(&h, SolveStrategy::BlockForward).unwrap();
        let b = embed_with(&h, SolveStrategy::Generic).unwrap();
        let c = embed_with(&h, SolveStrategy::CrossCheck).unwrap();
        assert_eq!(a, b);
        assert_eq!(a, c);
        assert_eq!(extract(&a).unwrap(), h);
    }

    #[test]
    fn edge_list_format() {
        let g: SimpleGraph = "3 2\n2 3\n1 2\n".parse().unwrap();
        assert_eq!(g.to_edge_list(), "3 2\n1 2\n2 3\n");
        assert_eq!("1 0\n".parse::<SimpleGraph>().unwrap(), SimpleGraph::empty(1));
        for bad in ["3 1\n1 1\n", "3 2\n1 2\n2 1\n", "3 1\n1 4\n", "3 2\n1 2\n", "3\n", "0 0\n", "3 1\n1 x\n", ""] {
            assert!(bad.parse::<SimpleGraph>().is_err(), "{bad:?}");
        }
    }

    #[test]
    fn dot_output() {
        let g = SimpleGraph::from_edges(3, &[(1, 2), (2, 3)]).unwrap();
        assert_eq!(g.to_dot(), "graph G {\n  1;\n  2;\n  3;\n  1 -- 2;\n  2 -- 3;\n}\n");
        let labelled = g.to_dot_with_labels(|v| Some(format!("{v} (w={})", w_set(3)[v - 1])));
        assert!(labelled.contains("  3 [label=\"3 (w=4)\"];\n"));
        assert!(graph_from_seq(&seq("110")).to_dot().contains("3 -- 4;"));
    }

    fn random_graph(n: usize) -> impl Strategy<Value = SimpleGraph> {
        prop::collection::vec(any::<bool>(), triangular_number(n - 1)).prop_map(move |bits| {
            let mut g = SimpleGraph::empty(n);
            let mut it = bits.into_iter();
            for u in 1..=n {
                for v in u + 1..=n {
                    g.set_edge(u, v, it.next().unwrap());
                }
            }
            g
        })
    }

    proptest! {
        #[test]
        fn rules_hold_random(bits in prop::collection::vec(any::<bool>(), 0..=200)) {
            let g = graph_from_seq(&BitRow::from_bits(bits));
            prop_assert!(satisfies_rules(&g));
        }

        #[test]
        fn upper_triangle_is_the_steinhaus_triangle(bits in prop::collection::vec(any::<bool>(), 0..=60)) {
            let s = BitRow::from_bits(bits);
            let g = graph_from_seq(&s);
            let t = SteinhausTriangle::from_top_row(&s);
            for p in SteinhausTriangle::positions(t.size()) {
                let (u, v) = cell_to_pair(p);
                prop_assert_eq!(g.has_edge(u, v), t.entry(p).unwrap());
            }
        }

        #[test]
        fn embed_round_trip(h in (1usize..=8).prop_flat_map(random_graph)) {
            let g = embed(&h);
            prop_assert_eq!(g.order(), triangular_number(h.order() - 1) + 1);
            prop_assert_eq!(extract_induced(&g).unwrap(), h.clone());
            prop_assert_eq!(extract_projected(&g).unwrap(), h);
        }

        #[test]
        fn extract_then_embed_round_trip(
            bits in (1usize..=8).prop_flat_map(|n| prop::collection::vec(any::<bool>(), triangular_number(n - 1)))
        ) {
            let g = graph_from_seq(&BitRow::from_bits(bits));
            prop_assert_eq!(embed(&extract(&g).unwrap()), g);
        }

        #[test]
        fn linearity(
            pair in (1usize..=7).prop_flat_map(|n| {
                let len = triangular_number(n - 1);
                (prop::collection::vec(any::<bool>(), len), prop::collection::vec(any::<bool>(), len))
            })
        ) {
            let g1 = graph_from_seq(&BitRow::from_bits(pair.0));
            let g2 = graph_from_seq(&BitRow::from_bits(pair.1));
            let sum = g1.xor(&g2).unwrap();
            prop_assert_eq!(sum.seq(), &(g1.seq() ^ g2.seq()));
            prop_assert_eq!(
                extract(&sum).unwrap(),
                extract(&g1).unwrap().xor(&extract(&g2).unwrap()).unwrap()
            );
        }
    }
}
