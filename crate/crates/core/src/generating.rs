//! Generating index sets.
//!
//! An `n`-subset `A` of `T_n` is generating when the bits of a size-`n`
//! triangle at `A` determine the whole triangle. Row `k` of `M_A` expresses
//! the bit at `(i_k, j_k)` in terms of the top row: `binom(i_k, l - j_k) mod 2`
//! in column `l`. `A` is generating iff `M_A` is invertible over GF(2).

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use rayon::prelude::*;

use crate::binomial::{binomial_submatrix, RowSelection};
use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitRow, BlockPartition};
use crate::triangle::{triangular_number, SteinhausTriangle, Symmetry, TrianglePos};

/// Largest `n` enumerated unless the caller raises the bound.
pub const DEFAULT_ENUMERATION_BOUND: usize = 6;
/// Ceiling on any requested bound; `C(t_9, 9)` is already ~9.4e7 subsets.
pub const HARD_ENUMERATION_LIMIT: usize = 8;

/// Ordered list of distinct positions inside `T_size`.
///
/// The stored order is the order of projected values; equality and hashing
/// use the sorted form.
#[derive(Clone)]
pub struct IndexSet {
    size: usize,
    positions: Vec<TrianglePos>,
}

impl IndexSet {
    pub fn new(size: usize, positions: Vec<TrianglePos>) -> Result<Self> {
        let mut seen = HashSet::with_capacity(positions.len());
        for &p in &positions {
            p.check(size)?;
            if !seen.insert(p) {
                return Err(Error::DuplicatePosition { i: p.i, j: p.j });
            }
        }
        Ok(Self { size, positions })
    }

    /// Top row `{(0, 0), ..., (0, n-1)}`.
    pub fn top(n: usize) -> Self {
        Self {
            size: n,
            positions: (0..n).map(|j| TrianglePos::new(0, j)).collect(),
        }
    }

    /// Right side `{(0, n-1), (1, n-2), ..., (n-1, 0)}`.
    pub fn right(n: usize) -> Self {
        Self {
            size: n,
            positions: (0..n).map(|k| TrianglePos::new(k, n - 1 - k)).collect(),
        }
    }

    /// Left side `{(0, 0), (1, 0), ..., (n-1, 0)}`.
    pub fn left(n: usize) -> Self {
        Self {
            size: n,
            positions: (0..n).map(|k| TrianglePos::new(k, 0)).collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn positions(&self) -> &[TrianglePos] {
        &self.positions
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    pub fn canonical(&self) -> Vec<TrianglePos> {
        let mut sorted = self.positions.clone();
        sorted.sort_unstable();
        sorted
    }

    /// Image under a triangle symmetry, positions kept in stored order.
    pub fn transform(&self, g: Symmetry) -> Self {
        Self {
            size: self.size,
            positions: self.positions.iter().map(|&p| g.apply(p, self.size)).collect(),
        }
    }

    fn sorted(mut self) -> Self {
        self.positions.sort_unstable();
        self
    }
}

impl PartialEq for IndexSet {
    fn eq(&self, other: &Self) -> bool {
        self.size == other.size && self.canonical() == other.canonical()
    }
}

impl Eq for IndexSet {}

impl Hash for IndexSet {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.size.hash(state);
        self.canonical().hash(state);
    }
}

impl PartialOrd for IndexSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for IndexSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.size, self.canonical()).cmp(&(other.size, other.canonical()))
    }
}

/// `n; (i,j) (i,j) ...`
impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};", self.size)?;
        for p in &self.positions {
            write!(f, " {p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IndexSet({self})")
    }
}

impl FromStr for IndexSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (size, rest) = s
            .split_once(';')
            .ok_or_else(|| Error::Parse(format!("missing ';' in {s:?}")))?;
        let size: usize = size
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad size {size:?}")))?;
        let mut positions = Vec::new();
        let mut rest = rest.trim();
        while !rest.is_empty() {
            let inner = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::Parse(format!("expected '(' at {rest:?}")))?;
            let close = inner
                .find(')')
                .ok_or_else(|| Error::Parse(format!("unclosed position in {s:?}")))?;
            let (i, j) = inner[..close]
                .split_once(',')
                .ok_or_else(|| Error::Parse(format!("expected 'i,j' in {:?}", &inner[..close])))?;
            let coord = |v: &str| {
                v.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad coordinate {v:?}")))
            };
            positions.push(TrianglePos::new(coord(i)?, coord(j)?));
            rest = inner[close + 1..].trim_start();
        }
        IndexSet::new(size, positions)
    }
}

/// Row of `M_A` for one position: `binom(i, l - j) mod 2` for `l < n`.
///
/// By Lucas' criterion the odd entries sit at `l = j + m` for the submasks
/// `m` of `i`, so only those are visited.
pub fn pascal_row(p: TrianglePos, n: usize) -> BitRow {
    let mut row = BitRow::zeros(n);
    let mut m = p.i;
    loop {
        if p.j + m < n {
            row.set(p.j + m, true);
        }
        if m == 0 {
            break;
        }
        m = (m - 1) & p.i;
    }
    row
}

pub fn build_ma(set: &IndexSet) -> Result<BitMatrix> {
    let n = set.size;
    if set.len() != n {
        return Err(Error::WrongCardinality {
            expected: n,
            found: set.len(),
        });
    }
    BitMatrix::from_rows(n, set.positions.iter().map(|&p| pascal_row(p, n)).collect())
}

pub fn is_generating(set: &IndexSet) -> Result<bool> {
    Ok(build_ma(set)?.rank() == set.size)
}

/// Exhaustive check: projection onto `set` is injective on all `2^n`
/// triangles. Exponential; intended for small `n` only.
pub fn is_generating_brute_force(set: &IndexSet) -> Result<bool> {
    let n = set.size;
    if set.len() != n {
        return Err(Error::WrongCardinality {
            expected: n,
            found: set.len(),
        });
    }
    assert!(n < 32, "brute-force oracle limited to small sizes");
    let mut seen = HashSet::with_capacity(1 << n);
    for v in 0..(1u64 << n) {
        let top = BitRow::from_bits((0..n).map(|k| (v >> k) & 1 == 1));
        let image = SteinhausTriangle::from_top_row(&top).project(set)?;
        if !seen.insert(image) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The unique triangle whose bits at `set` are `values`.
pub fn reconstruct(set: &IndexSet, values: &BitRow) -> Result<SteinhausTriangle> {
    if values.len() != set.len() {
        return Err(Error::LengthMismatch {
            expected: set.len(),
            found: values.len(),
        });
    }
    let ma = build_ma(set)?;
    let top = ma.solve(values).map_err(|e| match e {
        Error::Singular => Error::NotGenerating,
        other => other,
    })?;
    Ok(SteinhausTriangle::from_top_row(&top))
}

/// Every row of the candidate positions is independent over GF(2).
pub fn matroid_independent(positions: &[TrianglePos], n: usize) -> Result<bool> {
    if positions.len() > n {
        return Err(Error::TooMany {
            count: positions.len(),
            n,
        });
    }
    for &p in positions {
        p.check(n)?;
    }
    let rows = positions.iter().map(|&p| pascal_row(p, n)).collect();
    Ok(BitMatrix::from_rows(n, rows)?.rank() == positions.len())
}

/// Incrementally maintained row-echelon basis for the enumeration search.
#[derive(Clone, Default)]
struct EchelonBasis {
    rows: Vec<(usize, BitRow)>,
}

impl EchelonBasis {
    /// Adds `row` if it is independent of the basis.
    fn try_insert(&mut self, row: &BitRow) -> bool {
        let mut v = row.clone();
        for (pivot, b) in &self.rows {
            if v.get(*pivot) {
                v.xor_assign(b);
            }
        }
        match v.first_one_from(0) {
            Some(pivot) => {
                self.rows.push((pivot, v));
                true
            }
            None => false,
        }
    }
}

fn check_bound(n: usize, bound: usize) -> Result<()> {
    let bound = bound.min(HARD_ENUMERATION_LIMIT);
    if n > bound {
        return Err(Error::TooLarge { n, bound });
    }
    Ok(())
}

/// All generating `n`-subsets of `T_n`, each sorted, in lexicographic order.
///
/// Search extends only independent prefixes. The first position is split
/// across worker threads; the merged order does not depend on scheduling.
pub fn enumerate_generating(n: usize, bound: usize) -> Result<Vec<IndexSet>> {
    check_bound(n, bound)?;
    let cells: Vec<TrianglePos> = SteinhausTriangle::positions(n).collect();
    let rows: Vec<BitRow> = cells.iter().map(|&p| pascal_row(p, n)).collect();
    if n == 0 {
        return Ok(vec![IndexSet::top(0)]);
    }

    fn extend(
        start: usize,
        chosen: &mut Vec<usize>,
        basis: &EchelonBasis,
        n: usize,
        rows: &[BitRow],
        out: &mut Vec<Vec<usize>>,
    ) {
        if chosen.len() == n {
            out.push(chosen.clone());
            return;
        }
        let remaining = n - chosen.len();
        for next in start..=rows.len() - remaining {
            let mut basis = basis.clone();
            if basis.try_insert(&rows[next]) {
                chosen.push(next);
                extend(next + 1, chosen, &basis, n, rows, out);
                chosen.pop();
            }
        }
    }

    let found: Vec<Vec<Vec<usize>>> = (0..=cells.len() - n)
        .into_par_iter()
        .map(|first| {
            let mut out = Vec::new();
            let mut basis = EchelonBasis::default();
            if basis.try_insert(&rows[first]) {
                let mut chosen = vec![first];
                extend(first + 1, &mut chosen, &basis, n, &rows, &mut out);
            }
            out
        })
        .collect();

    Ok(found
        .into_iter()
        .flatten()
        .map(|idx| IndexSet {
            size: n,
            positions: idx.into_iter().map(|k| cells[k]).collect(),
        })
        .collect())
}

/// Counts of generating and non-generating `n`-subsets of `T_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Census {
    pub generating: u64,
    pub non_generating: u64,
    pub total: u64,
}

impl fmt::Display for Census {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "generating={} non_generating={} total={}",
            self.generating, self.non_generating, self.total
        )
    }
}

pub fn census(n: usize, bound: usize) -> Result<Census> {
    let generating = enumerate_generating(n, bound)?.len() as u64;
    let cells = triangular_number(n) as u64;
    // C(cells, n) by the multiplicative formula; exact at every step
    let total = (0..n as u64).fold(1u64, |acc, k| acc * (cells - k) / (k + 1));
    Ok(Census {
        generating,
        non_generating: total - generating,
        total,
    })
}

/// One class of index sets under the six triangle symmetries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbit {
    /// Lexicographically least member (sorted positions).
    pub representative: IndexSet,
    pub members: Vec<IndexSet>,
}

/// Partitions `sets` into classes under the dihedral action, ordered by
/// representative.
pub fn d3_orbits(sets: &[IndexSet]) -> Result<Vec<Orbit>> {
    if let Some(first) = sets.first() {
        if sets.iter().any(|s| s.size != first.size) {
            return Err(Error::MixedSizes);
        }
    }
    let mut classes: BTreeMap<Vec<TrianglePos>, Vec<IndexSet>> = BTreeMap::new();
    for set in sets {
        let key = Symmetry::ALL
            .iter()
            .map(|&g| set.transform(g).canonical())
            .min()
            .expect("six symmetries");
        classes.entry(key).or_default().push(set.clone());
    }
    let mut orbits: Vec<Orbit> = classes
        .into_values()
        .map(|members| {
            let representative = members.iter().min().unwrap().clone().sorted();
            Orbit {
                representative,
                members,
            }
        })
        .collect();
    orbits.sort_by(|a, b| a.representative.cmp(&b.representative));
    Ok(orbits)
}

/// `A_n = {(t_s, t_{r+1} - t_s - 1) : 0 <= s <= r <= n-2}` inside
/// `T_{t_{n-1}}`, stored in the order `k = t_r + s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DelahanIndexSet {
    n: usize,
    set: IndexSet,
}

impl DelahanIndexSet {
    /// Graph order parameter `n`.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn index_set(&self) -> &IndexSet {
        &self.set
    }

    /// Blocks of size `1, 2, ..., n-1`.
    pub fn partition(&self) -> BlockPartition {
        BlockPartition::new((1..self.n).collect()).expect("positive sizes")
    }

    /// Reconstruction by forward substitution over the diagonal blocks of
    /// `M_{A_n}`.
    pub fn reconstruct(&self, values: &BitRow) -> Result<SteinhausTriangle> {
        if values.len() != self.set.len() {
            return Err(Error::LengthMismatch {
                expected: self.set.len(),
                found: values.len(),
            });
        }
        let ma = build_ma(&self.set)?;
        let top = ma.solve_block_lower(&self.partition(), values)?;
        Ok(SteinhausTriangle::from_top_row(&top))
    }
}

/// # Panics
/// Panics if `n == 0`.
pub fn delahan_index_set(n: usize) -> DelahanIndexSet {
    assert!(n >= 1, "A_n is defined for n >= 1");
    let size = triangular_number(n - 1);
    let positions = (0..n.saturating_sub(1))
        .flat_map(|r| {
            (0..=r).map(move |s| {
                let ts = triangular_number(s);
                TrianglePos::new(ts, triangular_number(r + 1) - ts - 1)
            })
        })
        .collect();
    DelahanIndexSet {
        n,
        set: IndexSet { size, positions },
    }
}

/// Result of checking the block lower-triangular shape of `M_{A_n}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockReport {
    pub partition: BlockPartition,
    /// Diagonal block `r` is `B(t_0..t_r; r, r-1, ..., 0)` mod 2.
    pub diagonal_blocks: Vec<BitMatrix>,
}

/// Confirms that `M_{A_n}` is zero right of its diagonal blocks and that
/// block `r` equals `B(t_0..t_r; r..0)` reduced mod 2.
pub fn verify_block_structure(n: usize) -> Result<BlockReport> {
    let delahan = delahan_index_set(n);
    let ma = build_ma(&delahan.set)?;
    let partition = delahan.partition();
    let mut diagonal_blocks = Vec::with_capacity(n.saturating_sub(1));
    for (r, (offset, size)) in partition.blocks().enumerate() {
        for row in offset..offset + size {
            if let Some(col) = ma.row(row).first_one_from(offset + size) {
                return Err(Error::StructureViolation {
                    row,
                    col,
                    reason: "nonzero entry right of the diagonal block".into(),
                });
            }
        }
        let block = ma.submatrix(offset, offset, size, size);
        let cols: Vec<u64> = (0..=r as u64).rev().collect();
        let expected = binomial_submatrix(&RowSelection::triangular(r + 1), &cols)?.parity;
        if block != expected {
            let (br, bc) = (0..size)
                .flat_map(|a| (0..size).map(move |b| (a, b)))
                .find(|&(a, b)| block.get(a, b) != expected.get(a, b))
                .expect("blocks differ somewhere");
            return Err(Error::StructureViolation {
                row: offset + br,
                col: offset + bc,
                reason: format!("diagonal block {r} differs from the binomial submatrix"),
            });
        }
        diagonal_blocks.push(block);
    }
    Ok(BlockReport {
        partition,
        diagonal_blocks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binomial::{is_odd, minor_bareiss, reversal_sign, triangular_minor_closed_form};
    use crate::binomial::binom_parity;
    use num_bigint::BigInt;

    fn pos(list: &[(usize, usize)]) -> Vec<TrianglePos> {
        list.iter().map(|&(i, j)| TrianglePos::new(i, j)).collect()
    }

    fn set(n: usize, list: &[(usize, usize)]) -> IndexSet {
        IndexSet::new(n, pos(list)).unwrap()
    }

    fn mat(rows: &[&str]) -> BitMatrix {
        BitMatrix::from_rows(rows.len(), rows.iter().map(|r| r.parse().unwrap()).collect()).unwrap()
    }

    /// Every k-subset of `0..m` in lexicographic order.
    fn subsets(m: usize, k: usize) -> Vec<Vec<usize>> {
        fn go(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == k {
                out.push(cur.clone());
                return;
            }
            for x in start..m {
                cur.push(x);
                go(x + 1, m, k, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(0, m, k, &mut Vec::new(), &mut out);
        out
    }

    fn all_subsets(n: usize) -> Vec<IndexSet> {
        let cells: Vec<TrianglePos> = SteinhausTriangle::positions(n).collect();
        subsets(cells.len(), n)
            .into_iter()
            .map(|idx| IndexSet::new(n, idx.into_iter().map(|k| cells[k]).collect()).unwrap())
            .collect()
    }

    #[test]
    fn index_set_validation_and_text() {
        assert!(matches!(
            IndexSet::new(3, pos(&[(0, 0), (0, 0)])),
            Err(Error::DuplicatePosition { i: 0, j: 0 })
        ));
        assert!(matches!(IndexSet::new(3, pos(&[(2, 1)])), Err(Error::OutOfTriangle { .. })));
        let a = set(3, &[(0, 2), (0, 0), (1, 1)]);
        assert_eq!(a.to_string(), "3; (0,2) (0,0) (1,1)");
        assert_eq!(a.to_string().parse::<IndexSet>().unwrap().positions(), a.positions());
        assert_eq!(a, set(3, &[(0, 0), (0, 2), (1, 1)]));
        assert_eq!("0;".parse::<IndexSet>().unwrap(), IndexSet::top(0));
        assert_eq!(" 2 ;(0,0)( 1 , 0 )".parse::<IndexSet>().unwrap(), IndexSet::left(2));
        for bad in ["3 (0,0)", "x; (0,0)", "3; (0,0", "3; 0,0", "3; (a,0)", "3; (0)"] {
            assert!(bad.parse::<IndexSet>().is_err(), "{bad}");
        }
    }

    #[test]
    fn ma_examples() {
        for n in 0..10 {
            assert_eq!(build_ma(&IndexSet::top(n)).unwrap(), BitMatrix::identity(n));
        }
        assert_eq!(build_ma(&set(3, &[(0, 0), (0, 2), (1, 1)])).unwrap(), mat(&["100", "001", "011"]));
        assert_eq!(build_ma(&IndexSet::left(3)).unwrap(), mat(&["100", "110", "101"]));
        assert_eq!(
            build_ma(&set(3, &[(0, 0)])),
            Err(Error::WrongCardinality { expected: 3, found: 1 })
        );
    }

    #[test]
    fn pascal_row_matches_lucas_parity() {
        for n in 1..=40 {
            for p in SteinhausTriangle::positions(n) {
                let row = pascal_row(p, n);
                for l in 0..n {
                    let expect = binom_parity(p.i as i64, l as i64 - p.j as i64).unwrap();
                    assert_eq!(row.get(l), expect, "{p} col {l}");
                }
            }
        }
    }

    #[test]
    fn sides_are_generating_up_to_64() {
        for n in 0..=64 {
            assert!(is_generating(&IndexSet::top(n)).unwrap());
            assert!(is_generating(&IndexSet::right(n)).unwrap(), "A_R n={n}");
            assert!(is_generating(&IndexSet::left(n)).unwrap(), "A_L n={n}");
        }
    }

    #[test]
    fn rank_criterion_matches_brute_force_exhaustively() {
        for n in 0..=4 {
            for a in all_subsets(n) {
                assert_eq!(
                    is_generating(&a).unwrap(),
                    is_generating_brute_force(&a).unwrap(),
                    "{a}"
                );
            }
        }
        let a = set(3, &[(0, 0), (1, 1), (2, 0)]);
        assert_eq!(is_generating(&a).unwrap(), is_generating_brute_force(&a).unwrap());
    }

    #[test]
    fn reconstruct_examples() {
        let values: BitRow = "101".parse().unwrap();
        let t = reconstruct(&set(3, &[(0, 0), (0, 2), (1, 1)]), &values).unwrap();
        assert_eq!(t, SteinhausTriangle::from_top_row(&"110".parse().unwrap()));
        let top: BitRow = "01101".parse().unwrap();
        assert_eq!(
            reconstruct(&IndexSet::top(5), &top).unwrap(),
            SteinhausTriangle::from_top_row(&top)
        );
        let bad = set(3, &[(0, 0), (0, 1), (1, 0)]);
        assert_eq!(reconstruct(&bad, &values), Err(Error::NotGenerating));
        assert_eq!(
            reconstruct(&IndexSet::top(3), &"10".parse().unwrap()),
            Err(Error::LengthMismatch { expected: 3, found: 2 })
        );
    }

    #[test]
    fn reconstruct_is_inverse_of_project_exhaustively() {
        for n in 0..=5 {
            let triangles: Vec<SteinhausTriangle> = (0..1u64 << n)
                .map(|v| SteinhausTriangle::from_top_row(&BitRow::from_bits((0..n).map(|k| (v >> k) & 1 == 1))))
                .collect();
            for a in enumerate_generating(n, 6).unwrap() {
                for t in &triangles {
                    let v = t.project(&a).unwrap();
                    assert_eq!(&reconstruct(&a, &v).unwrap(), t);
                    assert_eq!(reconstruct(&a, &v).unwrap().project(&a).unwrap(), v);
                }
            }
        }
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_generating(1, 6).unwrap(), vec![set(1, &[(0, 0)])]);
        let c = census(3, 6).unwrap();
        assert_eq!(c, Census { generating: 16, non_generating: 4, total: 20 });
        assert_eq!(c.to_string(), "generating=16 non_generating=4 total=20");
        assert_eq!(enumerate_generating(7, 6), Err(Error::TooLarge { n: 7, bound: 6 }));
        assert_eq!(enumerate_generating(9, 100), Err(Error::TooLarge { n: 9, bound: 8 }));
    }

    #[test]
    fn enumeration_matches_filtered_brute_force() {
        for n in 0..=5 {
            let brute: Vec<IndexSet> = all_subsets(n)
                .into_iter()
                .filter(|a| is_generating(a).unwrap())
                .collect();
            let got = enumerate_generating(n, 6).unwrap();
            assert_eq!(got.len(), brute.len(), "n={n}");
            for (g, b) in got.iter().zip(&brute) {
                assert_eq!(g.positions(), b.positions());
            }
        }
    }

    #[test]
    fn enumeration_is_deterministic() {
        let a = enumerate_generating(5, 6).unwrap();
        let b = enumerate_generating(5, 6).unwrap();
        let fmt = |v: &[IndexSet]| v.iter().map(|s| s.to_string()).collect::<Vec<_>>();
        assert_eq!(fmt(&a), fmt(&b));
    }

    #[test]
    fn matroid_examples() {
        assert!(matroid_independent(&[], 3).unwrap());
        for p in SteinhausTriangle::positions(3) {
            assert!(matroid_independent(&[p], 3).unwrap());
        }
        assert_eq!(
            matroid_independent(&pos(&[(0, 0), (0, 1), (0, 2), (1, 0)]), 3),
            Err(Error::TooMany { count: 4, n: 3 })
        );
        let bases: Vec<IndexSet> = all_subsets(3)
            .into_iter()
            .filter(|a| matroid_independent(a.positions(), 3).unwrap())
            .collect();
        assert_eq!(bases, enumerate_generating(3, 6).unwrap());
    }

    #[test]
    fn matroid_exchange_axiom_n3() {
        let cells: Vec<TrianglePos> = SteinhausTriangle::positions(3).collect();
        let mut independent = Vec::new();
        for mask in 0u32..(1 << cells.len()) {
            let members: Vec<TrianglePos> =
                (0..cells.len()).filter(|k| mask >> k & 1 == 1).map(|k| cells[k]).collect();
            if members.len() <= 3 && matroid_independent(&members, 3).unwrap() {
                independent.push(members);
            }
        }
        for a in &independent {
            for b in &independent {
                if a.len() < b.len() {
                    let exchangeable = b.iter().filter(|x| !a.contains(x)).any(|&x| {
                        let mut ext = a.clone();
                        ext.push(x);
                        matroid_independent(&ext, 3).unwrap()
                    });
                    assert!(exchangeable, "{a:?} {b:?}");
                }
            }
        }
    }

    #[test]
    fn orbit_examples() {
        let gens = enumerate_generating(3, 6).unwrap();
        let orbits = d3_orbits(&gens).unwrap();
        assert_eq!(orbits.len(), 4);
        assert_eq!(orbits.iter().map(|o| o.members.len()).sum::<usize>(), 16);

        let top_orbit = orbits
            .iter()
            .find(|o| o.members.contains(&IndexSet::top(3)))
            .unwrap();
        let mut expect = vec![IndexSet::top(3), IndexSet::right(3), IndexSet::left(3)];
        expect.sort();
        let mut got = top_orbit.members.clone();
        got.sort();
        assert_eq!(got, expect);
        assert_eq!(IndexSet::top(3).transform(Symmetry::Reflect), IndexSet::top(3));

        let one = d3_orbits(&[set(3, &[(0, 1), (1, 1), (2, 0)])]).unwrap();
        assert_eq!(one.len(), 1);
        assert_eq!(d3_orbits(&[IndexSet::top(3), IndexSet::top(4)]), Err(Error::MixedSizes));
    }

    #[test]
    fn generating_property_is_closed_under_symmetry() {
        for n in 0..=4 {
            for a in all_subsets(n) {
                let base = is_generating(&a).unwrap();
                for g in Symmetry::ALL {
                    assert_eq!(is_generating(&a.transform(g)).unwrap(), base, "{a} {g:?}");
                }
            }
        }
    }

    #[test]
    fn delahan_examples() {
        let a1 = delahan_index_set(1);
        assert!(a1.index_set().is_empty());
        assert_eq!(a1.index_set().size(), 0);
        let a3 = delahan_index_set(3);
        assert_eq!(a3.index_set().positions(), pos(&[(0, 0), (0, 2), (1, 1)]).as_slice());
        assert_eq!(a3.index_set().size(), 3);
        for n in 1..=12 {
            let a = delahan_index_set(n);
            assert_eq!(a.index_set().len(), triangular_number(n - 1));
            assert!(is_generating(a.index_set()).unwrap(), "A_{n}");
        }
    }

    #[test]
    fn delahan_block_solve_example() {
        let a3 = delahan_index_set(3);
        let ma = build_ma(a3.index_set()).unwrap();
        let part = BlockPartition::new(vec![1, 2]).unwrap();
        let rhs: BitRow = "101".parse().unwrap();
        let x = ma.solve_block_lower(&part, &rhs).unwrap();
        assert_eq!(x, "110".parse().unwrap());
        assert_eq!(ma.invert().unwrap().mul_vec(&rhs).unwrap(), x);
    }

    #[test]
    fn delahan_block_solve_matches_generic_solve() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(6);
        for n in [6, 9] {
            let a = delahan_index_set(n);
            let ma = build_ma(a.index_set()).unwrap();
            for _ in 0..10 {
                let rhs = BitRow::from_bits((0..ma.rows()).map(|_| rng.gen()));
                assert_eq!(
                    ma.solve_block_lower(&a.partition(), &rhs).unwrap(),
                    ma.solve(&rhs).unwrap()
                );
                assert_eq!(a.reconstruct(&rhs).unwrap(), reconstruct(a.index_set(), &rhs).unwrap());
            }
        }
    }

    #[test]
    fn block_structure_examples() {
        let r2 = verify_block_structure(2).unwrap();
        assert_eq!(r2.partition.sizes(), &[1]);
        assert_eq!(r2.diagonal_blocks, vec![mat(&["1"])]);
        let r3 = verify_block_structure(3).unwrap();
        assert_eq!(r3.diagonal_blocks[1], mat(&["01", "11"]));
        assert_eq!(verify_block_structure(5).unwrap().partition.sizes(), &[1, 2, 3, 4]);
    }

    #[test]
    fn block_structure_fails_without_the_prescribed_order() {
        // reversing the row order of A_4 destroys the lower-triangular shape
        let a = delahan_index_set(4);
        let mut positions = a.index_set().positions().to_vec();
        positions.reverse();
        let ma = build_ma(&IndexSet::new(a.index_set().size(), positions).unwrap()).unwrap();
        assert!(matches!(
            ma.solve_block_lower(&a.partition(), &BitRow::zeros(6)),
            Err(Error::NotBlockTriangular { .. })
        ));
    }

    #[test]
    fn block_determinants() {
        for n in 2..=12 {
            let report = verify_block_structure(n).unwrap();
            for block in &report.diagonal_blocks {
                assert_eq!(block.rank(), block.rows());
            }
        }
        for r in 0..=8usize {
            let cols: Vec<u64> = (0..=r as u64).rev().collect();
            let det = minor_bareiss(&RowSelection::triangular(r + 1), &cols).unwrap();
            let expected = triangular_minor_closed_form(r + 1) * reversal_sign(r + 1);
            assert_eq!(det, expected, "r={r}");
            assert!(is_odd(&det));
            assert_ne!(det, BigInt::from(0));
        }
    }
}
