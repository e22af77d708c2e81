//! Binary Steinhaus triangles.
//!
//! A triangle of size `n` holds one bit per position of
//! `T_n = {(i, j) : i + j < n}` and obeys `a(i, j) = a(i-1, j) ^ a(i-1, j+1)`
//! below the top row. Rows are stored as packed [`BitRow`]s, row `i` having
//! `n - i` bits, so each row is one word-parallel step from the previous one.

use std::fmt;
use std::str::FromStr;

use crate::binomial::parity;
use crate::error::{Error, Result};
use crate::generating::IndexSet;
use crate::gf2::BitRow;

/// `n (n + 1) / 2`.
pub fn triangular_number(n: usize) -> usize {
    n * (n + 1) / 2
}

/// The `n` with `t_n == m`, if any.
pub fn triangular_root(m: usize) -> Option<usize> {
    // floor(sqrt(2m)) is either n or n + 1 when m = t_n
    let guess = ((2.0 * m as f64).sqrt()) as usize;
    (guess.saturating_sub(1)..=guess + 1).find(|&n| triangular_number(n) == m)
}

/// A position `(i, j)`: row `i`, column `j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TrianglePos {
    pub i: usize,
    pub j: usize,
}

impl TrianglePos {
    pub const fn new(i: usize, j: usize) -> Self {
        Self { i, j }
    }

    pub fn in_triangle(self, size: usize) -> bool {
        self.i + self.j < size
    }

    pub(crate) fn check(self, size: usize) -> Result<()> {
        if self.in_triangle(size) {
            Ok(())
        } else {
            Err(Error::OutOfTriangle {
                i: self.i,
                j: self.j,
                size,
            })
        }
    }
}

impl fmt::Display for TrianglePos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

/// The six symmetries of the triangle.
///
/// A position `(i, j)` of a size-`n` triangle has a third coordinate
/// `k = n - 1 - i - j`; each symmetry permutes `(i, j, k)`. A transformed
/// triangle reads its bit at `p` from the original at `g.apply(p)`, which
/// makes the top row of `Rotate120` the right side of the original.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Symmetry {
    Identity,
    /// `(i, j, k) -> (j, k, i)`
    Rotate120,
    /// `(i, j, k) -> (k, i, j)`
    Rotate240,
    /// `(i, j, k) -> (i, k, j)`, mirrors each row.
    Reflect,
    /// `(i, j, k) -> (k, j, i)`
    ReflectJ,
    /// `(i, j, k) -> (j, i, k)`
    ReflectK,
}

impl Symmetry {
    pub const ALL: [Symmetry; 6] = [
        Symmetry::Identity,
        Symmetry::Rotate120,
        Symmetry::Rotate240,
        Symmetry::Reflect,
        Symmetry::ReflectJ,
        Symmetry::ReflectK,
    ];

    fn permutation(self) -> [usize; 3] {
        match self {
            Symmetry::Identity => [0, 1, 2],
            Symmetry::Rotate120 => [1, 2, 0],
            Symmetry::Rotate240 => [2, 0, 1],
            Symmetry::Reflect => [0, 2, 1],
            Symmetry::ReflectJ => [2, 1, 0],
            Symmetry::ReflectK => [1, 0, 2],
        }
    }

    pub fn apply(self, p: TrianglePos, size: usize) -> TrianglePos {
        debug_assert!(p.in_triangle(size));
        let coords = [p.i, p.j, size - 1 - p.i - p.j];
        let perm = self.permutation();
        TrianglePos::new(coords[perm[0]], coords[perm[1]])
    }
}

/// Entry `(i, j)` of the size-`side.len()` triangle whose top row is `top`.
pub fn entry_via_top(top: &BitRow, p: TrianglePos) -> Result<bool> {
    let n = top.len();
    p.check(n)?;
    Ok(side_sum(top, |k| parity(p.i as u64, k as i64 - p.j as i64)))
}

/// Entry `(i, j)` from the right side `R[k] = a(k, n-1-k)`.
pub fn entry_via_right(right: &BitRow, p: TrianglePos) -> Result<bool> {
    let n = right.len();
    p.check(n)?;
    let depth = (n - 1 - p.i - p.j) as u64;
    Ok(side_sum(right, |k| parity(depth, k as i64 - p.i as i64)))
}

/// Entry `(i, j)` from the left side `L[k] = a(k, 0)`.
pub fn entry_via_left(left: &BitRow, p: TrianglePos) -> Result<bool> {
    let n = left.len();
    p.check(n)?;
    Ok(side_sum(left, |k| parity(p.j as u64, k as i64 - p.i as i64)))
}

fn side_sum(side: &BitRow, coeff: impl Fn(usize) -> bool) -> bool {
    side.ones().filter(|&k| coeff(k)).count() % 2 == 1
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SteinhausTriangle {
    rows: Vec<BitRow>,
}

impl SteinhausTriangle {
    pub fn zero(size: usize) -> Self {
        Self {
            rows: (0..size).map(|i| BitRow::zeros(size - i)).collect(),
        }
    }

    pub fn from_top_row(top: &BitRow) -> Self {
        let mut rows = Vec::with_capacity(top.len());
        if !top.is_empty() {
            rows.push(top.clone());
            while rows.last().unwrap().len() > 1 {
                let next = rows.last().unwrap().adjacent_xor();
                rows.push(next);
            }
        }
        Self { rows }
    }

    pub fn from_right_side(right: &BitRow) -> Self {
        Self::from_top_row(right).transform(Symmetry::Rotate240)
    }

    pub fn from_left_side(left: &BitRow) -> Self {
        Self::from_top_row(&left.reversed()).transform(Symmetry::Rotate120)
    }

    /// Builds a triangle from explicit rows, checking shape and the local
    /// rule.
    pub fn from_rows(rows: Vec<BitRow>) -> Result<Self> {
        let n = rows.len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n - i {
                return Err(Error::Parse(format!(
                    "row {i} has {} bits, expected {}",
                    row.len(),
                    n - i
                )));
            }
        }
        let tri = Self { rows };
        if let Some(p) = tri.local_rule_violation() {
            return Err(Error::Parse(format!("local rule fails at {p}")));
        }
        Ok(tri)
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[BitRow] {
        &self.rows
    }

    pub fn top_row(&self) -> BitRow {
        self.rows.first().cloned().unwrap_or_default()
    }

    pub fn entry(&self, p: TrianglePos) -> Result<bool> {
        p.check(self.size())?;
        Ok(self.rows[p.i].get(p.j))
    }

    #[inline]
    pub(crate) fn bit(&self, p: TrianglePos) -> bool {
        self.rows[p.i].get(p.j)
    }

    pub fn positions(size: usize) -> impl Iterator<Item = TrianglePos> {
        (0..size).flat_map(move |i| (0..size - i).map(move |j| TrianglePos::new(i, j)))
    }

    /// First position where the XOR rule fails, if any.
    pub fn local_rule_violation(&self) -> Option<TrianglePos> {
        (1..self.size()).find_map(|i| {
            let expect = self.rows[i - 1].adjacent_xor();
            (expect != self.rows[i]).then(|| {
                let j = (0..expect.len()).find(|&j| expect.get(j) != self.rows[i].get(j)).unwrap();
                TrianglePos::new(i, j)
            })
        })
    }

    pub fn satisfies_local_rule(&self) -> bool {
        self.local_rule_violation().is_none()
    }

    pub fn transform(&self, g: Symmetry) -> Self {
        let n = self.size();
        let rows = (0..n)
            .map(|i| BitRow::from_bits((0..n - i).map(|j| self.bit(g.apply(TrianglePos::new(i, j), n)))))
            .collect();
        Self { rows }
    }

    pub fn rotate120(&self) -> Self {
        self.transform(Symmetry::Rotate120)
    }

    pub fn rotate240(&self) -> Self {
        self.transform(Symmetry::Rotate240)
    }

    pub fn reflect(&self) -> Self {
        self.transform(Symmetry::Reflect)
    }

    /// `a(k, n-1-k)` for `k = 0..n`.
    pub fn right_side(&self) -> BitRow {
        BitRow::from_bits(self.rows.iter().map(|r| r.get(r.len() - 1)))
    }

    /// `a(k, 0)` for `k = 0..n`.
    pub fn left_side(&self) -> BitRow {
        BitRow::from_bits(self.rows.iter().map(|r| r.get(0)))
    }

    /// The bits at the positions of `set`, in the set's stored order.
    pub fn project(&self, set: &IndexSet) -> Result<BitRow> {
        self.project_positions(set.positions())
    }

    pub fn project_positions(&self, positions: &[TrianglePos]) -> Result<BitRow> {
        positions
            .iter()
            .map(|&p| self.entry(p))
            .collect::<Result<Vec<_>>>()
            .map(BitRow::from_bits)
    }

    pub fn xor(&self, other: &Self) -> Result<Self> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch {
                left: self.size(),
                right: other.size(),
            });
        }
        Ok(Self {
            rows: self.rows.iter().zip(&other.rows).map(|(a, b)| a ^ b).collect(),
        })
    }

    /// `size=<n>` followed by one line per row.
    pub fn to_text(&self) -> String {
        let mut out = format!("size={}\n", self.size());
        for row in &self.rows {
            out.push_str(&row.to_string());
            out.push('\n');
        }
        out
    }

    /// Rows indented so the triangle points down.
    pub fn to_pretty(&self) -> String {
        let mut out = String::new();
        for (i, row) in self.rows.iter().enumerate() {
            out.push_str(&" ".repeat(i));
            let cells: Vec<&str> = row.iter().map(|b| if b { "1" } else { "0" }).collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }
}

impl FromStr for SteinhausTriangle {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut lines = s.lines();
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("missing size header".into()))?;
        let size: usize = header
            .trim()
            .strip_prefix("size=")
            .and_then(|v| v.parse().ok())
            .ok_or_else(|| Error::Parse(format!("bad header {header:?}")))?;
        let rows = lines
            .filter(|l| !l.trim().is_empty())
            .map(|l| l.trim().parse())
            .collect::<Result<Vec<BitRow>>>()?;
        if rows.len() != size {
            return Err(Error::Parse(format!("header says {size} rows, found {}", rows.len())));
        }
        Self::from_rows(rows)
    }
}

impl fmt::Debug for SteinhausTriangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.rows.iter().map(|r| r.to_string()).collect();
        write!(f, "ST[{}]", rows.join(" / "))
    }
}
