//! Exact binomial coefficients, binomial submatrices and their determinants.
//!
//! `binom(a, b)` is zero whenever `b < 0` or `b > a`, so the Pascal identity
//! holds for every integer `b`. Determinants of `B(a_1..a_n; 0..n-1)` are
//! available through the difference-product quotient and, independently,
//! through fraction-free elimination on the literal matrix.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitRow};

/// Strictly increasing list of non-negative row indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowSelection {
    rows: Vec<u64>,
}

impl RowSelection {
    pub fn new(rows: Vec<u64>) -> Result<Self> {
        if let Some(w) = rows.windows(2).find(|w| w[0] >= w[1]) {
            return Err(Error::InvalidSelection(format!(
                "rows must be strictly increasing, found {} then {}",
                w[0], w[1]
            )));
        }
        Ok(Self { rows })
    }

    /// The first `n` triangular numbers `t_0, ..., t_{n-1}`.
    pub fn triangular(n: usize) -> Self {
        Self {
            rows: (0..n as u64).map(|i| i * (i + 1) / 2).collect(),
        }
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }
}

pub fn binom(a: i64, b: i64) -> Result<BigInt> {
    if a < 0 {
        return Err(Error::NegativeUpper(a));
    }
    if b < 0 || b > a {
        return Ok(BigInt::zero());
    }
    let k = b.min(a - b);
    let mut acc = BigInt::one();
    // After step i the accumulator is binom(a - k + i, i), always integral.
    for i in 1..=k {
        acc *= a - k + i;
        acc /= i;
    }
    Ok(acc)
}

/// `binom(a, b) mod 2` by Lucas' criterion: odd iff the bits of `b` are a
/// subset of the bits of `a`.
pub fn binom_parity(a: i64, b: i64) -> Result<bool> {
    if a < 0 {
        return Err(Error::NegativeUpper(a));
    }
    Ok(parity(a as u64, b))
}

#[inline]
pub(crate) fn parity(a: u64, b: i64) -> bool {
    b >= 0 && (b as u64) <= a && (a & b as u64) == b as u64
}

/// `B(rows; cols)` both exactly and reduced mod 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinomialSubmatrix {
    pub exact: Vec<Vec<BigInt>>,
    pub parity: BitMatrix,
}

/// Builds `(binom(a_i, b_j))`. Columns need only be distinct so that
/// reversed orders such as `(r, r-1, ..., 0)` are allowed.
pub fn binomial_submatrix(sel: &RowSelection, cols: &[u64]) -> Result<BinomialSubmatrix> {
    check_square(sel, cols)?;
    let exact: Vec<Vec<BigInt>> = sel
        .rows
        .iter()
        .map(|&a| {
            cols.iter()
                .map(|&b| binom(a as i64, b as i64))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    let parity = BitMatrix::from_rows(
        cols.len(),
        sel.rows
            .iter()
            .map(|&a| BitRow::from_bits(cols.iter().map(|&b| parity(a, b as i64))))
            .collect(),
    )?;
    Ok(BinomialSubmatrix { exact, parity })
}

fn check_square(sel: &RowSelection, cols: &[u64]) -> Result<()> {
    if sel.len() != cols.len() {
        return Err(Error::ShapeMismatch(format!(
            "{} rows against {} columns",
            sel.len(),
            cols.len()
        )));
    }
    let mut sorted = cols.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::InvalidSelection("columns must be distinct".into()));
    }
    Ok(())
}

/// `∏_{i<j} (a_j - a_i)`.
pub fn difference_product(rows: &[u64]) -> BigInt {
    let mut acc = BigInt::one();
    for (j, &aj) in rows.iter().enumerate() {
        for &ai in &rows[..j] {
            acc *= BigInt::from(aj) - BigInt::from(ai);
        }
    }
    acc
}

/// `∏_{k=0}^{n-1} k!`.
fn superfactorial(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    let mut fact = BigInt::one();
    for k in 1..n {
        fact *= k;
        acc *= &fact;
    }
    acc
}

/// `det B(a_1..a_n; 0..n-1)` as the difference product divided by
/// `∏ k!`. A nonzero remainder is reported rather than truncated.
pub fn minor_vandermonde(sel: &RowSelection) -> Result<BigInt> {
    let delta = difference_product(&sel.rows);
    let denom = superfactorial(sel.len());
    let (q, r) = delta.div_rem(&denom);
    if !r.is_zero() {
        return Err(Error::NonIntegerQuotient(r.to_string()));
    }
    Ok(q)
}

/// Determinant of `B(rows; cols)` by fraction-free elimination.
pub fn minor_bareiss(sel: &RowSelection, cols: &[u64]) -> Result<BigInt> {
    let sub = binomial_submatrix(sel, cols)?;
    Ok(determinant_bareiss(sub.exact))
}

/// Bareiss elimination on a square integer matrix. Every intermediate
/// division is exact.
pub fn determinant_bareiss(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    assert!(a.iter().all(|r| r.len() == n), "matrix must be square");
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(p) => {
                    a.swap(k, p);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                debug_assert!((&num % &prev).is_zero());
                a[i][j] = num / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// `∏_{i=1}^{n-1} (2i-1)^{n-i}`: the determinant of `B(t_0..t_{n-1}; 0..n-1)`.
pub fn triangular_minor_closed_form(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 1..n {
        acc *= num_traits::pow(BigInt::from(2 * i - 1), n - i);
    }
    acc
}

/// Sign picked up by reversing the column order of an `m x m` matrix.
pub fn reversal_sign(m: usize) -> i32 {
    if (m / 2).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// True when the determinant is odd, i.e. the matrix is invertible mod 2.
pub fn is_odd(value: &BigInt) -> bool {
    value.abs().is_odd()
}
