//! Word-packed linear algebra over GF(2).
//!
//! Rows are stored as `u64` words with column `c` at word `c / 64`, bit
//! `c % 64`. Bits past the logical length are always zero, so word-level
//! comparisons and popcounts need no masking.

use std::fmt;
use std::ops::{BitXor, BitXorAssign};
use std::str::FromStr;

use crate::error::{Error, Result};

const WORD: usize = u64::BITS as usize;

#[inline]
fn word_count(len: usize) -> usize {
    len.div_ceil(WORD)
}

/// A vector over GF(2).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct BitRow {
    len: usize,
    words: Vec<u64>,
}

impl BitRow {
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; word_count(len)],
        }
    }

    pub fn from_bits<I: IntoIterator<Item = bool>>(bits: I) -> Self {
        let mut row = Self::zeros(0);
        for b in bits {
            row.push(b);
        }
        row
    }

    /// Single set bit at `index`.
    pub fn unit(len: usize, index: usize) -> Self {
        let mut row = Self::zeros(len);
        row.set(index, true);
        row
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn push(&mut self, bit: bool) {
        if self.len.is_multiple_of(WORD) {
            self.words.push(0);
        }
        self.len += 1;
        self.set(self.len - 1, bit);
    }

    #[inline]
    pub fn get(&self, index: usize) -> bool {
        assert!(index < self.len, "bit {index} out of range (len {})", self.len);
        (self.words[index / WORD] >> (index % WORD)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, index: usize, bit: bool) {
        assert!(index < self.len, "bit {index} out of range (len {})", self.len);
        let mask = 1u64 << (index % WORD);
        if bit {
            self.words[index / WORD] |= mask;
        } else {
            self.words[index / WORD] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, index: usize) {
        assert!(index < self.len, "bit {index} out of range (len {})", self.len);
        self.words[index / WORD] ^= 1u64 << (index % WORD);
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    /// Indices of the set bits, ascending.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let tz = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(wi * WORD + tz)
            })
        })
    }

    /// Lowest set bit at index `>= start`.
    pub fn first_one_from(&self, start: usize) -> Option<usize> {
        if start >= self.len {
            return None;
        }
        let mut wi = start / WORD;
        let mut w = self.words[wi] & (!0u64 << (start % WORD));
        loop {
            if w != 0 {
                return Some(wi * WORD + w.trailing_zeros() as usize);
            }
            wi += 1;
            if wi >= self.words.len() {
                return None;
            }
            w = self.words[wi];
        }
    }

    /// Inner product over GF(2): parity of the AND.
    pub fn dot(&self, other: &BitRow) -> bool {
        assert_eq!(self.len, other.len, "dot of rows with different lengths");
        let ones: u32 = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum();
        ones & 1 == 1
    }

    #[inline]
    pub fn xor_assign(&mut self, other: &BitRow) {
        assert_eq!(self.len, other.len, "xor of rows with different lengths");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    /// XOR restricted to words starting at `first_word`; used by elimination
    /// once the leading columns are known to be clear.
    #[inline]
    fn xor_assign_from(&mut self, other: &BitRow, first_word: usize) {
        for (a, b) in self.words[first_word..].iter_mut().zip(&other.words[first_word..]) {
            *a ^= b;
        }
    }

    /// Row `r[j] ^ r[j+1]` of length `len - 1`: one step of the XOR
    /// triangle rule. The empty row maps to itself.
    pub fn adjacent_xor(&self) -> BitRow {
        if self.len == 0 {
            return BitRow::zeros(0);
        }
        let len = self.len - 1;
        let mut words = Vec::with_capacity(word_count(len));
        for wi in 0..word_count(len) {
            let cur = self.words[wi];
            let next = self.words.get(wi + 1).copied().unwrap_or(0);
            let shifted = (cur >> 1) | (next << (WORD - 1));
            words.push(cur ^ shifted);
        }
        let mut row = BitRow { len, words };
        row.clear_padding();
        row
    }

    /// Bits `[start, start + len)` as a new row.
    pub fn slice(&self, start: usize, len: usize) -> BitRow {
        assert!(start + len <= self.len, "slice out of range");
        let mut out = BitRow::zeros(len);
        let shift = start % WORD;
        let base = start / WORD;
        for wi in 0..out.words.len() {
            let lo = self.words.get(base + wi).copied().unwrap_or(0) >> shift;
            let hi = if shift == 0 {
                0
            } else {
                self.words.get(base + wi + 1).copied().unwrap_or(0) << (WORD - shift)
            };
            out.words[wi] = lo | hi;
        }
        out.clear_padding();
        out
    }

    /// A row of length `len` holding `self` at bit offset `offset`, zeros
    /// elsewhere.
    pub fn placed_at(&self, len: usize, offset: usize) -> BitRow {
        assert!(offset + self.len <= len, "placement out of range");
        let mut out = BitRow::zeros(len);
        let shift = offset % WORD;
        let base = offset / WORD;
        for (wi, &w) in self.words.iter().enumerate() {
            out.words[base + wi] |= w << shift;
            if shift != 0 && base + wi + 1 < out.words.len() {
                out.words[base + wi + 1] |= w >> (WORD - shift);
            }
        }
        out
    }

    pub fn reversed(&self) -> BitRow {
        BitRow::from_bits((0..self.len).rev().map(|i| self.get(i)))
    }

    fn clear_padding(&mut self) {
        let rem = self.len % WORD;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }
}

impl BitXor for &BitRow {
    type Output = BitRow;

    fn bitxor(self, rhs: &BitRow) -> BitRow {
        let mut out = self.clone();
        out.xor_assign(rhs);
        out
    }
}

impl BitXorAssign<&BitRow> for BitRow {
    fn bitxor_assign(&mut self, rhs: &BitRow) {
        self.xor_assign(rhs);
    }
}

impl fmt::Display for BitRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.iter() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitRow({self})")
    }
}

impl FromStr for BitRow {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::Parse(format!("unexpected character {other:?} in bit string"))),
            })
            .collect::<Result<Vec<bool>>>()
            .map(BitRow::from_bits)
    }
}

/// Positive block sizes describing the diagonal blocks of a square matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockPartition {
    sizes: Vec<usize>,
}

impl BlockPartition {
    pub fn new(sizes: Vec<usize>) -> Result<Self> {
        if let Some(pos) = sizes.iter().position(|&s| s == 0) {
            return Err(Error::ShapeMismatch(format!("block {pos} has size 0")));
        }
        Ok(Self { sizes })
    }

    /// Singleton blocks: plain forward substitution.
    pub fn unit(dim: usize) -> Self {
        Self { sizes: vec![1; dim] }
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn dimension(&self) -> usize {
        self.sizes.iter().sum()
    }

    /// `(offset, size)` of each block in order.
    pub fn blocks(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.sizes.iter().scan(0, |offset, &size| {
            let start = *offset;
            *offset += size;
            Some((start, size))
        })
    }
}

/// Dense row-major matrix over GF(2).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BitRow>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![BitRow::zeros(cols); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            rows: n,
            cols: n,
            data: (0..n).map(|i| BitRow::unit(n, i)).collect(),
        }
    }

    pub fn from_rows(cols: usize, data: Vec<BitRow>) -> Result<Self> {
        if let Some(bad) = data.iter().find(|r| r.len() != cols) {
            return Err(Error::ShapeMismatch(format!(
                "row of length {} in a matrix with {cols} columns",
                bad.len()
            )));
        }
        Ok(Self {
            rows: data.len(),
            cols,
            data,
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let data = (0..rows)
            .map(|r| BitRow::from_bits((0..cols).map(|c| f(r, c))))
            .collect();
        Self { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, r: usize) -> &BitRow {
        &self.data[r]
    }

    pub fn row_data(&self) -> &[BitRow] {
        &self.data
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.data[r].get(c)
    }

    pub fn set(&mut self, r: usize, c: usize, bit: bool) {
        self.data[r].set(c, bit);
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut out = BitMatrix::zeros(self.cols, self.rows);
        for (r, row) in self.data.iter().enumerate() {
            for c in row.ones() {
                out.data[c].set(r, true);
            }
        }
        out
    }

    pub fn submatrix(&self, row0: usize, col0: usize, rows: usize, cols: usize) -> BitMatrix {
        assert!(row0 + rows <= self.rows && col0 + cols <= self.cols, "submatrix out of range");
        BitMatrix {
            rows,
            cols,
            data: self.data[row0..row0 + rows]
                .iter()
                .map(|r| r.slice(col0, cols))
                .collect(),
        }
    }

    /// `self · x` with `x` read as a column vector.
    pub fn mul_vec(&self, x: &BitRow) -> Result<BitRow> {
        if x.len() != self.cols {
            return Err(Error::ShapeMismatch(format!(
                "vector of length {} against {} columns",
                x.len(),
                self.cols
            )));
        }
        Ok(BitRow::from_bits(self.data.iter().map(|row| row.dot(x))))
    }

    pub fn mul(&self, other: &BitMatrix) -> Result<BitMatrix> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let data = self
            .data
            .iter()
            .map(|row| {
                let mut acc = BitRow::zeros(other.cols);
                for k in row.ones() {
                    acc.xor_assign(&other.data[k]);
                }
                acc
            })
            .collect();
        Ok(BitMatrix {
            rows: self.rows,
            cols: other.cols,
            data,
        })
    }

    pub fn rank(&self) -> usize {
        let mut work = self.data.clone();
        let mut rank = 0;
        for col in 0..self.cols {
            if rank == work.len() {
                break;
            }
            let Some(pivot) = (rank..work.len()).find(|&r| work[r].get(col)) else {
                continue;
            };
            work.swap(rank, pivot);
            let (done, rest) = work.split_at_mut(rank + 1);
            let pivot_row = &done[rank];
            let first_word = col / WORD;
            for row in rest.iter_mut() {
                if row.get(col) {
                    row.xor_assign_from(pivot_row, first_word);
                }
            }
            rank += 1;
        }
        rank
    }

    /// Gauss-Jordan reduction of `self` carrying `companion` rows through the
    /// same operations. Leaves `work` as the identity on success.
    fn gauss_jordan<T: RowCompanion>(&self, companion: &mut T) -> Result<()> {
        if !self.is_square() {
            return Err(Error::ShapeMismatch(format!(
                "expected a square matrix, got {}x{}",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let mut work = self.data.clone();
        for col in 0..n {
            let pivot = (col..n).find(|&r| work[r].get(col)).ok_or(Error::Singular)?;
            work.swap(col, pivot);
            companion.swap(col, pivot);
            let pivot_row = work[col].clone();
            let first_word = col / WORD;
            for (r, row) in work.iter_mut().enumerate() {
                if r != col && row.get(col) {
                    row.xor_assign_from(&pivot_row, first_word);
                    companion.add_row(r, col);
                }
            }
        }
        Ok(())
    }

    pub fn invert(&self) -> Result<BitMatrix> {
        let mut inverse = BitMatrix::identity(self.rows);
        self.gauss_jordan(&mut inverse.data)?;
        Ok(inverse)
    }

    /// Solves `self · x = rhs`.
    pub fn solve(&self, rhs: &BitRow) -> Result<BitRow> {
        if rhs.len() != self.rows {
            return Err(Error::ShapeMismatch(format!(
                "right-hand side of length {} for {} rows",
                rhs.len(),
                self.rows
            )));
        }
        let mut x = rhs.clone();
        self.gauss_jordan(&mut x)?;
        Ok(x)
    }

    /// Solves `self · x = rhs` by forward substitution over the diagonal
    /// blocks of `part`. Every entry right of a row's diagonal block must be
    /// zero.
    pub fn solve_block_lower(&self, part: &BlockPartition, rhs: &BitRow) -> Result<BitRow> {
        if !self.is_square() {
            return Err(Error::ShapeMismatch(format!(
                "expected a square matrix, got {}x{}",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        if part.dimension() != n {
            return Err(Error::ShapeMismatch(format!(
                "partition sums to {} for dimension {n}",
                part.dimension()
            )));
        }
        if rhs.len() != n {
            return Err(Error::ShapeMismatch(format!(
                "right-hand side of length {} for dimension {n}",
                rhs.len()
            )));
        }
        for (offset, size) in part.blocks() {
            for r in offset..offset + size {
                if let Some(col) = self.data[r].first_one_from(offset + size) {
                    return Err(Error::NotBlockTriangular { row: r, col });
                }
            }
        }

        let mut x = BitRow::zeros(n);
        for (offset, size) in part.blocks() {
            // Only columns < offset of x are populated, so a full dot product
            // picks up exactly the already-solved part.
            let local_rhs = BitRow::from_bits(
                (offset..offset + size).map(|r| rhs.get(r) ^ self.data[r].dot(&x)),
            );
            let block = self.submatrix(offset, offset, size, size);
            let local = block.solve(&local_rhs)?;
            for b in local.ones() {
                x.set(offset + b, true);
            }
        }
        Ok(x)
    }
}

trait RowCompanion {
    fn swap(&mut self, a: usize, b: usize);
    /// `row[target] ^= row[source]`.
    fn add_row(&mut self, target: usize, source: usize);
}

impl RowCompanion for Vec<BitRow> {
    fn swap(&mut self, a: usize, b: usize) {
        self.as_mut_slice().swap(a, b);
    }

    fn add_row(&mut self, target: usize, source: usize) {
        let src = self[source].clone();
        self[target].xor_assign(&src);
    }
}

impl RowCompanion for BitRow {
    fn swap(&mut self, a: usize, b: usize) {
        let (x, y) = (self.get(a), self.get(b));
        self.set(a, y);
        self.set(b, x);
    }

    fn add_row(&mut self, target: usize, source: usize) {
        if self.get(source) {
            self.flip(target);
        }
    }
}

impl fmt::Display for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.data {
            writeln!(f, "{row}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitMatrix {}x{} [", self.rows, self.cols)?;
        for (i, row) in self.data.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{row}")?;
        }
        f.write_str("]")
    }
}
