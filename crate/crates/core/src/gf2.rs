//! Dense linear algebra over GF(2), plus the small integer matrices needed
//! for exact Gram determinants.
//!
//! Rows are packed LSB-first into `u64` words: entry `(i, j)` lives in word
//! `j / 64` of row `i`, at bit `j % 64`. Padding bits past `cols` are always
//! zero, so row words can be compared, hashed and popcounted directly.

use std::fmt;

use crate::error::{Error, Result};

const WORD_BITS: usize = 64;
pub const MAX_DIM: usize = 1 << 16;

fn words_for(cols: usize) -> usize {
    cols.div_ceil(WORD_BITS)
}

fn tail_mask(cols: usize) -> u64 {
    match cols % WORD_BITS {
        0 => u64::MAX,
        r => (1u64 << r) - 1,
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    stride: usize,
    data: Vec<u64>,
}

/// Output of [`BitMatrix::rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub reduced: BitMatrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(
            rows <= MAX_DIM && cols <= MAX_DIM,
            "BitMatrix limited to 2^16 rows and columns"
        );
        let stride = words_for(cols);
        Self {
            rows,
            cols,
            stride,
            data: vec![0; rows * stride],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix from rows given as 0/1 slices.
    pub fn from_bits<R: AsRef<[u8]>>(rows: &[R], cols: usize) -> Result<Self> {
        check_size(rows.len(), cols)?;
        let mut m = Self::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row {i} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            for (j, &b) in row.iter().enumerate() {
                match b {
                    0 => {}
                    1 => m.set(i, j, true),
                    _ => return Err(Error::Parse(format!("entry ({i},{j}) is {b}, not a bit"))),
                }
            }
        }
        Ok(m)
    }

    /// Inverse of [`to_bit_strings`](Self::to_bit_strings): rows of `'0'`/`'1'`.
    pub fn from_bit_strings<S: AsRef<str>>(rows: &[S]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let bytes: Vec<Vec<u8>> = rows
            .iter()
            .map(|r| r.as_ref().bytes().map(|b| b.wrapping_sub(b'0')).collect())
            .collect();
        Self::from_bits(&bytes, cols)
    }

    /// Builds a matrix with at most 64 columns from one word per row.
    pub fn from_u64_rows(rows: &[u64], cols: usize) -> Self {
        assert!(cols <= WORD_BITS);
        let mut m = Self::zeros(rows.len(), cols);
        let mask = if cols == 0 { 0 } else { tail_mask(cols) };
        for (i, &r) in rows.iter().enumerate() {
            if m.stride > 0 {
                m.data[i * m.stride] = r & mask;
            }
        }
        m
    }

    pub fn from_word_rows(rows: &[Vec<u64>], cols: usize) -> Result<Self> {
        check_size(rows.len(), cols)?;
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != m.stride {
                return Err(Error::DimensionMismatch(format!(
                    "row {i} has {} words, expected {}",
                    r.len(),
                    m.stride
                )));
            }
            m.row_mut(i).copy_from_slice(r);
            m.normalize_row(i);
        }
        Ok(m)
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

    pub fn get(&self, i: usize, j: usize) -> bool {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of range");
        (self.data[i * self.stride + j / WORD_BITS] >> (j % WORD_BITS)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of range");
        let w = &mut self.data[i * self.stride + j / WORD_BITS];
        let bit = 1u64 << (j % WORD_BITS);
        if value {
            *w |= bit;
        } else {
            *w &= !bit;
        }
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.stride..(i + 1) * self.stride]
    }

    fn row_mut(&mut self, i: usize) -> &mut [u64] {
        &mut self.data[i * self.stride..(i + 1) * self.stride]
    }

    fn normalize_row(&mut self, i: usize) {
        if self.stride > 0 {
            let mask = tail_mask(self.cols);
            let last = i * self.stride + self.stride - 1;
            self.data[last] &= mask;
        }
    }

    /// Row `i` as a single word; only valid when `cols <= 64`.
    pub fn row_u64(&self, i: usize) -> u64 {
        assert!(self.cols <= WORD_BITS, "row_u64 needs at most 64 columns");
        if self.stride == 0 {
            0
        } else {
            self.data[i * self.stride]
        }
    }

    /// Column `j` packed LSB-first over the rows; only valid when `rows <= 64`.
    pub fn column_u64(&self, j: usize) -> u64 {
        assert!(self.rows <= WORD_BITS, "column_u64 needs at most 64 rows");
        (0..self.rows).fold(0, |acc, i| acc | (u64::from(self.get(i, j)) << i))
    }

    pub fn row_weight(&self, i: usize) -> usize {
        self.row(i).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    fn xor_row_into(&mut self, src: usize, dst: usize) {
        let s = self.stride;
        if src == dst {
            return;
        }
        let (a, b) = if src < dst {
            let (lo, hi) = self.data.split_at_mut(dst * s);
            (&lo[src * s..src * s + s], &mut hi[..s])
        } else {
            let (lo, hi) = self.data.split_at_mut(src * s);
            (&hi[..s], &mut lo[dst * s..dst * s + s])
        };
        for (d, x) in b.iter_mut().zip(a) {
            *d ^= *x;
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for w in 0..self.stride {
            self.data.swap(a * self.stride + w, b * self.stride + w);
        }
    }

    /// Reduced row-echelon form by word-parallel elimination. Columns are
    /// never reordered.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let (word, bit) = (c / WORD_BITS, 1u64 << (c % WORD_BITS));
            let Some(p) = (r..m.rows).find(|&i| m.data[i * m.stride + word] & bit != 0) else {
                continue;
            };
            m.swap_rows(p, r);
            for i in 0..m.rows {
                if i != r && m.data[i * m.stride + word] & bit != 0 {
                    m.xor_row_into(r, i);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref {
            reduced: m,
            rank: r,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Determinant over GF(2).
    pub fn det_f2(&self) -> Result<bool> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(self.rank() == self.rows)
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in self.ones_in_row(i) {
                t.set(j, i, true);
            }
        }
        t
    }

    /// Column indices of the set bits of row `i`, ascending.
    pub fn ones_in_row(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(i).iter().enumerate().flat_map(|(w, &word)| {
            let mut bits = word;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(w * WORD_BITS + b)
            })
        })
    }

    pub fn matmul(&self, other: &BitMatrix) -> Result<BitMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = BitMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for l in self.ones_in_row(i) {
                let src = other.row(l);
                for (d, s) in out.data[i * out.stride..(i + 1) * out.stride].iter_mut().zip(src) {
                    *d ^= *s;
                }
            }
        }
        Ok(out)
    }

    fn row_overlap(&self, a: usize, b: usize) -> usize {
        self.row(a)
            .iter()
            .zip(self.row(b))
            .map(|(x, y)| (x & y).count_ones() as usize)
            .sum()
    }

    /// G·Gᵀ over GF(2).
    pub fn gram_gf2(&self) -> BitMatrix {
        let mut g = BitMatrix::zeros(self.rows, self.rows);
        for i in 0..self.rows {
            for j in i..self.rows {
                if self.row_overlap(i, j) % 2 == 1 {
                    g.set(i, j, true);
                    g.set(j, i, true);
                }
            }
        }
        g
    }

    /// G·Gᵀ over the integers.
    pub fn gram_int(&self) -> IntMatrix {
        let mut g = IntMatrix::zeros(self.rows, self.rows);
        for i in 0..self.rows {
            for j in i..self.rows {
                let v = self.row_overlap(i, j) as i64;
                g.set(i, j, v);
                g.set(j, i, v);
            }
        }
        g
    }

    pub fn gram(&self, ring: Ring) -> Gram {
        match ring {
            Ring::Gf2 => Gram::Gf2(self.gram_gf2()),
            Ring::Integer => Gram::Integer(self.gram_int()),
        }
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &BitMatrix) -> Result<BitMatrix> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "hstack of {} and {} rows",
                self.rows, other.rows
            )));
        }
        check_size(self.rows, self.cols + other.cols)?;
        let mut out = BitMatrix::zeros(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in self.ones_in_row(i) {
                out.set(i, j, true);
            }
            for j in other.ones_in_row(i) {
                out.set(i, self.cols + j, true);
            }
        }
        Ok(out)
    }

    /// Matrix whose column `j` is column `perm[j]` of `self`.
    pub fn select_columns(&self, perm: &[usize]) -> BitMatrix {
        let mut out = BitMatrix::zeros(self.rows, perm.len());
        for i in 0..self.rows {
            for (j, &src) in perm.iter().enumerate() {
                if self.get(i, src) {
                    out.set(i, j, true);
                }
            }
        }
        out
    }

    pub fn select_rows(&self, idx: &[usize]) -> BitMatrix {
        let mut out = BitMatrix::zeros(idx.len(), self.cols);
        for (i, &src) in idx.iter().enumerate() {
            out.row_mut(i).copy_from_slice(self.row(src));
        }
        out
    }

    pub fn remove_column(&self, col: usize) -> BitMatrix {
        let keep: Vec<usize> = (0..self.cols).filter(|&j| j != col).collect();
        self.select_columns(&keep)
    }

    /// XOR of the rows selected by the bits of `mask` (rows ≤ 64).
    pub fn combine_rows(&self, mask: u64) -> Vec<u64> {
        let mut acc = vec![0u64; self.stride];
        let mut bits = mask;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            for (a, w) in acc.iter_mut().zip(self.row(i)) {
                *a ^= *w;
            }
        }
        acc
    }

    pub fn to_bit_strings(&self) -> Vec<String> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| if self.get(i, j) { '1' } else { '0' }).collect())
            .collect()
    }
}

fn check_size(rows: usize, cols: usize) -> Result<()> {
    if rows > MAX_DIM || cols > MAX_DIM {
        Err(Error::TooLarge { rows, cols })
    } else {
        Ok(())
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{}", self.rows, self.cols)?;
        for s in self.to_bit_strings() {
            writeln!(f, "  {s}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Ring {
    Gf2,
    Integer,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Gram {
    Gf2(BitMatrix),
    Integer(IntMatrix),
}

/// Small dense integer matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(Error::DimensionMismatch(format!("ragged integer row {i}")));
            }
            m.data[i * cols..(i + 1) * cols].copy_from_slice(r);
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn mod2(&self) -> BitMatrix {
        let mut m = BitMatrix::zeros(self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                if self.get(i, j).rem_euclid(2) == 1 {
                    m.set(i, j, true);
                }
            }
        }
        m
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Result<i128> {
        if self.rows != self.cols {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(1);
        }
        let mut a: Vec<Vec<i128>> = (0..n)
            .map(|i| (0..n).map(|j| i128::from(self.get(i, j))).collect())
            .collect();
        let mut sign = 1i128;
        let mut prev = 1i128;
        for p in 0..n - 1 {
            if a[p][p] == 0 {
                match (p + 1..n).find(|&i| a[i][p] != 0) {
                    Some(i) => {
                        a.swap(p, i);
                        sign = -sign;
                    }
                    None => return Ok(0),
                }
            }
            for i in p + 1..n {
                for j in p + 1..n {
                    a[i][j] = (a[i][j] * a[p][p] - a[i][p] * a[p][j]) / prev;
                }
                a[i][p] = 0;
            }
            prev = a[p][p];
        }
        Ok(sign * a[n - 1][n - 1])
    }
}
