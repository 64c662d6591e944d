//! Binary linear codes: construction, dual, hull, weight data, shortening.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf2::BitMatrix;

/// Largest dimension for which codewords are enumerated exhaustively.
pub const ENUMERATION_CAP: usize = 28;

/// An `[n, k]` binary linear code with its generator kept in RREF.
#[derive(Clone)]
pub struct LinearCode {
    n: usize,
    k: usize,
    generator: BitMatrix,
    pivots: Vec<usize>,
    weights: OnceLock<WeightEnumerator>,
    hull: OnceLock<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LcdStatus {
    pub hull_dim: usize,
    pub is_lcd: bool,
}

impl LinearCode {
    /// Code spanned by the rows of `g`, which must be linearly independent.
    pub fn new(g: &BitMatrix) -> Result<Self> {
        if g.rows() == 0 || g.rows() > g.cols() {
            return Err(Error::InvalidParameters(format!(
                "generator must satisfy 1 <= k <= n, got {}x{}",
                g.rows(),
                g.cols()
            )));
        }
        let r = g.rref();
        if r.rank != g.rows() {
            return Err(Error::RankDeficient {
                rows: g.rows(),
                rank: r.rank,
            });
        }
        Ok(Self::from_rref(r.reduced, r.pivots))
    }

    /// Code spanned by the rows of `g`, dropping dependent rows.
    pub fn from_spanning(g: &BitMatrix) -> Self {
        let r = g.rref();
        let keep: Vec<usize> = (0..r.rank).collect();
        Self::from_rref(r.reduced.select_rows(&keep), r.pivots)
    }

    fn from_rref(generator: BitMatrix, pivots: Vec<usize>) -> Self {
        Self {
            n: generator.cols(),
            k: generator.rows(),
            generator,
            pivots,
            weights: OnceLock::new(),
            hull: OnceLock::new(),
        }
    }

    /// The whole space `F_2^n`.
    pub fn full_space(n: usize) -> Self {
        Self::from_rref(BitMatrix::identity(n), (0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.k
    }

    pub fn is_empty(&self) -> bool {
        self.k == 0
    }

    pub fn generator(&self) -> &BitMatrix {
        &self.generator
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn dual(&self) -> LinearCode {
        let mut is_pivot = vec![false; self.n];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..self.n).filter(|&j| !is_pivot[j]).collect();
        let mut h = BitMatrix::zeros(free.len(), self.n);
        for (r, &f) in free.iter().enumerate() {
            h.set(r, f, true);
            for (i, &p) in self.pivots.iter().enumerate() {
                if self.generator.get(i, f) {
                    h.set(r, p, true);
                }
            }
        }
        let rr = h.rref();
        Self::from_rref(rr.reduced, rr.pivots)
    }

    pub fn hull_dim(&self) -> usize {
        *self.hull.get_or_init(|| self.k - self.generator.gram_gf2().rank())
    }

    pub fn lcd_status(&self) -> LcdStatus {
        let hull_dim = self.hull_dim();
        LcdStatus {
            hull_dim,
            is_lcd: hull_dim == 0,
        }
    }

    pub fn is_lcd(&self) -> bool {
        self.hull_dim() == 0
    }

    /// Exact weight enumerator by a Gray-code walk over all `2^k` codewords.
    pub fn weight_enumerator(&self) -> Result<&WeightEnumerator> {
        if self.k > ENUMERATION_CAP {
            return Err(Error::EnumerationCap {
                k: self.k,
                cap: ENUMERATION_CAP,
            });
        }
        Ok(self.weights.get_or_init(|| gray_walk(&self.generator)))
    }

    pub fn min_weight(&self) -> Result<usize> {
        let we = self.weight_enumerator()?;
        we.min_nonzero_weight()
            .ok_or_else(|| Error::InvalidParameters("the zero code has no nonzero codewords".into()))
    }

    /// Codewords vanishing at coordinate `i`, with that coordinate deleted.
    pub fn shorten(&self, i: usize) -> Result<LinearCode> {
        if i >= self.n {
            return Err(Error::InvalidParameters(format!(
                "coordinate {i} out of range for length {}",
                self.n
            )));
        }
        let mut g = self.generator.clone();
        let with_bit: Vec<usize> = (0..self.k).filter(|&r| g.get(r, i)).collect();
        let keep: Vec<usize> = match with_bit.split_first() {
            None => (0..self.k).collect(),
            Some((&r0, rest)) => {
                let mut rows: Vec<Vec<u64>> = (0..self.k).map(|r| g.row(r).to_vec()).collect();
                let pivot = rows[r0].clone();
                for &r in rest {
                    for (d, s) in rows[r].iter_mut().zip(&pivot) {
                        *d ^= *s;
                    }
                }
                g = BitMatrix::from_word_rows(&rows, self.n)?;
                (0..self.k).filter(|&r| r != r0).collect()
            }
        };
        let reduced = g.select_rows(&keep).remove_column(i);
        let rr = reduced.rref();
        Ok(Self::from_rref(rr.reduced, rr.pivots))
    }

    /// Every codeword as packed words, in Gray-code order starting from zero.
    pub fn codewords(&self) -> Result<Vec<Vec<u64>>> {
        if self.k > ENUMERATION_CAP {
            return Err(Error::EnumerationCap {
                k: self.k,
                cap: ENUMERATION_CAP,
            });
        }
        let width = words_len(self.n);
        let mut acc = vec![0u64; width];
        let mut out = Vec::with_capacity(1 << self.k);
        out.push(acc.clone());
        for step in 1u64..(1u64 << self.k) {
            let r = step.trailing_zeros() as usize;
            for (a, w) in acc.iter_mut().zip(self.generator.row(r)) {
                *a ^= *w;
            }
            out.push(acc.clone());
        }
        Ok(out)
    }

    /// Codewords as single words; only for `n <= 64`.
    pub fn codewords_u64(&self) -> Result<Vec<u64>> {
        if self.n > 64 {
            return Err(Error::InvalidParameters(format!(
                "length {} exceeds 64 for single-word codewords",
                self.n
            )));
        }
        Ok(self
            .codewords()?
            .into_iter()
            .map(|w| w.first().copied().unwrap_or(0))
            .collect())
    }
}

fn words_len(n: usize) -> usize {
    n.div_ceil(64)
}

fn gray_walk(g: &BitMatrix) -> WeightEnumerator {
    let k = g.rows();
    let n = g.cols();
    let mut counts = vec![0u64; n + 1];
    counts[0] = 1;
    if k == 0 {
        return WeightEnumerator::from_counts(&counts);
    }
    if n <= 64 {
        let rows: Vec<u64> = (0..k).map(|i| g.row_u64(i)).collect();
        let mut acc = 0u64;
        for step in 1u64..(1u64 << k) {
            acc ^= rows[step.trailing_zeros() as usize];
            counts[acc.count_ones() as usize] += 1;
        }
    } else {
        let mut acc = vec![0u64; g.row(0).len()];
        for step in 1u64..(1u64 << k) {
            let r = step.trailing_zeros() as usize;
            for (a, w) in acc.iter_mut().zip(g.row(r)) {
                *a ^= *w;
            }
            let wt: u32 = acc.iter().map(|w| w.count_ones()).sum();
            counts[wt as usize] += 1;
        }
    }
    WeightEnumerator::from_counts(&counts)
}

impl fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinearCode[{}, {}] {:?}", self.n, self.k, self.generator)
    }
}

impl PartialEq for LinearCode {
    fn eq(&self, other: &Self) -> bool {
        self.generator == other.generator
    }
}

impl Eq for LinearCode {}

/// Map from weight to number of codewords of that weight.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightEnumerator {
    coeffs: BTreeMap<usize, u64>,
}

impl WeightEnumerator {
    pub fn from_counts(counts: &[u64]) -> Self {
        let coeffs = counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(w, &c)| (w, c))
            .collect();
        Self { coeffs }
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, u64)>) -> Self {
        let mut coeffs = BTreeMap::new();
        for (w, c) in pairs {
            if c > 0 {
                *coeffs.entry(w).or_insert(0) += c;
            }
        }
        Self { coeffs }
    }

    pub fn coeff(&self, w: usize) -> u64 {
        self.coeffs.get(&w).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.coeffs.values().sum()
    }

    pub fn min_nonzero_weight(&self) -> Option<usize> {
        self.coeffs.keys().copied().find(|&w| w > 0)
    }

    pub fn max_weight(&self) -> usize {
        self.coeffs.keys().next_back().copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.coeffs.iter().map(|(&w, &c)| (w, c))
    }
}

impl fmt::Display for WeightEnumerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (w, c) in self.iter() {
            if !first {
                f.write_str("+")?;
            }
            first = false;
            match (w, c) {
                (0, c) => write!(f, "{c}")?,
                (w, 1) => write!(f, "y^{w}")?,
                (w, c) => write!(f, "{c}y^{w}")?,
            }
        }
        Ok(())
    }
}
