//! Column-type multiplicities and canonical forms under permutation
//! equivalence.
//!
//! A binary code is determined up to coordinate permutation by the multiset
//! of its generator columns, viewed as vectors of `F_2^k`. Changing the
//! generator by an invertible `T` moves every column by `T`, so equivalence
//! classes are `GL(k, 2)`-orbits of multiplicity vectors.
//!
//! The canonical form is found by a backtracking search over ordered bases.
//! A linear map `h` is fixed by the images `c_0, .., c_{k-1}` of the unit
//! vectors, and the serialization `(colour(h(v)))_{v = 1 .. 2^k - 1}` has
//! the property that its first `2^j - 1` entries depend only on
//! `c_0 .. c_{j-1}`. Colours come from an invariant refinement of the point
//! multiplicities, which keeps the tie sets small; automorphisms discovered
//! along the way prune equivalent subtrees.

use std::cmp::Ordering;
use std::fmt;

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::gf2::BitMatrix;

/// Largest dimension accepted by the canonical-form search.
pub const CANON_MAX_K: usize = 6;
/// Largest dimension for which a multiplicity vector is stored densely.
pub const TYPES_MAX_K: usize = 16;

/// Multiplicity of each column type of a generator matrix.
///
/// Column types are encoded LSB-first: bit `i` of the type is the entry in
/// generator row `i`. Slot 0 holds the number of all-zero columns.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TypeMultiplicity {
    k: usize,
    counts: Vec<u32>,
}

impl TypeMultiplicity {
    pub fn zeros(k: usize) -> Self {
        assert!(k <= TYPES_MAX_K, "column types limited to k <= {TYPES_MAX_K}");
        Self {
            k,
            counts: vec![0; 1 << k],
        }
    }

    /// From a dense vector of length `2^k` whose slot 0 is the zero count.
    pub fn from_counts(k: usize, counts: Vec<u32>) -> Result<Self> {
        if k > TYPES_MAX_K || counts.len() != 1 << k {
            return Err(Error::InvalidParameters(format!(
                "expected {} multiplicities for k={k}, got {}",
                1usize << k.min(TYPES_MAX_K),
                counts.len()
            )));
        }
        Ok(Self { k, counts })
    }

    pub fn dim(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.counts.iter().map(|&c| c as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn zero_count(&self) -> u32 {
        self.counts[0]
    }

    pub fn get(&self, v: usize) -> u32 {
        self.counts[v]
    }

    pub fn set(&mut self, v: usize, m: u32) {
        self.counts[v] = m;
    }

    pub fn add(&mut self, v: usize, m: u32) {
        self.counts[v] += m;
    }

    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    /// Nonzero types with positive multiplicity.
    pub fn support(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.counts
            .iter()
            .enumerate()
            .skip(1)
            .filter(|(_, &m)| m > 0)
            .map(|(v, &m)| (v, m))
    }

    /// Rank of the span of the support.
    pub fn support_rank(&self) -> usize {
        let mut basis: Vec<u64> = Vec::new();
        for (v, _) in self.support() {
            let mut x = v as u64;
            for &b in &basis {
                x = x.min(x ^ b);
            }
            if x != 0 {
                basis.push(x);
                basis.sort_unstable_by(|a, b| b.cmp(a));
            }
        }
        basis.len()
    }

    /// Weight of the codeword `u·G` for each message `u` (index 0 is zero).
    pub fn codeword_weights(&self) -> Vec<u32> {
        let size = 1usize << self.k;
        let mut w = vec![0u32; size];
        for (v, m) in self.support() {
            for (u, slot) in w.iter_mut().enumerate().skip(1) {
                if (u & v).count_ones() % 2 == 1 {
                    *slot += m;
                }
            }
        }
        w
    }

    pub fn min_weight(&self) -> Option<u32> {
        self.codeword_weights().into_iter().skip(1).min()
    }

    /// Generator with columns grouped by type in increasing type order,
    /// followed by the zero columns.
    pub fn to_generator(&self) -> BitMatrix {
        let mut g = BitMatrix::zeros(self.k, self.len());
        let mut col = 0;
        for (v, m) in self.support() {
            for _ in 0..m {
                for i in 0..self.k {
                    if v >> i & 1 == 1 {
                        g.set(i, col, true);
                    }
                }
                col += 1;
            }
        }
        g
    }

    pub fn to_code(&self) -> Result<LinearCode> {
        LinearCode::new(&self.to_generator())
    }

    /// The multiplicity vector after moving every column by `map`, given as
    /// the images of all points (`map[0] == 0`).
    fn pull_back(&self, map: &[usize]) -> Self {
        let mut counts = vec![0u32; self.counts.len()];
        counts[0] = self.counts[0];
        for (v, slot) in counts.iter_mut().enumerate().skip(1) {
            *slot = self.counts[map[v]];
        }
        Self { k: self.k, counts }
    }
}

impl fmt::Debug for TypeMultiplicity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TypeMultiplicity(k={}, zero={}, {{", self.k, self.counts[0])?;
        let mut first = true;
        for (v, m) in self.support() {
            if !first {
                write!(f, ", ")?;
            }
            first = false;
            write!(f, "{v:0width$b}:{m}", width = self.k)?;
        }
        write!(f, "}})")
    }
}

/// Count each generator column (of the RREF generator) as a vector of `F_2^k`.
pub fn column_types(code: &LinearCode) -> Result<TypeMultiplicity> {
    let k = code.dim();
    if k > TYPES_MAX_K {
        return Err(Error::InvalidParameters(format!(
            "column types need k <= {TYPES_MAX_K}, got {k}"
        )));
    }
    let g = code.generator();
    let mut tm = TypeMultiplicity::zeros(k);
    for j in 0..code.len() {
        let v = (0..k).fold(0usize, |acc, i| acc | (usize::from(g.get(i, j)) << i));
        tm.add(v, 1);
    }
    Ok(tm)
}

/// Byte string identifying a permutation-equivalence class.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey(Vec<u8>);

impl CanonicalKey {
    fn encode(tm: &TypeMultiplicity) -> Self {
        let mut bytes = Vec::with_capacity(1 + 4 * tm.counts.len());
        bytes.push(tm.k as u8);
        for &c in &tm.counts {
            bytes.extend_from_slice(&c.to_be_bytes());
        }
        CanonicalKey(bytes)
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        hex::encode(&self.0)
    }

    pub fn from_hex(s: &str) -> Result<Self> {
        let bytes = hex::decode(s).map_err(|e| Error::Parse(format!("bad key hex: {e}")))?;
        let key = CanonicalKey(bytes);
        key.decode()?;
        Ok(key)
    }

    /// The canonical multiplicity vector this key serializes.
    pub fn decode(&self) -> Result<TypeMultiplicity> {
        let (&k, rest) = self
            .0
            .split_first()
            .ok_or_else(|| Error::Parse("empty canonical key".into()))?;
        let k = usize::from(k);
        if k > TYPES_MAX_K || rest.len() != 4 << k {
            return Err(Error::Parse(format!("canonical key has wrong length for k={k}")));
        }
        let counts = rest
            .chunks_exact(4)
            .map(|c| u32::from_be_bytes([c[0], c[1], c[2], c[3]]))
            .collect();
        TypeMultiplicity::from_counts(k, counts)
    }
}

impl fmt::Debug for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalKey({})", self.to_hex())
    }
}

pub fn canonical_key(tm: &TypeMultiplicity) -> Result<CanonicalKey> {
    Ok(CanonicalKey::encode(&canonical_multiplicity(tm)?))
}

pub fn canonical_form(code: &LinearCode) -> Result<CanonicalKey> {
    canonical_key(&column_types(code)?)
}

pub fn equivalent(a: &LinearCode, b: &LinearCode) -> Result<bool> {
    if a.len() != b.len() || a.dim() != b.dim() {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

/// The canonical representative of the `GL(k, 2)`-orbit of `tm`.
pub fn canonical_multiplicity(tm: &TypeMultiplicity) -> Result<TypeMultiplicity> {
    if tm.k > CANON_MAX_K {
        return Err(Error::EnumerationCap {
            k: tm.k,
            cap: CANON_MAX_K,
        });
    }
    if tm.k == 0 {
        return Ok(tm.clone());
    }
    let colours = refine_colours(tm);
    let mut search = LeafSearch::new(tm.k, &colours);
    search.run();
    Ok(tm.pull_back(&search.best_map))
}

fn rank_signatures<S: Ord + Clone>(sigs: &[S]) -> (Vec<u32>, usize) {
    let mut sorted: Vec<S> = sigs.to_vec();
    sorted.sort();
    sorted.dedup();
    let colours = sigs
        .iter()
        .map(|s| sorted.binary_search(s).expect("present") as u32)
        .collect();
    (colours, sorted.len())
}

/// Equivariant colouring of the nonzero points: start from multiplicity and
/// the weights of codewords covering the point, then refine along lines.
fn refine_colours(tm: &TypeMultiplicity) -> Vec<u32> {
    let size = 1usize << tm.k;
    let weights = tm.codeword_weights();
    let initial: Vec<(u32, Vec<u32>)> = (0..size)
        .map(|v| {
            if v == 0 {
                return (u32::MAX, Vec::new());
            }
            let mut ws: Vec<u32> = (1..size)
                .filter(|&u| (u & v).count_ones() % 2 == 1)
                .map(|u| weights[u])
                .collect();
            ws.sort_unstable();
            (tm.counts[v], ws)
        })
        .collect();
    let (mut colours, mut classes) = rank_signatures(&initial);
    loop {
        let sigs: Vec<(u32, Vec<(u32, u32)>)> = (0..size)
            .map(|v| {
                if v == 0 {
                    return (u32::MAX, Vec::new());
                }
                let mut pairs: Vec<(u32, u32)> = (1..size)
                    .filter(|&u| u != v && u < (u ^ v))
                    .map(|u| {
                        let (a, b) = (colours[u], colours[u ^ v]);
                        (a.min(b), a.max(b))
                    })
                    .collect();
                pairs.sort_unstable();
                (colours[v], pairs)
            })
            .collect();
        let (next, next_classes) = rank_signatures(&sigs);
        colours = next;
        if next_classes == classes {
            break;
        }
        classes = next_classes;
    }
    colours
}

struct LeafSearch<'a> {
    k: usize,
    size: usize,
    colours: &'a [u32],
    cur_map: Vec<usize>,
    cur_seq: Vec<u32>,
    best_map: Vec<usize>,
    best_seq: Option<Vec<u32>>,
    automorphisms: Vec<Vec<usize>>,
}

impl<'a> LeafSearch<'a> {
    fn new(k: usize, colours: &'a [u32]) -> Self {
        let size = 1 << k;
        Self {
            k,
            size,
            colours,
            cur_map: vec![0; size],
            cur_seq: vec![0; size],
            best_map: Vec::new(),
            best_seq: None,
            automorphisms: Vec::new(),
        }
    }

    fn run(&mut self) {
        let mut basis = Vec::with_capacity(self.k);
        self.descend(&mut basis);
    }

    fn descend(&mut self, basis: &mut Vec<usize>) {
        let level = basis.len();
        let span = 1usize << level;
        if level == self.k {
            self.leaf();
            return;
        }
        let mut in_span = vec![false; self.size];
        for &p in &self.cur_map[..span] {
            in_span[p] = true;
        }
        let mut best_block: Vec<u32> = Vec::new();
        let mut tied: Vec<usize> = Vec::new();
        let mut block = vec![0u32; span];
        for (c, &spanned) in in_span.iter().enumerate().skip(1) {
            if spanned {
                continue;
            }
            for (x, slot) in block.iter_mut().enumerate() {
                *slot = self.colours[c ^ self.cur_map[x]];
            }
            match block.as_slice().cmp(best_block.as_slice()) {
                Ordering::Greater => {
                    best_block.clone_from(&block);
                    tied.clear();
                    tied.push(c);
                }
                Ordering::Equal => tied.push(c),
                Ordering::Less => {}
            }
        }
        self.cur_seq[span..2 * span].copy_from_slice(&best_block);
        let mut explored: Vec<usize> = Vec::new();
        for &c in &tied {
            // Siblings share the block, so one losing comparison prunes them all.
            if self.prefix_behind_best(2 * span) {
                return;
            }
            if self.in_explored_orbit(c, basis, &explored) {
                continue;
            }
            for x in 0..span {
                self.cur_map[span + x] = c ^ self.cur_map[x];
            }
            basis.push(c);
            self.descend(basis);
            basis.pop();
            explored.push(c);
        }
    }

    fn prefix_behind_best(&self, end: usize) -> bool {
        match &self.best_seq {
            None => false,
            Some(best) => self.cur_seq[1..end] < best[1..end],
        }
    }

    fn leaf(&mut self) {
        let ord = match &self.best_seq {
            None => Ordering::Greater,
            Some(best) => self.cur_seq[1..].cmp(&best[1..]),
        };
        match ord {
            Ordering::Equal => {
                let mut perm = vec![0usize; self.size];
                for v in 0..self.size {
                    perm[self.best_map[v]] = self.cur_map[v];
                }
                if perm.iter().enumerate().any(|(x, &y)| x != y) {
                    self.automorphisms.push(perm);
                }
            }
            Ordering::Greater => {
                self.best_seq = Some(self.cur_seq.clone());
                self.best_map.clone_from(&self.cur_map);
            }
            Ordering::Less => {}
        }
    }

    /// Whether `c` lies in the orbit of an explored sibling under the known
    /// automorphisms that fix the current prefix pointwise.
    fn in_explored_orbit(&self, c: usize, basis: &[usize], explored: &[usize]) -> bool {
        if explored.is_empty() {
            return false;
        }
        let gens: Vec<&Vec<usize>> = self
            .automorphisms
            .iter()
            .filter(|g| basis.iter().all(|&b| g[b] == b))
            .collect();
        if gens.is_empty() {
            return false;
        }
        let mut seen = vec![false; self.size];
        let mut stack = vec![c];
        seen[c] = true;
        while let Some(x) = stack.pop() {
            if explored.contains(&x) {
                return true;
            }
            for g in &gens {
                let y = g[x];
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        false
    }
}
