//! Randomised and exhaustive search for LCD codes with prescribed
//! parameters.
//!
//! Both searches work on column-type multiplicities. Zero columns are never
//! used, and the Gram matrix of a multiplicity vector is
//! `Σ_v m_v v vᵀ (mod 2)`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::griesmer_dmax;
use crate::canon::TypeMultiplicity;
use crate::code::LinearCode;
use crate::error::{Error, Result};

/// Largest dimension the searches accept.
pub const SEARCH_MAX_K: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SearchBudget {
    /// Move proposals per restart.
    pub max_iterations: u64,
    pub rng_seed: u64,
    pub restarts: u32,
}

impl SearchBudget {
    pub fn new(max_iterations: u64, rng_seed: u64, restarts: u32) -> Result<Self> {
        if max_iterations == 0 || restarts == 0 {
            return Err(Error::InvalidParameters("search budget must be positive".into()));
        }
        Ok(Self {
            max_iterations,
            rng_seed,
            restarts,
        })
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        Self {
            max_iterations: 100_000,
            rng_seed: 0,
            restarts: 8,
        }
    }
}

/// A verified witness and where it was found.
#[derive(Clone)]
pub struct Found {
    pub code: LinearCode,
    pub multiplicity: TypeMultiplicity,
    pub restart: u32,
    pub iterations: u64,
}

fn check_target(n: usize, k: usize, d: usize) -> Result<()> {
    if k == 0 || k > n || d == 0 {
        return Err(Error::InvalidParameters(format!(
            "need 1 <= k <= n and d >= 1, got [{n},{k},{d}]"
        )));
    }
    if k > SEARCH_MAX_K {
        return Err(Error::InvalidParameters(format!("search supports k <= {SEARCH_MAX_K}")));
    }
    let bound = griesmer_dmax(n, k)?;
    if d > bound {
        return Err(Error::AboveGriesmer { n, k, d, bound });
    }
    Ok(())
}

/// Whether `Σ_v m_v v vᵀ` is invertible over `F_2`.
pub fn gram_invertible(k: usize, counts: &[u32]) -> bool {
    let mut rows = vec![0u64; k];
    for (v, &m) in counts.iter().enumerate() {
        if m % 2 == 1 {
            for (i, row) in rows.iter_mut().enumerate() {
                if v >> i & 1 == 1 {
                    *row ^= v as u64;
                }
            }
        }
    }
    for (rank, bit) in (0..k).enumerate() {
        let Some(p) = (rank..k).find(|&r| rows[r] >> bit & 1 == 1) else {
            return false;
        };
        rows.swap(rank, p);
        let pivot = rows[rank];
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && *row >> bit & 1 == 1 {
                *row ^= pivot;
            }
        }
    }
    true
}

/// Rebuilds the code and checks it independently of the search state.
fn verify(tm: &TypeMultiplicity, d: usize) -> Result<Option<LinearCode>> {
    let code = match tm.to_code() {
        Ok(c) => c,
        Err(Error::RankDeficient { .. }) => return Ok(None),
        Err(e) => return Err(e),
    };
    Ok((code.min_weight()? >= d && code.is_lcd()).then_some(code))
}

/// Hill climbing over multiplicity vectors with random restarts.
///
/// The score of a vector is the total shortfall `Σ_u max(0, d - w(u))`
/// followed by whether the Gram matrix is singular. A move shifts one
/// column from one type to another and is kept unless it makes the score
/// worse. Restarts run in parallel; the lowest successful restart wins.
pub fn search_lcd(n: usize, k: usize, d: usize, budget: &SearchBudget) -> Result<Option<Found>> {
    check_target(n, k, d)?;
    let hits: Vec<Option<(TypeMultiplicity, u64)>> = (0..budget.restarts)
        .into_par_iter()
        .map(|r| climb(n, k, d, budget.max_iterations, restart_seed(budget.rng_seed, r)))
        .collect();
    for (r, hit) in hits.into_iter().enumerate() {
        if let Some((tm, iterations)) = hit {
            if let Some(code) = verify(&tm, d)? {
                return Ok(Some(Found {
                    code,
                    multiplicity: tm,
                    restart: r as u32,
                    iterations,
                }));
            }
        }
    }
    Ok(None)
}

fn restart_seed(seed: u64, restart: u32) -> u64 {
    seed ^ (u64::from(restart) + 1).wrapping_mul(0x9e37_79b9_7f4a_7c15)
}

fn climb(n: usize, k: usize, d: usize, iterations: u64, seed: u64) -> Option<(TypeMultiplicity, u64)> {
    let size = 1usize << k;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut counts = vec![0u32; size];
    for _ in 0..n {
        counts[rng.gen_range(1..size)] += 1;
    }
    let mut weights = vec![0i64; size];
    for (v, &m) in counts.iter().enumerate() {
        for (u, w) in weights.iter_mut().enumerate().skip(1) {
            if (u & v).count_ones() % 2 == 1 {
                *w += i64::from(m);
            }
        }
    }
    let d = d as i64;
    let shortfall = |w: &[i64]| -> i64 { w[1..].iter().map(|&x| (d - x).max(0)).sum() };
    let initial = shortfall(&weights);
    let mut score = (initial, initial != 0 || !gram_invertible(k, &counts));
    for it in 0..iterations {
        if score == (0, false) {
            return Some((TypeMultiplicity::from_counts(k, counts).ok()?, it));
        }
        let from = loop {
            let v = rng.gen_range(1..size);
            if counts[v] > 0 {
                break v;
            }
        };
        let to = loop {
            let v = rng.gen_range(1..size);
            if v != from {
                break v;
            }
        };
        let mut delta = 0i64;
        for (u, &w) in weights.iter().enumerate().skip(1) {
            let change = parity(u & to) - parity(u & from);
            if change != 0 {
                delta += (d - w - change).max(0) - (d - w).max(0);
            }
        }
        let short = score.0 + delta;
        if short > score.0 {
            continue;
        }
        counts[from] -= 1;
        counts[to] += 1;
        let singular = short == 0 && !gram_invertible(k, &counts);
        let next = (short, short != 0 || singular);
        if next <= score {
            for (u, w) in weights.iter_mut().enumerate().skip(1) {
                *w += parity(u & to) - parity(u & from);
            }
            score = next;
        } else {
            counts[from] += 1;
            counts[to] -= 1;
        }
    }
    (score == (0, false))
        .then(|| TypeMultiplicity::from_counts(k, counts).ok())
        .flatten()
        .map(|tm| (tm, iterations))
}

fn parity(x: usize) -> i64 {
    i64::from(x.count_ones() % 2 == 1)
}

/// Depth-first sweep over all multiplicity vectors without zero columns,
/// pruned by the weight bound, stopping at the first LCD leaf or after
/// `node_limit` nodes. `Ok(None)` with an exhausted sweep proves nothing
/// about equivalence classes but does mean no such vector exists.
pub fn sweep_lcd(n: usize, k: usize, d: usize, node_limit: u64) -> Result<SweepOutcome> {
    check_target(n, k, d)?;
    if k > 5 {
        return Err(Error::Infeasible("the exhaustive sweep is limited to k <= 5".into()));
    }
    let size = 1usize << k;
    let odd: Vec<Vec<usize>> = (0..size)
        .map(|v| (1..size).filter(|&u| (u & v).count_ones() % 2 == 1).collect())
        .collect();
    let mut s = Sweep {
        k,
        d,
        odd: &odd,
        counts: vec![0; size],
        weights: vec![0; size],
        nodes: 0,
        limit: node_limit,
        hit: None,
    };
    s.descend(size - 1, n);
    let hit = match s.hit.take() {
        Some(tm) => Some(
            verify(&tm, d)?
                .map(|code| (code, tm))
                .ok_or_else(|| Error::Verification("sweep leaf failed re-verification".into()))?,
        ),
        None => None,
    };
    Ok(SweepOutcome {
        found: hit.map(|(code, multiplicity)| Found {
            code,
            multiplicity,
            restart: 0,
            iterations: s.nodes,
        }),
        exhausted: s.nodes <= s.limit,
        nodes: s.nodes,
    })
}

pub struct SweepOutcome {
    pub found: Option<Found>,
    /// True when the whole space was covered.
    pub exhausted: bool,
    pub nodes: u64,
}

struct Sweep<'a> {
    k: usize,
    d: usize,
    odd: &'a [Vec<usize>],
    counts: Vec<u32>,
    weights: Vec<usize>,
    nodes: u64,
    limit: u64,
    hit: Option<TypeMultiplicity>,
}

impl Sweep<'_> {
    fn descend(&mut self, slot: usize, remaining: usize) {
        self.nodes += 1;
        if self.hit.is_some() || self.nodes > self.limit {
            return;
        }
        if self.weights[1..].iter().any(|&w| w + remaining < self.d) {
            return;
        }
        if slot == 1 {
            self.counts[1] = remaining as u32;
            for &u in &self.odd[1] {
                self.weights[u] += remaining;
            }
            if self.weights[1..].iter().all(|&w| w >= self.d) && gram_invertible(self.k, &self.counts) {
                self.hit = TypeMultiplicity::from_counts(self.k, self.counts.clone()).ok();
            }
            for &u in &self.odd[1] {
                self.weights[u] -= remaining;
            }
            self.counts[1] = 0;
            return;
        }
        for m in 0..=remaining {
            self.counts[slot] = m as u32;
            for &u in &self.odd[slot] {
                self.weights[u] += m;
            }
            self.descend(slot - 1, remaining - m);
            for &u in &self.odd[slot] {
                self.weights[u] -= m;
            }
            if self.hit.is_some() {
                break;
            }
        }
        self.counts[slot] = 0;
    }
}
