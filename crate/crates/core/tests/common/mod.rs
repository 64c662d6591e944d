//! Brute-force oracles shared by the integration tests. Nothing here calls
//! into the crate's canonical forms, weight enumeration or Gram code.
#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap, HashSet};

/// Rows of a generator as `u128` words, bit `j` = column `j`.
pub fn rows_u128(bit_strings: &[String]) -> Vec<u128> {
    bit_strings
        .iter()
        .map(|r| {
            r.bytes()
                .enumerate()
                .filter(|&(_, b)| b == b'1')
                .fold(0u128, |a, (j, _)| a | 1 << j)
        })
        .collect()
}

/// All `2^k` weights of the span of `rows`, via Gray code.
pub fn weight_distribution(rows: &[u128], n: usize) -> Vec<u64> {
    let mut dist = vec![0u64; n + 1];
    let mut acc = 0u128;
    dist[0] = 1;
    for step in 1u64..1 << rows.len() {
        acc ^= rows[step.trailing_zeros() as usize];
        dist[acc.count_ones() as usize] += 1;
    }
    dist
}

pub fn min_weight(rows: &[u128], n: usize) -> usize {
    weight_distribution(rows, n)
        .iter()
        .skip(1)
        .position(|&c| c > 0)
        .map_or(0, |p| p + 1)
}

/// Rank over `F_2` of `G Gᵀ`.
pub fn gram_rank(rows: &[u128]) -> usize {
    let k = rows.len();
    let mut g: Vec<u64> = (0..k)
        .map(|i| {
            (0..k)
                .filter(|&j| (rows[i] & rows[j]).count_ones() % 2 == 1)
                .fold(0, |a, j| a | 1 << j)
        })
        .collect();
    let mut rank = 0;
    for bit in 0..k {
        if let Some(p) = (rank..k).find(|&r| g[r] >> bit & 1 == 1) {
            g.swap(rank, p);
            let pv = g[rank];
            for (r, row) in g.iter_mut().enumerate() {
                if r != rank && *row >> bit & 1 == 1 {
                    *row ^= pv;
                }
            }
            rank += 1;
        }
    }
    rank
}

pub fn is_lcd(rows: &[u128]) -> bool {
    gram_rank(rows) == rows.len()
}

/// Integer determinant of `G Gᵀ` by fraction-free elimination.
pub fn integer_gram_det(rows: &[u128]) -> i128 {
    let k = rows.len();
    let mut a: Vec<Vec<i128>> = (0..k)
        .map(|i| (0..k).map(|j| i128::from((rows[i] & rows[j]).count_ones())).collect())
        .collect();
    let mut sign = 1;
    let mut prev = 1i128;
    for c in 0..k {
        let Some(p) = (c..k).find(|&r| a[r][c] != 0) else {
            return 0;
        };
        if p != c {
            a.swap(p, c);
            sign = -sign;
        }
        for r in c + 1..k {
            for j in c + 1..k {
                a[r][j] = (a[r][j] * a[c][c] - a[r][c] * a[c][j]) / prev;
            }
            a[r][c] = 0;
        }
        prev = a[c][c];
    }
    sign * a[k - 1][k - 1]
}

/// Calls `f` with the RREF generator rows of every `k`-dimensional subspace
/// of `F_2^n`.
pub fn for_each_subspace(n: usize, k: usize, mut f: impl FnMut(&[u64])) {
    fn pivots(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for p in start..n {
            cur.push(p);
            pivots(n, k, p + 1, cur, out);
            cur.pop();
        }
    }
    let mut sets = Vec::new();
    pivots(n, k, 0, &mut Vec::new(), &mut sets);
    let mut rows = vec![0u64; k];
    for piv in sets {
        let free: Vec<Vec<usize>> = piv
            .iter()
            .map(|&p| (p + 1..n).filter(|c| !piv.contains(c)).collect())
            .collect();
        let total: usize = free.iter().map(Vec::len).sum();
        for bits in 0u64..1 << total {
            let mut shift = 0;
            for (i, (&p, fr)) in piv.iter().zip(&free).enumerate() {
                let mut r = 1u64 << p;
                for (j, &c) in fr.iter().enumerate() {
                    if bits >> (shift + j) & 1 == 1 {
                        r |= 1 << c;
                    }
                }
                shift += fr.len();
                rows[i] = r;
            }
            f(&rows);
        }
    }
}

/// Gaussian binomial coefficient `[n choose k]_2`.
pub fn gaussian_binomial(n: u32, k: u32) -> u64 {
    let mut num = 1u128;
    let mut den = 1u128;
    for i in 0..k {
        num *= (1u128 << (n - i)) - 1;
        den *= (1u128 << (i + 1)) - 1;
    }
    (num / den) as u64
}

pub fn span(rows: &[u64]) -> Vec<u64> {
    let mut out = vec![0u64];
    for &r in rows {
        let more: Vec<u64> = out.iter().map(|&w| w ^ r).collect();
        out.extend(more);
    }
    out
}

fn span_min_weight(rows: &[u64]) -> usize {
    span(rows)
        .into_iter()
        .skip(1)
        .map(|w| w.count_ones() as usize)
        .min()
        .unwrap_or(0)
}

/// Reduced row echelon form of `rows`, as a sorted key.
pub fn rref_key(rows: &[u64], n: usize) -> Vec<u64> {
    let mut m = rows.to_vec();
    let mut r = 0;
    for c in 0..n {
        if let Some(p) = (r..m.len()).find(|&i| m[i] >> c & 1 == 1) {
            m.swap(r, p);
            let pv = m[r];
            for (i, row) in m.iter_mut().enumerate() {
                if i != r && *row >> c & 1 == 1 {
                    *row ^= pv;
                }
            }
            r += 1;
        }
    }
    m.truncate(r);
    m
}

fn swap_bits(w: u64, i: usize) -> u64 {
    let a = w >> i & 1;
    let b = w >> (i + 1) & 1;
    if a == b {
        w
    } else {
        w ^ (0b11 << i)
    }
}

/// Orbits of `k`-subspaces of `F_2^n` under coordinate permutations,
/// found by joining each subspace with its images under the adjacent
/// transpositions. Returns `(generator rows, orbit id, minimum weight)`.
pub fn permutation_orbits(n: usize, k: usize) -> Vec<(Vec<u64>, usize, usize)> {
    let mut all: Vec<Vec<u64>> = Vec::new();
    for_each_subspace(n, k, |rows| all.push(rows.to_vec()));
    let index: HashMap<Vec<u64>, usize> = all.iter().enumerate().map(|(i, r)| (r.clone(), i)).collect();
    let mut parent: Vec<usize> = (0..all.len()).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for (a, rows) in all.iter().enumerate() {
        for i in 0..n.saturating_sub(1) {
            let moved: Vec<u64> = rows.iter().map(|&w| swap_bits(w, i)).collect();
            let b = index[&rref_key(&moved, n)];
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra] = rb;
            }
        }
    }
    (0..all.len())
        .map(|i| {
            let root = find(&mut parent, i);
            let d = span_min_weight(&all[i]);
            (all[i].clone(), root, d)
        })
        .collect()
}

/// Number of equivalence classes of `[n, k, d]` codes for every `d`,
/// from all subspaces, where a class is the least column-count vector
/// over all ordered bases of the subspace.
pub fn class_counts_by_bases(n: usize, k: usize) -> BTreeMap<usize, usize> {
    let size = 1usize << k;
    // Raw column multisets of the RREF generators.
    let mut raw: HashSet<Vec<u8>> = HashSet::new();
    for_each_subspace(n, k, |rows| {
        let mut counts = vec![0u8; size];
        for c in 0..n {
            let t = rows
                .iter()
                .enumerate()
                .filter(|(_, r)| *r >> c & 1 == 1)
                .fold(0, |a, (i, _)| a | 1 << i);
            counts[t] += 1;
        }
        raw.insert(counts);
    });
    // Every invertible k x k matrix, as the images of the unit vectors.
    let mut bases: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..k {
        let mut next = Vec::new();
        for b in &bases {
            for v in 1..size {
                let spanned: HashSet<usize> = (0..1usize << b.len())
                    .map(|m| {
                        b.iter()
                            .enumerate()
                            .filter(|(i, _)| m >> i & 1 == 1)
                            .fold(0, |a, (_, &x)| a ^ x)
                    })
                    .collect();
                if !spanned.contains(&v) {
                    let mut nb = b.clone();
                    nb.push(v);
                    next.push(nb);
                }
            }
        }
        bases = next;
    }
    let mut classes: BTreeMap<usize, HashSet<Vec<u8>>> = BTreeMap::new();
    for counts in raw {
        let best = bases
            .iter()
            .map(|b| {
                let mut moved = vec![0u8; size];
                for (t, &m) in counts.iter().enumerate() {
                    let image = (0..k).filter(|&i| t >> i & 1 == 1).fold(0, |a, i| a ^ b[i]);
                    moved[image] += m;
                }
                moved
            })
            .min()
            .unwrap();
        let d = (1..size)
            .map(|u| {
                counts
                    .iter()
                    .enumerate()
                    .filter(|&(t, _)| (t & u).count_ones() % 2 == 1)
                    .map(|(_, &m)| m as usize)
                    .sum::<usize>()
            })
            .min()
            .unwrap();
        classes.entry(d).or_default().insert(best);
    }
    classes.into_iter().map(|(d, s)| (d, s.len())).collect()
}

/// Largest minimum weight of an LCD `[n, k]` code, by trying every
/// multiplicity vector over all column types, zero included.
pub fn brute_lcd_distance(n: usize, k: usize) -> Option<usize> {
    let size = 1usize << k;
    let mut best = None;
    let mut counts = vec![0usize; size];
    fn go(slot: usize, left: usize, k: usize, counts: &mut Vec<usize>, best: &mut Option<usize>) {
        let size = counts.len();
        if slot == size - 1 {
            counts[slot] = left;
            let rows: Vec<u128> = (0..k)
                .map(|i| {
                    let mut r = 0u128;
                    let mut col = 0;
                    for (t, &m) in counts.iter().enumerate() {
                        for _ in 0..m {
                            if t >> i & 1 == 1 {
                                r |= 1 << col;
                            }
                            col += 1;
                        }
                    }
                    r
                })
                .collect();
            let n: usize = counts.iter().sum();
            let d = min_weight(&rows, n);
            if d > 0 && is_lcd(&rows) && best.is_none_or(|b| d > b) {
                *best = Some(d);
            }
            return;
        }
        for m in 0..=left {
            counts[slot] = m;
            go(slot + 1, left - m, k, counts, best);
        }
    }
    go(0, n, k, &mut counts, &mut best);
    best
}
