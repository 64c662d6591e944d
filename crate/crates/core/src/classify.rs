//! Isomorph-free classification of `[n, k, d]` codes.
//!
//! Small dimensions are enumerated directly as column multiplicity vectors.
//! Larger ones are grown from `[n-1, k-1, d' >= d]` codes by adding a new
//! coordinate and a new generator row, the inverse of shortening.

use std::collections::{BTreeMap, HashMap};
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::griesmer_dmax;
use crate::canon::{canonical_key, canonical_multiplicity, column_types, CanonicalKey, TypeMultiplicity};
use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::gf2::BitMatrix;
use crate::paperio;

/// Leaf-count estimate above which direct enumeration is refused.
pub const COLUMN_ENUMERATION_CAP: f64 = 1e11;

/// Largest dimension handled by direct enumeration.
pub const COLUMNS_MAX_K: usize = 4;

/// A deduplicated set of `[n, k, d]` codes, one generator per class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeDB {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub method: String,
    pub records: BTreeMap<CanonicalKey, BitMatrix>,
}

impl CodeDB {
    pub fn new(n: usize, k: usize, d: usize, method: &str) -> Self {
        Self {
            n,
            k,
            d,
            method: method.to_string(),
            records: BTreeMap::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    /// Adds the class of `tm` under its canonical representative.
    pub fn insert_multiplicity(&mut self, tm: &TypeMultiplicity) -> Result<bool> {
        let canon = canonical_multiplicity(tm)?;
        let key = canonical_key(&canon)?;
        if self.records.contains_key(&key) {
            return Ok(false);
        }
        self.records.insert(key, canon.to_generator());
        Ok(true)
    }

    pub fn insert_key(&mut self, key: CanonicalKey) -> Result<bool> {
        if self.records.contains_key(&key) {
            return Ok(false);
        }
        let g = key.decode()?.to_generator();
        self.records.insert(key, g);
        Ok(true)
    }

    pub fn keys(&self) -> impl Iterator<Item = &CanonicalKey> {
        self.records.keys()
    }

    pub fn codes(&self) -> impl Iterator<Item = Result<LinearCode>> + '_ {
        self.records.values().map(LinearCode::new)
    }

    pub fn file_name(n: usize, k: usize, d: usize) -> String {
        format!("n{n}_k{k}_d{d}.cdb")
    }

    pub fn path_in(dir: &Path, n: usize, k: usize, d: usize) -> PathBuf {
        dir.join(Self::file_name(n, k, d))
    }

    /// Writes to a temporary file beside the target, then renames.
    pub fn save(&self, dir: &Path) -> Result<PathBuf> {
        fs::create_dir_all(dir)?;
        let path = Self::path_in(dir, self.n, self.k, self.d);
        let tmp = dir.join(format!(
            ".{}.tmp{}",
            Self::file_name(self.n, self.k, self.d),
            std::process::id()
        ));
        fs::write(&tmp, paperio::emit_codedb(self))?;
        fs::rename(&tmp, &path)?;
        Ok(path)
    }

    pub fn load(dir: &Path, n: usize, k: usize, d: usize) -> Result<Option<Self>> {
        let path = Self::path_in(dir, n, k, d);
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(e.into()),
        };
        let db = paperio::parse_codedb(&text)?;
        if (db.n, db.k, db.d) != (n, k, d) {
            return Err(Error::Parse(format!(
                "{} holds [{},{},{}] codes",
                path.display(),
                db.n,
                db.k,
                db.d
            )));
        }
        Ok(Some(db))
    }
}

/// Number of classes and how many of them are LCD.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Census {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub count: usize,
    pub lcd_count: usize,
    pub lcd_keys: Vec<String>,
}

pub fn lcd_census(db: &CodeDB) -> Result<Census> {
    let mut lcd_keys = Vec::new();
    for (key, g) in &db.records {
        if LinearCode::new(g)?.is_lcd() {
            lcd_keys.push(key.to_hex());
        }
    }
    Ok(Census {
        n: db.n,
        k: db.k,
        d: db.d,
        count: db.len(),
        lcd_count: lcd_keys.len(),
        lcd_keys,
    })
}

fn binomial(n: u64, r: u64) -> f64 {
    (0..r).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// Multiplicity vectors of total `n` over `2^k` slots (zero slot included).
pub fn column_enumeration_size(n: usize, k: usize) -> f64 {
    let slots = 1u64 << k;
    binomial(n as u64 + slots - 1, slots - 1)
}

/// Every class of `[n, k, d]` codes, from all multiplicity vectors of total
/// `n`, rank `k` and minimum weight exactly `d`.
pub fn classify_by_columns(n: usize, k: usize, d: usize) -> Result<CodeDB> {
    if k == 0 || k > n || d == 0 {
        return Err(Error::InvalidParameters(format!(
            "need 1 <= k <= n and d >= 1, got [{n},{k},{d}]"
        )));
    }
    let estimate = column_enumeration_size(n, k);
    if k > COLUMNS_MAX_K || estimate > COLUMN_ENUMERATION_CAP {
        return Err(Error::Infeasible(format!(
            "direct enumeration of [{n},{k}] codes visits up to {estimate:.3e} multiplicity vectors"
        )));
    }
    let mut db = CodeDB::new(n, k, d, "columns");
    if d > griesmer_dmax(n, k)? {
        return Ok(db);
    }
    let size = 1usize << k;
    // masks[v] lists the messages u with u·v odd.
    let masks: Vec<Vec<usize>> = (0..size)
        .map(|v| (1..size).filter(|&u| (u & v).count_ones() % 2 == 1).collect())
        .collect();
    let mut state = ColumnSearch {
        k,
        d,
        masks: &masks,
        counts: vec![0u32; size],
        weights: vec![0usize; size],
        found: Vec::new(),
    };
    state.descend(size - 1, n);
    for tm in state.found {
        db.insert_multiplicity(&tm)?;
    }
    Ok(db)
}

struct ColumnSearch<'a> {
    k: usize,
    d: usize,
    masks: &'a [Vec<usize>],
    counts: Vec<u32>,
    weights: Vec<usize>,
    found: Vec<TypeMultiplicity>,
}

impl ColumnSearch<'_> {
    /// Assigns counts to slots `slot, slot-1, …, 0` with `remaining` columns left.
    fn descend(&mut self, slot: usize, remaining: usize) {
        if self.weights[1..].iter().any(|&w| w + remaining < self.d) {
            return;
        }
        if self.weights[1..].iter().all(|&w| w > self.d) {
            return;
        }
        if slot == 0 {
            self.counts[0] = remaining as u32;
            let min = self.weights[1..].iter().copied().min().unwrap_or(0);
            if min == self.d {
                if let Ok(tm) = TypeMultiplicity::from_counts(self.k, self.counts.clone()) {
                    if tm.support_rank() == self.k {
                        self.found.push(tm);
                    }
                }
            }
            self.counts[0] = 0;
            return;
        }
        for m in (0..=remaining).rev() {
            self.counts[slot] = m as u32;
            for &u in &self.masks[slot] {
                self.weights[u] += m;
            }
            self.descend(slot - 1, remaining - m);
            for &u in &self.masks[slot] {
                self.weights[u] -= m;
            }
        }
        self.counts[slot] = 0;
    }
}

/// Seed for one extension step: the column types of an `[n-1, k-1, d']` code.
struct Seed {
    d: usize,
    counts: Vec<u32>,
}

/// One unit of extension work: a seed and a fixed choice for its first
/// column class.
struct Unit {
    seed: usize,
    first: u32,
}

/// All `[n, k, d]` codes obtained from the given `[n-1, k-1, d' >= d]`
/// codes by inverse shortening.
///
/// A new code has generator `[1 | v ; 0 | G_D]`. Up to equivalence only
/// the number of ones `v` puts on each column class of `D` matters, so the
/// search runs over those counts. Each coset `v + D` is represented by a
/// member of least weight.
pub fn extend_by_inverse_shortening(seeds: &[&CodeDB], n: usize, k: usize, d: usize) -> Result<CodeDB> {
    if d < 2 {
        return Err(Error::InvalidParameters("inverse shortening needs d >= 2".into()));
    }
    if k < 2 || k > n {
        return Err(Error::InvalidParameters(format!("cannot extend to [{n},{k}]")));
    }
    let dmax = griesmer_dmax(n - 1, k - 1)?;
    for dd in d..=dmax {
        if !seeds.iter().any(|s| (s.n, s.k, s.d) == (n - 1, k - 1, dd)) {
            return Err(Error::IncompleteSeeds(format!(
                "missing [{},{},{dd}] codes",
                n - 1,
                k - 1
            )));
        }
    }
    let mut prepared = Vec::new();
    for db in seeds {
        if (db.n, db.k) != (n - 1, k - 1) || db.d < d {
            return Err(Error::IncompleteSeeds(format!(
                "seed set [{},{},{}] does not fit [{n},{k},{d}]",
                db.n, db.k, db.d
            )));
        }
        for g in db.records.values() {
            let code = LinearCode::new(g)?;
            prepared.push(Seed {
                d: db.d,
                counts: column_types(&code)?.counts().to_vec(),
            });
        }
    }
    let units: Vec<Unit> = prepared
        .iter()
        .enumerate()
        .flat_map(|(i, s)| (0..=s.counts[0]).map(move |first| Unit { seed: i, first }))
        .collect();
    let found: Vec<Vec<CanonicalKey>> = units
        .par_iter()
        .map(|u| extend_unit(&prepared[u.seed], u.first, k, d))
        .collect::<Result<_>>()?;
    let mut db = CodeDB::new(n, k, d, "extension");
    for key in found.into_iter().flatten() {
        db.insert_key(key)?;
    }
    Ok(db)
}

fn extend_unit(seed: &Seed, first: u32, k: usize, d: usize) -> Result<Vec<CanonicalKey>> {
    let half = 1usize << (k - 1);
    // odd[w] lists seed messages u (including 0) with u·w odd.
    let odd: Vec<Vec<usize>> = (0..half)
        .map(|w| (0..half).filter(|&u| (u & w).count_ones() % 2 == 1).collect())
        .collect();
    let total: u32 = seed.counts.iter().sum();
    let mut ext = Extension {
        seed,
        odd: &odd,
        d,
        k,
        // Weight of (1 | v + c_u): starts at 1 for the new coordinate.
        weights: vec![1usize; half],
        ones: vec![0u32; half],
        raw: HashMap::new(),
    };
    ext.choose(0, first, total as usize)?;
    let mut keys: Vec<CanonicalKey> = ext.raw.into_values().collect();
    keys.sort();
    keys.dedup();
    Ok(keys)
}

struct Extension<'a> {
    seed: &'a Seed,
    odd: &'a [Vec<usize>],
    d: usize,
    k: usize,
    weights: Vec<usize>,
    ones: Vec<u32>,
    raw: HashMap<Vec<u32>, CanonicalKey>,
}

impl Extension<'_> {
    fn choose(&mut self, w: usize, forced: u32, remaining: usize) -> Result<()> {
        let target = self.d - 1;
        if self.weights.iter().any(|&x| x - 1 + remaining < target) {
            return Ok(());
        }
        let half = self.weights.len();
        if w == half {
            return self.leaf();
        }
        let m = self.seed.counts[w];
        let range: Vec<u32> = if w == 0 { vec![forced] } else { (0..=m).collect() };
        let rest = remaining - m as usize;
        for y in range {
            self.ones[w] = y;
            // Messages with u·w odd see the complement of the ones.
            for u in 0..half {
                self.weights[u] += y as usize;
            }
            for &u in &self.odd[w] {
                self.weights[u] = self.weights[u] - y as usize + (m - y) as usize;
            }
            self.choose(w + 1, forced, rest)?;
            for &u in &self.odd[w] {
                self.weights[u] = self.weights[u] + y as usize - (m - y) as usize;
            }
            for u in 0..half {
                self.weights[u] -= y as usize;
            }
        }
        self.ones[w] = 0;
        Ok(())
    }

    fn leaf(&mut self) -> Result<()> {
        let coset_min = *self.weights.iter().min().unwrap_or(&usize::MAX);
        if self.weights[0] != coset_min || coset_min < self.d {
            return Ok(());
        }
        if self.seed.d.min(coset_min) != self.d {
            return Ok(());
        }
        let half = self.weights.len();
        // Type bit 0 is the new row; the seed's type w moves to bits 1.. .
        let mut counts = vec![0u32; half << 1];
        counts[1] += 1;
        for w in 0..half {
            counts[w << 1] += self.seed.counts[w] - self.ones[w];
            counts[w << 1 | 1] += self.ones[w];
        }
        if self.raw.contains_key(&counts) {
            return Ok(());
        }
        let tm = TypeMultiplicity::from_counts(self.k, counts.clone())?;
        let key = canonical_key(&tm)?;
        self.raw.insert(counts, key);
        Ok(())
    }
}

/// Where classification results live and how many threads to use.
#[derive(Clone, Debug, Default)]
pub struct ClassifyOptions {
    pub db_dir: Option<PathBuf>,
    pub jobs: usize,
}

/// Classifies `[n, k, d]` codes, recursing down the shortening ladder and
/// persisting every level when a database directory is given.
pub struct Classifier {
    opts: ClassifyOptions,
    memo: HashMap<(usize, usize, usize), Arc<CodeDB>>,
    pool: rayon::ThreadPool,
}

impl Classifier {
    pub fn new(opts: ClassifyOptions) -> Result<Self> {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.jobs)
            .build()
            .map_err(|e| Error::InvalidParameters(format!("thread pool: {e}")))?;
        Ok(Self {
            opts,
            memo: HashMap::new(),
            pool,
        })
    }

    pub fn classify(&mut self, n: usize, k: usize, d: usize) -> Result<Arc<CodeDB>> {
        if k == 0 || k > n || d == 0 {
            return Err(Error::InvalidParameters(format!(
                "need 1 <= k <= n and d >= 1, got [{n},{k},{d}]"
            )));
        }
        if let Some(db) = self.memo.get(&(n, k, d)) {
            return Ok(db.clone());
        }
        if let Some(dir) = &self.opts.db_dir {
            if let Some(db) = CodeDB::load(dir, n, k, d)? {
                let db = Arc::new(db);
                self.memo.insert((n, k, d), db.clone());
                return Ok(db);
            }
        }
        let db = if d > griesmer_dmax(n, k)? {
            CodeDB::new(n, k, d, "griesmer")
        } else if k <= 2 || (d == 1 && k <= COLUMNS_MAX_K) {
            classify_by_columns(n, k, d)?
        } else if d == 1 {
            return Err(Error::Infeasible(format!(
                "[{n},{k},1] needs direct enumeration beyond k={COLUMNS_MAX_K}"
            )));
        } else {
            let dmax = griesmer_dmax(n - 1, k - 1)?;
            let seeds = (d..=dmax)
                .map(|dd| self.classify(n - 1, k - 1, dd))
                .collect::<Result<Vec<_>>>()?;
            let refs: Vec<&CodeDB> = seeds.iter().map(|s| s.as_ref()).collect();
            self.pool.install(|| extend_by_inverse_shortening(&refs, n, k, d))?
        };
        if let Some(dir) = &self.opts.db_dir {
            db.save(dir)?;
        }
        let db = Arc::new(db);
        self.memo.insert((n, k, d), db.clone());
        Ok(db)
    }
}

/// One-shot classification without a database directory.
pub fn classify(n: usize, k: usize, d: usize) -> Result<CodeDB> {
    let mut c = Classifier::new(ClassifyOptions::default())?;
    let db = c.classify(n, k, d)?;
    Ok(Arc::unwrap_or_clone(db))
}

/// Canonical keys of the dimension-dropping shortenings of `code`, with
/// each shortened code's minimum weight.
pub fn shortening_keys(code: &LinearCode) -> Result<Vec<(usize, CanonicalKey)>> {
    let mut out = Vec::new();
    for i in 0..code.len() {
        let nonzero = (0..code.dim()).any(|r| code.generator().get(r, i));
        if !nonzero {
            continue;
        }
        let short = code.shorten(i)?;
        out.push((short.min_weight()?, crate::canon::canonical_form(&short)?));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_column_examples() {
        assert_eq!(classify_by_columns(8, 2, 4).unwrap().len(), 6);
        assert_eq!(classify_by_columns(20, 2, 13).unwrap().len(), 1);
        assert_eq!(classify_by_columns(4, 4, 1).unwrap().len(), 1);
        assert!(classify_by_columns(30, 5, 12).is_err());
    }

    #[test]
    fn representatives_have_exact_parameters() {
        let db = classify_by_columns(9, 3, 4).unwrap();
        assert!(!db.is_empty());
        for code in db.codes() {
            let code = code.unwrap();
            assert_eq!((code.len(), code.dim(), code.min_weight().unwrap()), (9, 3, 4));
        }
    }

    #[test]
    fn degenerate_extension_matches_columns() {
        let seeds = classify_by_columns(2, 1, 2).unwrap();
        let ext = extend_by_inverse_shortening(&[&seeds], 3, 2, 2).unwrap();
        let direct = classify_by_columns(3, 2, 2).unwrap();
        assert_eq!(ext.keys().collect::<Vec<_>>(), direct.keys().collect::<Vec<_>>());
    }

    #[test]
    fn extension_rejects_missing_levels() {
        let seeds = classify_by_columns(10, 2, 6).unwrap();
        assert!(matches!(
            extend_by_inverse_shortening(&[&seeds], 11, 3, 5),
            Err(Error::IncompleteSeeds(_))
        ));
    }

    #[test]
    fn extension_agrees_with_columns() {
        for (n, k, d) in [(9, 3, 4), (10, 3, 5), (12, 3, 6), (11, 3, 2), (9, 4, 4), (10, 4, 4)] {
            let via = classify(n, k, d).unwrap();
            let direct = classify_by_columns(n, k, d).unwrap();
            assert_eq!(
                via.keys().collect::<Vec<_>>(),
                direct.keys().collect::<Vec<_>>(),
                "[{n},{k},{d}]"
            );
        }
    }

    #[test]
    fn census_of_full_space() {
        let db = classify_by_columns(4, 4, 1).unwrap();
        let c = lcd_census(&db).unwrap();
        assert_eq!((c.count, c.lcd_count), (1, 1));
    }

    #[test]
    fn database_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let db = classify_by_columns(10, 3, 5).unwrap();
        let path = db.save(dir.path()).unwrap();
        let text = fs::read_to_string(&path).unwrap();
        assert_eq!(paperio::emit_codedb(&paperio::parse_codedb(&text).unwrap()), text);
        assert_eq!(CodeDB::load(dir.path(), 10, 3, 5).unwrap().unwrap(), db);
        assert!(CodeDB::load(dir.path(), 10, 3, 6).unwrap().is_none());
    }
}
