use std::collections::{BTreeMap, BTreeSet};

use lcdlab::classify::{classify_by_columns, extend_by_inverse_shortening, shortening_keys};
use lcdlab::tables::{
    small_dimension_count_cells, DIM4_COUNT_COLUMNS, DIM4_TOP, DIM5_COUNT_COLUMNS, DIM5_K4, DIM5_TOP,
};
use lcdlab::{canonical_form, paperio, BitMatrix, Classifier, ClassifyOptions, LinearCode};

mod common;

#[test]
fn classes_match_permutation_orbits() {
    for (n, kmax) in [(5, 3), (6, 3), (7, 2)] {
        for k in 1..=kmax {
            let orbits = common::permutation_orbits(n, k);
            let mut by_d: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
            let mut keys: BTreeMap<usize, BTreeSet<_>> = BTreeMap::new();
            for (rows, orbit, d) in &orbits {
                by_d.entry(*d).or_default().insert(*orbit);
                let code = LinearCode::new(&BitMatrix::from_u64_rows(rows, n)).unwrap();
                keys.entry(*d).or_default().insert(canonical_form(&code).unwrap());
            }
            for (d, classes) in &by_d {
                let direct = classify_by_columns(n, k, *d).unwrap();
                assert_eq!(direct.len(), classes.len(), "columns [{n},{k},{d}]");
                assert_eq!(keys[d].len(), classes.len(), "keys [{n},{k},{d}]");
                assert!(direct.keys().all(|key| keys[d].contains(key)));
                let via = lcdlab::classify::classify(n, k, *d).unwrap();
                assert_eq!(via.len(), classes.len(), "ladder [{n},{k},{d}]");
            }
        }
    }
}

#[test]
fn oracles_agree_with_each_other() {
    for (n, k) in [(6, 2), (6, 3), (7, 3)] {
        let mut orbits: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
        for (_, o, d) in common::permutation_orbits(n, k) {
            orbits.entry(d).or_default().insert(o);
        }
        let orbits: BTreeMap<usize, usize> = orbits.into_iter().map(|(d, s)| (d, s.len())).collect();
        assert_eq!(orbits, common::class_counts_by_bases(n, k), "[{n},{k}]");
    }
}

#[test]
fn subspace_enumeration_is_complete() {
    for (n, k) in [(6, 3), (7, 2), (8, 3)] {
        let mut count = 0u64;
        common::for_each_subspace(n, k, |_| count += 1);
        assert_eq!(count, common::gaussian_binomial(n as u32, k as u32));
    }
    assert_eq!(common::gaussian_binomial(6, 3), 1395);
}

#[test]
fn published_small_dimension_counts() {
    let mut c = Classifier::new(ClassifyOptions { db_dir: None, jobs: 1 }).unwrap();
    for cell in small_dimension_count_cells() {
        let got = c.classify(cell.n, cell.k, cell.d).unwrap().len();
        assert_eq!(got, cell.count.unwrap_or(0), "[{},{},{}]", cell.n, cell.k, cell.d);
    }
}

#[test]
fn published_top_counts() {
    let mut c = Classifier::new(ClassifyOptions { db_dir: None, jobs: 1 }).unwrap();
    for (&(n, d), &want) in DIM4_COUNT_COLUMNS.iter().zip(&DIM4_TOP) {
        assert_eq!(c.classify(n, 4, d).unwrap().len(), want, "[{n},4,{d}]");
    }
    for ((&(n, d), &want), &k4) in DIM5_COUNT_COLUMNS.iter().zip(&DIM5_TOP).zip(&DIM5_K4) {
        assert_eq!(c.classify(n - 1, 4, d).unwrap().len(), k4, "[{},4,{d}]", n - 1);
        assert_eq!(c.classify(n, 5, d).unwrap().len(), want, "[{n},5,{d}]");
    }
}

#[test]
fn closed_under_shortening() {
    let mut c = Classifier::new(ClassifyOptions { db_dir: None, jobs: 1 }).unwrap();
    for (n, k, d) in [(22, 4, 11), (26, 4, 13), (25, 5, 12)] {
        let db = c.classify(n, k, d).unwrap();
        for code in db.codes() {
            for (dd, key) in shortening_keys(&code.unwrap()).unwrap() {
                assert!(dd >= d);
                let lower = c.classify(n - 1, k - 1, dd).unwrap();
                assert!(
                    lower.records.contains_key(&key),
                    "[{n},{k},{d}] shortening not in [{},{},{dd}]",
                    n - 1,
                    k - 1
                );
            }
        }
    }
}

#[test]
fn every_representative_has_its_parameters() {
    let db = lcdlab::classify::classify(25, 5, 12).unwrap();
    for code in db.codes() {
        let code = code.unwrap();
        assert_eq!((code.len(), code.dim(), code.min_weight().unwrap()), (25, 5, 12));
    }
}

#[test]
fn output_is_deterministic_and_resumable() {
    let dir = tempfile::tempdir().unwrap();
    let opts = ClassifyOptions {
        db_dir: Some(dir.path().to_path_buf()),
        jobs: 1,
    };
    let first = Classifier::new(opts.clone()).unwrap().classify(22, 4, 11).unwrap();
    let level = dir.path().join("n21_k3_d11.cdb");
    assert!(level.exists());
    let again = Classifier::new(opts).unwrap().classify(22, 4, 11).unwrap();
    assert_eq!(paperio::emit_codedb(&first), paperio::emit_codedb(&again));
    let fresh = lcdlab::classify::classify(22, 4, 11).unwrap();
    assert_eq!(first.keys().collect::<Vec<_>>(), fresh.keys().collect::<Vec<_>>());
    let threaded = Classifier::new(ClassifyOptions { db_dir: None, jobs: 3 })
        .unwrap()
        .classify(22, 4, 11)
        .unwrap();
    assert_eq!(paperio::emit_codedb(&threaded), paperio::emit_codedb(&fresh));
}

#[test]
fn extension_requires_every_seed_level() {
    let d11 = lcdlab::classify::classify(21, 3, 11).unwrap();
    assert!(extend_by_inverse_shortening(&[&d11], 22, 4, 11).is_err());
    let d12 = lcdlab::classify::classify(21, 3, 12).unwrap();
    assert_eq!(extend_by_inverse_shortening(&[&d11, &d12], 22, 4, 11).unwrap().len(), 2);
}
