use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn lcdlab(args: &[&str], db_env: Option<&Path>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_lcdlab"));
    cmd.args(args).env_remove("LCDLAB_DB");
    if let Some(dir) = db_env {
        cmd.env("LCDLAB_DB", dir);
    }
    cmd.output().expect("run lcdlab")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("JSON on stdout")
}

#[test]
fn family_report() {
    let out = lcdlab(&["family", "--k", "4", "--s", "4", "--t", "2"], None);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["subject"], "family");
    assert_eq!(v["match"], true);
    assert_eq!(
        (v["measured"]["n"].as_u64(), v["measured"]["d"].as_u64()),
        (Some(34), Some(17))
    );
    assert_eq!(v["measured"]["is_lcd"], true);
    assert_eq!(v["generator"].as_array().map(Vec::len), Some(4));

    let det = lcdlab(&["family", "--k", "4", "--s", "2", "--t", "1", "--emit", "det"], None);
    assert_eq!(
        String::from_utf8_lossy(&det.stdout).trim(),
        "1280t^4+512t^3-96t^2-32t+1"
    );
}

#[test]
fn bounds_report() {
    let v = json(&lcdlab(&["bounds", "--n", "24", "--k", "12", "--json"], None));
    assert_eq!(v["measured"]["lcd_known"], 6);
    assert_eq!(v["measured"]["griesmer"], 8);
    let v = json(&lcdlab(&["bounds", "--n", "22", "--k", "4", "--json"], None));
    assert_eq!(v["measured"]["closed_form"], 11);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(lcdlab(&["bounds", "--n", "3", "--k", "4"], None).status.code(), Some(2));
    assert_eq!(
        lcdlab(&["family", "--k", "4", "--s", "3", "--t", "0"], None)
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        lcdlab(&["search", "--n", "22", "--k", "4", "--d", "12"], None)
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        lcdlab(&["verify-octal", "--table", "dim4"], None).status.code(),
        Some(2)
    );
    assert_eq!(lcdlab(&["frobnicate"], None).status.code(), Some(2));
}

#[test]
fn verify_octal_tables() {
    for table in ["dim4", "dim5", "m-table"] {
        let out = lcdlab(&["verify-octal", "--table", table, "--all"], None);
        assert!(
            out.status.success(),
            "{table}: {}",
            String::from_utf8_lossy(&out.stdout)
        );
    }
    let v = json(&lcdlab(
        &["verify-octal", "--table", "dim4", "--name", "M_{22,1}", "--json"],
        None,
    ));
    assert_eq!(v["checks"].as_array().map(Vec::len), Some(1));
    assert_eq!(v["match"], true);
    let bare = json(&lcdlab(
        &["verify-octal", "--table", "dim4", "--name", "M_22,1", "--json"],
        None,
    ));
    assert_eq!(bare["checks"], v["checks"]);
}

#[test]
fn env_database_overrides_flag() {
    let env_dir = tempfile::tempdir().unwrap();
    let flag_dir = tempfile::tempdir().unwrap();
    let flag = flag_dir.path().join("db");
    let out = lcdlab(
        &[
            "census",
            "--n",
            "22",
            "--k",
            "4",
            "--d",
            "11",
            "--json",
            "--db",
            flag.to_str().unwrap(),
        ],
        Some(env_dir.path()),
    );
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(
        (v["measured"]["count"].as_u64(), v["measured"]["lcd_count"].as_u64()),
        (Some(2), Some(0))
    );
    assert!(env_dir.path().join("n22_k4_d11.cdb").exists());
    assert!(!flag.exists());
}

#[test]
fn classify_resumes_from_database() {
    let dir = tempfile::tempdir().unwrap();
    let db = dir.path().to_str().unwrap();
    let first = lcdlab(&["classify", "--n", "21", "--k", "3", "--d", "11", "--db", db], None);
    assert!(first.status.success());
    let file = dir.path().join("n21_k3_d11.cdb");
    let before = std::fs::read(&file).unwrap();
    let second = lcdlab(&["classify", "--n", "21", "--k", "3", "--d", "11", "--db", db], None);
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(std::fs::read(&file).unwrap(), before);
}

#[test]
fn search_outcomes() {
    let hit = lcdlab(
        &["search", "--n", "19", "--k", "5", "--d", "8", "--seed", "3", "--json"],
        None,
    );
    assert!(hit.status.success());
    let v = json(&hit);
    assert_eq!(v["measured"]["is_lcd"], true);
    assert!(v["measured"]["d"].as_u64().unwrap() >= 8);
    let miss = lcdlab(
        &[
            "search",
            "--n",
            "22",
            "--k",
            "4",
            "--d",
            "11",
            "--iters",
            "2000",
            "--restarts",
            "2",
        ],
        None,
    );
    assert_eq!(miss.status.code(), Some(1));
}

#[test]
fn manifest_digest_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a.json"), dir.path().join("b.json"));
    for m in [&a, &b] {
        let out = lcdlab(
            &[
                "search",
                "--n",
                "18",
                "--k",
                "4",
                "--d",
                "8",
                "--seed",
                "9",
                "--manifest",
                m.to_str().unwrap(),
            ],
            None,
        );
        assert!(out.status.success());
    }
    let read = |p: &Path| -> Value { serde_json::from_str(&std::fs::read_to_string(p).unwrap()).unwrap() };
    let (ma, mb) = (read(&a), read(&b));
    assert_eq!(ma["command"], "search");
    assert_eq!(ma["seed"], 9);
    assert_eq!(ma["digest"], mb["digest"]);
}

#[test]
fn reproduce_dim4_passes() {
    let dir = tempfile::tempdir().unwrap();
    let out = lcdlab(
        &[
            "reproduce",
            "--suite",
            "dim4",
            "--json",
            "--db",
            dir.path().to_str().unwrap(),
        ],
        None,
    );
    assert!(out.status.success());
    let v = json(&out);
    let tables: Vec<&str> = v["tables"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| t["table"].as_str().unwrap())
        .collect();
    assert_eq!(
        tables,
        [
            "dim4-families",
            "dim4-weight-enumerators",
            "dim4-gram-determinants",
            "dim4-generators",
            "dim4-counts"
        ]
    );
}

#[test]
fn reproduce_all_reports_the_case_formula_conflict() {
    let dir = tempfile::tempdir().unwrap();
    let out = lcdlab(&["reproduce", "--db", dir.path().to_str().unwrap()], None);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8_lossy(&out.stdout);
    let failing: Vec<&str> = text.lines().filter(|l| l.starts_with("FAIL")).collect();
    assert_eq!(failing.len(), 2, "{text}");
    assert!(failing.iter().all(|l| l.contains("griesmer-case-formulas")));
}
