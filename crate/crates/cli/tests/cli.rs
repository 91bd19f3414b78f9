//! End-to-end tests of the command-line interface: exit codes, output
//! formats, determinism across processes, and the negative control.

use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_homstruct"))
}

#[test]
fn verify_single_case_exits_zero_and_emits_json() {
    let dir = std::env::temp_dir().join("homstruct-cli-test-verify");
    std::fs::create_dir_all(&dir).unwrap();
    let out = dir.join("r.json");
    let status = bin()
        .args([
            "verify",
            "--case",
            "generic",
            "--samples",
            "2",
            "--seed",
            "42",
            "--out",
        ])
        .arg(&out)
        .status()
        .unwrap();
    assert!(status.success());
    let text = std::fs::read_to_string(&out).unwrap();
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["version"], 1);
    assert_eq!(v["config"]["seed"], 42);
    assert!(v["suites"].as_array().unwrap().iter().all(|s| s["status"] != "FAIL"));
    // Round trip: parse, re-serialize, parse again; structurally equal.
    let s2 = serde_json::to_string(&v).unwrap();
    let v2: serde_json::Value = serde_json::from_str(&s2).unwrap();
    assert_eq!(v, v2);
}

#[test]
fn verify_is_deterministic_across_processes() {
    let dir = std::env::temp_dir().join("homstruct-cli-test-det");
    std::fs::create_dir_all(&dir).unwrap();
    let out1 = dir.join("a.json");
    let out2 = dir.join("b.json");
    for out in [&out1, &out2] {
        let status = bin()
            .args(["verify", "--case", "timelike", "--samples", "2", "--seed", "7", "--out"])
            .arg(out)
            .status()
            .unwrap();
        assert!(status.success());
    }
    let a = std::fs::read(&out1).unwrap();
    let b = std::fs::read(&out2).unwrap();
    assert_eq!(a, b, "same seed, same bytes");
}

#[test]
fn env_seed_sets_the_default() {
    let dir = std::env::temp_dir().join("homstruct-cli-test-env");
    std::fs::create_dir_all(&dir).unwrap();
    let out = dir.join("r.json");
    let status = bin()
        .env("HOMSTRUCT_SEED", "123")
        .args(["verify", "--case", "generic", "--samples", "1", "--out"])
        .arg(&out)
        .status()
        .unwrap();
    assert!(status.success());
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["config"]["seed"], 123);
}

#[test]
fn config_file_is_overridden_by_flags() {
    let dir = std::env::temp_dir().join("homstruct-cli-test-config");
    std::fs::create_dir_all(&dir).unwrap();
    let cfg = dir.join("cfg.json");
    std::fs::write(&cfg, r#"{"seed": 5, "samples_per_case": 1, "cases": ["generic"]}"#).unwrap();
    let out = dir.join("r.json");
    let status = bin()
        .args(["verify", "--seed", "9", "--config"])
        .arg(&cfg)
        .args(["--out"])
        .arg(&out)
        .status()
        .unwrap();
    assert!(status.success());
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["config"]["seed"], 9);
    assert_eq!(v["config"]["samples_per_case"], 1);
}

#[test]
fn bad_arguments_are_rejected() {
    let out = bin().args(["verify", "--samples", "0"]).output().unwrap();
    assert!(!out.status.success());
    let out = bin().args(["verify", "--identity-samples", "4"]).output().unwrap();
    assert!(!out.status.success());
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("unsafe-low-samples"));
    let out = bin().args(["verify", "--nonsense"]).output().unwrap();
    assert!(!out.status.success());
    let out = bin()
        .args(["solve", "--lambda", "1/0", "--mu", "1", "--nu", "1"])
        .output()
        .unwrap();
    assert!(!out.status.success());
}

#[test]
fn solve_reports_the_decomposition() {
    let out = bin()
        .args(["solve", "--lambda", "-2/1", "--mu", "1", "--nu", "1"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["metric"]["case"], "timelike");
    assert_eq!(v["linear_stage_dimension"], 3);
    assert_eq!(v["matched"], true);
    assert_eq!(v["components"].as_array().unwrap().len(), 1);
}

#[test]
fn tables_and_markdown_emission() {
    let dir = std::env::temp_dir().join("homstruct-cli-test-tables");
    std::fs::create_dir_all(&dir).unwrap();
    let out = dir.join("t.md");
    let status = bin()
        .args(["tables", "--which", "table1", "--samples", "2", "--format", "markdown", "--out"])
        .arg(&out)
        .status()
        .unwrap();
    assert!(status.success());
    let text = std::fs::read_to_string(&out).unwrap();
    // One row per metric case.
    let rows = text
        .lines()
        .filter(|l| l.starts_with("| ") && (l.contains("symmetric") || l.contains("like") || l.contains("generic")))
        .count();
    assert!(rows >= 5, "expected five classification rows:\n{text}");
}

#[test]
fn group_subcommand_runs_all_checks() {
    let out = bin().args(["group", "--which", "all", "--points", "8"]).output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("Pi0") && text.contains("DoubleCover"));
    let out = bin().args(["group", "--which", "bogus"]).output().unwrap();
    assert!(!out.status.success());
}

#[test]
fn corrupted_catalog_fails_with_the_violating_coefficient() {
    use homstruct_cli::config::{Config, ConfigOverrides};
    use homstruct_cli::report::Status;
    let cfg = Config::resolve(None, ConfigOverrides::default()).unwrap();
    let rec = homstruct_cli::suites::degeneration_suite_corrupted(&cfg);
    assert_eq!(rec.status, Status::Fail);
    let joined = rec.details.join("\n");
    assert!(
        joined.contains("coefficient") && joined.contains("sigma0"),
        "must report the violating coefficient: {joined}"
    );
}
