use std::path::Path;
use std::process::{Command, Output};

use anosovlab::experiment::{parse_csv, Suite};

fn anosovlab(args: &[&str], seed_env: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_anosovlab"));
    cmd.args(args).env_remove("ANOSOVLAB_SEED");
    if let Some(seed) = seed_env {
        cmd.env("ANOSOVLAB_SEED", seed);
    }
    cmd.output().unwrap()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn seed_line(report: &str) -> String {
    report.lines().find(|l| l.starts_with("# seed:")).unwrap().to_string()
}

#[test]
fn list_names_every_suite() {
    let out = anosovlab(&["list"], None);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    for suite in Suite::ALL {
        assert!(text.lines().any(|l| l.starts_with(suite.name())), "{} missing", suite.name());
    }
}

#[test]
fn csv_reports_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a.csv"), dir.path().join("b.csv"));
    for p in [&a, &b] {
        let out = anosovlab(&["run", "--experiment", "quantum-divergence", "--seed", "9", "--out", path(p)], None);
        assert!(out.status.success(), "{}", stderr(&out));
        assert!(out.stdout.is_empty());
    }
    let text = std::fs::read_to_string(&a).unwrap();
    assert_eq!(text, std::fs::read_to_string(&b).unwrap());
    assert!(!parse_csv(&text).unwrap().is_empty());
}

#[test]
fn json_reports_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a.json"), dir.path().join("b.json"));
    for p in [&a, &b] {
        let out = anosovlab(&["run", "--experiment", "geodesic", "--format", "json", "--out", path(p)], Some("4"));
        assert!(out.status.success(), "{}", stderr(&out));
    }
    let text = std::fs::read(&a).unwrap();
    assert_eq!(text, std::fs::read(&b).unwrap());
    let v: serde_json::Value = serde_json::from_slice(&text).unwrap();
    assert_eq!(v["experiment"], "geodesic");
    assert_eq!(v["seed"], 4);
    assert_eq!(v["pass"], true);
}

#[test]
fn report_goes_to_stdout_without_out() {
    let out = anosovlab(&["run", "--experiment", "cat-divergence"], None);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("# experiment: cat-divergence\n"));
    assert_eq!(parse_csv(&text).unwrap().len(), 17);
}

#[test]
fn failing_tolerance_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("strict.cfg");
    std::fs::write(&cfg, "[cat-quantum]\ntolerance.defect = 0\n").unwrap();
    let out = anosovlab(&["run", "--experiment", "cat-quantum", "--config", path(&cfg)], None);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("# result: fail"));
    assert!(parse_csv(&text).unwrap().iter().any(|r| !r.pass));
}

#[test]
fn seed_precedence() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("seed.cfg");
    std::fs::write(&cfg, "seed = 30\n").unwrap();
    let run = |args: &[&str], env: Option<&str>| {
        let mut full = vec!["run", "--experiment", "nogo-sylvester"];
        full.extend_from_slice(args);
        seed_line(&String::from_utf8(anosovlab(&full, env).stdout).unwrap())
    };
    assert_eq!(run(&[], None), format!("# seed: {}", anosovlab::experiment::DEFAULT_SEED));
    assert_eq!(run(&[], Some("10")), "# seed: 10");
    assert_eq!(run(&["--config", path(&cfg)], Some("10")), "# seed: 30");
    assert_eq!(run(&["--config", path(&cfg), "--seed", "50"], Some("10")), "# seed: 50");
}

fn assert_usage_error(out: &Output, needle: &str) {
    assert_eq!(out.status.code(), Some(2));
    let err = stderr(out);
    assert_eq!(err.lines().count(), 1, "{err}");
    assert!(err.contains(needle), "{err}");
}

#[test]
fn unknown_experiment() {
    let out = anosovlab(&["run", "--experiment", "no-such-suite"], None);
    assert_usage_error(&out, "no-such-suite");
}

#[test]
fn malformed_config() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("bad.cfg");
    std::fs::write(&cfg, "seed = 1\nsamples = lots\n").unwrap();
    let out = anosovlab(&["run", "--experiment", "geodesic", "--config", path(&cfg)], None);
    assert_usage_error(&out, "line 2");
    std::fs::write(&cfg, "t_min = 3\nt_max = 1\n").unwrap();
    let out = anosovlab(&["run", "--experiment", "geodesic", "--config", path(&cfg)], None);
    assert_eq!(out.status.code(), Some(2));
    let missing = dir.path().join("missing.cfg");
    let out = anosovlab(&["run", "--experiment", "geodesic", "--config", path(&missing)], None);
    assert_usage_error(&out, "missing.cfg");
}

#[test]
fn invalid_seed_env() {
    let out = anosovlab(&["run", "--experiment", "geodesic"], Some("abc"));
    assert_usage_error(&out, "ANOSOVLAB_SEED");
}

#[test]
fn unwritable_output() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("no").join("such").join("dir.csv");
    let out = anosovlab(&["run", "--experiment", "cat-divergence", "--out", path(&target)], None);
    assert_usage_error(&out, "dir.csv");
}
