use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn configs() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("configs")
}

fn ccrop(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ccrop"))
        .args(args)
        .env_remove("CCROP_WINDOW")
        .output()
        .expect("binary runs")
}

fn cfg(name: &str) -> String {
    configs().join(name).to_string_lossy().into_owned()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("report is JSON")
}

fn write(dir: &tempfile::TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn certify_quadrant() {
    let out = ccrop(&["certify", "asymmetry", &cfg("quadrant.json")]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["verdict"], "ASYMMETRIC");
    assert_eq!(r["results"][0]["witness"]["x"], serde_json::json!(["1", "-1"]));
}

#[test]
fn certify_refuses_half_line() {
    let out = ccrop(&["certify", "asymmetry", &cfg("half_line.json")]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("dimension 1"));
    assert!(out.stdout.is_empty());
}

#[test]
fn translate_eq_of_shifted_quadrant() {
    let out = ccrop(&["module", "translate-eq", &cfg("a.json"), &cfg("b.json")]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["verdict"], "YES");
    assert_eq!(r["results"][0]["witness"]["shift"], serde_json::json!(["-1", "-1"]));
}

#[test]
fn ccr_suite_prints_one_line_per_case() {
    let out = ccrop(&["verify", "ccr", &cfg("quadrant.json"), "--cases", "50"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    let results = r["results"].as_array().unwrap();
    assert_eq!(results.len(), 50);
    assert!(results.iter().all(|c| c["status"] == "PASS" && c["tolerance"] == 1e-9));
}

#[test]
fn zero_tolerance_fails_with_exit_one() {
    let out = ccrop(&["verify", "ccr", &cfg("quadrant.json"), "--cases", "3", "--tol", "0"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["status"], "FAIL");
}

#[test]
fn mixed_pair_is_inconclusive() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(&dir, "a.json", r#"{"cone":{"dim":2,"generators":[["1","0"],["0","1"]]},"module":{"kind":"cone","offsets":[["1","0"],["0","2"]]}}"#);
    let b = write(&dir, "b.json", r#"{"cone":{"dim":2,"generators":[["1","0"],["0","1"]]},"module":{"kind":"opposite","inner":{"kind":"cone","offsets":[["3","-3"],["2","-1"]]}}}"#);
    let out = ccrop(&["module", "translate-eq", &a, &b]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["verdict"], "INCONCLUSIVE");
}

#[test]
fn input_errors_exit_three() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(&dir, "bad.json", r#"{"dim":2,"generators":[["1/x","0"],["0","1"]]}"#);
    assert_eq!(ccrop(&["cone", "check", &bad]).status.code(), Some(3));
    let line = write(&dir, "line.json", r#"{"dim":2,"generators":[["1","0"],["-1","0"],["0","1"]]}"#);
    assert_eq!(ccrop(&["cone", "check", &line]).status.code(), Some(3));
    assert_eq!(ccrop(&["cone", "check", "/nonexistent.json"]).status.code(), Some(3));
    assert_eq!(ccrop(&["cone", "frobnicate"]).status.code(), Some(3));
    let other = cfg("skew.json");
    assert_eq!(ccrop(&["module", "translate-eq", &cfg("b.json"), &other]).status.code(), Some(3));
}

#[test]
fn reports_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let run = |name: &str| {
        let path = dir.path().join(name);
        let out = ccrop(&["report", "all", &cfg("quadrant.json"), "--cases", "10", "--seed", "7", "--out", path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0));
        assert!(out.stdout.is_empty());
        std::fs::read(path).unwrap()
    };
    let first = run("one.json");
    assert_eq!(first, run("two.json"));
    let r: Value = serde_json::from_slice(&first).unwrap();
    assert_eq!(r["seed"], 7);
    assert_eq!(r["verdict"], "ASYMMETRIC");
    assert!(r["version"].is_string());
}

#[test]
fn window_env_applies_only_without_flag() {
    let run = |flag: Option<&str>| {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_ccrop"));
        cmd.args(["module", "opposite", &cfg("quadrant.json")]).env("CCROP_WINDOW", "4");
        if let Some(w) = flag {
            cmd.args(["--window", w]);
        }
        let out = cmd.output().unwrap();
        json(&out)["inputs"]["window"].as_i64().unwrap()
    };
    assert_eq!(run(None), 4);
    assert_eq!(run(Some("6")), 6);
    assert_eq!(json(&ccrop(&["module", "opposite", &cfg("quadrant.json")]))["inputs"]["window"], 10);
}

#[test]
fn half_line_report_shows_symmetry() {
    let out = ccrop(&["report", "all", &cfg("half_line.json"), "--cases", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    let sym = r["results"].as_array().unwrap().iter().find(|c| c["name"] == "one-parameter-symmetry").unwrap();
    assert_eq!(sym["witness"]["shift"], serde_json::json!(["1"]));
    assert!(r.get("verdict").is_none());
}
