use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(cache: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_jacobi"))
        .arg("--cache-dir")
        .arg(cache)
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(cache: &Path, args: &[&str]) -> Value {
    let mut all = vec!["--format", "json"];
    all.extend_from_slice(args);
    let out = run(cache, &all);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn terms(v: &Value) -> Vec<(u64, String, String)> {
    v["terms"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| (t["degree"].as_u64().unwrap(), t["basis_label"].as_str().unwrap().into(), t["coeff"].as_str().unwrap().into()))
        .collect()
}

fn t(d: u64, l: &str, c: &str) -> (u64, String, String) {
    (d, l.into(), c.into())
}

#[test]
fn dims_tables() {
    let dir = tempfile::tempdir().unwrap();
    let v = json(dir.path(), &["dims", "--max-degree", "6"]);
    assert_eq!(v["dims"], serde_json::json!([1, 0, 1, 1, 3, 4, 9]));
    assert_eq!(v["cutoff"], Value::Null);
    let v = json(dir.path(), &["dims", "--max-degree", "3", "--framed"]);
    assert_eq!(v["dims"], serde_json::json!([1, 1, 2, 3]));
    let v = json(dir.path(), &["dims", "--max-degree", "0"]);
    assert_eq!(v["dims"], serde_json::json!([1]));
}

#[test]
fn dims_cutoff_on_resource_limit() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(dir.path(), &["--no-cache", "--work-limit", "1000", "--format", "json", "dims", "--max-degree", "7"]);
    assert_eq!(out.status.code(), Some(3));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["dims"], serde_json::json!([1, 0, 1, 1, 3]));
    assert_eq!(v["cutoff"], 5);
}

#[test]
fn torus_knots() {
    let dir = tempfile::tempdir().unwrap();
    let v = json(dir.path(), &["torus", "-m", "2", "-p", "-3", "--max-degree", "4", "--json"]);
    assert_eq!(
        terms(&v["element"]),
        vec![
            t(0, "1", "1"),
            t(2, "w2", "-1/2"),
            t(3, "tw2", "-1/2"),
            t(4, "t2w2", "-31/48"),
            t(4, "w4", "5/24"),
            t(4, "w2w2", "1/8"),
        ]
    );
    let v = json(dir.path(), &["torus", "-m", "3", "-p", "1", "--max-degree", "4"]);
    assert_eq!(terms(&v["element"]), vec![t(0, "1", "1")]);
    let v = json(dir.path(), &["torus", "-m", "2", "-p", "3", "--max-degree", "2", "--log"]);
    assert_eq!(terms(&v["element"]), vec![t(2, "w2", "-1/2")]);
    // framing mp enters as exp(mp θ / 2)
    let v = json(dir.path(), &["torus", "-m", "-2", "-p", "-3", "--max-degree", "1", "--framed"]);
    assert_eq!((v["m"].as_i64(), v["p"].as_i64()), (Some(2), Some(3)));
    assert_eq!(terms(&v["element"]), vec![t(0, "1", "1"), t(1, "I", "3")]);
}

#[test]
fn json_output_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["--format", "json", "torus", "-m", "2", "-p", "5", "--max-degree", "5", "--log"];
    let cold = run(dir.path(), &args);
    let warm = run(dir.path(), &args);
    assert!(cold.status.success());
    assert_eq!(cold.stdout, warm.stdout);
    let other = tempfile::tempdir().unwrap();
    let uncached = run(other.path(), &["--no-cache", "--format", "json", "torus", "-m", "2", "-p", "5", "--max-degree", "5", "--log"]);
    assert_eq!(uncached.stdout, cold.stdout);
}

#[test]
fn verify_selected_suite() {
    let dir = tempfile::tempdir().unwrap();
    let v = json(dir.path(), &["verify", "appendix-a"]);
    let checks = v["checks"].as_array().unwrap();
    assert!(!checks.is_empty());
    assert!(checks.iter().all(|c| c["criterion"] == 4 && c["status"] == "pass"));
    let out = run(dir.path(), &["verify", "no-such-suite"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_survives_a_corrupted_cache() {
    let dir = tempfile::tempdir().unwrap();
    json(dir.path(), &["dims", "--max-degree", "5", "--framed"]);
    std::fs::write(dir.path().join("quotient-3-framed.json"), "garbage").unwrap();
    let out = run(dir.path(), &["verify", "framed-dims"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stdout));
}

#[test]
fn usage_errors() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(run(dir.path(), &["torus", "-m", "2", "-p", "4"]).status.code(), Some(2));
    assert_eq!(run(dir.path(), &["alexander", "-m", "6", "-p", "3"]).status.code(), Some(2));
    assert_eq!(run(dir.path(), &["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(dir.path(), &["--degree-limit", "3", "basis", "--degree", "4"]).status.code(), Some(2));
}

#[test]
fn alexander_series() {
    let dir = tempfile::tempdir().unwrap();
    let v = json(dir.path(), &["alexander", "-m", "2", "-p", "3", "--order", "4"]);
    assert_eq!(v["series"]["coeffs"], serde_json::json!(["1", "0", "1", "0", "1/12"]));
    let v = json(dir.path(), &["alexander", "-m", "5", "-p", "1", "--order", "4"]);
    assert_eq!(v["series"]["coeffs"], serde_json::json!(["1", "0", "0", "0", "0"]));
}

#[test]
fn omega_and_change_of_basis() {
    let dir = tempfile::tempdir().unwrap();
    let v = json(dir.path(), &["omega", "--max-degree", "4"]);
    assert_eq!(
        terms(&v),
        vec![t(0, "1", "1"), t(2, "w2B", "1/48"), t(4, "w4B", "-1/5760"), t(4, "w2B^2", "1/4608")]
    );
    let v = json(dir.path(), &["appendix-a", "--degree", "2"]);
    assert_eq!(v["rows"], serde_json::json!(["w2", "I^2"]));
    assert_eq!(v["columns"], serde_json::json!(["w2B", "strut^2"]));
    assert_eq!(v["matrix"], serde_json::json!([["1", "0"], ["1/6", "1"]]));
}

#[test]
fn basis_representatives() {
    let dir = tempfile::tempdir().unwrap();
    let v = json(dir.path(), &["basis", "--degree", "2"]);
    assert_eq!(v["dim"], 1);
    assert_eq!(v["basis"][0]["label"], "w2");
    let words: Vec<&str> = v["basis"][0]["chords"].as_array().unwrap().iter().map(|c| c["word"].as_str().unwrap()).collect();
    assert_eq!(words, ["AABB", "ABAB"]);
}

#[test]
fn adams_from_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("theta.json");
    std::fs::write(
        &input,
        r#"{"framed": true, "max_degree": 2, "terms": [{"degree": 1, "basis_label": "I", "coeff": "1"}]}"#,
    )
    .unwrap();
    let v = json(dir.path(), &["adams", "-m", "3", "--input", input.to_str().unwrap()]);
    assert_eq!(terms(&v), vec![t(1, "I", "9")]);
    std::fs::write(&input, "{").unwrap();
    let out = run(dir.path(), &["adams", "-m", "3", "--input", input.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn cache_info_and_clear() {
    let dir = tempfile::tempdir().unwrap();
    json(dir.path(), &["dims", "--max-degree", "2"]);
    let v = json(dir.path(), &["cache", "info"]);
    assert_eq!(v["files"].as_array().unwrap().len(), 3);
    let v = json(dir.path(), &["cache", "clear"]);
    assert_eq!(v["removed"], 3);
    assert!(v["files"].as_array().unwrap().is_empty());
}
