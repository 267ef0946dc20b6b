use monodromy::cli::{run, EXIT_FAILED, EXIT_INCONCLUSIVE, EXIT_OK, EXIT_SCHEMA, EXIT_USAGE};
use serde_json::Value;
use std::path::Path;
use std::process::Command;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut full = vec!["monodromy"];
    full.extend_from_slice(args);
    let code = run(full, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(s: &str) -> Value {
    serde_json::from_str(s).unwrap()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn build_thm1_and_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("i3.json");
    let (code, out, _) = call(&["build", "thm1", "--genus", "3", "--out", path_str(&file)]);
    assert_eq!(code, EXIT_OK);
    let doc = json(&out);
    assert_eq!(doc["report"]["n_cycles"], 85);
    assert_eq!(doc["report"]["euler"], 77);
    assert_eq!(doc["report"]["sigma"], -49);
    assert_eq!(doc["report"]["lambda"]["num"], 23);
    assert_eq!(doc["report"]["lambda"]["den"], 9);
    assert_eq!(doc["verdict"]["verdict"], "verified");

    let (code, out, _) = call(&["verify", path_str(&file), "--level", "L1"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(json(&out)["verdict"]["level"], "L1");

    let (code, first, _) = call(&["report", path_str(&file)]);
    assert_eq!(code, EXIT_OK);
    let (_, second, _) = call(&["report", path_str(&file)]);
    assert_eq!(first, second);
    assert_eq!(json(&first)["report"], doc["report"]);

    let (code, out, _) = call(&["pi1", path_str(&file)]);
    assert_eq!(code, EXIT_OK);
    let p = json(&out);
    assert_eq!(p["todd_coxeter"]["result"], "finite_order");
    assert_eq!(p["todd_coxeter"]["order"], 1);

    // rebuilding gives the same bytes
    let again = dir.path().join("again.json");
    call(&["build", "thm1", "--genus", "3", "--out", path_str(&again)]);
    assert_eq!(std::fs::read(&file).unwrap(), std::fs::read(&again).unwrap());
}

#[test]
fn build_thm2() {
    let (code, out, _) = call(&["build", "thm2", "--genus", "4", "--n", "2"]);
    assert_eq!(code, EXIT_OK);
    let doc = json(&out);
    assert_eq!(doc["report"]["n_cycles"], 26);
    assert_eq!(doc["report"]["sections"], 2);
    assert_eq!(doc["h1"], serde_json::json!({"free_rank": 1, "torsion": [2]}));
    assert_eq!(doc["quotient_certificate"], true);
    assert_eq!(doc["factorization"]["cycles"].as_array().unwrap().len(), 26);
}

#[test]
fn chain_report() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("c6.json");
    let ctx = monodromy::factorization::Context::new(monodromy::surface::SurfaceKind::new(3, 1).unwrap()).unwrap();
    let f = monodromy::constructions::chain_factorization(&ctx).unwrap();
    std::fs::write(&file, f.to_json()).unwrap();
    let (code, out, _) = call(&["report", path_str(&file)]);
    assert_eq!(code, EXIT_OK);
    let r = &json(&out)["report"];
    assert_eq!((r["sigma"].as_i64(), r["euler"].as_i64()), (Some(-48), Some(76)));
}

#[test]
fn usage_errors() {
    assert_eq!(call(&["build", "thm1", "--genus", "2"]).0, EXIT_USAGE);
    assert_eq!(call(&["build", "thm2", "--genus", "3", "--n", "1"]).0, EXIT_USAGE);
    assert_eq!(call(&["build", "thm2", "--genus", "4"]).0, EXIT_USAGE);
    assert_eq!(call(&["build", "thm2", "--genus", "4", "--n", "0"]).0, EXIT_USAGE);
    assert_eq!(call(&["build", "thm3", "--genus", "4"]).0, EXIT_USAGE);
    assert_eq!(call(&["frobnicate"]).0, EXIT_USAGE);
    assert_eq!(call(&[]).0, EXIT_USAGE);
    let (code, out, _) = call(&["--help"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("build"));
    assert_eq!(call(&["--version"]).0, EXIT_OK);
}

#[test]
fn schema_and_refutation() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"schema\": \"monodromy/1\"}").unwrap();
    assert_eq!(call(&["verify", path_str(&bad)]).0, EXIT_SCHEMA);
    std::fs::write(&bad, "not json").unwrap();
    assert_eq!(call(&["report", path_str(&bad)]).0, EXIT_SCHEMA);

    let file = dir.path().join("i3.json");
    call(&["build", "thm1", "--genus", "3", "--out", path_str(&file)]);
    let mut doc = json(&std::fs::read_to_string(&file).unwrap());
    doc["cycles"].as_array_mut().unwrap().remove(7);
    let tampered = dir.path().join("tampered.json");
    std::fs::write(&tampered, serde_json::to_string(&doc).unwrap()).unwrap();
    let (code, out, _) = call(&["verify", path_str(&tampered)]);
    assert_eq!(code, EXIT_FAILED);
    assert_eq!(json(&out)["verdict"]["verdict"], "refuted");

    let (code, out, _) = call(&["verify", path_str(&file), "--word-budget", "10"]);
    assert_eq!(code, EXIT_INCONCLUSIVE);
    assert_eq!(json(&out)["verdict"]["l1_verified"], true);
}

#[test]
fn catalog_dump() {
    let (code, out, _) = call(&["catalog", "--genus", "3", "--format", "text"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.lines().any(|l| l == "a1: a1"));
    assert!(out.lines().any(|l| l.starts_with("e2: ")));
    assert_eq!(call(&["catalog", "--genus", "0"]).0, EXIT_USAGE);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_monodromy");
    let st = Command::new(bin).args(["build", "thm1", "--genus", "2"]).output().unwrap();
    assert_eq!(st.status.code(), Some(EXIT_USAGE));
    let st = Command::new(bin).args(["build", "thm1", "--genus", "3", "--format", "text"]).output().unwrap();
    assert_eq!(st.status.code(), Some(EXIT_OK));
    assert!(String::from_utf8_lossy(&st.stdout).contains("slope: 23/9"));
}
