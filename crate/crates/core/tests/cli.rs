mod common;

use std::process::Command;

use common::*;
use pencil_fibers::io::parse_form;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_pencil-fibers"))
}

fn write_input(dir: &tempfile::TempDir, name: &str, text: &str) -> std::path::PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

#[test]
fn conic_pencil_exit_zero_with_json() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("out.json");
    let out = bin().arg("compute").arg(data_path("conics.toml")).arg("--json").arg(&json).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("components (3):"), "{stdout}");
    let doc: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    let eqs: Vec<&str> = doc["components"].as_array().unwrap().iter().map(|c| c["equation"].as_str().unwrap()).collect();
    assert_eq!(eqs, ["X", "Y", "Z"]);
    assert_eq!(doc["fibers"][1]["factorization"][0]["exponent"], 2);
    assert_eq!(doc["verification"]["fibers"].as_array().unwrap().len(), 2);
}

#[test]
fn fixed_component_is_an_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_input(&dir, "fixed.toml", "[pencil]\nF = \"X^2\"\nG = \"X*Y\"\n");
    let out = bin().arg("compute").arg(&input).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("fixed component X"));
}

#[test]
fn irrational_base_point_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_input(&dir, "gauss.toml", "[pencil]\nF = \"X^2+Y^2\"\nG = \"Z^2\"\n");
    let out = bin().arg("compute").arg(&input).output().unwrap();
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("X^2+1"));
    let out = bin().arg("compute").arg(data_path("golden_sqrt5.toml")).output().unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn parse_errors_are_positioned() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_input(&dir, "bad.toml", "[pencil]\nF = \"X*Y\"\nG = \"Z^2 + 1\"\n");
    let out = bin().arg("compute").arg(&input).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not homogeneous"));
    let missing = bin().arg("compute").arg(dir.path().join("nope.toml")).output().unwrap();
    assert_eq!(missing.status.code(), Some(2));
    let usage = bin().arg("compute").output().unwrap();
    assert_eq!(usage.status.code(), Some(2));
}

#[test]
fn flags() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("out.json");
    let out = bin()
        .args(["compute", "--dump-candidates", "--max-degree", "1", "--no-verify", "--probe-seed", "3"])
        .arg(data_path("conics.toml"))
        .arg("--json")
        .arg(&json)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(doc["candidates"].as_array().unwrap().len(), 1);
    assert_eq!(doc["candidates"][0]["dump"].as_array().unwrap().len(), 3);
    assert!(doc["verification"].is_null());
}

#[test]
fn golden_json_round_trips_and_is_stable() {
    let dir = tempfile::tempdir().unwrap();
    let runs: Vec<String> = (0..2)
        .map(|i| {
            let json = dir.path().join(format!("g{i}.json"));
            let out = bin().arg("compute").arg(data_path("golden.toml")).arg("--json").arg(&json).output().unwrap();
            assert_eq!(out.status.code(), Some(0));
            std::fs::read_to_string(&json).unwrap()
        })
        .collect();
    assert_eq!(runs[0], runs[1]);
    let doc: serde_json::Value = serde_json::from_str(&runs[0]).unwrap();
    let k = pencil_fibers::io::parse_input(GOLDEN).unwrap().field;
    for c in doc["components"].as_array().unwrap() {
        let text = c["equation"].as_str().unwrap();
        let p = parse_form(text, &k).unwrap();
        assert_eq!(pencil_fibers::io::format_poly(&p), text);
        assert_eq!(p.canonical_form().unwrap(), p);
    }
}
