use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cycleset")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is one JSON document")
}

fn four_point() -> String {
    data("four_point.json").display().to_string()
}

#[test]
fn verify_accepts_the_example() {
    let out = run(&["verify", &four_point()]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc["valid"], true);
    assert_eq!(doc["axioms"]["cycle_law"], true);
    assert_eq!(doc["solution"]["yang_baxter"], true);
}

#[test]
fn verify_rejects_a_bad_row() {
    let out = run(&["verify", &data("bad_row.json").display().to_string()]);
    assert_eq!(out.status.code(), Some(1));
    let doc = json(&out);
    assert_eq!(doc["valid"], false);
    assert_eq!(doc["axioms"]["bijective_rows"], false);
    assert_eq!(doc["axioms"]["cycle_law"], Value::Null);
}

#[test]
fn missing_file_is_an_input_error() {
    let out = run(&["group", "/nonexistent/cycle_set.json"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());
}

#[test]
fn group_of_the_example() {
    let out = run(&["group", &four_point()]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc["order"], 8);
    assert_eq!(doc["dihedral"], 4);
    assert_eq!(doc["action"], "Transitive-Other");
    assert_eq!(doc["solvable"], true);
    assert_eq!(doc["transitive"], true);
}

#[test]
fn brace_of_the_example() {
    let doc = json(&run(&["brace", &four_point()]));
    assert_eq!(doc["brace"]["order"], 8);
    assert_eq!(doc["brace"]["perms"].as_array().unwrap().len(), 8);
}

#[test]
fn covering_of_the_example() {
    let out = run(&["covering", &four_point()]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc["report"]["pi1_order"], 2);
    assert_eq!(doc["report"]["covering_size"], 8);
    assert_eq!(doc["report"]["covering_action"], "Regular");
    assert_eq!(doc["covering"]["n"], 8);
    assert_eq!(doc["projection"].as_array().unwrap().len(), 8);
    assert_eq!(run(&["covering", "--base", "5", &four_point()]).status.code(), Some(1));
}

#[test]
fn convert_round_trip() {
    let out = run(&["convert", "--to-solution", &four_point()]);
    assert_eq!(out.status.code(), Some(0));
    let dir = std::env::temp_dir().join(format!("cycleset-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("solution.json");
    std::fs::write(&path, &out.stdout).unwrap();
    let back = run(&["convert", "--to-cycleset", &path.display().to_string()]);
    std::fs::remove_dir_all(&dir).unwrap();
    assert_eq!(back.status.code(), Some(0));
    let original: Value = serde_json::from_str(&std::fs::read_to_string(data("four_point.json")).unwrap()).unwrap();
    assert_eq!(json(&back), original);
}

#[test]
fn enumerate_streams_lines() {
    let out = run(&["enumerate", "--n", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 5);
    for line in text.lines() {
        let doc: Value = serde_json::from_str(line).unwrap();
        assert_eq!(doc["n"], 3);
    }
    let dihedral = run(&["enumerate", "--n", "4", "--indecomposable", "--filter", "dihedral"]);
    assert_eq!(String::from_utf8(dihedral.stdout).unwrap().lines().count(), 2);
}

#[test]
fn size_cap() {
    assert_eq!(run(&["enumerate", "--n", "8"]).status.code(), Some(1));
    assert_eq!(run(&["scan", "--rav", "--max", "8"]).status.code(), Some(1));
}

#[test]
fn frobenius_scan_finds_nothing() {
    let out = run(&["scan", "--frobenius", "--max", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc["hits"].as_array().unwrap().len(), 0);
    assert_eq!(doc["violation"], false);
}

#[test]
fn output_is_reproducible() {
    for args in [&["scan", "--ramirez", "--max", "5"][..], &["enumerate", "--n", "5", "--jobs", "2"][..]] {
        let first = run(args);
        let second = run(args);
        assert_eq!(first.status.code(), Some(0));
        assert_eq!(first.stdout, second.stdout);
    }
    let serial = run(&["enumerate", "--n", "5", "--jobs", "1"]);
    assert_eq!(serial.stdout, run(&["enumerate", "--n", "5", "--jobs", "4"]).stdout);
}
