//! Behavioral tests for the command-line interface: exit codes, gated
//! analyses, determinism of generation.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn leibniz(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_leibniz"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn shipped_example() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data/barnes_example.json")
}

#[test]
fn verify_passes_on_the_shipped_example() {
    let out = leibniz(&["verify", shipped_example().to_str().unwrap()]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("Leibniz algebra"), "{}", text);
}

#[test]
fn verify_fails_with_the_counterexample_triple() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    fs::write(
        &bad,
        r#"{"field": {"kind": "Q"}, "dim": 1, "products": [{"i": 1, "j": 1, "out": ["1"]}]}"#,
    )
    .unwrap();
    let out = leibniz(&["verify", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("(1, 1, 1)"), "{}", text);
}

#[test]
fn verify_of_the_empty_algebra_passes_vacuously() {
    let dir = tempfile::tempdir().unwrap();
    let empty = dir.path().join("empty.json");
    fs::write(&empty, r#"{"field": {"kind": "Q"}, "dim": 0, "products": []}"#).unwrap();
    let out = leibniz(&["verify", empty.to_str().unwrap()]);
    assert!(out.status.success());
}

#[test]
fn unparseable_files_exit_with_code_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    fs::write(&bad, "{ not json").unwrap();
    let out = leibniz(&["verify", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn gated_analyses_exit_with_code_three() {
    let example = shipped_example();
    let out = leibniz(&["analyze", example.to_str().unwrap(), "--frattini"]);
    assert_eq!(out.status.code(), Some(3));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("finite field"), "{}", err);

    // Cartan search over a too-small field.
    let dir = tempfile::tempdir().unwrap();
    let gen = leibniz(&[
        "generate",
        "cyclic",
        "--dim",
        "3",
        "--field",
        "F2",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert!(gen.status.success());
    let file = dir.path().join("cyclic3_f2.json");
    let out = leibniz(&["analyze", file.to_str().unwrap(), "--cartan"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn analyze_reports_the_engel_subalgebra_by_label() {
    let example = shipped_example();
    let out = leibniz(&[
        "analyze",
        example.to_str().unwrap(),
        "--engel",
        "n",
        "--json",
    ]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let space = value["engel"]["space"].as_array().unwrap();
    assert_eq!(space.len(), 2);
    assert_eq!(space[0], serde_json::json!(["0", "1", "0", "0"]));
    assert_eq!(space[1], serde_json::json!(["0", "0", "0", "1"]));
}

#[test]
fn analyze_reports_a_two_dimensional_cartan_subalgebra() {
    let example = shipped_example();
    let out = leibniz(&["analyze", example.to_str().unwrap(), "--cartan", "--json"]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let cartan = value["cartan"]["subalgebra"].as_array().unwrap();
    assert_eq!(cartan.len(), 2);
    assert_eq!(value["cartan"]["nilpotency_class"], 2);
    assert!(value["cartan"]["witness_element"].is_array());
}

#[test]
fn analyze_json_is_identical_across_runs() {
    let example = shipped_example();
    let args = [
        "analyze",
        example.to_str().unwrap(),
        "--series",
        "--centres",
        "--cartan",
        "--json",
    ];
    let first = leibniz(&args);
    let second = leibniz(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn generate_is_deterministic_per_seed() {
    let d1 = tempfile::tempdir().unwrap();
    let d2 = tempfile::tempdir().unwrap();
    for dir in [&d1, &d2] {
        let out = leibniz(&[
            "generate",
            "random-nilpotent",
            "--dim",
            "4",
            "--seed",
            "42",
            "--field",
            "F5",
            "--out",
            dir.path().to_str().unwrap(),
        ]);
        assert!(out.status.success());
    }
    let f1 = fs::read(d1.path().join("randnil4_s42_f5.json")).unwrap();
    let f2 = fs::read(d2.path().join("randnil4_s42_f5.json")).unwrap();
    assert_eq!(f1, f2);
}

#[test]
fn generated_paper_example_matches_the_shipped_file_byte_for_byte() {
    let dir = tempfile::tempdir().unwrap();
    let out = leibniz(&[
        "generate",
        "paper-example",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let generated = fs::read(dir.path().join("barnes_example.json")).unwrap();
    let shipped = fs::read(shipped_example()).unwrap();
    assert_eq!(generated, shipped);
}

#[test]
fn generated_files_verify() {
    let dir = tempfile::tempdir().unwrap();
    for args in [
        vec!["generate", "cyclic", "--dim", "3", "--field", "F7"],
        vec!["generate", "split", "--rep", "companion", "--s-mode", "minus-t", "--field", "F3"],
    ] {
        let mut full = args.clone();
        let out_dir = dir.path().to_str().unwrap();
        full.extend(["--out", out_dir]);
        assert!(leibniz(&full).status.success());
    }
    for entry in fs::read_dir(dir.path()).unwrap() {
        let path = entry.unwrap().path();
        if path.file_name().unwrap() == "manifest.json" {
            continue;
        }
        let out = leibniz(&["verify", path.to_str().unwrap()]);
        assert!(out.status.success(), "{:?}", path);
    }
}

#[test]
fn unknown_generate_kind_exits_with_code_two() {
    let dir = tempfile::tempdir().unwrap();
    let out = leibniz(&[
        "generate",
        "heptagon",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn theorems_names_a_broken_corpus_file() {
    let dir = tempfile::tempdir().unwrap();
    let gen = leibniz(&[
        "generate",
        "cyclic",
        "--dim",
        "2",
        "--field",
        "F3",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert!(gen.status.success());
    fs::write(
        dir.path().join("broken.json"),
        r#"{"field": {"kind": "Q"}, "dim": 1, "products": [{"i": 1, "j": 1, "out": ["1"]}]}"#,
    )
    .unwrap();
    let out = leibniz(&["theorems", dir.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("broken.json"), "{}", err);
}

#[test]
fn theorems_filter_runs_a_single_check() {
    let dir = tempfile::tempdir().unwrap();
    let gen = leibniz(&[
        "generate",
        "cyclic",
        "--dim",
        "2",
        "--field",
        "F5",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert!(gen.status.success());
    let out = leibniz(&[
        "theorems",
        dir.path().to_str().unwrap(),
        "--filter",
        "th-minE",
        "--json",
    ]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let results = value["algebras"][0]["results"].as_array().unwrap();
    assert_eq!(results.len(), 1);
    assert_eq!(results[0]["id"], "th-minE");
    assert_eq!(value["fail"], 0);
}
