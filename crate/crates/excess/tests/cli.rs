//! End-to-end tests of the command-line interface and its exit codes.

use std::path::Path;
use std::process::{Command, Output};

fn excess(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_excess"))
        .args(args)
        .output()
        .expect("spawn excess")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn build_then_analyze_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("m34.json");
    let out = excess(&["build", "M(3,4)", "-o", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));

    let out = excess(&["analyze", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("excess degree: 8"), "{text}");
    assert!(text.contains("provenance:    M(3,4)"), "{text}");

    let out = excess(&["analyze", file.to_str().unwrap(), "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["excess_profile"]["xi"], 8);
    assert_eq!(v["dim"], 7);
    assert_eq!(v["structure"]["is_pyramidal"], true);
}

#[test]
fn build_prints_to_stdout_by_default() {
    let out = excess(&["build", "simplex(3)"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["dim"], 3);
    assert_eq!(v["n_vertices"], 4);
    assert_eq!(v["realizability"], "constructed");
}

#[test]
fn verify_expression_exits_zero() {
    let out = excess(&["verify", "simplex(8)"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(stdout(&out).contains("suite: PASS"));
}

#[test]
fn corpus_then_verify_directory() {
    let dir = tempfile::tempdir().unwrap();
    let corpus_dir = dir.path().join("c");
    let out = excess(&[
        "corpus",
        "--seed",
        "1",
        "--count",
        "50",
        "--out",
        corpus_dir.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(corpus_dir.join("manifest.json").exists());
    assert!(corpus_dir.join("0000.json").exists());
    assert!(corpus_dir.join("0049.json").exists());

    let out = excess(&["verify", corpus_dir.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(stdout(&out).contains("suite: PASS"));

    let out = excess(&["verify", corpus_dir.to_str().unwrap(), "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(v["corpus_fingerprint"].as_str().unwrap().len() == 64);
    assert!(v["checks"].as_array().unwrap().len() >= 20);
    for c in v["checks"].as_array().unwrap() {
        assert_eq!(c["fail"], 0, "{c}");
    }
}

#[test]
fn verify_with_check_filter() {
    let out = excess(&["verify", "M(3,4)", "--checks", "EXC-LOWER,EXC-PARITY", "--json"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["checks"].as_array().unwrap().len(), 2);

    let out = excess(&["verify", "M(3,4)", "--checks", "NO-SUCH-CHECK"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("unknown check"));
}

#[test]
fn parse_errors_exit_two_with_position() {
    let out = excess(&["build", "delta(2,)"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("1:9"), "{}", stderr(&out));

    let out = excess(&["analyze", "noSuchCtor(3)"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn corrupted_file_is_rejected_by_the_sanity_gate() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("bad.json");
    // A simplex facet list with one facet removed: vertex 0 then lies in too
    // few facets for the claimed dimension.
    std::fs::write(
        &file,
        r#"{
  "dim": 5,
  "n_vertices": 6,
  "facets": [[0,1,2,3,4],[0,1,2,3,5],[0,1,2,4,5],[0,1,3,4,5],[1,2,3,4,5]],
  "realizability": "constructed"
}
"#,
    )
    .unwrap();
    let out = excess(&["verify", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2), "{}", stderr(&out));
}

#[test]
fn identify_families() {
    let out = excess(&["identify", "prism(simplex(2))"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "delta(1,2)");

    let out = excess(&["identify", "pyramid(polygon(6),1)"]);
    assert_eq!(stdout(&out).trim(), "unknown");
}

#[test]
fn analyze_accepts_expressions_directly() {
    let out = excess(&["analyze", "glue(simplex(5),facet(0),simplex(5),facet(0))"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("excess degree: 5"), "{text}");
    assert!(text.contains("phantom-simplex=true"), "{text}");
}

#[test]
fn written_files_round_trip_through_the_format() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("w.json");
    excess(&["build", "wedge(polygon(5),edge(0,1))", "-o", file.to_str().unwrap()]);
    let text = std::fs::read_to_string(&file).unwrap();
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    // Facet lists and facets sorted ascending.
    let facets = v["facets"].as_array().unwrap();
    let lists: Vec<Vec<u64>> = facets
        .iter()
        .map(|f| f.as_array().unwrap().iter().map(|x| x.as_u64().unwrap()).collect())
        .collect();
    let mut sorted = lists.clone();
    sorted.sort();
    assert_eq!(lists, sorted);
    for l in &lists {
        let mut s = l.clone();
        s.sort_unstable();
        assert_eq!(*l, s);
    }
    assert!(Path::new(&file).exists());
}
