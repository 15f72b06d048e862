use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn d2lab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_d2lab")).args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn report(args: &[&str]) -> (i32, Value) {
    let mut full = args.to_vec();
    full.push("--json");
    let out = d2lab(&full);
    let json = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stderr)));
    (code(&out), json)
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn registry_lists_required_names() {
    let out = d2lab(&["list-registry"]);
    assert_eq!(code(&out), 0);
    let names = String::from_utf8(out.stdout).unwrap();
    for name in ["matrix:2", "matrix:3", "group:C2", "group:C4/C2", "group:S3", "group:S3/A3", "group:S3/C2", "sweedler4"] {
        assert!(names.lines().any(|l| l == name), "{name}");
    }
}

#[test]
fn analyze_normal_subgroup() {
    let (code, r) = report(&["analyze-extension", "--input", "group:S3/A3"]);
    assert_eq!(code, 0);
    for key in ["left_d2", "right_d2", "galois_right", "galois_left", "consistent"] {
        assert_eq!(r["verdict"][key], true, "{key}");
    }
    // k[A3] plus the sum of the transpositions.
    assert_eq!(r["dimensions"]["R"], 4);
}

#[test]
fn analyze_non_normal_subgroup() {
    let (code, r) = report(&["analyze-extension", "--input", "group:S3/C2"]);
    assert_eq!(code, 0);
    assert_eq!(r["verdict"]["right_d2"], false);
    assert_eq!(r["verdict"]["galois_right"], false);
    assert_eq!(r["verdict"]["consistent"], true);
}

#[test]
fn analyze_trivial_extension_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let ext = r#"{"B": "matrix:2", "A": "matrix:2",
        "iota": [[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]]}"#;
    let input = write(dir.path(), "ext.json", ext);
    let out_path = dir.path().join("report.json");
    let out = d2lab(&["analyze-extension", "--input", &input, "--out", out_path.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stdout));
    let r: Value = serde_json::from_str(&std::fs::read_to_string(out_path).unwrap()).unwrap();
    assert_eq!(r["command"], "analyze-extension");
    assert!(r["checks"].as_array().unwrap().iter().all(|c| c["status"] != "fail"));
}

#[test]
fn check_normal_sweedler() {
    let (code, r) = report(&["check-normal", "--hopf", "sweedler4", "--sub", "k[g]"]);
    assert_eq!(code, 0);
    assert_eq!(r["verdict"]["normal"], false);
    assert_eq!(r["verdict"]["galois"], false);
    assert_eq!(r["verdict"]["consistent"], true);
}

#[test]
fn check_normal_sub_forms_agree() {
    let dir = tempfile::tempdir().unwrap();
    let sub = write(dir.path(), "sub.json", r#"{"span": [[1,0,0,0,0,0],[0,0,0,0,1,0],[0,0,0,0,0,1]]}"#);
    let (_, a) = report(&["check-normal", "--hopf", "group:S3/A3"]);
    let (_, b) = report(&["check-normal", "--hopf", "group:S3", "--sub", &sub]);
    let (_, c) = report(&["check-normal", "--hopf", "group:S3", "--sub", "indices:0,4,5"]);
    assert_eq!(a["verdict"], b["verdict"]);
    assert_eq!(a["verdict"], c["verdict"]);
    assert_eq!(a["dimensions"]["W"], 2);
}

#[test]
fn weakhopf_matrix_batteries() {
    let (code, r) = report(&["weakhopf-check", "--input", "matrix:2"]);
    assert_eq!(code, 0);
    assert_eq!(r["dimensions"]["H^L"], 2);
    assert_eq!(r["outputs"]["counit_of_unit"], "2");
    let (code, r) = report(&["weakhopf-check", "--input", "matrix:2", "--field", "fp:2"]);
    assert_eq!(code, 0);
    assert_eq!(r["outputs"]["counit_of_unit"], "0");
    let (code, _) = report(&["weakhopf-check", "--input", "matrix:2", "--no-antipode"]);
    assert_eq!(code, 0);
}

#[test]
fn reconstruct_writes_antipode() {
    let (code, r) = report(&["reconstruct-antipode", "--input", "group:S3"]);
    assert_eq!(code, 0);
    let s = r["outputs"]["antipode"].as_array().unwrap();
    assert_eq!(s.len(), 6);
    // (123) and (132) are swapped.
    assert_eq!(s[4][5], "1");
    assert_eq!(s[5][4], "1");
}

#[test]
fn failing_checks_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    // C2 with the counit ε(g) = 0, which is not multiplicative.
    let bad = r#"{"dim": 2, "unit": [1, 0], "mul": [[0,0,0,1],[0,1,1,1],[1,0,1,1],[1,1,0,1]],
        "comul": [[0,0,0,1],[1,1,1,1]], "counit": [1, 0], "antipode": [[1,0],[0,1]]}"#;
    let input = write(dir.path(), "bad.json", bad);
    let out = d2lab(&["weakhopf-check", "--input", &input]);
    assert_eq!(code(&out), 1);
}

#[test]
fn malformed_input_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let broken = write(dir.path(), "broken.json", "{\"B\": ");
    assert_eq!(code(&d2lab(&["analyze-extension", "--input", &broken])), 2);
    assert_eq!(code(&d2lab(&["analyze-extension", "--input", "group:Q8/C2"])), 2);
    assert_eq!(code(&d2lab(&["check-normal", "--hopf", "group:S3", "--sub", "indices:0,9"])), 2);
    assert_eq!(code(&d2lab(&["weakhopf-check", "--input", "matrix:2", "--field", "fp:4"])), 2);
    assert_eq!(code(&d2lab(&["frobnicate"])), 2);
}

#[test]
fn reports_are_byte_identical() {
    let a = d2lab(&["weakhopf-check", "--input", "matrix:2", "--json"]);
    let b = d2lab(&["weakhopf-check", "--input", "matrix:2", "--json"]);
    assert_eq!(a.stdout, b.stdout);
}
