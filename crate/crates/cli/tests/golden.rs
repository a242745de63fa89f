use std::path::PathBuf;
use std::process::{Command, Output};

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_supertgw")).current_dir(root()).args(args).output().unwrap()
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)).unwrap()
}

fn assert_golden(args: &[&str], name: &str, code: i32) {
    let out = run(args);
    assert_eq!(out.status.code(), Some(code), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), golden(name), "{args:?}");
}

#[test]
fn validate_accepts_identity() {
    assert_golden(&["validate", "data/identity_1_1.json"], "validate_identity.json", 0);
}

#[test]
fn validate_reports_clifford_entry() {
    assert_golden(&["validate", "data/bad_clifford.json"], "validate_bad_clifford.json", 1);
}

#[test]
fn identity_datum_text() {
    assert_golden(&["--format", "text", "datum", "data/identity_1_1.json"], "datum_identity.txt", 0);
}

#[test]
fn member_with_witness() {
    assert_golden(&["support", "member", "data/ex43.json", "-g", "1,2,1"], "member_ex43.json", 0);
}

#[test]
fn non_member_exits_one() {
    assert_golden(&["support", "member", "data/ex43.json", "-g", "2,1,0"], "nonmember_ex43.json", 1);
}

#[test]
fn enumeration_of_small_box() {
    assert_golden(&["support", "enum", "data/support_b.json", "--radius", "4"], "enum_support_b.jsonl", 0);
}

#[test]
fn malformed_input_reports_location() {
    let out = run(&["validate", "data/malformed.json"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("data/malformed.json") && err.contains("line 4, column 3"), "{err}");
}

#[test]
fn invalid_matrix_is_refused() {
    let out = run(&["datum", "data/bad_clifford.json"]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["validation"]["valid"], false);
}

#[test]
fn box_cap_exceeded_exits_two() {
    let out = run(&["support", "enum", "data/support_b.json", "--radius", "50", "--cap", "10"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn repeated_runs_are_byte_identical() {
    for args in [
        &["support", "enum", "data/ex43.json", "--radius", "2"][..],
        &["consistency", "data/ex43.json"],
        &["lie", "check", "osp_even", "1", "1", "--calibrate"],
        &["injectivity", "data/gl_2_1.json", "--radius", "3"],
    ] {
        let a = run(args);
        let b = run(args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert!(!a.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn lie_check_against_fixture() {
    let fixture = root().join("crates/core/fixtures/lie_calibration.json");
    let out = run(&["lie", "check", "gl", "2", "1", "--fixtures", fixture.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["all_pass"], true);
}

#[test]
fn written_matrix_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("m.json");
    std::fs::write(&path, "{\"sign\":\"plus\",\"parity\":[0,1],\"gamma\":[[1],[1]]}").unwrap();
    let out = run(&["validate", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
}
