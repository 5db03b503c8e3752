use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn frieze(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_frieze"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn ok(args: &[&str], stdin: Option<&str>) -> String {
    let out = frieze(args, stdin);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str], stdin: Option<&str>) -> Value {
    serde_json::from_str(&ok(args, stdin)).unwrap()
}

fn code(args: &[&str], stdin: Option<&str>) -> i32 {
    frieze(args, stdin).status.code().unwrap()
}

const PENTAGON: &str = r#"{"n": 5, "arcs": [[0, 2]]}"#;
const TEN_GON: &str = r#"{"n": 10, "arcs": [[1, 9], [2, 8], [4, 8], [5, 7]]}"#;

#[test]
fn pentagon_frieze_text() {
    let text = ok(&["frieze", "-", "--format", "text", "--verify"], Some(PENTAGON));
    assert!(text.contains("f(2,4) = √2"), "{text}");
    assert!(text.contains("f(1,3) = 1+√2"), "{text}");
    assert!(text.contains("f(0,2) = 1"), "{text}");
}

#[test]
fn pentagon_frieze_json() {
    let v = json(&["frieze", "-"], Some(PENTAGON));
    assert_eq!(v["n"], 5);
    assert_eq!(v["weights"]["1,3"], "1+√2");
    assert_eq!(v["pattern"].as_array().unwrap().len(), 6);
}

#[test]
fn ten_gon_check() {
    let v = json(&["check", "-"], Some(TEN_GON));
    assert_eq!(v["unitary"], true);
    assert_eq!(v["unitary_witnesses_count"], 2);
    assert_eq!(v["tower_decomposable"], true);
    assert_eq!(v["decompositions"], 2);
    assert_eq!(v["type"], 3);
    assert_eq!(v["witness"].as_array().unwrap().len(), 7);
}

#[test]
fn square_of_four_angles_is_not_unitary() {
    let v = json(&["check", "-"], Some(r#"{"n": 4, "arcs": []}"#));
    assert_eq!(v["unitary"], false);
    assert_eq!(v["tower_decomposable"], false);
    assert_eq!(v["unitary_witnesses_count"], 0);
    assert!(v["witness"].is_null());
}

#[test]
fn output_file() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("d.json");
    let output = dir.path().join("out.json");
    std::fs::write(&input, PENTAGON).unwrap();
    let stdout = ok(&["check", input.to_str().unwrap(), "-o", output.to_str().unwrap()], None);
    assert!(stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&output).unwrap()).unwrap();
    assert_eq!(v["unitary"], true);
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["frobnicate"], None), 1);
    assert_eq!(code(&["scan", "--n", "2"], None), 1);
    assert_eq!(code(&["scan", "--n", "7..5"], None), 1);
    assert_eq!(code(&["check", "-"], Some("{")), 2);
    assert_eq!(code(&["check", "-"], Some(r#"{"n": 5}"#)), 2);
    assert_eq!(code(&["check", "-"], Some(r#"{"n": 4, "arcs": [[0, 2], [1, 3]]}"#)), 3);
    assert_eq!(code(&["check", "-"], Some(r#"{"n": 6, "arcs": []}"#)), 3);
    assert_eq!(code(&["check", "-"], Some(r#"{"n": 5, "arcs": [[0, 7]]}"#)), 3);
    assert_eq!(code(&["check", "/nonexistent/d.json"], None), 5);
    assert_eq!(code(&["--help"], None), 0);
}

#[test]
fn errors_go_to_stderr_only() {
    let out = frieze(&["check", "-"], Some("{"));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("frieze: parse error"));
}

#[test]
fn scan_is_identical_across_workers() {
    let run = |w: &str| frieze(&["scan", "--n", "5..9", "--workers", w], None).stdout;
    let one = run("1");
    assert_eq!(one, run("2"));
    assert_eq!(one, run("8"));
    let v: Value = serde_json::from_slice(&one).unwrap();
    assert_eq!(v["counterexamples"], Value::Array(Vec::new()));
    assert_eq!(v["reports"].as_array().unwrap().len(), 5);
}

#[test]
fn scan_resumes_from_index() {
    let full = json(&["scan", "--n", "8"], None);
    let tail = json(&["scan", "--n", "8", "--from-index", "600"], None);
    assert_eq!(full["reports"][0]["scanned"], 654);
    assert_eq!(tail["reports"][0]["scanned"], 54);
}

#[test]
fn four_angulations_are_never_unitary() {
    let v = json(&["scan", "--n", "4..10", "--four-angulations"], None);
    assert_eq!(v["unitary"], 0);
    assert_eq!(v["reports"][6]["scanned"], 55);
}

#[test]
fn lemma_scan_has_no_violations() {
    let v = json(&["scan", "--n", "5..9", "--lemma56"], None);
    assert_eq!(v["violations"], 0);
}

#[test]
fn render_chords_and_overlay() {
    let svg = ok(&["render", "-"], Some(TEN_GON));
    assert!(svg.starts_with("<svg"));
    assert_eq!(svg.matches("class=\"arc\"").count(), 4);
    assert!(!svg.contains("stroke-dasharray"));
    let tower = r#"{"n": 6, "arcs": [[0, 2], [0, 4]]}"#;
    let overlay = ok(&["render", "-", "--overlay-units"], Some(tower));
    assert!(overlay.contains("stroke-dasharray"));
}

#[test]
fn sequences_table() {
    let text = ok(&["sequences", "--max", "4", "--format", "text"], None);
    assert!(text.contains("17+12√2"), "{text}");
    let v = json(&["sequences", "--max", "5"], None);
    assert_eq!(v[5]["pell"], "29");
    assert_eq!(v[2]["d"], "3");
}
