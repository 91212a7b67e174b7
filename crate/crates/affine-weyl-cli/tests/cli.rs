//! End-to-end tests of the `awg` binary.

use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::{json, Value};

fn awg(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_awg"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn awg");
    if let Some(s) = stdin {
        child.stdin.take().unwrap().write_all(s.as_bytes()).unwrap();
    }
    drop(child.stdin.take());
    child.wait_with_output().expect("awg runs")
}

fn json_out(args: &[&str], stdin: Option<&str>) -> Value {
    let out = awg(args, stdin);
    assert!(out.status.success(), "awg {args:?} failed: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

const S1S0S1: [&str; 6] = ["--word", "1,0,1", "--type", "A", "--n", "2"];

#[test]
fn classify_translation() {
    let v = json_out(&["classify", r#"{"type":"A","n":2,"trans2":[2,-2],"perm":[1,2]}"#], None);
    assert_eq!(v, json!({"lambda": [[1, 1], [1, -1]], "mu": []}));
}

#[test]
fn classify_reads_stdin() {
    let v = json_out(&["classify"], Some(r#"{"type":"A","n":2,"trans2":[2,-2],"perm":[1,2]}"#));
    assert_eq!(v["lambda"], json!([[1, 1], [1, -1]]));
}

#[test]
fn reduce_identity_is_trivial() {
    let id = r#"{"type":"C","n":2,"trans2":[0,0],"perm":[1,2]}"#;
    let v = json_out(&["reduce", id], None);
    assert_eq!(v["steps"], json!([]));
    assert_eq!(v["start"], v["end"]);
}

#[test]
fn classpoly_of_s1s0s1() {
    let v = json_out(&["classpoly"].iter().chain(S1S0S1.iter()).copied().collect::<Vec<_>>(), None);
    let polys = v["polys"].as_array().unwrap();
    assert_eq!(polys.len(), 2);
    assert!(polys.contains(&json!({"class": {"lambda": [[2, 0]], "mu": []}, "xi_coeffs": [1]})));
    assert!(polys.contains(&json!({"class": {"lambda": [[1, 1], [1, -1]], "mu": []}, "xi_coeffs": [0, 1]})));
}

#[test]
fn dimension_modes() {
    let mut args = vec!["dim-adlv"];
    args.extend(S1S0S1);
    let basic = r#"{"point":[["0","1"],["0","1"]],"eta":0}"#;
    let v = json_out(&[args.as_slice(), &["--b", basic]].concat(), None);
    assert_eq!(v["max"], json!(2));
    let v = json_out(&[args.as_slice(), &["--mu", "1,-1"]].concat(), None);
    assert_eq!(v, json!({"dim": 1}));
    let base = r#"[{"class":{"lambda":[[1,1],[1,-1]],"mu":[]},"dim":0}]"#;
    let v = json_out(&[args.as_slice(), &["--base", base]].concat(), None);
    assert_eq!(v["max"], json!(1));
}

#[test]
fn newton_and_good() {
    let v = json_out(&["newton", r#"{"type":"A","n":2,"trans2":[2,-2],"perm":[1,2]}"#], None);
    assert_eq!(v, json!({"point": [["1", "1"], ["-1", "1"]], "eta": 0}));
    let v = json_out(&["good", "--word", "0,1,2", "--type", "C", "--n", "2"], None);
    assert_eq!(v["good"], json!(true));
}

#[test]
fn fiber_lists_classes() {
    let v = json_out(&["fiber", r#"{"point":[["0","1"],["0","1"]],"eta":0}"#, "--type", "A", "--n", "2"], None);
    assert_eq!(v["min_length"], json!(0));
    assert_eq!(v["classes"].as_array().unwrap().len(), 2);
}

#[test]
fn enumerate_streams_sorted_unique_lines() {
    let out = awg(&["enumerate", "--type", "C", "--n", "3"], None);
    assert!(out.status.success());
    let lines: Vec<&str> = std::str::from_utf8(&out.stdout).unwrap().lines().collect();
    assert!(!lines.is_empty());
    let mut parsed = Vec::new();
    for l in &lines {
        let v: Value = serde_json::from_str(l).unwrap();
        parsed.push(v.to_string());
    }
    let mut dedup = parsed.clone();
    dedup.dedup();
    assert_eq!(dedup.len(), parsed.len());
}

#[test]
fn malformed_input_exits_with_one() {
    let out = awg(&["classify", r#"{"type":"A","n":2}"#], None);
    assert_eq!(out.status.code(), Some(1));
    assert!(!out.stderr.is_empty());
}

#[test]
fn exhausted_budget_exits_with_two() {
    let out = awg(&["minlen", "--word", "1,0,1,2,1,0,1,2", "--type", "C", "--n", "2", "--brute-force", "--budget", "3"], None);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_single_suite_reports_passes() {
    let out = awg(&["verify", "--suite", "hecke", "--rank", "2", "--maxlen", "4"], None);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().filter(|l| l.starts_with("PASS hecke/")).count() >= 5);
    assert!(!text.contains("FAIL"));
}

#[test]
fn verify_json_report_round_trips() {
    let v = json_out(&["verify", "--check", "weyl_core/group_axioms", "--json"], None);
    assert_eq!(v["checks"][0]["name"], json!("group_axioms"));
    assert_eq!(v["checks"][0]["passed"], json!(true));
}
