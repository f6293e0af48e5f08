use std::path::Path;
use std::process::{Command, Output};

fn binedge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_binedge")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write_graph(dir: &Path, name: &str, json: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, json).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn gb_verify() {
    let dir = tempfile::tempdir().unwrap();
    let p3 = write_graph(dir.path(), "p3.json", r#"{"n": 3, "edges": [[1, 2], [2, 3]]}"#);
    let out = binedge(&["gb", "--verify", &p3]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("verify: OK (2 elements)"));

    let l132 = write_graph(dir.path(), "l132.json", r#"{"n": 3, "edges": [[1, 3], [3, 2]]}"#);
    let out = binedge(&["gb", "--verify", "--json", "--field", "f2", &l132]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["elements"].as_array().unwrap().len(), 3);
    assert_eq!(v["elements"][2]["u_pi"], "x3");
    assert_eq!(v["verify"]["ok"], true);
}

#[test]
fn plucker_prints_zero() {
    let out = binedge(&["plucker", "1", "2", "3", "4", "4"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "0\n");
    assert_eq!(binedge(&["plucker", "1", "2", "3", "5", "4"]).status.code(), Some(2));
}

#[test]
fn weight_and_fpt() {
    let dir = tempfile::tempdir().unwrap();
    let p3 = write_graph(dir.path(), "p3.json", r#"{"n": 3, "edges": [[1, 2], [2, 3]]}"#);
    let out = binedge(&["weight", "--json", &p3]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v, serde_json::json!({"x": [2, 1, 0], "y": [0, 0, 0], "verified": true}));
    let out = binedge(&["fpt", &p3]);
    assert_eq!(stdout(&out), "fpt = 2\nabsent: x3 y1\n");
}

#[test]
fn fedder_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let p4 = write_graph(dir.path(), "p4.json", r#"{"n": 4, "edges": [[1, 2], [2, 3], [3, 4]]}"#);
    let out = binedge(&["fedder", "--json", "-p", "2", &p4]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["valid"], true);
    assert_eq!(v["witness_degree"], 6);

    let c4 = write_graph(dir.path(), "c4.json", r#"{"n": 4, "edges": [[1, 2], [2, 3], [3, 4], [1, 4]]}"#);
    let out = binedge(&["fedder", "-p", "2", &c4]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not closed"));
}

#[test]
fn betti_grid() {
    let dir = tempfile::tempdir().unwrap();
    let k3 = write_graph(dir.path(), "k3.json", r#"{"n": 3, "edges": [[1, 2], [1, 3], [2, 3]]}"#);
    let out = binedge(&["betti", &k3]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("    1: . 3 2"));
    assert!(text.contains("type of the initial ideal = 2"));
    assert!(text.contains("krull dim = 4"));
}

#[test]
fn input_errors() {
    assert_eq!(binedge(&["gb", "/nonexistent/graph.json"]).status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let bad = write_graph(dir.path(), "bad.json", r#"{"n": 2, "edges": [[1, 1]]}"#);
    assert_eq!(binedge(&["gb", &bad]).status.code(), Some(2));
    assert_eq!(binedge(&["classify", "--n-max", "8"]).status.code(), Some(3));
    assert_eq!(binedge(&["classify", "--primes", "5"]).status.code(), Some(2));
    assert_eq!(binedge(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn classify_reports_and_reproducers() {
    let dir = tempfile::tempdir().unwrap();
    let out_dir = dir.path().join("report");
    let out = binedge(&["classify", "--n-min", "2", "--n-max", "3", "--out", out_dir.to_str().unwrap()]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let csv = std::fs::read_to_string(out_dir.join("classify.csv")).unwrap();
    assert_eq!(csv.lines().count(), 1 + 1 + 2);
    assert_eq!(stdout(&out), csv);

    let out = binedge(&["classify", "--n-min", "4", "--n-max", "4", "--jobs", "1", "--out", out_dir.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let reproducer = out_dir.join("violation-n4-1e.json");
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(reproducer).unwrap()).unwrap();
    assert_eq!(v["failed_checks"], serde_json::json!(["fpt_eq_2"]));
    assert_eq!(v["graph"]["n"], 4);
}
