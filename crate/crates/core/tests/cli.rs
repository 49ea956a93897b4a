use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn sepdim(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sepdim")).args(args).output().expect("binary runs")
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn write(dir: &Path, name: &str, body: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p
}

fn json_stdout(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| {
        panic!("bad JSON ({e}): {}", String::from_utf8_lossy(&o.stdout))
    })
}

#[test]
fn gen_construct_verify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("g.el");
    let rep = dir.path().join("rep.json");
    let o = sepdim(&["gen", "--model", "random-regular", "--n", "30", "--degree", "4", "--seed", "5", "--out", path_str(&g)]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let o = sepdim(&["construct", "--input", path_str(&g), "--recursion-threshold", "0", "--out", path_str(&rep), "--json"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let report = json_stdout(&o);
    assert!(report["report"]["recursion_depth"].as_u64().unwrap() >= 1);
    for strong in [false, true] {
        let mut args = vec!["verify", "--input", path_str(&g), "--rep", path_str(&rep), "--json"];
        if strong {
            args.push("--strong");
        }
        let o = sepdim(&args);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(json_stdout(&o)["valid"], true);
    }
}

#[test]
fn repeated_runs_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("g.el");
    assert!(sepdim(&["gen", "--model", "gnp", "--n", "40", "--p", "0.15", "--seed", "3", "--out", path_str(&g)]).status.success());
    let cmd = ["construct", "--input", path_str(&g), "--recursion-threshold", "0", "--json"];
    let first = sepdim(&cmd);
    assert!(first.status.success());
    for jobs in ["1", "3"] {
        let mut args = cmd.to_vec();
        args.extend(["--jobs", jobs]);
        assert_eq!(sepdim(&args).stdout, first.stdout, "--jobs {jobs}");
    }
    let refute = ["refute", "--adversarial", "--seed", "11", "--json"];
    assert_eq!(sepdim(&refute).stdout, sepdim(&refute).stdout);
}

#[test]
fn exact_k4_and_c4() {
    let dir = tempfile::tempdir().unwrap();
    let k4 = write(dir.path(), "k4.el", "n 4\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    let o = sepdim(&["exact", "--input", path_str(&k4), "--json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json_stdout(&o)["dimension"], 3);
    let c4 = write(dir.path(), "c4.el", "n 4\n0 1\n1 2\n2 3\n3 0\n");
    let o = sepdim(&["exact", "--input", path_str(&c4)]);
    assert_eq!(String::from_utf8_lossy(&o.stdout).trim(), "dimension 2");
}

#[test]
fn failed_verification_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let c4 = write(dir.path(), "c4.el", "n 4\n0 1\n1 2\n2 3\n3 0\n");
    let bad = write(dir.path(), "bad.json", r#"{"n":4,"orderings":[[0,1,2,3]]}"#);
    let o = sepdim(&["verify", "--input", path_str(&c4), "--rep", path_str(&bad), "--json"]);
    assert_eq!(o.status.code(), Some(1));
    let v = json_stdout(&o);
    assert_eq!(v["valid"], false);
    assert_eq!(v["witness"]["pair"], serde_json::json!([[0, 3], [1, 2]]));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(sepdim(&["construct"]).status.code(), Some(2));
    assert_eq!(sepdim(&["stats", "--input", "/nonexistent/g.el"]).status.code(), Some(2));
    assert_eq!(sepdim(&["gen", "--model", "cycle", "--n", "5", "--out", "/nonexistent/dir/g.el"]).status.code(), Some(2));
    assert_eq!(sepdim(&["refute"]).status.code(), Some(2));
}

#[test]
fn stats_and_homogenize() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("g.el");
    let out = dir.path().join("homo.json");
    assert!(sepdim(&["gen", "--model", "random-bipartite", "--n", "120", "--right", "120", "--p", "0.6", "--seed", "2", "--out", path_str(&g)]).status.success());
    let o = sepdim(&["stats", "--input", path_str(&g), "--json"]);
    let stats = json_stdout(&o);
    assert_eq!(stats["n"], 240);
    // Edge lists carry no bipartition; homogenize computes one.
    assert_eq!(stats["bipartition_recorded"], false);
    assert_eq!(stats["components"], 1);
    // Identity and reversed identity.
    let a: Vec<usize> = (0..240).collect();
    let b: Vec<usize> = (0..240).rev().collect();
    let rep = write(dir.path(), "rep.json", &serde_json::json!({ "n": 240, "orderings": [a, b] }).to_string());
    let o = sepdim(&[
        "homogenize", "--input", path_str(&g), "--rep", path_str(&rep), "--t", "2",
        "--core-degree", "8", "--no-degree-check", "--out", path_str(&out), "--json",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let body: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(body["certificate"]["signs"].as_array().unwrap().len(), 2);
    // The same input with the default precondition is rejected.
    let o = sepdim(&["homogenize", "--input", path_str(&g), "--rep", path_str(&rep)]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn construct_c4_then_verify() {
    let dir = tempfile::tempdir().unwrap();
    let c4 = write(dir.path(), "c4.el", "n 4\n0 1\n1 2\n2 3\n3 0\n");
    let rep = dir.path().join("rep.json");
    let o = sepdim(&["construct", "--input", path_str(&c4), "--seed", "1", "--out", path_str(&rep)]);
    assert_eq!(o.status.code(), Some(0));
    let body: Value = serde_json::from_str(&std::fs::read_to_string(&rep).unwrap()).unwrap();
    assert_eq!(body["kind"], "strong");
    let o = sepdim(&["verify", "--input", path_str(&c4), "--rep", path_str(&rep), "--strong"]);
    assert_eq!(o.status.code(), Some(0));
}
