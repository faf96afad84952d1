use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn skewcode(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_skewcode")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("skewcode-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn rook_example() {
    let o = skewcode(&["rook", "--n", "4", "--values", "3,3,0"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), r#"{"pairs":[[1,4],[2,1],[3,3]]}"#);
}

#[test]
fn rook_verify_all() {
    let o = skewcode(&["rook", "--n", "6", "--verify-all"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["report"], "all instances solvable");
    assert_eq!(v["instances"], 252);
}

#[test]
fn construct_then_distance() {
    let o = skewcode(&["construct", "--q", "5", "--n", "4", "--indices", "4,3,3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["forney"], serde_json::json!([3, 3, 4]));

    let small = skewcode(&["construct", "--q", "5", "--n", "4", "--indices", "1,1,2"]);
    let path = scratch("code.json", &stdout(&small));
    let o = skewcode(&["distance", "--code", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let d: usize = stdout(&o).trim().parse().unwrap();
    assert!((1..=6).contains(&d));
}

#[test]
fn xi_round_trip_is_byte_identical() {
    let fwd_in = scratch("g.txt", "[2,1,1,0] + z*[0,1,3,1] + z^2*[4,0,0,0]\n");
    let fwd = skewcode(&["xi", "--dir", "fwd", "--q", "5", "--n", "4", "--in", fwd_in.to_str().unwrap()]);
    assert_eq!(fwd.status.code(), Some(0), "{}", String::from_utf8_lossy(&fwd.stderr));
    let m_path = scratch("m.txt", &stdout(&fwd));
    let inv = skewcode(&["xi", "--dir", "inv", "--q", "5", "--n", "4", "--in", m_path.to_str().unwrap()]);
    assert_eq!(inv.status.code(), Some(0));

    let canon = scratch("canon.txt", &stdout(&inv));
    let again = skewcode(&["xi", "--dir", "fwd", "--q", "5", "--n", "4", "--in", canon.to_str().unwrap()]);
    assert_eq!(stdout(&again), stdout(&fwd));
    let back = skewcode(&["xi", "--dir", "inv", "--q", "5", "--n", "4", "--in", scratch("m2.txt", &stdout(&again)).to_str().unwrap()]);
    assert_eq!(stdout(&back), stdout(&inv));
}

#[test]
fn reduce_reports_factors() {
    let path = scratch("reduce.txt", "2+t, 1, 4, 4\n0, 1, 3, 0\n4t, 2t, 1+t, 1\n0, 0, 0, 0\n");
    let o = skewcode(&["reduce", "--q", "5", "--n", "4", "--matrix", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["factors"][0], serde_json::json!({"kind": "lower", "a": 3, "b": 2, "N": 1, "alpha": 3}));
    assert_eq!(v["factors"][1], serde_json::json!({"kind": "upper", "a": 1, "b": 3, "N": 0, "alpha": 1}));
}

#[test]
fn error_objects_and_exit_codes() {
    let bad = scratch("bad.txt", "1, 2\n3");
    let o = skewcode(&["reduce", "--q", "5", "--n", "4", "--matrix", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let e: Value = serde_json::from_slice(&o.stderr).unwrap();
    assert!(e["error"].is_string() && e["message"].is_string());

    let o = skewcode(&["construct", "--q", "5", "--n", "3", "--indices", "1"]);
    assert_eq!(o.status.code(), Some(2));

    let o = skewcode(&["rook", "--n", "6", "--values", "0,0,1,2,2", "--strategy", "constructive"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn verify_paper_is_deterministic() {
    let a = skewcode(&["verify-paper", "--sweep-n", "6"]);
    let b = skewcode(&["verify-paper", "--sweep-n", "6"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(stdout(&a).lines().filter(|l| l.starts_with("PASS")).count(), 10);
}
