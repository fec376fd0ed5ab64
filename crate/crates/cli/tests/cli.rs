use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn hamc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hamc")).args(args).output().unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn compute_reports_class_and_value() {
    let dir = TempDir::new().unwrap();
    let spec = write(&dir, "s.json", r#"{"leaves":[3,0,1,0,3]}"#);
    let out = hamc(&["compute", "--spec", s(&spec)]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("class: DesertedSegments"), "{text}");
    assert!(text.contains("lambda: 6 "), "{text}");
    assert!(text.contains("delta: 5"), "{text}");
    assert!(text.contains("segments: P0=0 gamma=1 tau=1"), "{text}");
}

#[test]
fn compute_unsupported_exits_zero_with_marker() {
    let dir = TempDir::new().unwrap();
    let spec = write(&dir, "s.json", r#"{"leaves":[1,2,3]}"#);
    let out = hamc(&["compute", "--spec", s(&spec)]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("lambda: Unsupported"));
}

#[test]
fn malformed_inputs_exit_two() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "s.json", r#"{"leaves":[1,"#);
    assert_eq!(code(&hamc(&["compute", "--spec", s(&bad)])), 2);
    let empty = write(&dir, "e.json", r#"{"leaves":[]}"#);
    assert_eq!(code(&hamc(&["compute", "--spec", s(&empty)])), 2);
    let dup = write(&dir, "g.txt", "3 2\n0 1\n1 0\n");
    assert_eq!(code(&hamc(&["oracle", "--graph", s(&dup)])), 2);
    let lp = write(&dir, "l.txt", "3 1\n1 1\n");
    assert_eq!(code(&hamc(&["oracle", "--graph", s(&lp)])), 2);
    assert_eq!(code(&hamc(&["compute", "--spec", "/nonexistent/x.json"])), 2);
}

#[test]
fn construct_then_verify_round_trip() {
    let dir = TempDir::new().unwrap();
    let spec = write(&dir, "s.json", r#"{"leaves":[2,2]}"#);
    let plan = dir.path().join("p.json");
    let out = hamc(&["construct", "--spec", s(&spec), "--out", s(&plan)]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        fs::read_to_string(&plan).unwrap().trim(),
        r#"{"added_edges":[[2,5],[3,4]],"witness_cycle":[2,0,3,4,1,5]}"#
    );
    let out = hamc(&["verify", "--spec", s(&spec), "--plan", s(&plan)]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "VALID, 2 edges added\n");
}

#[test]
fn construct_unsupported_exits_three() {
    let dir = TempDir::new().unwrap();
    let spec = write(&dir, "s.json", r#"{"leaves":[1,2,3]}"#);
    assert_eq!(code(&hamc(&["construct", "--spec", s(&spec)])), 3);
    let tiny = write(&dir, "t.json", r#"{"leaves":[1]}"#);
    assert_eq!(code(&hamc(&["construct", "--spec", s(&tiny)])), 3);
}

#[test]
fn verify_rejects_bad_plans() {
    let dir = TempDir::new().unwrap();
    let graph = write(&dir, "g.txt", "4 3\n0 1\n1 2\n2 3\n");
    let existing = write(&dir, "a.json", r#"{"added_edges":[[0,1]],"witness_cycle":[0,1,2,3]}"#);
    assert_eq!(code(&hamc(&["verify", "--graph", s(&graph), "--plan", s(&existing)])), 5);
    let skipped = write(&dir, "b.json", r#"{"added_edges":[[0,2]],"witness_cycle":[0,1,2]}"#);
    assert_eq!(code(&hamc(&["verify", "--graph", s(&graph), "--plan", s(&skipped)])), 5);
    let ok = write(&dir, "c.json", r#"{"added_edges":[[0,3]],"witness_cycle":[0,1,2,3]}"#);
    assert_eq!(code(&hamc(&["verify", "--graph", s(&graph), "--plan", s(&ok)])), 0);
}

#[test]
fn oracle_on_graphs_and_specs() {
    let dir = TempDir::new().unwrap();
    let p6 = write(&dir, "p.txt", "6 5\n0 1\n1 2\n2 3\n3 4\n4 5\n");
    let out = hamc(&["oracle", "--graph", s(&p6)]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("minimum: 1\noptimal_edges: [[0,5]]\n"));
    let out = hamc(&["oracle", "--graph", s(&p6), "--path"]);
    assert!(stdout(&out).starts_with("minimum: 0\n"));

    let spec = write(&dir, "s.json", r#"{"leaves":[1,1,1]}"#);
    assert!(stdout(&hamc(&["oracle", "--spec", s(&spec)])).starts_with("minimum: 2\n"));
    let spec = write(&dir, "d.json", r#"{"leaves":[3,0,1,0,3]}"#);
    let serial = stdout(&hamc(&["oracle", "--spec", s(&spec)]));
    assert!(serial.starts_with("minimum: 6\n"));
    assert_eq!(stdout(&hamc(&["oracle", "--spec", s(&spec), "--parallel"])), serial);
}

#[test]
fn oracle_budget_exits_six() {
    let dir = TempDir::new().unwrap();
    let spec = write(&dir, "s.json", r#"{"leaves":[4,4]}"#);
    assert_eq!(code(&hamc(&["oracle", "--spec", s(&spec), "--budget", "3"])), 6);
}

#[test]
fn compare_writes_csv() {
    let out = hamc(&["compare", "--family", "regular1", "--n-max", "5"]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        stdout(&out),
        "spec;class;formula;oracle;construction;agree\n\
         [1,1];Regular1;1;1;1;true\n\
         [1,1,1];Regular1;2;2;2;true\n\
         [1,1,1,1];Regular1;2;2;2;true\n\
         [1,1,1,1,1];Regular1;3;3;3;true\n"
    );
    let out = hamc(&["compare", "--family", "regularK", "--k", "3", "--n-max", "2", "--no-oracle"]);
    assert_eq!(
        stdout(&out),
        "spec;class;formula;oracle;construction;agree\n\
         [3];RegularK(3);2;SKIPPED;2;true\n\
         [3,3];RegularK(3);4;SKIPPED;4;true\n"
    );
    assert_eq!(code(&hamc(&["compare", "--family", "nope"])), 2);
}

#[test]
fn gen_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let a = dir.path().join("a.json");
    let args = ["gen", "--seed", "42", "--constraint", "supported", "--n-max", "20"];
    assert_eq!(code(&hamc(&[&args[..], &["--out", s(&a)]].concat())), 0);
    let first = fs::read_to_string(&a).unwrap();
    assert_eq!(stdout(&hamc(&args)), first);
    let out = hamc(&["compute", "--spec", s(&a)]);
    assert!(!stdout(&out).contains("Unsupported"));
}

#[test]
fn gen_unsatisfiable_exits_seven() {
    let out = hamc(&["gen", "--seed", "1", "--constraint", "regularK", "--l-min", "1", "--l-max", "2"]);
    assert_eq!(code(&out), 7);
}
