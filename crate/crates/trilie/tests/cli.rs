//! End-to-end tests of the `trilie` binary: exit codes, determinism,
//! formats.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use trilie::algebra::{adjoint_representation, semidirect_product};
use trilie::corpus;
use trilie::format;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_trilie"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

struct Workspace {
    _dir: tempfile::TempDir,
    root: PathBuf,
}

impl Workspace {
    fn new() -> Self {
        let dir = tempfile::tempdir().expect("tempdir");
        let root = dir.path().to_path_buf();
        Workspace { _dir: dir, root }
    }

    fn write(&self, name: &str, contents: &str) -> PathBuf {
        let path = self.root.join(name);
        std::fs::write(&path, contents).expect("write fixture");
        path
    }

    fn algebra(&self, name: &str, a: &trilie::algebra::ThreeLieAlgebra) -> PathBuf {
        self.write(
            name,
            &format::to_canonical_string(&format::algebra_to_json(a)),
        )
    }

    fn matrix(&self, name: &str, m: &trilie::linalg::Matrix) -> PathBuf {
        self.write(name, &format::to_canonical_string(&format::matrix_to_json(m)))
    }
}

fn path(p: &Path) -> &str {
    p.to_str().expect("utf8 path")
}

#[test]
fn reproduce_ids_and_exit_codes() {
    let out = run(&["reproduce", "5.6"]);
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    let text = stdout(&out);
    assert!(text.contains("8 nonzero rows"));
    assert!(text.contains("diff: empty"));

    let out = run(&["reproduce", "5.7", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["verdict"], "pass");
    assert_eq!(v["report"]["diff"].as_array().unwrap().len(), 0);
    assert_eq!(v["report"]["rows"].as_array().unwrap().len(), 8);

    let out = run(&["reproduce", "5.9"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn reproduce_output_is_byte_identical() {
    let a = run(&["reproduce", "5.6", "--format", "json"]);
    let b = run(&["reproduce", "5.6", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
    assert!(!a.stdout.is_empty());
}

#[test]
fn check_fi_exit_codes() {
    let ws = Workspace::new();
    let abelian = ws.write(
        "abelian3.json",
        r#"{ "dim": 3, "brackets": [] }"#,
    );
    let out = run(&["check-fi", path(&abelian)]);
    assert_eq!(out.status.code(), Some(0), "{out:?}");

    // a table violating the identity
    let bad = ws.write(
        "bad.json",
        r#"{ "dim": 4, "brackets": [
            { "in": [1,2,3], "out": { "1": "1" } },
            { "in": [1,2,4], "out": { "2": "1" } } ] }"#,
    );
    let out = run(&["check-fi", path(&bad)]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("fundamental-identity"));

    // malformed input
    let garbage = ws.write("garbage.json", "{ not json");
    let out = run(&["check-fi", path(&garbage)]);
    assert_eq!(out.status.code(), Some(2));

    let unknown_key = ws.write(
        "unknown.json",
        r#"{ "dim": 3, "brackets": [], "comment": "?" }"#,
    );
    let out = run(&["check-fi", path(&unknown_key)]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["check-fi", path(&ws.root.join("missing.json"))]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn check_rep_reads_inline_and_path_algebras() {
    let ws = Workspace::new();
    ws.algebra("g.json", &corpus::example_5_6_algebra());
    let rep = ws.write(
        "rep.json",
        r#"{ "algebra": "g.json", "rep_dim": 2, "rho": [] }"#,
    );
    let out = run(&["check-rep", path(&rep)]);
    assert_eq!(out.status.code(), Some(0), "{out:?}");

    // identity action on one pair is not a representation
    let bad = ws.write(
        "bad_rep.json",
        r#"{ "algebra": "g.json", "rep_dim": 3,
             "rho": [ { "pair": [1,2], "matrix": [["1","0","0"],["0","1","0"],["0","0","1"]] } ] }"#,
    );
    let out = run(&["check-rep", path(&bad)]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn twilled_and_decompose_on_the_semidirect_double() {
    let ws = Workspace::new();
    let a = corpus::example_5_6_algebra();
    let sd = semidirect_product(&a, &adjoint_representation(&a)).unwrap();
    let file = ws.algebra("double.json", &sd);

    let out = run(&["twilled", path(&file), "--split", "3", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["report"]["is_twilled"], true);
    assert_eq!(v["report"]["is_strict"], true);
    assert_eq!(v["report"]["cross_check_ok"], true);

    // a split where the second half is not closed
    let g7 = ws.algebra("g7.json", &corpus::example_5_7_algebra());
    let out = run(&["twilled", path(&g7), "--split", "1"]);
    assert_eq!(out.status.code(), Some(1));

    // out-of-range split is an input error
    let out = run(&["twilled", path(&file), "--split", "9"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["decompose", path(&file), "--split", "3", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(!v["report"]["mu1"].as_array().unwrap().is_empty());
    assert_eq!(v["report"]["psi"].as_array().unwrap().len(), 0);
}

#[test]
fn twist_mc_and_linf_flow() {
    let ws = Workspace::new();
    let a = corpus::example_5_6_algebra();
    let sd = semidirect_product(&a, &adjoint_representation(&a)).unwrap();
    let file = ws.algebra("double.json", &sd);
    let t = ws.matrix("t.json", &corpus::example_5_6_t());
    let id = ws.matrix("id.json", &trilie::linalg::Matrix::identity(3));

    let out = run(&["twist", path(&file), "--split", "3", "--map", path(&t), "--components"]);
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    assert!(stdout(&out).contains("= -2 e1 + e4"));

    // the twisted table round-trips back into the analyzer as an algebra
    let out = run(&["twist", path(&file), "--split", "3", "--map", path(&t), "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let twisted_algebra = ws.write(
        "twisted.json",
        &serde_json::to_string(&v["report"]["twisted_algebra"]).unwrap(),
    );
    let out = run(&["twilled", path(&twisted_algebra), "--split", "3", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["report"]["is_twilled"], true);
    assert_eq!(v["report"]["is_strict"], false);

    let out = run(&["mc", path(&file), "--split", "3", "--map", path(&t), "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["report"]["is_maurer_cartan"], true);

    let out = run(&["mc", path(&file), "--split", "3", "--map", path(&id)]);
    assert_eq!(out.status.code(), Some(1));

    let out = run(&[
        "linf",
        path(&file),
        "--split",
        "3",
        "--max-arity",
        "2",
        "--probe-seed",
        "7",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["report"]["probe_seed"], 7);
    assert!(v["report"]["tuples_checked"].as_u64().unwrap() > 0);
}

#[test]
fn oop_check_and_search() {
    let ws = Workspace::new();
    let file = ws.algebra("g.json", &corpus::example_5_6_algebra());
    let t = ws.matrix("t.json", &corpus::example_5_6_t());
    let id = ws.matrix("id.json", &trilie::linalg::Matrix::identity(3));

    let out = run(&["oop", "check", path(&file), "--map", path(&t)]);
    assert_eq!(out.status.code(), Some(0), "{out:?}");

    let out = run(&["oop", "check", path(&file), "--map", path(&id), "--format", "json"]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["verdict"], "fail");
    // first violation sits at the (1,2,3) triple
    assert_eq!(v["report"]["violations"][0]["tuple"], serde_json::json!([1, 2, 3]));

    let out = run(&[
        "oop", "search", path(&file),
        "--grid", "-1,0,1",
        "--shape", "diagonal",
        "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let found = v["report"]["found"].as_array().unwrap();
    let diag = serde_json::json!({ "rows": [["1","0","0"],["0","1","0"],["0","0","-1"]] });
    assert!(found.contains(&diag), "{found:?}");

    // budget refusal
    let out = run(&[
        "oop", "search", path(&file),
        "--grid", "-1,0,1",
        "--shape", "full",
        "--budget", "100",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn mathematical_refusals_exit_one() {
    let ws = Workspace::new();
    // not twilled: second half of the 4-dim table is not closed
    let g7 = ws.algebra("g7.json", &corpus::example_5_7_algebra());
    let t = ws.matrix("t41.json", &trilie::linalg::Matrix::zeros(1, 3));
    let out = run(&["linf", path(&g7), "--split", "1"]);
    assert_eq!(out.status.code(), Some(1), "{out:?}");
    let out = run(&["mc", path(&g7), "--split", "1", "--map", path(&t)]);
    assert_eq!(out.status.code(), Some(1));

    // twisting a table that fails the Fundamental Identity
    let bad = ws.write(
        "bad.json",
        r#"{ "dim": 4, "brackets": [
            { "in": [1,2,3], "out": { "1": "1" } },
            { "in": [1,2,4], "out": { "2": "1" } } ] }"#,
    );
    let map22 = ws.matrix("h22.json", &trilie::linalg::Matrix::zeros(2, 2));
    let out = run(&["twist", path(&bad), "--split", "2", "--map", path(&map22)]);
    assert_eq!(out.status.code(), Some(1));

    // malformed representation file is an input error
    let broken = ws.write("rep.json", r#"{ "algebra": "g7.json", "rho": [] }"#);
    let out = run(&["check-rep", path(&broken)]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn check_fi_json_is_byte_identical() {
    let ws = Workspace::new();
    let file = ws.algebra("g.json", &corpus::example_5_6_algebra());
    let a = run(&["check-fi", path(&file), "--format", "json"]);
    let b = run(&["check-fi", path(&file), "--format", "json"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn global_flags_and_usage_errors() {
    let out = run(&["--help"]);
    assert_eq!(out.status.code(), Some(0));

    let out = run(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(2));

    let ws = Workspace::new();
    let file = ws.write(
        "bad.json",
        r#"{ "dim": 4, "brackets": [
            { "in": [1,2,3], "out": { "1": "1" } },
            { "in": [1,2,4], "out": { "2": "1" } } ] }"#,
    );
    // max-failures caps the recorded violations in the output
    let out = run(&["--format", "json", "--max-failures", "2", "check-fi", path(&file)]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["report"]["violations"].as_array().unwrap().len(), 2);
    assert!(v["report"]["total_violations"].as_u64().unwrap() > 2);
}
