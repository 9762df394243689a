use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn polysum(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polysum")).args(args).output().unwrap()
}

fn run(args: &[&str]) -> (i32, String) {
    let out = polysum(args);
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

fn path(name: &str) -> String {
    data(name).to_string_lossy().into_owned()
}

#[test]
fn fvector_output() {
    let (code, out) = run(&["fvector", &path("cube.json")]);
    assert_eq!(code, 0);
    assert!(out.starts_with("f = (8, 12, 6); euler: pass"), "{out}");
    assert!(out.contains("f_{0,2} = 24"));
    let (code, out) = run(&["fvector", &path("point.json")]);
    assert_eq!((code, out.lines().next().unwrap()), (0, "f = (1)"));
    let out = polysum(&["fvector", &path("malformed.json")]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
}

#[test]
fn sums_and_general_position() {
    let (code, out) = run(&["sum", &path("square.json"), &path("diamond.json"), "--check-gp"]);
    assert_eq!(code, 0);
    assert!(out.contains("f = (8, 8)") && out.contains("gp: true"), "{out}");
    let (_, out) = run(&["sum", &path("cube.json"), &path("cube.json"), "--check-gp"]);
    assert!(out.contains("gp: false"));
    let (_, out) = run(&["sum", &path("square.json"), &path("hseg.json"), "--check-gp", "--decompose"]);
    assert!(out.contains("gp: false") && out.contains("inexact"), "{out}");
    let (code, _) = run(&["sum", &path("square.json"), &path("cube.json")]);
    assert_eq!(code, 2);
}

#[test]
fn sum_writes_polytope_json() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("octagon.json");
    let (code, _) = run(&["sum", &path("square.json"), &path("diamond.json"), "--out", out.to_str().unwrap()]);
    assert_eq!(code, 0);
    let (code, text) = run(&["fvector", out.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(text.starts_with("f = (8, 8)"));
}

#[test]
fn verify_exit_codes() {
    let (code, out) = run(&["verify", "maincor2", &path("square.json"), &path("dseg.json")]);
    assert_eq!(code, 0);
    assert!(out.contains("maincor2: -1 = -1 (pass)"), "{out}");
    let (code, out) = run(&["verify", "mainthm", &path("square.json"), &path("hseg.json")]);
    assert_eq!(code, 1);
    assert!(out.contains("advisory"));
    let (code, _) = run(&["verify", "nosuch", &path("square.json")]);
    assert_eq!(code, 2);
    let (code, _) = run(&["verify", "fvthm", &path("rectangle.json")]);
    assert_eq!(code, 2);
    let (code, _) = run(&["verify", "maincor", "--a", "-7/2", &path("square.json"), &path("diamond.json")]);
    assert_eq!(code, 0);
}

#[test]
fn random_batch_is_deterministic() {
    let args = ["verify", "mainthm", "--random", "--d", "3", "--count", "20", "--seed", "7", "--json"];
    let (code, first) = run(&args);
    assert_eq!(code, 0);
    let report: serde_json::Value = serde_json::from_str(&first).unwrap();
    assert_eq!(report["passed"], 20);
    assert_eq!(run(&args).1, first);

    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.json");
    let (code, _) = run(&["verify", "delta", "--random", "--count", "3", "--seed", "1", "--out", out.to_str().unwrap()]);
    assert_eq!(code, 0);
    let saved: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(out).unwrap()).unwrap();
    assert_eq!(saved["identity"], "delta");
}

#[test]
fn polytope_and_poset_identities() {
    for id in ["euler", "bb", "dsrshort", "nestthm", "fvthm", "pc"] {
        let (code, _) = run(&["verify", id, &path("cube.json"), &path("triangle.json"), &path("square.json")]);
        assert_eq!(code, 0, "{id}");
    }
    let (code, out) = run(&["verify", "bb", &path("boolean3.json")]);
    assert_eq!(code, 0, "{out}");
    let (_, out) = run(&["verify", "nestthm", &path("chain3.json")]);
    assert!(out.contains("not Eulerian"));
    let (code, _) = run(&["verify", "fvthm", "--random"]);
    assert_eq!(code, 2);
}

#[test]
fn perturb_command() {
    let dir = tempfile::tempdir().unwrap();
    let (code, out) = run(&["perturb", &path("cube.json"), &path("cube.json"), "--seed", "1", "--out", dir.path().to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.contains("after >= before componentwise: true"), "{out}");
    assert!(dir.path().join("cube_perturbed.json").exists());

    let (_, out) = run(&["perturb", &path("square.json"), &path("square.json"), "--seed", "2", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["after"][0], 8);

    let (_, out) = run(&["perturb", &path("square.json"), &path("diamond.json")]);
    assert!(out.contains("identity rotation"));

    let out = Command::new(env!("CARGO_BIN_EXE_polysum"))
        .args(["perturb", &path("square.json"), &path("square.json")])
        .env("POLYSUM_MAX_RETRIES", "0")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn dual_rand_and_pc_check() {
    let (code, out) = run(&["dual", &path("square.json")]);
    assert_eq!(code, 0);
    assert!(out.contains("square_dual"));
    assert_eq!(run(&["dual", &path("rectangle.json")]).0, 2);
    assert_eq!(run(&["pc-check", &path("triangle.json")]).0, 0);
    assert_eq!(run(&["pc-check", &path("rectangle.json")]).0, 1);
    let (code, a) = run(&["rand", "--d", "3", "--vertices", "6", "--seed", "4"]);
    assert_eq!(code, 0);
    assert_eq!(run(&["rand", "--d", "3", "--vertices", "6", "--seed", "4"]).1, a);
    assert_eq!(run(&["rand", "--d", "7"]).0, 2);
}
