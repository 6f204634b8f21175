use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;

fn biq(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_biq")).args(args).output().expect("run biq");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn ok(args: &[&str]) -> String {
    let (code, out, err) = biq(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    out
}

fn save(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn construct_dihedral_three() {
    let v: Value = serde_json::from_str(&ok(&["construct", "dihedral", "3"])).unwrap();
    assert_eq!(v["n"], 3);
    // x * y = 2y - x mod 3
    let want: Vec<Vec<usize>> = (0..3).map(|x| (0..3).map(|y| (2 * y + 3 - x) % 3).collect()).collect();
    assert_eq!(serde_json::from_value::<Vec<Vec<usize>>>(v["table"].clone()).unwrap(), want);
}

#[test]
fn virtual_hopf_union_count() {
    let dir = tempfile::tempdir().unwrap();
    let t2 = save(dir.path(), "t2.json", &ok(&["construct", "trivial", "2"]));
    let u = save(dir.path(), "u.json", &ok(&["construct", "unionbq", s(&t2), s(&t2), "--f", "1,0", "--g", "1,0"]));
    let vhopf = save(dir.path(), "vhopf.txt", "X + b d c a\nV c a b d\n");
    assert_eq!(ok(&["color", "--diagram", s(&vhopf), "--biquandle", s(&u)]).trim(), "8");
    assert_eq!(ok(&["color", "--diagram", "unlink2", "--structure", s(&u)]).trim(), "16");
    let v: Value =
        serde_json::from_str(&ok(&["--format", "json", "color", "--diagram", "virtual-hopf", "--biquandle", s(&u)]))
            .unwrap();
    assert_eq!((v["colorings"].as_u64(), v["components"].as_u64()), (Some(8), Some(2)));
}

#[test]
fn verbal_classify_family_six() {
    let v: Value =
        serde_json::from_str(&ok(&["--format", "json", "verbal", "classify", "--u", "y^-2 x", "--v", "y^-1 x^-1 y^1"]))
            .unwrap();
    assert_eq!(v["family"], 6);
    assert_eq!(v["birack"], true);
    assert!(ok(&["verbal", "classify", "--u", "y^-2 x", "--v", "y^-1 x^-1 y^1"]).starts_with("family 6"));
    assert_eq!(ok(&["verbal", "quandle", "--w", "y x^-1 y"]).trim(), "verbal quandle Core");
}

#[test]
fn aut_of_dihedral_quandle() {
    let dir = tempfile::tempdir().unwrap();
    let r5 = save(dir.path(), "r5.json", &ok(&["construct", "dihedral", "5"]));
    let v: Value = serde_json::from_str(&ok(&["--format", "json", "aut", s(&r5), "--elements"])).unwrap();
    assert_eq!(v["order"], 20);
    assert_eq!(v["elements"].as_array().unwrap().len(), 20);
    let hol = save(dir.path(), "hol.json", &ok(&["construct", "holomorph", s(&r5)]));
    let v: Value = serde_json::from_str(&ok(&["--format", "json", "aut", s(&hol)])).unwrap();
    assert_eq!(v["order"], 20);
}

#[test]
fn check_and_ybe_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let wada = save(dir.path(), "w.json", &ok(&["construct", "wada", "Z3"]));
    assert_eq!(ok(&["check", s(&wada)]).trim(), "biquandle: all axioms hold");
    assert_eq!(ok(&["ybe", s(&wada)]).trim(), "Yang-Baxter equation holds");
    // x * y = y fails idempotence
    let bad = save(dir.path(), "bad.json", r#"{"n":2,"table":[[0,1],[0,1]]}"#);
    let (code, out, _) = biq(&["--format", "json", "check", s(&bad)]);
    assert_eq!(code, 1);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["report"]["passed"], false);
    let ragged = save(dir.path(), "ragged.json", r#"{"n":2,"table":[[0,0],[1]]}"#);
    assert_eq!(biq(&["check", s(&ragged)]).0, 2);
    assert_eq!(biq(&["check", "/nonexistent.json"]).0, 2);
}

#[test]
fn usage_and_domain_errors() {
    assert_eq!(biq(&["frobnicate"]).0, 2);
    assert_eq!(biq(&["construct", "alexbq", "6", "2", "1"]).0, 1);
    assert_eq!(biq(&["construct", "conj", "Q8", "1"]).0, 2);
    assert_eq!(biq(&["construct", "conj", "Z70", "1"]).0, 1);
    assert!(ok(&["--cap-order", "80", "construct", "conj", "Z70", "1"]).contains("\"n\":70"));
    assert_eq!(biq(&["enumerate", "quandles", "6"]).0, 1);
    assert_eq!(biq(&["verbal", "birack", "--u", "x^", "--v", "x"]).0, 2);
}

#[test]
fn enumerate_json_lines() {
    let lines = ok(&["enumerate", "trivial-structures", "2"]);
    assert_eq!(lines.lines().count(), 2);
    for l in lines.lines() {
        let v: Value = serde_json::from_str(l).unwrap();
        assert_eq!(v["betas"].as_array().unwrap().len(), 2);
    }
    assert_eq!(ok(&["enumerate", "quandles", "3", "--classes"]).lines().count(), 3);
    assert_eq!(ok(&["--jobs", "2", "enumerate", "quandles", "4", "--classes"]).lines().count(), 7);
}

#[test]
fn iso_and_covers() {
    let dir = tempfile::tempdir().unwrap();
    let r3 = save(dir.path(), "r3.json", &ok(&["construct", "dihedral", "3"]));
    let core = save(dir.path(), "core.json", &ok(&["construct", "core", "Z3"]));
    let t2 = save(dir.path(), "t2.json", &ok(&["construct", "trivial", "2"]));
    let v: Value = serde_json::from_str(&ok(&["--format", "json", "iso", s(&r3), s(&core)])).unwrap();
    assert_eq!(v["isomorphic"], true);
    assert_eq!(ok(&["iso", s(&r3), s(&t2)]).trim(), "not isomorphic");

    // R3 x T2 → R3 by the first coordinate
    let v: Value = serde_json::from_str(&ok(&["--format", "json", "construct", "semidirect", s(&r3), s(&t2)])).unwrap();
    let under: Vec<Vec<usize>> = serde_json::from_value(v["under"].clone()).unwrap();
    let table: Vec<Vec<usize>> =
        (0..6).map(|x| (0..6).map(|y| (2 * (y / 2) + 3 - x / 2) % 3 * 2 + x % 2).collect()).collect();
    assert_eq!(under, table);
    let prod = save(dir.path(), "prod.json", &serde_json::json!({ "n": 6, "table": table }).to_string());
    assert_eq!(ok(&["cover", "check", s(&prod), s(&r3), "--map", "0,0,1,1,2,2"]).trim(), "covering");
    let (code, _, _) = biq(&["cover", "check", s(&prod), s(&r3), "--map", "0,1,2,0,1,2"]);
    assert_eq!(code, 1);

    let structure = save(
        dir.path(),
        "s.json",
        &serde_json::json!({ "base": serde_json::from_str::<Value>(&fs::read_to_string(&r3).unwrap()).unwrap(), "betas": [[0, 2, 1], [0, 2, 1], [0, 2, 1]] })
            .to_string(),
    );
    assert_eq!(ok(&["check", s(&structure)]).trim(), "structure: all axioms hold");
    let v: Value = serde_json::from_str(&ok(&[
        "--format",
        "json",
        "cover",
        "lift",
        s(&prod),
        s(&r3),
        "--map",
        "0,0,1,1,2,2",
        "--structure",
        s(&structure),
        "--normalizer",
    ]))
    .unwrap();
    assert_eq!(v["homomorphism"], true);
    assert_eq!(v["lift"]["betas"].as_array().unwrap().len(), 6);
    assert!(v["normalizer"].is_string());
}

#[test]
fn output_is_deterministic() {
    let a = ok(&["verbal", "enumerate", "--bound", "2"]);
    let b = ok(&["--jobs", "3", "verbal", "enumerate", "--bound", "2"]);
    assert_eq!(a, b);
    assert_eq!(ok(&["enumerate", "quandles", "4"]), ok(&["enumerate", "quandles", "4"]));
}
