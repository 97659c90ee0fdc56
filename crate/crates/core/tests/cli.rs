use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn mstab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mstab")).args(args).output().expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}

const S3A3: &str = r#"{"name": "S3A3", "p": 3,
  "group": {"generators": [[[1, 2]], [[1, 2, 3]]]},
  "subgroup": {"generators": [[[1, 2, 3]]]}}"#;

#[test]
fn relproj_of_trivial_cyclic_module_is_negative() {
    let out = mstab(&["relproj", "C3:1:p3", "J1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stdout).contains("not relatively projective"));
    let out = mstab(&["relproj", "C3:1:p3", "J3", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_of(&out)["relatively_projective"], true);
}

#[test]
fn stablehom_json() {
    let out = mstab(&["stablehom", "C3:1:p3", "J2", "J2", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["dim_stable"], 1);
    assert_eq!(v["dim_hom"], 2);
    assert_eq!(v["dim_factoring"], 1);
    assert_eq!(v["representatives"].as_array().unwrap().len(), 1);
}

#[test]
fn audit_is_clean() {
    let out = mstab(&["audit", "S3:A3:p3", "--seed", "7", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 6);
    for row in rows {
        assert_eq!(row["checked"], 200);
        assert_eq!(row["failed"], 0);
    }
}

#[test]
fn syzygy_and_cosyzygy_reports() {
    let out = mstab(&["cosyzygy", "C3:1:p3", "J1", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["dim"], 2);
    assert_eq!(v["map"].as_array().unwrap().len(), 2);
    let out = mstab(&["syzygy", "C3:1:p3", "J1", "--json"]);
    let v = json_of(&out);
    assert_eq!(v["dim"], 2);
    assert_eq!(v["map"].as_array().unwrap().len(), 3);
}

#[test]
fn stable_iso_verdicts_and_exit_codes() {
    let out = mstab(&["stable-iso", "C3:1:p3", "J1", "cosyz:J2", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_of(&out)["verdict"], "yes");
    let out = mstab(&["stable-iso", "C3:1:p3", "J1", "J2", "--json"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json_of(&out)["verdict"], "no-certified");
}

#[test]
fn triangle_and_schanuel() {
    let out = mstab(&["triangle", "S3:C2:p3", "unit:triv", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_of(&out)["failures"].as_array().unwrap().len(), 0);
    let out = mstab(&["schanuel", "C3:1:p3", "unit:J1", "unit:J1", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_of(&out)["found"], true);
}

#[test]
fn frobenius_algebra_verdicts() {
    let out = mstab(&["frobenius-algebra", "kC2:p2", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_of(&out)["frobenius"], true);
    let out = mstab(&["frobenius-algebra", "upper2:p2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn errors_exit_with_one() {
    let out = mstab(&["relproj", "Q8:1:p2", "J1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
    let out = mstab(&["stablehom", "C3:1:p3", "nosuch", "J1"]);
    assert_eq!(out.status.code(), Some(1));
    let out = mstab(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn define_loads_context_and_trivial_module() {
    let dir = tempfile::tempdir().unwrap();
    let ctx = write(dir.path(), "s3a3.json", S3A3);
    let triv = write(dir.path(), "T.json", r#"{"p": 3, "dim": 1, "action": {"0": [[1]], "1": [[1]]}}"#);
    let out = mstab(&["define", &ctx, &triv, "--json"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json_of(&out);
    assert_eq!(v["contexts"][0]["name"], "S3A3");
    assert_eq!(v["contexts"][0]["index"], 2);
    assert_eq!(v["modules"][0]["name"], "T");
    assert_eq!(v["modules"][0]["dim"], 1);
}

#[test]
fn define_rejects_non_intertwining_module() {
    let dir = tempfile::tempdir().unwrap();
    let ctx = write(dir.path(), "s3a3.json", S3A3);
    // (12) acting by a non-involution
    let bad = write(dir.path(), "bad.json", r#"{"p": 3, "dim": 1, "action": {"0": [[2]], "1": [[2]]}}"#);
    let out = mstab(&["define", &ctx, &bad]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("relation"), "{err}");

    let wrong_p = write(dir.path(), "wrong.json", r#"{"p": 5, "dim": 1, "action": {"0": [[1]], "1": [[1]]}}"#);
    let out = mstab(&["define", &ctx, &wrong_p]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn define_algebra_context_reports_form() {
    let dir = tempfile::tempdir().unwrap();
    // kC2 over GF(2) on the basis (1, g)
    let alg = write(
        dir.path(),
        "kc2.json",
        r#"{"algebra": {"p": 2, "dim": 2, "structure": [[[1, 0], [0, 1]], [[0, 1], [1, 0]]], "unit": [1, 0]}}"#,
    );
    let out = mstab(&["define", &alg, "--json"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json_of(&out);
    let form: Vec<u64> = serde_json::from_value(v["contexts"][0]["frobenius_form"].clone()).unwrap();
    // Gram matrix [[l0, l1], [l1, l0]] must be invertible mod 2
    assert_eq!((form[0] * form[0] + form[1] * form[1]) % 2, 1);
}

#[test]
fn workspace_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let ctx = write(dir.path(), "s3a3.json", S3A3);
    let mods = write(
        dir.path(),
        "mods.json",
        r#"[{"name": "T", "p": 3, "dim": 1, "action": {"0": [[1]], "1": [[1]]}},
            {"name": "S", "p": 3, "dim": 1, "action": {"0": [[2]], "1": [[1]]}},
            {"name": "f", "source": "T", "target": "T", "matrix": [[2]]}]"#,
    );
    let ws = dir.path().join("ws.json");
    let ws = ws.to_str().unwrap();
    let out = mstab(&["define", &ctx, &mods, "--out", ws]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let saved: Value = serde_json::from_str(&fs::read_to_string(ws).unwrap()).unwrap();
    assert!(saved["modules"]["S"].is_object());

    let out = mstab(&["-w", ws, "stablehom", "S3A3", "T", "S", "--json"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(json_of(&out)["dim_stable"], 0);
    let out = mstab(&["-w", ws, "relproj", "S3A3", "T"]);
    assert_eq!(out.status.code(), Some(0));
    let out = mstab(&["-w", ws, "triangle", "S3A3", "f", "--json"]);
    assert_eq!(out.status.code(), Some(0));

    // reports re-parse, and re-running gives identical bytes
    let again = mstab(&["-w", ws, "triangle", "S3A3", "f", "--json"]);
    assert_eq!(out.stdout, again.stdout);
    // module belongs to another context
    let out = mstab(&["-w", ws, "relproj", "S3:A3:p3", "T"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn out_flag_writes_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let out = mstab(&["stablehom", "C2:1:p2", "J1", "J1", "--json", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["dim_stable"], 1);
}
