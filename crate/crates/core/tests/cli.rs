use std::path::Path;
use std::process::Command;

use hopfgc::bundle::Bundle;

fn hopfgc(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_hopfgc"))
        .args(args)
        .output()
        .unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn export(dir: &Path) {
    let (code, listing, _) = hopfgc(&["export-corpus", "--dir", dir.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(listing.lines().count() > 30);
}

fn file(dir: &Path, id: &str) -> String {
    dir.join(format!("{id}.json")).to_str().unwrap().to_string()
}

#[test]
fn exported_entries_verify_with_their_recorded_verdicts() {
    let dir = tempfile::tempdir().unwrap();
    export(dir.path());
    for entry in std::fs::read_dir(dir.path()).unwrap() {
        let path = entry.unwrap().path();
        let bundle = Bundle::from_json(&std::fs::read_to_string(&path).unwrap()).unwrap();
        let expect_pass = bundle
            .entries
            .values()
            .all(|e| e.expected_failures().map_or(true, |f| f.is_empty()));
        let (code, out, err) = hopfgc(&["verify", path.to_str().unwrap()]);
        assert_eq!(
            code,
            if expect_pass { 0 } else { 1 },
            "{}: {out}{err}",
            path.display()
        );
        assert!(
            !out.contains("recorded"),
            "{}: verdict differs from the recorded one\n{out}",
            path.display()
        );
    }
}

#[test]
fn json_reports_parse_and_are_stable() {
    let dir = tempfile::tempdir().unwrap();
    export(dir.path());
    let path = file(dir.path(), "mut-antipode-graded-S3");
    let (code, a, _) = hopfgc(&["verify", &path, "--report", "json"]);
    let (_, b, _) = hopfgc(&["verify", &path, "--report", "json", "--field", "gf:5"]);
    assert_eq!(code, 1);
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert!(v.is_object());
    assert!(a.contains("antipode S*id"));
    assert!(b.contains("antipode S*id"));
}

#[test]
fn dualize_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    export(dir.path());
    let path = file(dir.path(), "graded-S3-sign");
    let once = dir.path().join("once.json");
    let twice = dir.path().join("twice.json");
    let (code, _, err) = hopfgc(&[
        "dualize",
        &path,
        "--target",
        "graded-S3-sign",
        "--out",
        once.to_str().unwrap(),
    ]);
    assert_eq!(code, 0, "{err}");
    let (code, _, err) = hopfgc(&[
        "dualize",
        once.to_str().unwrap(),
        "--target",
        "graded-S3-sign",
        "--out",
        twice.to_str().unwrap(),
    ]);
    assert_eq!(code, 0, "{err}");
    let original = Bundle::from_json(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let back = Bundle::from_json(&std::fs::read_to_string(&twice).unwrap()).unwrap();
    let a = original
        .resolver(None)
        .unwrap()
        .item("graded-S3-sign")
        .unwrap();
    let b = back.resolver(None).unwrap().item("graded-S3-sign").unwrap();
    assert_eq!(format!("{a:?}"), format!("{b:?}"));
    let (code, _, _) = hopfgc(&["verify", once.to_str().unwrap()]);
    assert_eq!(code, 0);
}

#[test]
fn fthm_yd_and_lift_commands() {
    let dir = tempfile::tempdir().unwrap();
    export(dir.path());
    let (code, out, _) = hopfgc(&[
        "fthm",
        &file(dir.path(), "induced-regular-const-kC2-S3"),
        "--target",
        "induced-regular-const-kC2-S3",
    ]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("component projection injective"));
    let (code, _, _) = hopfgc(&[
        "fthm",
        &file(dir.path(), "mut-weight-free-unit-const-kC2-C2"),
        "--target",
        "mut-weight-free-unit-const-kC2-C2",
    ]);
    assert_eq!(code, 1);
    let (code, out, _) = hopfgc(&[
        "yd-check",
        &file(dir.path(), "yd-classical-kC2"),
        "--target",
        "yd-classical-kC2",
    ]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("half-braiding round trip"));
    let (code, _, _) = hopfgc(&[
        "yd-check",
        &file(dir.path(), "yd-adjoint-const-kC2-C2"),
        "--target",
        "yd-adjoint-const-kC2-C2",
    ]);
    assert_eq!(code, 1);
    let (code, out, _) = hopfgc(&[
        "yd-check",
        &file(dir.path(), "lift-S3-(12)-trivial"),
        "--target",
        "lift-S3-(12)-trivial",
    ]);
    assert_eq!(code, 0, "{out}");
    let (code, out, _) = hopfgc(&[
        "yd-check",
        &file(dir.path(), "lift-dual-S3-1-section"),
        "--target",
        "lift-dual-S3-1-section",
    ]);
    assert_eq!(code, 1);
    assert!(out.contains("refused"));
}

#[test]
fn input_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("missing.json");
    assert_eq!(hopfgc(&["verify", missing.to_str().unwrap()]).0, 2);
    let junk = dir.path().join("junk.json");
    std::fs::write(&junk, "not json").unwrap();
    assert_eq!(hopfgc(&["verify", junk.to_str().unwrap()]).0, 2);
    std::fs::write(&junk, "{}").unwrap();
    let (code, _, err) = hopfgc(&["verify", junk.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.starts_with("error:"));
    assert_eq!(hopfgc(&["verify"]).0, 2);
    assert_eq!(hopfgc(&["set-demo", "--group", "A5"]).0, 2);
    assert_eq!(hopfgc(&["set-demo", "--field", "gf:4"]).0, 2);
    export(dir.path());
    let path = file(dir.path(), "const-kC2-C2");
    assert_eq!(hopfgc(&["verify", &path, "--target", "nope"]).0, 2);
    assert_eq!(hopfgc(&["fthm", &path, "--target", "const-kC2-C2"]).0, 2);
}

#[test]
fn set_demo_passes() {
    let (code, out, _) = hopfgc(&["set-demo"]);
    assert_eq!(code, 0, "{out}");
    for g in ["C2", "C3", "C4", "S3"] {
        assert!(out.contains(g));
    }
}
