use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn gpc(args: &[&str], dir: Option<&Path>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_gpc"));
    cmd.args(args).env_remove("GPC_REPORT_DIR");
    if let Some(d) = dir {
        cmd.env("GPC_REPORT_DIR", d);
    }
    cmd.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn emit(tmp: &Path, name: &str, extra: &[&str]) -> String {
    let mut args = vec!["catalog", "emit", name];
    args.extend_from_slice(extra);
    let o = gpc(&args, None);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    let path = tmp.join(format!("{name}.json"));
    std::fs::write(&path, &o.stdout).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn example2_passes_every_suite() {
    let tmp = tempfile::tempdir().unwrap();
    let f = emit(tmp.path(), "example2", &["--t", "1/3"]);
    let o = gpc(&["check", &f], None);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("classification: strong"));
    assert!(!out.contains("FAIL"));
}

#[test]
fn failing_checks_exit_one_with_witness() {
    let tmp = tempfile::tempdir().unwrap();
    let f = emit(tmp.path(), "broken_a3", &[]);
    let o = gpc(&["check", &f, "--suite", "normality31"], None);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("FAIL 3.3"));
    assert!(out.contains("FAIL A3.3 at X2"));
}

#[test]
fn input_errors_exit_two() {
    let tmp = tempfile::tempdir().unwrap();
    let bad = tmp.path().join("bad.json");
    std::fs::write(
        &bad,
        r#"{"algebra": {"dim": 2, "brackets": [{"i": 1, "j": 3, "out": []}]}}"#,
    )
    .unwrap();
    let o = gpc(&["validate", bad.to_str().unwrap()], None);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("algebra.brackets[0]"));

    assert_eq!(
        gpc(&["catalog", "emit", "example3", "--r", "1"], None)
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        gpc(&["catalog", "emit", "example2", "--t", "x"], None)
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        gpc(&["catalog", "emit", "nope"], None).status.code(),
        Some(2)
    );
    let f = emit(tmp.path(), "example2", &[]);
    assert_eq!(
        gpc(&["check", &f, "--suite", "bogus"], None).status.code(),
        Some(2)
    );
}

#[test]
fn report_dir_and_explicit_report() {
    let tmp = tempfile::tempdir().unwrap();
    let f = emit(tmp.path(), "twisted_h3", &[]);
    let reports = tmp.path().join("reports");
    let o = gpc(
        &["check", &f, "--suite", "classical,classify"],
        Some(&reports),
    );
    assert_eq!(o.status.code(), Some(1));
    let json: Value = serde_json::from_str(
        &std::fs::read_to_string(reports.join("twisted_h3.report.json")).unwrap(),
    )
    .unwrap();
    assert_eq!(json["summary"], "fail");
    assert_eq!(json["classification"], "almost");
    let normal = json["suites"][0]["results"].as_array().unwrap();
    let n = normal.iter().find(|r| r["condition"] == "5.1.N").unwrap();
    assert_eq!(n["witness"]["input"], "(X1, X2)");
    assert_eq!(n["witness"]["lhs"], "-X3");

    gpc(
        &["check", &f, "--suite", "def1", "--report", "sub/r.json"],
        Some(&reports),
    );
    assert!(reports.join("sub/r.json").exists());
    let abs = tmp.path().join("abs.json");
    gpc(
        &[
            "check",
            &f,
            "--suite",
            "def1",
            "--report",
            abs.to_str().unwrap(),
        ],
        None,
    );
    let json: Value = serde_json::from_str(&std::fs::read_to_string(abs).unwrap()).unwrap();
    assert_eq!(json["summary"], "pass");
}

#[test]
fn witness_only_prints_failures() {
    let tmp = tempfile::tempdir().unwrap();
    let f = emit(tmp.path(), "drift_h3", &[]);
    let out = stdout(&gpc(&["check", &f, "--witness-only"], None));
    assert!(!out.contains("  ok "));
    assert!(out
        .lines()
        .filter(|l| l.contains("FAIL"))
        .all(|l| l.contains(" at ")));
    assert!(out.contains("FAIL 5.1.LEeta at X2: lhs = 1, rhs = 0"));
}

#[test]
fn output_is_deterministic() {
    let tmp = tempfile::tempdir().unwrap();
    let f = emit(tmp.path(), "h5_bialgebroid_counter", &[]);
    let a = gpc(&["check", &f], None);
    let b = gpc(&["check", &f], None);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.status.code(), Some(1));
    assert!(stdout(&a).contains("FAIL 4.2.E10"));
}

#[test]
fn lift_and_extend_round_trip() {
    let tmp = tempfile::tempdir().unwrap();
    let f = emit(tmp.path(), "para_sasakian_h3", &[]);
    let lifted = gpc(&["lift", &f], None);
    assert_eq!(lifted.status.code(), Some(0));
    let lf = tmp.path().join("lifted.json");
    std::fs::write(&lf, &lifted.stdout).unwrap();
    let o = gpc(
        &[
            "check",
            lf.to_str().unwrap(),
            "--suite",
            "normality31,normality32,classify",
        ],
        None,
    );
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("classification: strong"));

    let ext = gpc(&["extend", lf.to_str().unwrap()], None);
    assert_eq!(ext.status.code(), Some(0));
    let ef = tmp.path().join("ext.json");
    std::fs::write(&ef, &ext.stdout).unwrap();
    let o = gpc(
        &["check", ef.to_str().unwrap(), "--suite", "paracomplex"],
        None,
    );
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn catalog_list_names_every_entry() {
    let out = stdout(&gpc(&["catalog", "list"], None));
    for name in [
        "example2",
        "example3",
        "abelian_classical",
        "para_sasakian_h3",
        "twisted_h3",
        "drift_h3",
        "broken_a3",
        "h5_bialgebroid_counter",
    ] {
        assert!(out.contains(name), "{name} missing");
    }
}
