use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn grm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_grm"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("json output")
}

#[test]
fn affine_params() {
    let v = stdout_json(&grm(&[
        "params", "affine", "--q", "3", "--n", "2", "--d", "2",
    ]));
    assert_eq!(
        v,
        serde_json::json!({"length": 9, "dimension": 6, "w1": 3, "w2": 4})
    );
}

#[test]
fn projective_params_with_oracle() {
    let v = stdout_json(&grm(&[
        "params",
        "projective",
        "--q",
        "3",
        "--n",
        "2",
        "--d",
        "2",
        "--oracle",
    ]));
    assert_eq!(v["w2_lower"], 6);
    assert_eq!(v["w2_upper"], 9);
    assert_eq!(v["oracle"]["w2"], 9);
    assert_eq!(v["oracle"]["rank"], 6);
}

#[test]
fn out_of_range_is_a_usage_error() {
    let out = grm(&["params", "affine", "--q", "2", "--n", "2", "--d", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("out of range"));
    assert_eq!(
        grm(&["params", "affine", "--q", "6", "--n", "2", "--d", "2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(grm(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn spectrum_csv_and_worker_invariance() {
    let out = grm(&[
        "spectrum", "affine", "--q", "2", "--n", "2", "--d", "1", "--csv",
    ]);
    assert!(out.status.success());
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "weight,count\n0,1\n2,6\n4,1\n"
    );
    let a = grm(&[
        "spectrum",
        "affine",
        "--q",
        "4",
        "--n",
        "2",
        "--d",
        "2",
        "--workers",
        "1",
    ]);
    let b = grm(&[
        "spectrum",
        "affine",
        "--q",
        "4",
        "--n",
        "2",
        "--d",
        "2",
        "--workers",
        "5",
    ]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn spectrum_budget_is_enforced() {
    let out = grm(&[
        "spectrum", "affine", "--q", "3", "--n", "2", "--d", "2", "--budget", "10",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("budget"));
    let out = Command::new(env!("CARGO_BIN_EXE_grm"))
        .args(["spectrum", "affine", "--q", "3", "--n", "2", "--d", "2"])
        .env("GRM_BUDGET", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn norm_form_construction() {
    let v = stdout_json(&grm(&[
        "construct",
        "--family",
        "norm-form",
        "--q",
        "2",
        "--s",
        "2",
    ]));
    assert_eq!(v["zeros"], 1);
    assert_eq!(v["predicted_zeros"], 1);
    assert_eq!(v["poly"]["q"], 2);
    assert_eq!(v["field"]["p"], 2);
}

#[test]
fn construct_families() {
    let v = stdout_json(&grm(&[
        "construct",
        "--family",
        "arrangement",
        "--q",
        "4",
        "--blocks",
        "2,1",
    ]));
    assert_eq!(
        (v["zeros"].clone(), v["predicted_zeros"].clone()),
        (10.into(), 10.into())
    );
    let v = stdout_json(&grm(&[
        "construct",
        "--family",
        "maximal",
        "--q",
        "3",
        "--n",
        "2",
        "--d",
        "2",
    ]));
    assert_eq!(v["weight"], 3);
    let v = stdout_json(&grm(&[
        "construct",
        "--family",
        "config-s",
        "--q",
        "7",
        "--n",
        "2",
        "--d",
        "5",
    ]));
    assert_eq!(v["zeros"], 29);
    let v = stdout_json(&grm(&[
        "construct",
        "--family",
        "config-t",
        "--q",
        "7",
        "--n",
        "3",
        "--d",
        "5",
    ]));
    assert_eq!(v["zeros"], 199);
    assert_eq!(
        grm(&["construct", "--family", "config-s", "--q", "7"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn weight_of_file_and_stdin() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    write!(
        file,
        r#"{{"n":2,"q":3,"terms":[{{"e":[0,0],"c":1}},{{"e":[2,0],"c":2}}]}}"#
    )
    .unwrap();
    let v = stdout_json(&grm(&["weight-of", file.path().to_str().unwrap()]));
    assert_eq!(v, serde_json::json!({"length": 9, "zeros": 6, "weight": 3}));

    let mut child = Command::new(env!("CARGO_BIN_EXE_grm"))
        .args(["weight-of", "--projective", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(br#"{"n":3,"q":2,"d":1,"terms":[{"e":[1,0,0],"c":1}]}"#)
        .unwrap();
    let out = child.wait_with_output().unwrap();
    let v = stdout_json(&out);
    assert_eq!(v, serde_json::json!({"length": 7, "zeros": 3, "weight": 4}));
}

#[test]
fn malformed_polynomial_is_rejected() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    write!(file, r#"{{"n":2,"q":3,"terms":[{{"e":[0],"c":1}}]}}"#).unwrap();
    assert_eq!(
        grm(&["weight-of", file.path().to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
    write!(file, "not json").unwrap();
    assert_eq!(
        grm(&["weight-of", file.path().to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn verify_passing_suite() {
    let v = stdout_json(&grm(&["verify", "--suite", "min-distance", "--json"]));
    assert_eq!(v["suite"], "min-distance");
    assert_eq!(v["summary"]["fail"], 0);
}

#[test]
fn verify_flags_do_not_fail() {
    let out = grm(&["verify", "--suite", "nai", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let flagged: Vec<&Value> = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["status"] == "flagged")
        .collect();
    assert!(!flagged.is_empty());
    assert!(flagged.iter().all(|c| c["flag"] == "paper-nai-boundary-q2"));
}

#[test]
fn verify_delta_reports_flags_and_failures() {
    let out = grm(&["verify", "--suite", "delta", "--json"]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let checks = v["checks"].as_array().unwrap();
    assert!(checks
        .iter()
        .filter(|c| c["status"] == "flagged")
        .all(|c| c["flag"] == "paper-case-table-d2"));
    assert!(checks.iter().any(|c| c["status"] == "flagged"));
    let failing = v["summary"]["fail"].as_u64().unwrap();
    assert_eq!(out.status.code(), Some(if failing > 0 { 1 } else { 0 }));
}

#[test]
fn verify_custom_grid_and_csv() {
    let out = grm(&[
        "verify",
        "--suite",
        "dimension",
        "--grid",
        "3,2,2;p:2,2,3",
        "--csv",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "suite,check,variant,q,n,d,status,flag,details"
    );
    assert_eq!(lines.count(), 2);
    assert_eq!(grm(&["verify", "--suite", "nope"]).status.code(), Some(2));
    assert_eq!(
        grm(&["verify", "--suite", "dimension", "--grid", "1,2"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "--suite", "proj-min", "--json"];
    assert_eq!(grm(&args).stdout, grm(&args).stdout);
}
