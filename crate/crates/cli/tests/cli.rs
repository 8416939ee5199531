use assert_cmd::Command;
use serde_json::{json, Value};

fn slalg() -> Command {
    Command::cargo_bin("slalg").unwrap()
}

fn stdout_json(args: &[&str]) -> (Value, i32) {
    let out = slalg().args(args).output().unwrap();
    let v = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)));
    (v, out.status.code().unwrap())
}

const REFERENCE: &str = r#"{"algebra":"sedenion-like","lambda":1,"coeffs":[1,0,0,0,0,0,0,1,1,0,0,0,0,0,0,1]}"#;

#[test]
fn product_of_units() {
    let (v, code) = stdout_json(&[
        "compute",
        "product",
        "[0,1,0,0,0,0,0,0]",
        "[0,0,1,0,0,0,0,0]",
        "--algebra",
        "octonion-like",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v, json!({"algebra": "octonion-like", "lambda": 1, "coeffs": [0, 0, 0, 1, 0, 0, 0, 0]}));
}

#[test]
fn rational_coefficients_stay_exact() {
    let (v, code) =
        stdout_json(&["compute", "inverse", r#"{"algebra":"octonion-like","coeffs":[2,0,0,0,0,0,0,0]}"#]);
    assert_eq!(code, 0);
    assert_eq!(v["coeffs"][0], json!("1/2"));
}

#[test]
fn singular_inverse_exits_2() {
    let (v, code) = stdout_json(&["compute", "inverse", "[1,0,0,0,0,0,0,-1]", "--algebra", "octonion-like"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"], "singular_element");
    assert_eq!(v["seminorm"], 1);
}

#[test]
fn reference_element_split_and_norm() {
    let (v, code) = stdout_json(&["compute", "split", REFERENCE]);
    assert_eq!(code, 0);
    assert_eq!(v, json!({"real": [1, 0, 0, 0, 0, 0, 0, 1], "dual": [-1, 0, 0, 0, 0, 0, 0, 1]}));
    let (v, _) = stdout_json(&["compute", "norm", REFERENCE]);
    assert_eq!(v, json!({"norm_sq": 4}));
    let (v, _) = stdout_json(&["compute", "defect", REFERENCE]);
    assert_eq!(v["coeffs"], json!([0, 0, 0, 0, 0, 0, 0, 0]));
}

#[test]
fn operand_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s.json");
    std::fs::write(&path, REFERENCE).unwrap();
    let (v, code) = stdout_json(&["compute", "norm", &format!("@{}", path.display())]);
    assert_eq!(code, 0);
    assert_eq!(v, json!({"norm_sq": 4}));
}

#[test]
fn non_orthogonal_norm_exits_3() {
    // 1 + e04 has defect 2·u_7.
    let (v, code) =
        stdout_json(&["compute", "norm", "[1,0,0,0,0,0,0,0,1,0,0,0,0,0,0,0]", "--algebra", "sedenion-like"]);
    assert_eq!(code, 3);
    assert_eq!(v["error"], "not_orthogonal");
}

#[test]
fn input_errors_exit_4() {
    let (v, code) = stdout_json(&["compute", "product", "[1,0]", "[1,0]", "--algebra", "octonion-like"]);
    assert_eq!(code, 4);
    assert_eq!(v["error"], "input");
    let (v, code) = stdout_json(&["compute", "split", "[1,0,0,0,0,0,0,0]", "--algebra", "octonion-like"]);
    assert_eq!((code, v["error"].as_str()), (4, Some("input")));
    let (_, code) = stdout_json(&[
        "compute",
        "product",
        r#"{"algebra":"octonion-like","lambda":1,"coeffs":[1,0,0,0,0,0,0,0]}"#,
        r#"{"algebra":"octonion-like","lambda":-1,"coeffs":[1,0,0,0,0,0,0,0]}"#,
    ]);
    assert_eq!(code, 4);
    slalg().args(["table", "--lambda", "2"]).assert().code(4);
    slalg().args(["table", "--algebra", "quaternion"]).assert().code(4);
    slalg().args(["verify", "--suite", "nope"]).assert().code(4);
    slalg().arg("--help").assert().success();
}

#[test]
fn octonion_table_csv() {
    let out = slalg().args(["table", "--format", "csv"]).output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let rows: Vec<Vec<&str>> = text.lines().map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 9);
    assert!(rows.iter().all(|r| r.len() == 9));
    assert_eq!(rows[0][0], "*");
    assert_eq!(rows[2][3], "u_3");
    assert_eq!(rows[8][8], "1");
}

#[test]
fn negative_orientation_flips_imaginary_products() {
    let out = slalg().args(["table", "--lambda", "-1", "--format", "csv"]).output().unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    let rows: Vec<Vec<&str>> = text.lines().map(|l| l.split(',').collect()).collect();
    assert_eq!(rows[2][3], "-u_3");
    assert_eq!(rows[2][2], "-1");
}

#[test]
fn sedenion_table_json() {
    let (v, code) = stdout_json(&["table", "--algebra", "sedenion-like", "--format", "json"]);
    assert_eq!(code, 0);
    assert_eq!(v["basis"].as_array().unwrap().len(), 16);
    let rows = v["entries"].as_array().unwrap();
    assert_eq!(rows.len(), 16);
    assert!(rows.iter().all(|r| r.as_array().unwrap().len() == 16));
}

#[test]
fn verify_is_deterministic() {
    let args = ["verify", "--algebra", "octonion-like", "--suite", "assoc,hopf,matrix", "--format", "json"];
    let a = slalg().args(args).output().unwrap();
    let b = slalg().args(args).output().unwrap();
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["reports"].as_array().unwrap().len(), 3);
}

#[test]
fn failing_suite_exits_1() {
    slalg()
        .args(["verify", "--algebra", "sedenion-like", "--suite", "commutant", "--format", "csv"])
        .assert()
        .code(1);
}

#[test]
fn strict_table_diff_fails() {
    let args = ["verify", "--algebra", "sedenion-like", "--suite", "table-diff"];
    slalg().args(args).assert().success();
    slalg().args(args).arg("--strict").assert().code(1);
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.md");
    slalg().args(["table", "--out"]).arg(&path).assert().success().stdout("");
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.contains("| u_1 | u_1 | -1 | u_3 |"));
}
