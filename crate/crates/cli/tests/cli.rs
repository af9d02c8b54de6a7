//! End-to-end runs of the binary: exit codes, file round-trips and the
//! stable report schema.

use std::path::PathBuf;
use std::process::{Command, Output};

fn dbmw(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dbmw"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("valid json on stdout")
}

fn tmpfile(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("dbmw-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn solve_output_round_trips_through_check() {
    let dir = std::env::temp_dir().join(format!("dbmw-rt-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let params = dir.join("h.json");
    let out = dbmw(&[
        "admiss",
        "solve",
        "--r",
        "3",
        "--upto",
        "6",
        "--out",
        params.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let check = dbmw(&["admiss", "check", "--params", params.to_str().unwrap()]);
    assert_eq!(check.status.code(), Some(0));
    let doc = stdout_json(&check);
    assert_eq!(doc["verdict"], serde_json::json!(true));
}

#[test]
fn failing_verdict_exits_one_with_witness() {
    let path = tmpfile(
        "bad.json",
        r#"{"r": 2, "u": ["2", "3"], "omega": ["11", "45", "165"]}"#,
    );
    for format in ["json", "csv", "text"] {
        let out = dbmw(&[
            "admiss",
            "check",
            "--params",
            path.to_str().unwrap(),
            "--format",
            format,
        ]);
        // the exit code depends on the verdict only, never the format
        assert_eq!(out.status.code(), Some(1), "format {format}");
    }
    let out = dbmw(&["admiss", "check", "--params", path.to_str().unwrap()]);
    let doc = stdout_json(&out);
    let results = doc["results"].as_array().unwrap();
    let weak = results.iter().find(|r| r["name"] == "weak").unwrap();
    assert_eq!(weak["status"], "fail");
    assert!(weak["witness"].as_str().unwrap().contains("odd_recursion"));
}

#[test]
fn malformed_parameter_file_exits_two() {
    let path = tmpfile("broken.json", r#"{"r": 2, "u": ["2", "3"], "#);
    let out = dbmw(&["admiss", "check", "--params", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let msg = String::from_utf8_lossy(&out.stderr);
    assert!(msg.contains("line"), "position-annotated message: {msg}");

    let missing = dbmw(&["admiss", "check", "--params", "/nonexistent/p.json"]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn verify_reports_all_true() {
    let out = dbmw(&["admiss", "verify", "--r", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = stdout_json(&out);
    assert_eq!(doc["verdict"], serde_json::json!(true));
    assert_eq!(doc["results"].as_array().unwrap().len(), 5);
}

#[test]
fn qfun_emits_versioned_record() {
    let out = dbmw(&["qfun", "--r", "2", "--limit", "3", "--kind", "q"]);
    assert!(out.status.success());
    let doc = stdout_json(&out);
    assert_eq!(doc["r"], 2);
    assert_eq!(doc["limit"], 3);
    assert_eq!(doc["kind"], "q");
    assert!(doc["tool_version"].is_string());
    assert!(doc["inputs_digest"].is_string());
    let entries = doc["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 4);
    // q_1 = 2u1 + 2u2 as records in graded-lex order
    assert_eq!(
        entries[1]["poly"],
        serde_json::json!([
            {"exponents": [0, 1], "coeff": "2"},
            {"exponents": [1, 0], "coeff": "2"},
        ])
    );
}

#[test]
fn json_and_csv_row_counts_agree() {
    let json_out = dbmw(&["repn", "kappa", "--u", "2,3"]);
    let csv_out = dbmw(&["repn", "kappa", "--u", "2,3", "--format", "csv"]);
    let doc = stdout_json(&json_out);
    let json_rows = doc["results"].as_array().unwrap().len();
    let csv_text = String::from_utf8(csv_out.stdout).unwrap();
    let csv_rows = csv_text.lines().count() - 1; // minus header
    assert_eq!(json_rows, csv_rows);
}

#[test]
fn kappa_values_and_exit_codes() {
    let out = dbmw(&["repn", "kappa", "--u", "2,3"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = stdout_json(&out);
    assert_eq!(doc["results"][0]["value"], "-15");
    assert_eq!(doc["results"][1]["value"], "25");

    // singular input is an input error
    let out = dbmw(&["repn", "kappa", "--u", "2,2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn reduce_emits_expected_expansion() {
    let params = tmpfile("eta23.json", r#"{"r": 2, "u": ["2", "3"], "omega": "eta"}"#);
    let out = dbmw(&[
        "bmw2",
        "reduce",
        "--r",
        "2",
        "--word",
        "s x1 e",
        "--params",
        params.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let doc = stdout_json(&out);
    let expansion = doc["results"][0]["expansion"].as_array().unwrap();
    assert_eq!(expansion.len(), 2);
    assert_eq!(expansion[0]["word"], "e");
    assert_eq!(expansion[0]["coeff"], "9");
    assert_eq!(expansion[1]["word"], "x1 e");
    assert_eq!(expansion[1]["coeff"], "-1");

    let bad_word = dbmw(&["bmw2", "reduce", "--r", "2", "--word", "s q"]);
    assert_eq!(bad_word.status.code(), Some(2));
}

#[test]
fn build_certify_fails_on_bad_parameters() {
    let params = tmpfile(
        "bad-build.json",
        r#"{"r": 2, "u": ["2", "3"], "omega": ["11", "45", "165"]}"#,
    );
    let out = dbmw(&[
        "bmw2",
        "build",
        "--r",
        "2",
        "--params",
        params.to_str().unwrap(),
        "--certify",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let doc = stdout_json(&out);
    let failed: Vec<&serde_json::Value> = doc["results"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|r| r["status"] == "fail")
        .collect();
    assert!(!failed.is_empty());
    assert!(failed.iter().all(|r| r["witness"].is_string()));
}

#[test]
fn repn_verify_symbolic_passes() {
    let out = dbmw(&["repn", "verify", "--r", "2", "--symbolic"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = stdout_json(&out);
    assert_eq!(doc["verdict"], serde_json::json!(true));
    // rows are {relation, status, witness?}
    let rows = doc["results"].as_array().unwrap();
    assert!(rows.iter().all(|r| r["relation"].is_string()));
    assert!(rows.iter().all(|r| r["status"] == "pass"));
}

#[test]
fn mismatched_r_is_an_input_error() {
    let params = tmpfile("r2.json", r#"{"r": 2, "u": ["2", "3"], "omega": "eta"}"#);
    let out = dbmw(&[
        "repn",
        "verify",
        "--r",
        "3",
        "--params",
        params.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
}
