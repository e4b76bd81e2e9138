//! End-to-end behaviour of the command surface, in process and through the
//! built binary.

use std::process::Command;

use quartic_certify::cli::{batch, run};
use quartic_certify::report::ReportOptions;
use serde_json::Value;

fn cli(args: &[&str]) -> quartic_certify::cli::Outcome {
    run(std::iter::once("quartic-certify").chain(args.iter().copied()))
}

fn lines(stdout: &str) -> Vec<Value> {
    stdout
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

#[test]
fn exit_codes_follow_the_verdict() {
    assert_eq!(cli(&["1", "0", "0", "1", "1"]).code, 0);
    assert_eq!(cli(&["1", "4", "6", "4", "1"]).code, 1);
    assert_eq!(cli(&["-1", "6", "-13", "24", "-36"]).code, 1);
    assert_eq!(cli(&["1", "0", "-5", "0", "4"]).code, 2);
    assert_eq!(cli(&["-1/2", "0", "0", "0", "-3"]).code, 0);
    assert_eq!(cli(&["0", "0", "0", "0", "0"]).code, 1);
}

#[test]
fn text_output_names_the_verdict_and_case() {
    let out = cli(&["1", "-8", "26", "-40", "25"]);
    assert!(out.stdout.contains("positive-definite"), "{}", out.stdout);
    assert!(out.stdout.contains("56/3"), "{}", out.stdout);
}

#[test]
fn json_report_has_exact_fields() {
    let out = cli(&["--json", "1", "0", "0", "1", "1"]);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    for key in [
        "input",
        "verdict",
        "lambda0",
        "g_lambda0",
        "a3_sq_over_4",
        "case",
        "certificate",
        "classical",
        "oracle",
        "witnesses",
        "agreement",
    ] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["verdict"], "positive-definite");
    assert_eq!(v["lambda0"]["q"], "2/3");
    assert_eq!(v["lambda0"]["d"], "3");
    assert_eq!(v["case"]["id"], 2);
    assert_eq!(v["classical"]["pd"], true);
}

#[test]
fn case_and_crosschecks_can_be_disabled() {
    let out = cli(&[
        "--json",
        "--no-crosscheck",
        "--case",
        "false",
        "1",
        "0",
        "0",
        "1",
        "1",
    ]);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert!(v["case"].is_null() && v["classical"].is_null() && v["oracle"].is_null());
}

#[test]
fn malformed_input_points_at_the_fault() {
    let out = cli(&["1", "1.2.3", "0", "0", "1"]);
    assert_eq!(out.code, 64);
    assert!(out.stderr.contains('^'), "{}", out.stderr);
    assert_eq!(cli(&["1", "2", "3"]).code, 64);
    assert_eq!(cli(&["--precision", "x", "1", "0", "0", "0", "1"]).code, 64);
}

#[test]
fn help_exits_cleanly() {
    let out = cli(&["--help"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("--batch"));
}

#[test]
fn batch_of_worked_examples() {
    let text = "1 0 0 1 1\n1 -8 26 -40 25\n# comment\n\n1 1 0 1 1\n1 4 2 -4 1\n1 4 6 4 1\n-1 6 -13 24 -36\n";
    let out = batch(text, &ReportOptions::default());
    assert_eq!(out.code, 0);
    let rows = lines(&out.stdout);
    let verdicts: Vec<&str> = rows[..6]
        .iter()
        .map(|r| r["verdict"].as_str().unwrap())
        .collect();
    assert_eq!(
        verdicts,
        [
            "positive-definite",
            "positive-definite",
            "positive-semidefinite-not-definite",
            "positive-semidefinite-not-definite",
            "positive-semidefinite-not-definite",
            "negative-semidefinite-not-definite",
        ]
    );
    assert_eq!(rows[2]["line"], 5);
    let summary = &rows[6]["summary"];
    assert_eq!(summary["positive-definite"], 2);
    assert_eq!(summary["positive-semidefinite-not-definite"], 3);
    assert_eq!(summary["negative-semidefinite-not-definite"], 1);
    assert_eq!(summary["disagreements"], 0);
}

#[test]
fn empty_batch_reports_zero_counts() {
    let out = batch("", &ReportOptions::default());
    assert_eq!(out.code, 0);
    let rows = lines(&out.stdout);
    assert_eq!(rows.len(), 1);
    let summary = rows[0]["summary"].as_object().unwrap();
    assert!(summary.values().all(|v| v == 0));
}

#[test]
fn malformed_batch_line_is_reported_inline() {
    let out = batch("1 0 0 1 1\n1 0 zero 1 1\n", &ReportOptions::default());
    assert_eq!(out.code, 64);
    let rows = lines(&out.stdout);
    assert_eq!(rows[0]["verdict"], "positive-definite");
    assert_eq!(rows[1]["line"], 2);
    assert!(rows[1]["error"].is_string());
    assert_eq!(rows[2]["summary"]["parse_errors"], 1);
}

#[test]
fn binary_reports_through_exit_status() {
    let bin = env!("CARGO_BIN_EXE_quartic-certify");
    let out = Command::new(bin)
        .args(["1", "0", "-5", "0", "4"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stdout).contains("indefinite"));

    let missing = Command::new(bin)
        .args(["--batch", "/nonexistent/forms.txt"])
        .output()
        .unwrap();
    assert_eq!(missing.status.code(), Some(66));
}
