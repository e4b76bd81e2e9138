//! Batch mode: one form per line in, one JSON object per line out, then a
//! summary of verdict counts.
//!
//!     cargo run --example batch

use quartic_certify::cli::batch;
use quartic_certify::corpus::worked_examples;
use quartic_certify::report::ReportOptions;

fn main() {
    let mut text: String = worked_examples()
        .iter()
        .map(|ex| ex.coefficients.map(|c| c.to_string()).join(" ") + "\n")
        .collect();
    text.push_str("1 0 -5 0 4   # indefinite\n1 0 oops 0 1\n");
    let out = batch(
        &text,
        &ReportOptions {
            crosscheck: false,
            ..ReportOptions::default()
        },
    );
    for line in out.stdout.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        match (&v["line"], &v["verdict"], &v["error"]) {
            (n, serde_json::Value::String(verdict), _) => println!("line {n}: {verdict}"),
            (n, _, serde_json::Value::String(err)) => println!("line {n}: error {err}"),
            _ => println!("summary: {}", v["summary"]),
        }
    }
    println!("exit code {}", out.code);
}
