//! The machine-readable report: exact values first, decimals as annotations.
//!
//!     cargo run --example json_report

use quartic_certify::exactnum::int;
use quartic_certify::forms::from_plain_coeffs;
use quartic_certify::report::{build_report, render_text, ReportOptions};

fn main() {
    let problem = from_plain_coeffs(int(1), int(1), int(0), int(1), int(1));
    let report = build_report(&problem, &ReportOptions::default());
    println!("{}", render_text(&report));
    let value: serde_json::Value = serde_json::from_str(&report.to_json()).unwrap();
    println!("{}", serde_json::to_string_pretty(&value).unwrap());
    println!("all cross-checks agree: {}", report.agreement.all_agree());
}
