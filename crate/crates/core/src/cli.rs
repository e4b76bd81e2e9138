//! Argument handling for the `quartic-certify` binary, kept in the library
//! so the whole command surface is testable without spawning processes.

use std::collections::BTreeMap;
use std::path::PathBuf;

use clap::{ArgAction, Parser};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::exactnum::{parse_rational, Rational};
use crate::forms::from_plain_coeffs;
use crate::positivity::VerdictClass;
use crate::report::{
    build_report, render_text, Report, ReportOptions, EXIT_DISAGREEMENT, EXIT_NO_INPUT, EXIT_PARSE,
};

#[derive(Debug, Parser)]
#[command(
    name = "quartic-certify",
    version,
    about = "Decide and certify the definiteness of a binary quartic form",
    long_about = "Decide and certify the definiteness of\n\n    e4 x^4 + e3 x^3 y + e2 x^2 y^2 + e1 x y^3 + e0 y^4\n\n\
                  Coefficients are finite decimals or fractions p/q.\n\
                  Exit codes: 0 definite, 1 semidefinite boundary, 2 indefinite,\n\
                  64 parse error, 70 internal cross-check disagreement."
)]
struct Args {
    /// Emit a JSON report instead of the text summary.
    #[arg(long)]
    json: bool,

    /// Process FILE with one form per line (JSON-lines output).
    #[arg(long, value_name = "FILE")]
    batch: Option<PathBuf>,

    /// Skip the classical-criterion and circle-oracle cross-checks.
    #[arg(long)]
    no_crosscheck: bool,

    /// Significant digits of decimal renderings.
    #[arg(long, value_name = "N", default_value_t = 12)]
    precision: usize,

    /// Include the nine-way intersection configuration.
    #[arg(long, value_name = "BOOL", default_value_t = true, action = ArgAction::Set)]
    case: bool,

    /// Coefficients e4 e3 e2 e1 e0.
    #[arg(allow_hyphen_values = true, value_name = "COEFF")]
    coefficients: Vec<String>,
}

/// What the process should print and return.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn error(code: i32, message: String) -> Self {
        Outcome {
            code,
            stdout: String::new(),
            stderr: message,
        }
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args = match Args::try_parse_from(args) {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome::error(code, text)
            };
        }
    };
    let options = ReportOptions {
        crosscheck: !args.no_crosscheck,
        precision: args.precision.max(1),
        include_case: args.case,
    };
    if let Some(path) = &args.batch {
        if !args.coefficients.is_empty() {
            return Outcome::error(EXIT_PARSE, "--batch takes no coefficients\n".into());
        }
        return match std::fs::read_to_string(path) {
            Ok(text) => batch(&text, &options),
            Err(e) => Outcome::error(
                EXIT_NO_INPUT,
                format!("cannot read {}: {e}\n", path.display()),
            ),
        };
    }
    let coeffs = match parse_coefficients(&args.coefficients) {
        Ok(c) => c,
        Err(msg) => return Outcome::error(EXIT_PARSE, format!("{msg}\n")),
    };
    let report = report_for(coeffs, &options);
    let stdout = if args.json {
        format!("{}\n", report.to_json())
    } else {
        render_text(&report)
    };
    let stderr = if report.agreement.all_agree() {
        String::new()
    } else {
        format!("cross-check disagreement: {:?}\n", report.agreement)
    };
    Outcome {
        code: report.exit_code(),
        stdout,
        stderr,
    }
}

fn report_for(c: [Rational; 5], options: &ReportOptions) -> Report {
    let [e4, e3, e2, e1, e0] = c;
    build_report(&from_plain_coeffs(e4, e3, e2, e1, e0), options)
}

/// Parses exactly five coefficients, pointing at the offending character.
pub fn parse_coefficients<S: AsRef<str>>(tokens: &[S]) -> Result<[Rational; 5], String> {
    if tokens.len() != 5 {
        return Err(format!(
            "expected 5 coefficients (e4 e3 e2 e1 e0), got {}",
            tokens.len()
        ));
    }
    let mut out: [Rational; 5] = Default::default();
    for (k, token) in tokens.iter().enumerate() {
        let token = token.as_ref();
        out[k] = parse_rational(token).map_err(|e| {
            format!(
                "coefficient {} '{}': {}\n  {}\n  {}^",
                k + 1,
                token,
                e,
                token,
                " ".repeat(e.position)
            )
        })?;
    }
    Ok(out)
}

/// One JSON object per input line, then a summary object. Blank lines and
/// `#` comments are skipped; malformed lines are reported inline.
pub fn batch(text: &str, options: &ReportOptions) -> Outcome {
    let lines: Vec<(usize, Vec<&str>)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| {
            (
                i + 1,
                l.split('#')
                    .next()
                    .unwrap_or("")
                    .split_whitespace()
                    .collect(),
            )
        })
        .filter(|(_, t): &(usize, Vec<&str>)| !t.is_empty())
        .collect();
    let results: Vec<(usize, Result<Report, String>)> = lines
        .par_iter()
        .map(|(n, tokens)| {
            (
                *n,
                parse_coefficients(tokens).map(|c| report_for(c, options)),
            )
        })
        .collect();

    let mut counts: BTreeMap<&'static str, usize> =
        VerdictClass::all().iter().map(|c| (c.label(), 0)).collect();
    let mut parse_errors = 0usize;
    let mut disagreements = 0usize;
    let mut stdout = String::new();
    for (line, result) in &results {
        let value = match result {
            Ok(report) => {
                if let Some(class) = report.verdict_class() {
                    *counts.entry(class.label()).or_default() += 1;
                }
                if report.exit_code() == EXIT_DISAGREEMENT {
                    disagreements += 1;
                }
                let mut v = serde_json::to_value(report).expect("report serializes");
                v["line"] = json!(line);
                v
            }
            Err(msg) => {
                parse_errors += 1;
                json!({ "line": line, "error": msg })
            }
        };
        stdout.push_str(&value.to_string());
        stdout.push('\n');
    }
    let mut summary: serde_json::Map<String, Value> = counts
        .into_iter()
        .map(|(k, v)| (k.to_string(), json!(v)))
        .collect();
    summary.insert("parse_errors".into(), json!(parse_errors));
    summary.insert("disagreements".into(), json!(disagreements));
    stdout.push_str(&json!({ "summary": summary }).to_string());
    stdout.push('\n');

    let code = if disagreements > 0 {
        EXIT_DISAGREEMENT
    } else if parse_errors > 0 {
        EXIT_PARSE
    } else {
        0
    };
    Outcome {
        code,
        stdout,
        stderr: String::new(),
    }
}
