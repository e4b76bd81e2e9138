//! Decide one form given on the command line (default `x⁴ + xy³ + y⁴`).
//!
//!     cargo run --example decide_form -- 1 -8 26 -40 25

use quartic_certify::cli::parse_coefficients;
use quartic_certify::exactnum::render_quadext;
use quartic_certify::forms::from_plain_coeffs;
use quartic_certify::positivity::decide;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let tokens = if args.is_empty() {
        vec!["1", "0", "0", "1", "1"]
    } else {
        args.iter().map(String::as_str).collect()
    };
    let [e4, e3, e2, e1, e0] = match parse_coefficients(&tokens) {
        Ok(c) => c,
        Err(msg) => {
            eprintln!("{msg}");
            std::process::exit(64);
        }
    };
    let problem = from_plain_coeffs(e4, e3, e2, e1, e0);
    let verdict = decide(&problem);

    println!("verdict: {}", verdict.class.label());
    if let Some(trace) = &verdict.trace {
        let f = &trace.form;
        println!(
            "monic form: x^4 + ({})x^3y + ({})x^2y^2 + ({})xy^3 + ({})y^4",
            f.a3, f.a2, f.a1, f.a0
        );
        println!(
            "pencil (b0, b1, b2): ({}, {}, {})",
            trace.pencil.b0, trace.pencil.b1, trace.pencil.b2
        );
        match trace.lambda0.value() {
            Some(l) => println!("lambda0 = {l} ~ {}", render_quadext(l, 12)),
            None => println!(
                "lambda0 is not real (radicand {})",
                trace.lambda0.radicand()
            ),
        }
        if let Some(g) = &trace.g_lambda0 {
            println!("g(lambda0) = {g} ~ {}", render_quadext(g, 12));
        }
        println!("a3^2/4 = {}", trace.threshold);
    }
}
