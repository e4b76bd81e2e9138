//! Negative (semi)definiteness: forms with a negative leading coefficient
//! are decided through their mirrored pencil coefficients.
//!
//!     cargo run --example negative_side

use quartic_certify::exactnum::int;
use quartic_certify::forms::from_plain_coeffs;
use quartic_certify::positivity::{decide, mirrored_pencil_coeffs};

fn main() {
    // −x⁴ + 6x³y − 13x²y² + 24xy³ − 36y⁴, negative semidefinite.
    let coeffs = [-1, 6, -13, 24, -36].map(int);
    let [e4, e3, e2, e1, e0] = coeffs.clone();
    let mirrored = mirrored_pencil_coeffs(&coeffs[1], &coeffs[2], &coeffs[3], &coeffs[4]);
    println!(
        "mirrored (b0, b1, b2) = ({}, {}, {})",
        mirrored.b0, mirrored.b1, mirrored.b2
    );

    let verdict = decide(&from_plain_coeffs(e4, e3, e2, e1, e0));
    println!("verdict: {}", verdict.class.label());
    let trace = verdict.trace.expect("leading coefficient is nonzero");
    println!(
        "lambda0 = {:?}, g(lambda0) = {:?}",
        trace.lambda0.value().map(|v| v.to_string()),
        trace.g_lambda0.map(|v| v.to_string())
    );
    println!(
        "mirrored coefficients match the reduced form: {:?}",
        trace.mirrored_coeffs_agree
    );
    if let Some(cert) = verdict.certificate {
        println!(
            "certificate scale {} (form = scale · vᵀMv with M ⪰ 0)",
            cert.scale
        );
    }
}
