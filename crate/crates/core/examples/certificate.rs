//! The certificate matrix: a positive semidefinite M with f = scale · vᵀMv.
//!
//!     cargo run --example certificate

use quartic_certify::exactnum::{int, rat, Scalar};
use quartic_certify::forms::{evaluate, MonicQuartic};
use quartic_certify::positivity::{decide_monic, sylvester_psd};

fn show(name: &str, m: &MonicQuartic) {
    let verdict = decide_monic(m);
    println!("{name}: {}", verdict.class.label());
    let Some(cert) = verdict.certificate else {
        println!("  no certificate\n");
        return;
    };
    println!("{}", cert.matrix);
    println!(
        "  scale {}, psd {}, rank one {}",
        cert.scale,
        sylvester_psd(&cert.matrix),
        cert.is_rank_one()
    );
    for (x, y) in [(int(1), int(2)), (rat(-3, 5), int(1))] {
        let direct = evaluate(m, &x, &y);
        let via = cert.represented_value(&x, &y);
        println!(
            "  f({x}, {y}) = {direct}; certificate gives {via} (equal: {})",
            via.minus(&via.lift(&direct)).vanishes()
        );
    }
    println!();
}

fn main() {
    show("x^4 + xy^3 + y^4", &MonicQuartic::from_ints(0, 0, 1, 1));
    show("(x^2 + 2xy - y^2)^2", &MonicQuartic::from_ints(4, 2, -4, 1));
    show(
        "(x^2 - y^2)(x^2 - 4y^2)",
        &MonicQuartic::from_ints(0, -5, 0, 4),
    );
}
