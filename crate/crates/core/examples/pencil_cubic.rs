//! The pencil M_λ of a form, its determinant cubic g(λ), and the identities
//! tying them to the form.
//!
//!     cargo run --example pencil_cubic

use quartic_certify::exactnum::{int, rat};
use quartic_certify::forms::{evaluate, MonicQuartic};
use quartic_certify::pencil::{
    boundary_identity_check, critical_param, discriminant_g, g_eval, pencil_coeffs, pencil_matrix,
};

fn main() {
    let m = MonicQuartic::from_ints(-8, 26, -40, 25);
    let g = pencil_coeffs(&m);
    println!("g(λ) = -λ³/4 + ({})λ² + ({})λ + ({})", g.b2, g.b1, g.b0);
    println!("discriminant of g: {}", discriminant_g(&g));
    println!(
        "lambda0 = {:?}",
        critical_param(&g).value().map(|v| v.to_string())
    );

    for lambda in [int(0), rat(56, 3), int(-7)] {
        let matrix = pencil_matrix(&m, &lambda);
        println!(
            "λ = {lambda}: det M_λ = {}, g(λ) = {}",
            matrix.det(),
            g_eval(&g, &lambda)
        );
    }

    // vᵀ M_λ v reproduces f(x, y) for every λ.
    let (x, y) = (rat(3, 2), int(-1));
    let v = [&x * &x, &x * &y, &y * &y];
    let represented = pencil_matrix(&m, &int(5)).quadratic_form(&v);
    println!("f(3/2, -1) = {} = {}", evaluate(&m, &x, &y), represented);

    let (lhs, rhs) = boundary_identity_check(&m);
    println!("g(a3²/4) = {lhs}, -(8a1 - 4a2a3 + a3³)²/256 = {rhs}");
}
