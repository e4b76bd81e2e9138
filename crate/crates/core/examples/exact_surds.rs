//! Exact arithmetic in Q(√d): signs are decided without floating point.
//!
//!     cargo run --example exact_surds

use quartic_certify::exactnum::{int, rat, render_quadext, QuadExtNumber};

fn main() {
    // g(λ₀) for x⁴ + xy³ + y⁴ is (16√3 − 9)/36.
    let g = QuadExtNumber::new(rat(-1, 4), rat(4, 9), int(3)).unwrap();
    println!(
        "{g} has sign {:?} and is ~ {}",
        g.sign(),
        render_quadext(&g, 15)
    );

    // 1393 − 985√2 is about −3.6e-4: the sign survives a near-cancellation.
    let tight = QuadExtNumber::new(int(1393), int(-985), int(2)).unwrap();
    println!(
        "{tight} has sign {:?} (~ {})",
        tight.sign(),
        render_quadext(&tight, 6)
    );

    // Perfect-square radicands collapse to plain rationals.
    let collapsed = QuadExtNumber::new(int(1), rat(1, 2), int(9)).unwrap();
    println!(
        "1 + (1/2)sqrt(9) = {collapsed}, rational: {:?}",
        collapsed.as_rational().map(|r| r.to_string())
    );

    // Mixing different irrational radicands is refused rather than approximated.
    let root2 = QuadExtNumber::new(int(0), int(1), int(2)).unwrap();
    let root3 = QuadExtNumber::new(int(0), int(1), int(3)).unwrap();
    match root2.checked_add(&root3) {
        Ok(v) => println!("sum: {v}"),
        Err(e) => println!("sqrt(2) + sqrt(3): {e}"),
    }
    let one_plus = root2.checked_add(&int(1).into()).unwrap();
    println!(
        "(1 + sqrt(2))^2 = {}",
        one_plus.checked_mul(&one_plus).unwrap()
    );
}
