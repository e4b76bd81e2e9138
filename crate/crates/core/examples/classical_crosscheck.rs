//! The pencil criterion against the classical discriminant criterion on a
//! batch of seeded random forms.
//!
//!     cargo run --release --example classical_crosscheck

use num_bigint::BigInt;
use quartic_certify::classical::{classical_is_pd, classical_quantities, pd_condition};
use quartic_certify::exactnum::Rational;
use quartic_certify::forms::{to_weighted, MonicQuartic};
use quartic_certify::positivity::{decide_monic, VerdictClass};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn main() {
    let mut rng = StdRng::seed_from_u64(7);
    let mut r = || {
        Rational::new(
            BigInt::from(rng.gen_range(-50..=50)),
            BigInt::from(rng.gen_range(1..=10)),
        )
    };
    let (mut agree, mut pd, total) = (0, 0, 2000);
    let mut by_condition = [0usize; 4];
    for _ in 0..total {
        let m = MonicQuartic::new(r(), r(), r(), r());
        let pencil = decide_monic(&m).class == VerdictClass::PositiveDefinite;
        let weighted = to_weighted(&m);
        let classical =
            classical_is_pd(&weighted).expect("monic forms have a positive leading term");
        agree += usize::from(pencil == classical);
        pd += usize::from(pencil);
        if let Some(c) = pd_condition(&classical_quantities(&weighted)) {
            by_condition[c as usize] += 1;
        }
    }
    println!("{agree}/{total} agree; {pd} positive definite");
    println!(
        "classical condition hit counts: 1:{} 2:{} 3:{}",
        by_condition[1], by_condition[2], by_condition[3]
    );

    let q = classical_quantities(&to_weighted(&MonicQuartic::from_ints(0, 0, 1, 1)));
    println!(
        "x^4 + xy^3 + y^4: G={} H={} I={} J={} Delta={}",
        q.g, q.h, q.i, q.j, q.delta
    );
}
