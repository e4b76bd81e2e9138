//! Seeded random forms shared by the integration suites.
#![allow(dead_code)]

use num_bigint::BigInt;
use quartic_certify::corpus::{from_real_roots, square_of_quadratic};
use quartic_certify::exactnum::{int, Rational};
use quartic_certify::forms::MonicQuartic;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub const BOUND: i64 = 1000;

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// Numerator in `[−1000, 1000]`, denominator in `[1, 1000]`.
pub fn rational(rng: &mut StdRng) -> Rational {
    rational_within(rng, BOUND)
}

pub fn rational_within(rng: &mut StdRng, bound: i64) -> Rational {
    let n = rng.gen_range(-bound..=bound);
    let d = rng.gen_range(1..=bound);
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Small-height rational, so repeated roots and boundary cases stay cheap.
pub fn small(rng: &mut StdRng) -> Rational {
    rational_within(rng, 12)
}

pub fn uniform_form(rng: &mut StdRng) -> MonicQuartic {
    MonicQuartic::new(rational(rng), rational(rng), rational(rng), rational(rng))
}

/// `(x − ry)²(x² + bxy + cy²)`.
fn double_root_times(r: &Rational, b: &Rational, c: &Rational) -> MonicQuartic {
    // (x² − 2rxy + r²y²)(x² + bxy + cy²)
    let (p1, p0) = (int(-2) * r, r * r);
    MonicQuartic::new(b + &p1, c + &p1 * b + &p0, &p1 * c + &p0 * b, &p0 * c)
}

/// A mixed corpus: uniform coefficients, squares of quadratics (PSD), and
/// products of real linear factors (indefinite unless roots pair up), plus
/// repeated-root constructions that reach the measure-zero configurations.
pub fn mixed_form(rng: &mut StdRng) -> MonicQuartic {
    match rng.gen_range(0..10) {
        0..=3 => uniform_form(rng),
        4 => square_of_quadratic(&rational(rng), &rational(rng)),
        5 => {
            let r: Vec<Rational> = (0..4).map(|_| rational(rng)).collect();
            from_real_roots([&r[0], &r[1], &r[2], &r[3]])
        }
        6 => {
            let (r, s, t) = (small(rng), small(rng), small(rng));
            from_real_roots([&r, &r, &s, &t])
        }
        7 => {
            let (r, s) = (small(rng), small(rng));
            if rng.gen_bool(0.5) {
                from_real_roots([&r, &r, &s, &s])
            } else {
                from_real_roots([&r, &r, &r, &s])
            }
        }
        8 => {
            let r = small(rng);
            if rng.gen_bool(0.5) {
                from_real_roots([&r, &r, &r, &r])
            } else {
                square_of_quadratic(&small(rng), &small(rng))
            }
        }
        _ => double_root_times(&small(rng), &small(rng), &small(rng)),
    }
}
