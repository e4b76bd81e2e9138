//! Cross-module invariants checked against independent oracles.

mod common;

use num_bigint::{BigInt, Sign as BigSign};
use num_traits::{Signed, Zero};
use quartic_certify::classical::classical_quantities;
use quartic_certify::classifier::{classify_case, cubic_root_profile, quartic_root_nature};
use quartic_certify::exactnum::{int, render_quadext, QuadExtNumber, Rational, Sign};
use quartic_certify::forms::to_weighted;
use quartic_certify::pencil::{discriminant_g, pencil_coeffs};
use rand::Rng;

/// `⌊v · 10⁶⁴⌋`-style fixed-point estimate of `p + q√d`, accurate to within
/// a few units in the last place.
fn fixed_point(p: &Rational, q: &Rational, d: &Rational) -> BigInt {
    let scale = BigInt::from(10u32).pow(64);
    let p_fixed = (p * Rational::from(scale.clone())).floor().to_integer();
    let q2d = q * q * d * Rational::from(&scale * &scale);
    let root = q2d.floor().to_integer().sqrt();
    if q.is_negative() {
        p_fixed - root
    } else {
        p_fixed + root
    }
}

fn oracle_sign(p: &Rational, q: &Rational, d: &Rational) -> Option<Sign> {
    let v = fixed_point(p, q, d);
    if v.abs() <= BigInt::from(4) {
        return None;
    }
    Some(match v.sign() {
        BigSign::Minus => Sign::Negative,
        _ => Sign::Positive,
    })
}

#[test]
fn surd_sign_matches_fixed_point_oracle() {
    let mut rng = common::rng(11);
    let mut decided = 0;
    for _ in 0..10_000 {
        let q = common::rational(&mut rng);
        let d = Rational::from(BigInt::from(rng.gen_range(0..=1000)));
        // Half the time aim p just beside −q√d to stress cancellation.
        let p = if rng.gen_bool(0.5) {
            let approx = -q.clone() * Rational::from(d.to_integer().sqrt());
            approx + common::rational_within(&mut rng, 3)
        } else {
            common::rational(&mut rng)
        };
        let v = QuadExtNumber::new(p.clone(), q.clone(), d.clone()).unwrap();
        if let Some(want) = oracle_sign(&p, &q, &d) {
            assert_eq!(v.sign(), want, "{p} + {q}·√{d}");
            decided += 1;
        } else {
            // Inside the oracle's blind spot the value must be tiny; exact
            // zero needs an exact cancellation.
            assert!(v.to_f64().abs() < 1e-50, "{p} + {q}·√{d}");
        }
    }
    assert!(decided > 9_900);
}

#[test]
fn perfect_square_radicands_collapse() {
    let mut rng = common::rng(12);
    for _ in 0..1_000 {
        let (p, q, r) = (
            common::rational(&mut rng),
            common::rational(&mut rng),
            common::rational(&mut rng),
        );
        let v = QuadExtNumber::new(p.clone(), q.clone(), &r * &r).unwrap();
        let collapsed = &p + &q * r.abs();
        assert!(v.surd_part().is_zero());
        assert_eq!(v.as_rational(), Some(&collapsed));
    }
}

#[test]
fn negative_discriminant_iff_conjugate_pair() {
    let mut rng = common::rng(13);
    for _ in 0..2_000 {
        let m = common::mixed_form(&mut rng);
        let pencil = pencil_coeffs(&m);
        let profile = cubic_root_profile(&pencil);
        assert_eq!(
            discriminant_g(&pencil).is_negative(),
            profile.conjugate_pair,
            "{m:?}"
        );
    }
}

#[test]
fn negative_delta_iff_two_real_two_complex() {
    let mut rng = common::rng(14);
    let mut checked = 0;
    for _ in 0..2_000 {
        let m = common::mixed_form(&mut rng);
        let delta = classical_quantities(&to_weighted(&m)).delta;
        let nature = quartic_root_nature(&m);
        let distinct = nature.real_simple + 2 * nature.complex_simple_pairs == 4;
        assert_eq!(delta.is_zero(), !distinct, "{m:?}");
        if distinct {
            let case = classify_case(&m).unwrap().id();
            assert_eq!(delta.is_negative(), case == 3, "{m:?}");
            checked += 1;
        }
    }
    assert!(checked > 500);
}

#[test]
fn decimal_rendering_agrees_with_float() {
    let mut rng = common::rng(15);
    for _ in 0..2_000 {
        let v = QuadExtNumber::new(
            common::rational(&mut rng),
            common::rational(&mut rng),
            int(rng.gen_range(0..=1000)),
        )
        .unwrap();
        let text = render_quadext(&v, 12);
        let parsed: f64 = text
            .parse()
            .unwrap_or_else(|_| panic!("unparseable {text}"));
        let exact = v.to_f64();
        assert!(
            (parsed - exact).abs() <= 1e-11 * exact.abs().max(1e-300),
            "{v}: rendered {text}, float {exact}"
        );
    }
}
