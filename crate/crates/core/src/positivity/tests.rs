use super::*;
use crate::exactnum::rat;
use crate::forms::from_plain_coeffs;
use proptest::prelude::*;

fn mat(e: [i64; 6]) -> Sym3Matrix<Rational> {
    Sym3Matrix::new(
        int(e[0]),
        int(e[1]),
        int(e[2]),
        int(e[3]),
        int(e[4]),
        int(e[5]),
    )
}

fn check_witnesses(v: &Verdict, eval: impl Fn(&Rational, &Rational) -> Rational) {
    let w = v
        .witnesses
        .as_ref()
        .expect("indefinite verdicts carry witnesses");
    assert_eq!(sign_of(&eval(&w.positive.0, &w.positive.1)), Sign::Positive);
    assert_eq!(sign_of(&eval(&w.negative.0, &w.negative.1)), Sign::Negative);
}

#[test]
fn sylvester_definite() {
    assert!(sylvester_pd(&mat([1, 0, 0, 1, 0, 1])));
    assert!(!sylvester_pd(&mat([1, 2, 1, 4, 2, 1])));
    let ex1 = MonicQuartic::from_ints(0, 0, 1, 1);
    let l0 = critical_param(&pencil_coeffs(&ex1))
        .value()
        .unwrap()
        .clone();
    assert!(sylvester_pd(&pencil_matrix(&ex1, &l0)));
}

#[test]
fn sylvester_semidefinite() {
    assert!(sylvester_psd(&mat([1, 2, 1, 4, 2, 1])));
    assert!(!sylvester_psd(&mat([1, 0, 0, 0, 0, -1])));
    assert!(sylvester_psd(&mat([0, 0, 0, 0, 0, 0])));
    // Leading minors alone would accept diag(0, 0, −1).
    assert!(!sylvester_psd(&mat([0, 0, 0, 0, 0, -1])));
}

#[test]
fn monic_decisions() {
    let ex2 = decide_monic(&MonicQuartic::from_ints(-8, 26, -40, 25));
    assert_eq!(ex2.class, VerdictClass::PositiveDefinite);
    let t = ex2.trace.as_ref().unwrap();
    assert_eq!(t.lambda0.value().unwrap().as_rational(), Some(&rat(56, 3)));
    assert_eq!(t.threshold, int(16));
    assert_eq!(
        t.g_lambda0.as_ref().unwrap().as_rational(),
        Some(&rat(64, 27))
    );

    let ex3 = decide_monic(&MonicQuartic::from_ints(1, 0, 1, 1));
    assert_eq!(ex3.class, VerdictClass::PositiveSemidefinite);
    let t = ex3.trace.as_ref().unwrap();
    assert_eq!(t.lambda0.value().unwrap().as_rational(), Some(&int(1)));
    assert!(t.g_lambda0.as_ref().unwrap().vanishes());

    let m = MonicQuartic::from_ints(0, -5, 0, 4);
    let v = decide_monic(&m);
    assert_eq!(v.class, VerdictClass::Indefinite);
    assert!(v.certificate.is_none());
    check_witnesses(&v, |x, y| m.evaluate(x, y));
    // A hand-picked sample witness is valid too.
    assert_eq!(m.evaluate(&int(3), &int(2)), int(-35));
}

#[test]
fn negative_side_decisions() {
    let p = from_plain_coeffs(int(-1), int(6), int(-13), int(24), int(-36));
    let v = decide(&p);
    assert_eq!(v.class, VerdictClass::NegativeSemidefinite);
    let t = v.trace.as_ref().unwrap();
    assert_eq!(t.pencil.b0, int(0));
    assert_eq!(t.pencil.b1, rat(-169, 4));
    assert_eq!(t.pencil.b2, rat(13, 2));
    assert_eq!(t.lambda0.value().unwrap().as_rational(), Some(&int(13)));
    assert_eq!(t.threshold, int(9));
    assert_eq!(t.mirrored_coeffs_agree, Some(true));
    let cert = v.certificate.as_ref().unwrap();
    assert!(sylvester_psd(&cert.matrix));
    assert_eq!(cert.scale, int(-1));

    // −(x² + y²)²
    let p = from_plain_coeffs(int(-1), int(0), int(-2), int(0), int(-1));
    let v = decide(&p);
    assert_eq!(v.class, VerdictClass::NegativeDefinite);
    let t = v.trace.as_ref().unwrap();
    assert_eq!(t.lambda0.value().unwrap().as_rational(), Some(&rat(8, 3)));
    assert_eq!(
        t.g_lambda0.as_ref().unwrap().as_rational(),
        Some(&rat(64, 27))
    );

    let p = from_plain_coeffs(int(-1), int(0), int(0), int(0), int(1));
    let v = decide(&p);
    assert_eq!(v.class, VerdictClass::Indefinite);
    check_witnesses(&v, |x, y| p.original.evaluate(x, y));
}

#[test]
fn zero_leading_coefficient() {
    let v = decide_degenerate_leading(&int(0), &int(1), &int(0), &int(1));
    assert_eq!(v.class, VerdictClass::PositiveSemidefinite);
    let v = decide_degenerate_leading(&int(1), &int(0), &int(0), &int(0));
    assert_eq!(v.class, VerdictClass::Indefinite);
    let p = from_plain_coeffs(int(0), int(1), int(0), int(0), int(0));
    check_witnesses(&v, |x, y| p.original.evaluate(x, y));
    let v = decide_degenerate_leading(&int(0), &int(1), &int(2), &int(1));
    assert_eq!(v.class, VerdictClass::PositiveSemidefinite);
    let v = decide_degenerate_leading(&int(0), &int(-1), &int(0), &int(-3));
    assert_eq!(v.class, VerdictClass::NegativeSemidefinite);
    let v = decide_degenerate_leading(&int(0), &int(0), &int(0), &int(0));
    assert_eq!(v.class, VerdictClass::IdenticallyZero);
}

#[test]
fn zero_leading_certificates_represent_the_form() {
    for (e2, e1, e0) in [(1, 0, 1), (1, 2, 1), (-2, 1, -1), (0, 0, 5)] {
        let p = from_plain_coeffs(int(0), int(0), int(e2), int(e1), int(e0));
        let v = decide(&p);
        let cert = v.certificate.expect("semidefinite");
        assert!(sylvester_psd(&cert.matrix));
        for (x, y) in [(1, 2), (-3, 1), (2, -5)] {
            let (x, y) = (int(x), int(y));
            assert_eq!(
                cert.represented_value(&x, &y).as_rational(),
                Some(&p.original.evaluate(&x, &y))
            );
        }
    }
}

#[test]
fn zero_leading_indefinite_witnesses() {
    for c in [
        (0, 1, 3, 1),
        (0, 0, 1, 0),
        (0, 1, 0, -1),
        (2, -1, 0, 7),
        (-1, 0, 0, 0),
    ] {
        let p = from_plain_coeffs(int(0), int(c.0), int(c.1), int(c.2), int(c.3));
        let v = decide(&p);
        assert_eq!(v.class, VerdictClass::Indefinite, "{c:?}");
        check_witnesses(&v, |x, y| p.original.evaluate(x, y));
    }
}

#[test]
fn rank_one_boundary_certificate() {
    let v = decide_monic(&MonicQuartic::from_ints(4, 6, 4, 1));
    let cert = v.certificate.unwrap();
    assert!(cert.is_rank_one());
    let v = decide_monic(&MonicQuartic::from_ints(-8, 26, -40, 25));
    assert!(!v.certificate.unwrap().is_rank_one());
}

fn small_rat() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=8).prop_map(|(n, d)| rat(n, d))
}

fn monic() -> impl Strategy<Value = MonicQuartic> {
    (small_rat(), small_rat(), small_rat(), small_rat())
        .prop_map(|(a3, a2, a1, a0)| MonicQuartic::new(a3, a2, a1, a0))
}

/// Squares of quadratics and products of real linear factors land on the
/// boundary far more often than uniform coefficients do.
fn structured_monic() -> impl Strategy<Value = MonicQuartic> {
    prop_oneof![
        monic(),
        (small_rat(), small_rat()).prop_map(|(b, c)| crate::corpus::square_of_quadratic(&b, &c)),
        (small_rat(), small_rat(), small_rat(), small_rat())
            .prop_map(|(a, b, c, d)| crate::corpus::from_real_roots([&a, &b, &c, &d])),
    ]
}

proptest! {
    #[test]
    fn matrix_route_agrees(m in structured_monic()) {
        prop_assert_eq!(decide_monic(&m).class, matrix_route_class(&m));
    }

    #[test]
    fn certificates_are_sound(m in structured_monic(), pts in proptest::collection::vec((small_rat(), small_rat()), 4)) {
        let v = decide_monic(&m);
        if let Some(cert) = &v.certificate {
            prop_assert!(sylvester_psd(&cert.matrix));
            for (x, y) in &pts {
                let value = cert.represented_value(x, y);
                prop_assert_eq!(value.as_rational(), Some(&m.evaluate(x, y)));
            }
        } else {
            prop_assert_eq!(v.class, VerdictClass::Indefinite);
            let w = v.witnesses.unwrap();
            prop_assert_eq!(sign_of(&m.evaluate(&w.positive.0, &w.positive.1)), Sign::Positive);
            prop_assert_eq!(sign_of(&m.evaluate(&w.negative.0, &w.negative.1)), Sign::Negative);
        }
    }

    #[test]
    fn rank_one_boundary(b in small_rat()) {
        // (x² + bxy + (b²/4)y²)² = (x + (b/2)y)⁴ sits on λ₀ = a₃²/4.
        let c = &b * &b / int(4);
        let m = crate::corpus::square_of_quadratic(&b, &c);
        let v = decide_monic(&m);
        let t = v.trace.as_ref().unwrap();
        let l0 = t.lambda0.value().unwrap();
        prop_assert_eq!(l0.as_rational(), Some(&t.threshold));
        prop_assert!(v.certificate.as_ref().unwrap().is_rank_one());
        prop_assert_eq!(&m.a1, &((int(4) * &m.a2 * &m.a3 - &m.a3 * &m.a3 * &m.a3) / int(8)));
        let s = int(4) * &m.a2 - &m.a3 * &m.a3;
        prop_assert_eq!(&m.a0, &(&s * &s / int(64)));
    }

    #[test]
    fn negative_side_is_the_mirror(m in structured_monic()) {
        let pos = decide_monic(&m);
        let neg = decide_negative_side(&m);
        prop_assert_eq!(neg.class, pos.class.mirrored());
        prop_assert_eq!(neg.trace.unwrap().mirrored_coeffs_agree, Some(true));
    }

    #[test]
    fn positive_scaling_is_invisible(m in monic(), c in (1i64..50, 1i64..50)) {
        let c = rat(c.0, c.1);
        let p = from_plain_coeffs(c.clone(), &c * &m.a3, &c * &m.a2, &c * &m.a1, &c * &m.a0);
        let v = decide(&p);
        prop_assert_eq!(v.class, decide_monic(&m).class);
        if let Some(cert) = v.certificate {
            let (x, y) = (int(2), int(-3));
            let value = cert.represented_value(&x, &y);
            prop_assert_eq!(value.as_rational(), Some(&p.original.evaluate(&x, &y)));
        }
    }
}
