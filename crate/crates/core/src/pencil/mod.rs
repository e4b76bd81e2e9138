//! The pencil `M(λ) = A₁ + λA₂` attached to a monic quartic, its
//! determinant cubic `g(λ)`, and the critical parameter λ₀.
//!
//! Every monic quartic satisfies `f(x, y) = vᵀ M(λ) v` with
//! `v = (x², xy, y²)` for *every* λ, because `vᵀ A₂ v = x²y² − x²y² = 0`.
//! The degenerate members of the pencil are the roots of `g`.

mod matrix;

pub use matrix::Sym3Matrix;

use num_traits::{Signed, Zero};

use crate::exactnum::{int, rat, QuadExtNumber, Rational, Scalar};
use crate::forms::MonicQuartic;

/// `g(λ) = −¼λ³ + b₂λ² + b₁λ + b₀`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PencilCubic {
    pub b0: Rational,
    pub b1: Rational,
    pub b2: Rational,
}

impl PencilCubic {
    /// Coefficients of `g`, constant term first.
    pub fn coefficients(&self) -> [Rational; 4] {
        [
            self.b0.clone(),
            self.b1.clone(),
            self.b2.clone(),
            rat(-1, 4),
        ]
    }

    /// Radicand `3b₁ + 4b₂²` of the stationary points of `g`.
    pub fn stationary_radicand(&self) -> Rational {
        int(3) * &self.b1 + int(4) * &self.b2 * &self.b2
    }

    pub fn eval<S: Scalar>(&self, lambda: &S) -> S {
        g_eval(self, lambda)
    }

    /// `g′(λ) = −¾λ² + 2b₂λ + b₁`.
    pub fn derivative_eval<S: Scalar>(&self, lambda: &S) -> S {
        let mut acc = lambda.lift(&rat(-3, 4));
        acc = acc.times(lambda).plus(&lambda.lift(&(int(2) * &self.b2)));
        acc.times(lambda).plus(&lambda.lift(&self.b1))
    }
}

pub fn pencil_coeffs(m: &MonicQuartic) -> PencilCubic {
    let (a3, a2, a1, a0) = (&m.a3, &m.a2, &m.a1, &m.a0);
    let quarter = rat(1, 4);
    PencilCubic {
        b0: (-(a1 * a1) + a1 * a2 * a3 - a0 * a3 * a3) * &quarter,
        b1: (int(4) * a0 - a2 * a2 - a1 * a3) * &quarter,
        b2: a2 / int(2),
    }
}

/// `A₁`, the pencil member at λ = 0.
pub fn base_conic(m: &MonicQuartic) -> Sym3Matrix<Rational> {
    pencil_matrix(m, &Rational::zero())
}

/// `A₂`, the conic `xz − y² = 0` carrying the points `(x², xy, y²)`.
pub fn veronese_conic() -> Sym3Matrix<Rational> {
    Sym3Matrix::new(int(0), int(0), rat(-1, 2), int(1), int(0), int(0))
}

pub fn pencil_matrix<S: Scalar>(m: &MonicQuartic, lambda: &S) -> Sym3Matrix<S> {
    let half = rat(1, 2);
    let m13 = lambda.lift(&m.a2).minus(lambda).scale(&half);
    Sym3Matrix::new(
        lambda.lift(&int(1)),
        lambda.lift(&(&m.a3 * &half)),
        m13,
        lambda.clone(),
        lambda.lift(&(&m.a1 * &half)),
        lambda.lift(&m.a0),
    )
}

/// Horner evaluation of `g` in the scalar's own field.
pub fn g_eval<S: Scalar>(p: &PencilCubic, lambda: &S) -> S {
    let mut acc = lambda.lift(&rat(-1, 4));
    acc = acc.times(lambda).plus(&lambda.lift(&p.b2));
    acc = acc.times(lambda).plus(&lambda.lift(&p.b1));
    acc.times(lambda).plus(&lambda.lift(&p.b0))
}

/// The larger stationary point of `g`, or the marker that it is not real.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CriticalParam {
    Real {
        value: QuadExtNumber,
        radicand: Rational,
    },
    NonReal {
        radicand: Rational,
    },
}

impl CriticalParam {
    pub fn radicand(&self) -> &Rational {
        match self {
            CriticalParam::Real { radicand, .. } | CriticalParam::NonReal { radicand } => radicand,
        }
    }

    pub fn value(&self) -> Option<&QuadExtNumber> {
        match self {
            CriticalParam::Real { value, .. } => Some(value),
            CriticalParam::NonReal { .. } => None,
        }
    }
}

/// λ₀ = (4b₂ + 2√d)/3 with d = 3b₁ + 4b₂².
pub fn critical_param(p: &PencilCubic) -> CriticalParam {
    let radicand = p.stationary_radicand();
    if radicand.is_negative() {
        return CriticalParam::NonReal { radicand };
    }
    let value = QuadExtNumber::new(int(4) * &p.b2 / int(3), rat(2, 3), radicand.clone())
        .expect("radicand checked nonnegative");
    CriticalParam::Real { value, radicand }
}

/// The smaller stationary point (4b₂ − 2√d)/3, when real.
pub fn lower_stationary_point(p: &PencilCubic) -> Option<QuadExtNumber> {
    let radicand = p.stationary_radicand();
    QuadExtNumber::new(int(4) * &p.b2 / int(3), rat(-2, 3), radicand).ok()
}

/// `D(g) = [16(3b₁ + 4b₂²)³ − (27b₀ + 36b₁b₂ + 32b₂³)²] / 432`.
pub fn discriminant_g(p: &PencilCubic) -> Rational {
    let d = p.stationary_radicand();
    let e = int(27) * &p.b0 + int(36) * &p.b1 * &p.b2 + int(32) * &p.b2 * &p.b2 * &p.b2;
    (int(16) * &d * &d * &d - &e * &e) / int(432)
}

/// `(g(a₃²/4), −(8a₁ − 4a₂a₃ + a₃³)²/256)`; the two always agree.
pub fn boundary_identity_check(m: &MonicQuartic) -> (Rational, Rational) {
    let g = g_eval(&pencil_coeffs(m), &m.a3_sq_over_4());
    let s = int(8) * &m.a1 - int(4) * &m.a2 * &m.a3 + &m.a3 * &m.a3 * &m.a3;
    (g, -(&s * &s) / int(256))
}
