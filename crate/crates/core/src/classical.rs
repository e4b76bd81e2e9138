//! The classical discriminant criterion for positive definiteness, kept as
//! an independent oracle. It never feeds a user-facing verdict.

use num_traits::Signed;
use thiserror::Error;

use crate::exactnum::{int, sign_of, Rational, Sign};
use crate::forms::GeneralQuartic;
use crate::pencil::Sym3Matrix;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassicalQuantities {
    pub g: Rational,
    pub h: Rational,
    pub i: Rational,
    pub j: Rational,
    pub delta: Rational,
    /// `12H² − c₀²I`.
    pub aux: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassicalError {
    #[error("leading coefficient must be positive, got {0}")]
    LeadingNotPositive(String),
}

pub fn classical_quantities(v: &GeneralQuartic) -> ClassicalQuantities {
    let (c0, c1, c2, c3, c4) = (&v.c0, &v.c1, &v.c2, &v.c3, &v.c4);
    let g = c0 * c0 * c3 - int(3) * c0 * c1 * c2 + int(2) * c1 * c1 * c1;
    let h = c0 * c2 - c1 * c1;
    let i = c0 * c4 - int(4) * c1 * c3 + int(3) * c2 * c2;
    let hankel = Sym3Matrix::new(
        c0.clone(),
        c1.clone(),
        c2.clone(),
        c2.clone(),
        c3.clone(),
        c4.clone(),
    );
    let j = hankel.det();
    let delta = &i * &i * &i - int(27) * &j * &j;
    let aux = int(12) * &h * &h - c0 * c0 * &i;
    ClassicalQuantities {
        g,
        h,
        i,
        j,
        delta,
        aux,
    }
}

/// True iff one of the three classical conditions holds:
/// (1) Δ = 0, G = 0, 12H² − c₀²I = 0, H > 0;
/// (2) Δ > 0, H ≥ 0;
/// (3) Δ > 0, H < 0, 12H² − c₀²I < 0.
pub fn classical_is_pd(v: &GeneralQuartic) -> Result<bool, ClassicalError> {
    if !v.c0.is_positive() {
        return Err(ClassicalError::LeadingNotPositive(v.c0.to_string()));
    }
    let q = classical_quantities(v);
    Ok(pd_condition(&q).is_some())
}

/// Which of the three conditions (1-based) certifies definiteness, if any.
pub fn pd_condition(q: &ClassicalQuantities) -> Option<u8> {
    use Sign::*;
    let (d, g, h, aux) = (
        sign_of(&q.delta),
        sign_of(&q.g),
        sign_of(&q.h),
        sign_of(&q.aux),
    );
    match (d, g, h, aux) {
        (Zero, Zero, Positive, Zero) => Some(1),
        (Positive, _, Zero | Positive, _) => Some(2),
        (Positive, _, Negative, Negative) => Some(3),
        _ => None,
    }
}
