//! The decision procedure: two exact sign tests at the critical parameter
//! λ₀ decide (semi)definiteness, and the pencil member `M(λ₀)` is returned
//! as a certificate.
//!
//! For a monic form with `τ = a₃²/4`:
//!
//! * PSD  ⟺  λ₀ is real, λ₀ ≥ τ and g(λ₀) ≥ 0;
//! * PD   ⟺  λ₀ is real, λ₀ > τ and g(λ₀) > 0.
//!
//! Equivalently `M(λ₀)` is itself positive (semi)definite, and then
//! `f = vᵀ M(λ₀) v` with `v = (x², xy, y²)` exhibits the sign of `f`.

use std::fmt;

use num_traits::{Signed, Zero};

use crate::classifier::{witness_search, Witnesses};
use crate::exactnum::{int, sign_of, QuadExtNumber, Rational, Scalar, Sign};
use crate::forms::{MonicQuartic, NormalizedProblem, Orientation};
use crate::pencil::{
    critical_param, g_eval, pencil_coeffs, pencil_matrix, CriticalParam, PencilCubic, Sym3Matrix,
};

/// Leading principal minors all positive.
pub fn sylvester_pd<S: Scalar>(m: &Sym3Matrix<S>) -> bool {
    m.leading_minors()
        .iter()
        .all(|x| x.sign() == Sign::Positive)
}

/// All seven principal minors nonnegative.
pub fn sylvester_psd<S: Scalar>(m: &Sym3Matrix<S>) -> bool {
    m.principal_minors()
        .iter()
        .all(|x| x.sign() != Sign::Negative)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VerdictClass {
    PositiveDefinite,
    PositiveSemidefinite,
    Indefinite,
    NegativeDefinite,
    NegativeSemidefinite,
    /// Every coefficient is zero.
    IdenticallyZero,
}

impl VerdictClass {
    pub fn label(self) -> &'static str {
        match self {
            VerdictClass::PositiveDefinite => "positive-definite",
            VerdictClass::PositiveSemidefinite => "positive-semidefinite-not-definite",
            VerdictClass::Indefinite => "indefinite",
            VerdictClass::NegativeDefinite => "negative-definite",
            VerdictClass::NegativeSemidefinite => "negative-semidefinite-not-definite",
            VerdictClass::IdenticallyZero => "identically-zero",
        }
    }

    pub fn from_label(s: &str) -> Option<Self> {
        Self::all().into_iter().find(|c| c.label() == s)
    }

    pub fn all() -> [VerdictClass; 6] {
        [
            VerdictClass::PositiveDefinite,
            VerdictClass::PositiveSemidefinite,
            VerdictClass::Indefinite,
            VerdictClass::NegativeDefinite,
            VerdictClass::NegativeSemidefinite,
            VerdictClass::IdenticallyZero,
        ]
    }

    /// The class of `−f` given the class of `f`.
    pub fn mirrored(self) -> Self {
        match self {
            VerdictClass::PositiveDefinite => VerdictClass::NegativeDefinite,
            VerdictClass::PositiveSemidefinite => VerdictClass::NegativeSemidefinite,
            VerdictClass::NegativeDefinite => VerdictClass::PositiveDefinite,
            VerdictClass::NegativeSemidefinite => VerdictClass::PositiveSemidefinite,
            other => other,
        }
    }

    pub fn is_definite(self) -> bool {
        matches!(
            self,
            VerdictClass::PositiveDefinite | VerdictClass::NegativeDefinite
        )
    }

    pub fn is_boundary(self) -> bool {
        matches!(
            self,
            VerdictClass::PositiveSemidefinite
                | VerdictClass::NegativeSemidefinite
                | VerdictClass::IdenticallyZero
        )
    }
}

impl fmt::Display for VerdictClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// `original(x, y) = scale · vᵀ matrix v` with `v = (x², xy, y²)`; the
/// matrix is always positive semidefinite, so `sign(scale)` is the sign
/// the form keeps.
#[derive(Debug, Clone, PartialEq)]
pub struct Certificate {
    pub matrix: Sym3Matrix<QuadExtNumber>,
    pub scale: Rational,
}

impl Certificate {
    /// Evaluates `scale · vᵀ M v` at a rational point.
    pub fn represented_value(&self, x: &Rational, y: &Rational) -> QuadExtNumber {
        let e = &self.matrix.m11;
        let v = [x * x, x * y, y * y].map(|c| e.lift(&c));
        self.matrix.quadratic_form(&v).scale(&self.scale)
    }

    /// `scale · M`, the matrix whose quadratic form is the original form.
    pub fn signed_matrix(&self) -> Sym3Matrix<QuadExtNumber> {
        self.matrix.scaled(&self.scale)
    }

    /// All 2×2 principal minors vanish: the matrix has rank at most one.
    pub fn is_rank_one(&self) -> bool {
        [(0, 1), (0, 2), (1, 2)]
            .iter()
            .all(|&(i, j)| self.matrix.minor2(i, j).vanishes())
            && [(0, 1, 2), (1, 0, 2), (2, 0, 1)].iter().all(|&(k, i, j)| {
                // Off-diagonal 2×2 minors: m_ki·m_kj − m_kk·m_ij
                let m = &self.matrix;
                m.entry(k, i)
                    .times(m.entry(k, j))
                    .minus(&m.entry(k, k).times(m.entry(i, j)))
                    .vanishes()
            })
    }
}

/// Intermediate values of the decision on the reduced monic form.
#[derive(Debug, Clone, PartialEq)]
pub struct DecisionTrace {
    pub form: MonicQuartic,
    pub pencil: PencilCubic,
    pub lambda0: CriticalParam,
    pub g_lambda0: Option<QuadExtNumber>,
    /// `a₃²/4` of the reduced form.
    pub threshold: Rational,
    /// For negative-leading inputs: whether the pencil coefficients computed
    /// directly from the original coefficients match the reduced ones.
    pub mirrored_coeffs_agree: Option<bool>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Verdict {
    pub class: VerdictClass,
    pub certificate: Option<Certificate>,
    pub witnesses: Option<Witnesses>,
    /// Absent for inputs with a zero leading coefficient.
    pub trace: Option<DecisionTrace>,
}

/// Decides a monic form by the two sign tests at λ₀.
pub fn decide_monic(m: &MonicQuartic) -> Verdict {
    let pencil = pencil_coeffs(m);
    let lambda0 = critical_param(&pencil);
    let threshold = m.a3_sq_over_4();
    let mut trace = DecisionTrace {
        form: m.clone(),
        pencil,
        lambda0,
        g_lambda0: None,
        threshold,
        mirrored_coeffs_agree: None,
    };
    let class = match trace.lambda0.value() {
        None => VerdictClass::Indefinite,
        Some(l0) => {
            let g = g_eval(&trace.pencil, l0);
            let above = l0.minus(&l0.lift(&trace.threshold)).sign();
            let class = match (above, g.sign()) {
                (Sign::Positive, Sign::Positive) => VerdictClass::PositiveDefinite,
                (Sign::Negative, _) | (_, Sign::Negative) => VerdictClass::Indefinite,
                _ => VerdictClass::PositiveSemidefinite,
            };
            trace.g_lambda0 = Some(g);
            class
        }
    };
    let certificate = match class {
        VerdictClass::Indefinite => None,
        _ => trace.lambda0.value().map(|l0| Certificate {
            matrix: pencil_matrix(m, l0),
            scale: int(1),
        }),
    };
    let witnesses = (class == VerdictClass::Indefinite)
        .then(|| witness_search(m).expect("indefinite forms take negative values"));
    Verdict {
        class,
        certificate,
        witnesses,
        trace: Some(trace),
    }
}

/// The matrix route: test `M(λ₀)` directly with Sylvester's criterion.
pub fn matrix_route_class(m: &MonicQuartic) -> VerdictClass {
    let Some(l0) = critical_param(&pencil_coeffs(m)).value().cloned() else {
        return VerdictClass::Indefinite;
    };
    let matrix = pencil_matrix(m, &l0);
    if sylvester_pd(&matrix) {
        VerdictClass::PositiveDefinite
    } else if sylvester_psd(&matrix) {
        VerdictClass::PositiveSemidefinite
    } else {
        VerdictClass::Indefinite
    }
}

/// Pencil coefficients written directly in the coefficients of
/// `−x⁴ + a₃x³y + a₂x²y² + a₁xy³ + a₀y⁴`.
pub fn mirrored_pencil_coeffs(
    a3: &Rational,
    a2: &Rational,
    a1: &Rational,
    a0: &Rational,
) -> PencilCubic {
    PencilCubic {
        b0: (-(a1 * a1) - a1 * a2 * a3 + a0 * a3 * a3) / int(4),
        b1: -(int(4) * a0 + a2 * a2 + a1 * a3) / int(4),
        b2: -a2 / int(2),
    }
}

/// Decides `−reduced(x, y)`, where `reduced` is the monic form obtained by
/// negating a negative-leading quartic.
pub fn decide_negative_side(reduced: &MonicQuartic) -> Verdict {
    let mut v = decide_monic(reduced);
    v.class = v.class.mirrored();
    if let Some(c) = v.certificate.as_mut() {
        c.scale = -c.scale.clone();
    }
    v.witnesses = v.witnesses.map(Witnesses::swapped);
    if let Some(t) = v.trace.as_mut() {
        let original = reduced.negated_lower();
        let direct = mirrored_pencil_coeffs(&original.a3, &original.a2, &original.a1, &original.a0);
        t.mirrored_coeffs_agree = Some(direct == t.pencil);
    }
    v
}

/// Decides `y·(e₃x³ + e₂x²y + e₁xy² + e₀y³)`, a quartic with no `x⁴` term.
pub fn decide_degenerate_leading(
    e3: &Rational,
    e2: &Rational,
    e1: &Rational,
    e0: &Rational,
) -> Verdict {
    let none = |class| Verdict {
        class,
        certificate: None,
        witnesses: None,
        trace: None,
    };
    if [e3, e2, e1, e0].iter().all(|c| c.is_zero()) {
        return none(VerdictClass::IdenticallyZero);
    }
    let f = |t: &Rational| ((e3 * t + e2) * t + e1) * t + e0;
    if e3.is_zero() {
        // f = y²·(e₂x² + e₁xy + e₀y²) = vᵀ C v with C supported on (xy, y²).
        let disc_ok = e1 * e1 <= int(4) * e2 * e0;
        let gram = |s: &Rational| {
            let q = |r: &Rational| QuadExtNumber::from(r * s);
            Sym3Matrix::new(
                q(&int(0)),
                q(&int(0)),
                q(&int(0)),
                q(e2),
                q(&(e1 / int(2))),
                q(e0),
            )
        };
        if disc_ok && !e2.is_negative() && !e0.is_negative() {
            return Verdict {
                certificate: Some(Certificate {
                    matrix: gram(&int(1)),
                    scale: int(1),
                }),
                ..none(VerdictClass::PositiveSemidefinite)
            };
        }
        if disc_ok && !e2.is_positive() && !e0.is_positive() {
            return Verdict {
                certificate: Some(Certificate {
                    matrix: gram(&int(-1)),
                    scale: int(-1),
                }),
                ..none(VerdictClass::NegativeSemidefinite)
            };
        }
    }
    // Indefinite: search y = 1 along a few exact candidates.
    let lead = [e3, e2, e1]
        .into_iter()
        .find(|c| !c.is_zero())
        .expect("nonzero coefficient");
    let bound = [e3, e2, e1, e0]
        .iter()
        .map(|c| c.abs() / lead.abs())
        .max()
        .unwrap_or_default()
        + int(1);
    let mut candidates = vec![int(0), int(1), int(-1), bound.clone(), -bound];
    if e3.is_zero() && !e2.is_zero() {
        candidates.push(-e1 / (int(2) * e2));
    }
    let pick = |want: Sign| {
        candidates
            .iter()
            .find(|t| sign_of(&f(t)) == want)
            .map(|t| (t.clone(), int(1)))
            .expect("indefinite binary form takes both signs along y = 1")
    };
    Verdict {
        witnesses: Some(Witnesses {
            positive: pick(Sign::Positive),
            negative: pick(Sign::Negative),
        }),
        ..none(VerdictClass::Indefinite)
    }
}

/// Decides a normalised problem in the scale of the original coefficients.
pub fn decide(problem: &NormalizedProblem) -> Verdict {
    let o = &problem.original;
    let Some(form) = problem.form.as_ref() else {
        return decide_degenerate_leading(&o.e3, &o.e2, &o.e1, &o.e0);
    };
    let mut v = match problem.orientation {
        Orientation::PositiveSide => decide_monic(form),
        Orientation::NegativeSide => decide_negative_side(form),
    };
    if let Some(c) = v.certificate.as_mut() {
        c.scale = problem.scale().abs() * &c.scale;
    }
    v
}

#[cfg(test)]
mod tests;
