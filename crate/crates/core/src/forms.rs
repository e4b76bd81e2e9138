//! Binary quartic forms and their reduction to the monic, positive-side
//! shape the decision procedure works on.

use num_traits::{One, Signed, Zero};

use crate::exactnum::{rat, sign_of, Rational, Sign};

/// `x⁴ + a₃x³y + a₂x²y² + a₁xy³ + a₀y⁴`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonicQuartic {
    pub a3: Rational,
    pub a2: Rational,
    pub a1: Rational,
    pub a0: Rational,
}

/// `c₀x⁴ + 4c₁x³y + 6c₂x²y² + 4c₃xy³ + c₄y⁴`, the binomially weighted shape
/// used by the classical invariants.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneralQuartic {
    pub c0: Rational,
    pub c1: Rational,
    pub c2: Rational,
    pub c3: Rational,
    pub c4: Rational,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    /// Original leading coefficient was positive.
    PositiveSide,
    /// Original leading coefficient was negative; the stored form is `−f/|e₄|`.
    NegativeSide,
}

/// Plain coefficients `e₄x⁴ + e₃x³y + e₂x²y² + e₁xy³ + e₀y⁴` as entered.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PlainQuartic {
    pub e4: Rational,
    pub e3: Rational,
    pub e2: Rational,
    pub e1: Rational,
    pub e0: Rational,
}

impl PlainQuartic {
    pub fn new(e4: Rational, e3: Rational, e2: Rational, e1: Rational, e0: Rational) -> Self {
        PlainQuartic { e4, e3, e2, e1, e0 }
    }

    pub fn from_slice(c: &[Rational; 5]) -> Self {
        let [e4, e3, e2, e1, e0] = c.clone();
        PlainQuartic { e4, e3, e2, e1, e0 }
    }

    pub fn coefficients(&self) -> [&Rational; 5] {
        [&self.e4, &self.e3, &self.e2, &self.e1, &self.e0]
    }

    pub fn evaluate(&self, x: &Rational, y: &Rational) -> Rational {
        horner_homogeneous(self.coefficients(), x, y)
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients().iter().all(|c| c.is_zero())
    }
}

/// Result of normalising plain coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalizedProblem {
    pub original: PlainQuartic,
    /// Monic form; `None` exactly when `degenerate_leading` is set.
    pub form: Option<MonicQuartic>,
    pub orientation: Orientation,
    pub degenerate_leading: bool,
}

impl NormalizedProblem {
    /// `original(x, y) = scale · form(x, y)`, where `scale = e₄`.
    pub fn scale(&self) -> &Rational {
        &self.original.e4
    }
}

pub fn from_plain_coeffs(
    e4: Rational,
    e3: Rational,
    e2: Rational,
    e1: Rational,
    e0: Rational,
) -> NormalizedProblem {
    let original = PlainQuartic::new(e4, e3, e2, e1, e0);
    match sign_of(&original.e4) {
        Sign::Zero => NormalizedProblem {
            original,
            form: None,
            orientation: Orientation::PositiveSide,
            degenerate_leading: true,
        },
        s => {
            // Dividing by e₄ (rather than |e₄|) negates the lower coefficients
            // exactly when the leading one is negative.
            let lead = &original.e4;
            let form = MonicQuartic {
                a3: &original.e3 / lead,
                a2: &original.e2 / lead,
                a1: &original.e1 / lead,
                a0: &original.e0 / lead,
            };
            let orientation = if s == Sign::Positive {
                Orientation::PositiveSide
            } else {
                Orientation::NegativeSide
            };
            NormalizedProblem {
                original,
                form: Some(form),
                orientation,
                degenerate_leading: false,
            }
        }
    }
}

impl MonicQuartic {
    pub fn new(a3: Rational, a2: Rational, a1: Rational, a0: Rational) -> Self {
        MonicQuartic { a3, a2, a1, a0 }
    }

    pub fn from_ints(a3: i64, a2: i64, a1: i64, a0: i64) -> Self {
        MonicQuartic::new(rat(a3, 1), rat(a2, 1), rat(a1, 1), rat(a0, 1))
    }

    /// The form with every lower coefficient negated: `x⁴ − a₃x³y − …`.
    pub fn negated_lower(&self) -> Self {
        MonicQuartic::new(-&self.a3, -&self.a2, -&self.a1, -&self.a0)
    }

    pub fn evaluate(&self, x: &Rational, y: &Rational) -> Rational {
        let one = Rational::one();
        horner_homogeneous([&one, &self.a3, &self.a2, &self.a1, &self.a0], x, y)
    }

    /// `a₃²/4`, the threshold every pencil parameter is compared against.
    pub fn a3_sq_over_4(&self) -> Rational {
        &self.a3 * &self.a3 / Rational::from_integer(4.into())
    }

    /// Coefficients of `p(t) = f(t, 1)`, constant term first.
    pub fn dehomogenized(&self) -> Vec<Rational> {
        vec![
            self.a0.clone(),
            self.a1.clone(),
            self.a2.clone(),
            self.a3.clone(),
            Rational::one(),
        ]
    }

    pub fn to_f64(&self) -> [f64; 4] {
        use crate::exactnum::to_f64;
        [
            to_f64(&self.a3),
            to_f64(&self.a2),
            to_f64(&self.a1),
            to_f64(&self.a0),
        ]
    }
}

pub fn evaluate(m: &MonicQuartic, x: &Rational, y: &Rational) -> Rational {
    m.evaluate(x, y)
}

pub fn to_weighted(m: &MonicQuartic) -> GeneralQuartic {
    GeneralQuartic {
        c0: Rational::one(),
        c1: &m.a3 / rat(4, 1),
        c2: &m.a2 / rat(6, 1),
        c3: &m.a1 / rat(4, 1),
        c4: m.a0.clone(),
    }
}

/// Inverse of [`to_weighted`] for `c₀ > 0`: divides through by `c₀`.
pub fn from_weighted(v: &GeneralQuartic) -> Option<MonicQuartic> {
    if !v.c0.is_positive() {
        return None;
    }
    Some(MonicQuartic {
        a3: &v.c1 * rat(4, 1) / &v.c0,
        a2: &v.c2 * rat(6, 1) / &v.c0,
        a1: &v.c3 * rat(4, 1) / &v.c0,
        a0: &v.c4 / &v.c0,
    })
}

/// Evaluates `Σ cᵢ x^(4−i) y^i` with a homogeneous Horner scheme.
fn horner_homogeneous(c: [&Rational; 5], x: &Rational, y: &Rational) -> Rational {
    let mut acc = c[0].clone();
    let mut ypow = Rational::one();
    for coeff in &c[1..] {
        ypow = &ypow * y;
        acc = acc * x + *coeff * &ypow;
    }
    acc
}
