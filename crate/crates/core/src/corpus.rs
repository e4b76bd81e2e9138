//! Fixed forms with known answers: the six worked examples and a suite
//! that reaches every one of the nine intersection configurations.

use crate::exactnum::{int, Rational};
use crate::forms::{MonicQuartic, PlainQuartic};

/// A worked example: plain coefficients `e₄ … e₀` with its known verdict label.
#[derive(Debug, Clone)]
pub struct WorkedExample {
    pub label: &'static str,
    pub coefficients: [i64; 5],
}

impl WorkedExample {
    pub fn plain(&self) -> PlainQuartic {
        let c = self.coefficients.map(int);
        PlainQuartic::from_slice(&c)
    }
}

pub fn worked_examples() -> Vec<WorkedExample> {
    vec![
        WorkedExample {
            label: "x^4 + xy^3 + y^4",
            coefficients: [1, 0, 0, 1, 1],
        },
        WorkedExample {
            label: "x^4 - 8x^3y + 26x^2y^2 - 40xy^3 + 25y^4",
            coefficients: [1, -8, 26, -40, 25],
        },
        WorkedExample {
            label: "x^4 + x^3y + xy^3 + y^4",
            coefficients: [1, 1, 0, 1, 1],
        },
        WorkedExample {
            label: "x^4 + 4x^3y + 2x^2y^2 - 4xy^3 + y^4",
            coefficients: [1, 4, 2, -4, 1],
        },
        WorkedExample {
            label: "x^4 + 4x^3y + 6x^2y^2 + 4xy^3 + y^4",
            coefficients: [1, 4, 6, 4, 1],
        },
        WorkedExample {
            label: "-x^4 + 6x^3y - 13x^2y^2 + 24xy^3 - 36y^4",
            coefficients: [-1, 6, -13, 24, -36],
        },
    ]
}

/// `(expected case id, form)` pairs covering all nine configurations.
pub fn nine_case_suite() -> Vec<(u8, MonicQuartic)> {
    vec![
        // (x² − y²)(x² − 4y²)
        (1, MonicQuartic::from_ints(0, -5, 0, 4)),
        (2, MonicQuartic::from_ints(0, 0, 1, 1)),
        // (x² − y²)(x² + 4y²)
        (3, MonicQuartic::from_ints(0, 3, 0, -4)),
        // (x − y)(x + y)(x − 2y)²
        (4, MonicQuartic::from_ints(-4, 3, 4, -4)),
        (5, MonicQuartic::from_ints(1, 0, 1, 1)),
        (6, MonicQuartic::from_ints(4, 2, -4, 1)),
        (7, MonicQuartic::from_ints(-8, 26, -40, 25)),
        // (x² + y²)²
        (7, MonicQuartic::from_ints(0, 2, 0, 1)),
        // (x − y)³(x + 3y)
        (8, MonicQuartic::from_ints(0, -6, 8, -3)),
        (9, MonicQuartic::from_ints(4, 6, 4, 1)),
    ]
}

/// Expands `Π (x − rᵢy)` for four rational roots `rᵢ`.
pub fn from_real_roots(roots: [&Rational; 4]) -> MonicQuartic {
    // Elementary symmetric polynomials with alternating signs.
    let mut c = [int(1), int(0), int(0), int(0), int(0)];
    for r in roots {
        for k in (1..5).rev() {
            c[k] = &c[k] - r * &c[k - 1];
        }
    }
    let [_, a3, a2, a1, a0] = c;
    MonicQuartic::new(a3, a2, a1, a0)
}

/// `(x² + bxy + cy²)²`, nonnegative by construction.
pub fn square_of_quadratic(b: &Rational, c: &Rational) -> MonicQuartic {
    MonicQuartic::new(int(2) * b, b * b + int(2) * c, int(2) * b * c, c * c)
}
