use std::fmt;
use std::ops::Neg;

use num_traits::{Signed, Zero};

use super::rational::{rational_sqrt, sign_of, to_f64, Rational};
use super::Sign;
use crate::error::ExactError;

/// An element `p + q·√d` of the real quadratic field ℚ(√d), `d ≥ 0`.
///
/// When `d` is the square of a rational the surd part is folded into the
/// rational part on construction, so `q == 0` for every value that is
/// itself rational. Values with `q == 0` mix freely with any radicand.
#[derive(Clone, Debug)]
pub struct QuadExtNumber {
    p: Rational,
    q: Rational,
    d: Rational,
}

impl QuadExtNumber {
    pub fn new(p: Rational, q: Rational, d: Rational) -> Result<Self, ExactError> {
        if d.is_negative() {
            return Err(ExactError::NegativeRadicand(d.to_string()));
        }
        let mut v = QuadExtNumber { p, q, d };
        v.collapse();
        Ok(v)
    }

    /// The rational `p` viewed as an element of ℚ(√d).
    pub fn embed(p: Rational, d: Rational) -> Self {
        QuadExtNumber {
            p,
            q: Rational::zero(),
            d,
        }
    }

    fn collapse(&mut self) {
        if self.q.is_zero() {
            return;
        }
        if let Some(root) = rational_sqrt(&self.d) {
            self.p = &self.p + &self.q * root;
            self.q = Rational::zero();
        }
    }

    pub fn rational_part(&self) -> &Rational {
        &self.p
    }

    pub fn surd_part(&self) -> &Rational {
        &self.q
    }

    pub fn radicand(&self) -> &Rational {
        &self.d
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.q.is_zero().then_some(&self.p)
    }

    fn common_radicand(&self, rhs: &Self) -> Result<Rational, ExactError> {
        match (self.q.is_zero(), rhs.q.is_zero()) {
            (_, true) => Ok(self.d.clone()),
            (true, false) => Ok(rhs.d.clone()),
            (false, false) if self.d == rhs.d => Ok(self.d.clone()),
            _ => Err(ExactError::RadicandMismatch {
                left: self.d.to_string(),
                right: rhs.d.to_string(),
            }),
        }
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self, ExactError> {
        let d = self.common_radicand(rhs)?;
        Ok(QuadExtNumber {
            p: &self.p + &rhs.p,
            q: &self.q + &rhs.q,
            d,
        })
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self, ExactError> {
        let d = self.common_radicand(rhs)?;
        Ok(QuadExtNumber {
            p: &self.p - &rhs.p,
            q: &self.q - &rhs.q,
            d,
        })
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self, ExactError> {
        let d = self.common_radicand(rhs)?;
        // (p₁ + q₁√d)(p₂ + q₂√d) = (p₁p₂ + q₁q₂d) + (p₁q₂ + p₂q₁)√d
        let p = &self.p * &rhs.p + &self.q * &rhs.q * &d;
        let q = &self.p * &rhs.q + &rhs.p * &self.q;
        Ok(QuadExtNumber { p, q, d })
    }

    /// Exact sign of `p + q√d` without extracting the root.
    pub fn sign(&self) -> Sign {
        let sp = sign_of(&self.p);
        let sq = if self.d.is_zero() {
            Sign::Zero
        } else {
            sign_of(&self.q)
        };
        match (sp, sq) {
            (s, Sign::Zero) => s,
            (Sign::Zero, s) => s,
            (a, b) if a == b => a,
            _ => {
                // Opposite signs: the larger of p² and q²d wins.
                let p2 = &self.p * &self.p;
                let q2d = &self.q * &self.q * &self.d;
                match p2.cmp(&q2d) {
                    std::cmp::Ordering::Greater => sp,
                    std::cmp::Ordering::Less => sq,
                    std::cmp::Ordering::Equal => Sign::Zero,
                }
            }
        }
    }

    pub fn to_f64(&self) -> f64 {
        to_f64(&self.p) + to_f64(&self.q) * to_f64(&self.d).sqrt()
    }
}

impl PartialEq for QuadExtNumber {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.q == other.q && (self.q.is_zero() || self.d == other.d)
    }
}

impl Eq for QuadExtNumber {}

impl Neg for &QuadExtNumber {
    type Output = QuadExtNumber;
    fn neg(self) -> QuadExtNumber {
        QuadExtNumber {
            p: -&self.p,
            q: -&self.q,
            d: self.d.clone(),
        }
    }
}

impl Neg for QuadExtNumber {
    type Output = QuadExtNumber;
    fn neg(self) -> QuadExtNumber {
        -&self
    }
}

impl From<Rational> for QuadExtNumber {
    fn from(p: Rational) -> Self {
        QuadExtNumber::embed(p, Rational::zero())
    }
}

impl fmt::Display for QuadExtNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.q.is_zero() {
            write!(f, "{}", self.p)
        } else if self.p.is_zero() {
            write!(f, "{}*sqrt({})", self.q, self.d)
        } else if self.q.is_negative() {
            write!(f, "{} - {}*sqrt({})", self.p, -&self.q, self.d)
        } else {
            write!(f, "{} + {}*sqrt({})", self.p, self.q, self.d)
        }
    }
}
