//! Exact arithmetic: rationals, the real quadratic field ℚ(√d), and the
//! [`Scalar`] abstraction the pencil and matrix code is generic over.
//!
//! Nothing in here touches floating point except the explicit `to_f64`
//! conversions used for advisory output.

mod decimal;
mod quadext;
mod rational;

pub use decimal::{render_quadext, render_rational};
pub use quadext::QuadExtNumber;
pub use rational::{
    checked_div, int, parse_rational, rat, rat_arith, rational_sqrt, sign_of, to_f64, ArithOp,
    Rational,
};

use std::fmt;

/// Exact sign of a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }
}

/// A field element on which all pencil quantities can be evaluated exactly.
///
/// `lift` embeds a rational into the same field as `self`, which matters for
/// [`QuadExtNumber`] where the radicand is carried by each value.
pub trait Scalar: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn lift(&self, r: &Rational) -> Self;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negated(&self) -> Self;
    fn sign(&self) -> Sign;

    fn vanishes(&self) -> bool {
        self.sign() == Sign::Zero
    }

    fn scale(&self, r: &Rational) -> Self {
        self.times(&self.lift(r))
    }
}

impl Scalar for Rational {
    fn lift(&self, r: &Rational) -> Self {
        r.clone()
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negated(&self) -> Self {
        -self
    }
    fn sign(&self) -> Sign {
        sign_of(self)
    }
}

impl Scalar for QuadExtNumber {
    fn lift(&self, r: &Rational) -> Self {
        QuadExtNumber::embed(r.clone(), self.radicand().clone())
    }
    // Values in one computation share a radicand, so a mismatch is a caller bug.
    fn plus(&self, rhs: &Self) -> Self {
        self.checked_add(rhs)
            .expect("operands from one quadratic field")
    }
    fn minus(&self, rhs: &Self) -> Self {
        self.checked_sub(rhs)
            .expect("operands from one quadratic field")
    }
    fn times(&self, rhs: &Self) -> Self {
        self.checked_mul(rhs)
            .expect("operands from one quadratic field")
    }
    fn negated(&self) -> Self {
        -self
    }
    fn sign(&self) -> Sign {
        QuadExtNumber::sign(self)
    }
}
