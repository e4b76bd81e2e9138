//! Numeric sanity oracle on the unit circle, and exact sign witnesses for
//! indefinite forms.
//!
//! `circle_min_estimate` works in `f64` and is advisory only; nothing in the
//! decision path reads it. Witnesses are always confirmed by exact evaluation.

use num_traits::{One, Zero};
use thiserror::Error;

use super::poly::Poly;
use crate::exactnum::{int, sign_of, Rational, Sign};
use crate::forms::MonicQuartic;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CircleMin {
    pub min: f64,
    /// Angle in `[0, π)` at which the minimum was found.
    pub theta: f64,
    pub samples: usize,
}

fn eval_f64(a: &[f64; 4], theta: f64) -> f64 {
    let (y, x) = theta.sin_cos();
    let [a3, a2, a1, a0] = *a;
    (((x + a3 * y) * x + a2 * y * y) * x + a1 * y * y * y) * x + a0 * y * y * y * y
}

/// Minimum of `f(cos θ, sin θ)` over `n` uniform samples of the half circle
/// (the form is even), with every discrete local minimum refined by golden
/// section search over its two neighbouring sample cells.
pub fn circle_min_estimate(m: &MonicQuartic, n: usize) -> CircleMin {
    let n = n.max(8);
    let a = m.to_f64();
    let step = std::f64::consts::PI / n as f64;
    let values: Vec<f64> = (0..n).map(|k| eval_f64(&a, k as f64 * step)).collect();
    let mut best = CircleMin {
        min: f64::INFINITY,
        theta: 0.0,
        samples: n,
    };
    for k in 0..n {
        let prev = values[(k + n - 1) % n];
        let next = values[(k + 1) % n];
        if values[k] > prev || values[k] > next {
            continue;
        }
        let (theta, min) = golden_section(&a, (k as f64 - 1.0) * step, (k as f64 + 1.0) * step);
        let (theta, min) = if values[k] < min {
            (k as f64 * step, values[k])
        } else {
            (theta, min)
        };
        if min < best.min {
            best.min = min;
            best.theta = theta.rem_euclid(std::f64::consts::PI);
        }
    }
    best
}

fn golden_section(a: &[f64; 4], mut lo: f64, mut hi: f64) -> (f64, f64) {
    let ratio = (5f64.sqrt() - 1.0) / 2.0;
    let mut x1 = hi - ratio * (hi - lo);
    let mut x2 = lo + ratio * (hi - lo);
    let mut f1 = eval_f64(a, x1);
    let mut f2 = eval_f64(a, x2);
    for _ in 0..80 {
        if f1 <= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - ratio * (hi - lo);
            f1 = eval_f64(a, x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + ratio * (hi - lo);
            f2 = eval_f64(a, x2);
        }
    }
    if f1 <= f2 {
        (x1, f1)
    } else {
        (x2, f2)
    }
}

/// Two rational points at which the form takes strictly opposite signs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witnesses {
    pub positive: (Rational, Rational),
    pub negative: (Rational, Rational),
}

impl Witnesses {
    pub fn swapped(self) -> Self {
        Witnesses {
            positive: self.negative,
            negative: self.positive,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WitnessError {
    #[error("form takes no negative value; it is not indefinite")]
    NotIndefinite,
}

/// Finds `(x, y)` with `f(x, y) < 0`; `(1, 0)` always gives `f = 1 > 0`.
///
/// First tries the rationalised argmin of the circle oracle, then falls back
/// to an exact search between consecutive real roots of odd multiplicity.
pub fn witness_search(m: &MonicQuartic) -> Result<Witnesses, WitnessError> {
    let positive = (Rational::one(), Rational::zero());
    let estimate = circle_min_estimate(m, 256);
    if estimate.min < 0.0 {
        let (s, c) = estimate.theta.sin_cos();
        let found = small_points(c, s)
            .into_iter()
            .find(|(x, y)| sign_of(&m.evaluate(x, y)) == Sign::Negative);
        if let Some(point) = found {
            return Ok(Witnesses {
                positive,
                negative: point,
            });
        }
    }
    exact_negative_point(m)
        .map(|t| Witnesses {
            positive,
            negative: (t, Rational::one()),
        })
        .ok_or(WitnessError::NotIndefinite)
}

/// Integer points `(p, q)` on the ray through `(c, s)`, from the
/// continued-fraction convergents of `c/s` (or `s/c` near the x-axis).
fn small_points(c: f64, s: f64) -> Vec<(Rational, Rational)> {
    let flip = s.abs() < c.abs();
    let mut v = if flip { s / c } else { c / s };
    let (mut h0, mut h1) = (0i128, 1i128);
    let (mut k0, mut k1) = (1i128, 0i128);
    let mut out = Vec::new();
    for _ in 0..40 {
        let a = v.floor();
        if !a.is_finite() || a.abs() > 1e15 {
            break;
        }
        let a = a as i128;
        let (Some(h2), Some(k2)) = (
            a.checked_mul(h1).and_then(|x| x.checked_add(h0)),
            a.checked_mul(k1).and_then(|x| x.checked_add(k0)),
        ) else {
            break;
        };
        (h0, h1, k0, k1) = (h1, h2, k1, k2);
        let (num, den) = (
            Rational::from_integer(h1.into()),
            Rational::from_integer(k1.into()),
        );
        out.push(if flip { (den, num) } else { (num, den) });
        let frac = v - a as f64;
        if frac.abs() < 1e-12 {
            break;
        }
        v = 1.0 / frac;
    }
    out
}

/// With `f(t, 1) = q·s²` where `q` collects the odd-multiplicity factors,
/// `q` is monic of even degree, so it is negative between its two smallest
/// real roots; at most one point of that gap is a root of `s`.
fn exact_negative_point(m: &MonicQuartic) -> Option<Rational> {
    let p = Poly::new(m.dehomogenized());
    let q = p
        .squarefree_decomposition()
        .iter()
        .enumerate()
        .filter(|(k, _)| k % 2 == 0)
        .fold(Poly::one(), |acc, (_, f)| acc.mul(f));
    let roots = q.isolate_real_roots();
    for gap in roots.windows(2) {
        let (left, right) = (&gap[0].1, &gap[1].0);
        let mid = (left + right) / int(2);
        for t in [left, right, &mid] {
            if sign_of(&p.eval(t)) == Sign::Negative {
                return Some(t.clone());
            }
        }
    }
    None
}
