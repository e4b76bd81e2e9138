//! Exact root structure of the pencil cubic and of the quartic itself.
//!
//! The two sides meet in the nine intersection configurations of the base
//! conics `A₁` and `A₂`: [`classify_case`] reads the configuration off the
//! roots of `g(λ)` and their position relative to `a₃²/4`, while
//! [`quartic_root_nature`] reads it off the projective roots of the form.

mod oracle;
pub mod poly;

pub use oracle::{circle_min_estimate, witness_search, CircleMin, WitnessError, Witnesses};

use std::cmp::Ordering;
use std::fmt;

use num_traits::Signed;
use thiserror::Error;

use crate::exactnum::{int, rational_sqrt, Rational, Scalar, Sign};
use crate::forms::MonicQuartic;
use crate::pencil::{critical_param, g_eval, pencil_coeffs, CriticalParam, PencilCubic};
use poly::{compare_isolated_root, Poly};

/// Where a real root sits: exactly, or inside an isolating interval.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RootLocation {
    Exact(Rational),
    /// The unique root of the owning factor in the open interval `(lo, hi)`.
    Isolated {
        lo: Rational,
        hi: Rational,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealRoot {
    pub location: RootLocation,
    pub multiplicity: usize,
    /// Square-free factor of which this is a simple root.
    pub factor: Poly,
}

impl RealRoot {
    pub fn cmp_rational(&self, t: &Rational) -> Ordering {
        match &self.location {
            RootLocation::Exact(r) => r.cmp(t),
            RootLocation::Isolated { lo, hi } => compare_isolated_root(&self.factor, lo, hi, t),
        }
    }

    pub fn exact(&self) -> Option<&Rational> {
        match &self.location {
            RootLocation::Exact(r) => Some(r),
            RootLocation::Isolated { .. } => None,
        }
    }

    fn cmp_root(&self, other: &RealRoot) -> Ordering {
        match (&self.location, &other.location) {
            (RootLocation::Exact(a), _) => other.cmp_rational(a).reverse(),
            (_, RootLocation::Exact(b)) => self.cmp_rational(b),
            (
                RootLocation::Isolated { lo: l1, hi: h1 },
                RootLocation::Isolated { lo: l2, hi: h2 },
            ) => {
                if h1 <= l2 {
                    Ordering::Less
                } else if h2 <= l1 {
                    Ordering::Greater
                } else {
                    // Isolating intervals of one square-free factor never overlap,
                    // and a rational cubic has no irrational repeated roots.
                    debug_assert!(self.factor == other.factor && l1 == l2);
                    Ordering::Equal
                }
            }
        }
    }

    pub fn approx(&self) -> f64 {
        use crate::exactnum::to_f64;
        match &self.location {
            RootLocation::Exact(r) => to_f64(r),
            RootLocation::Isolated { lo, hi } => (to_f64(lo) + to_f64(hi)) / 2.0,
        }
    }
}

/// Real roots of `g(λ)` in ascending order with multiplicities, plus
/// whether the remaining two roots form a complex-conjugate pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubicRootProfile {
    pub roots: Vec<RealRoot>,
    pub conjugate_pair: bool,
    /// Square-free decomposition of `−4g`: entry `k` is the factor whose
    /// roots have multiplicity `k + 1`.
    pub squarefree: Vec<Poly>,
}

impl CubicRootProfile {
    pub fn rational_roots(&self) -> Vec<(Rational, usize)> {
        self.roots
            .iter()
            .filter_map(|r| r.exact().map(|v| (v.clone(), r.multiplicity)))
            .collect()
    }

    pub fn total_multiplicity(&self) -> usize {
        self.roots.iter().map(|r| r.multiplicity).sum::<usize>()
            + if self.conjugate_pair { 2 } else { 0 }
    }

    /// `Π fₖ^(k+1)`, which equals `−4g`.
    pub fn reconstruct(&self) -> Poly {
        self.squarefree
            .iter()
            .enumerate()
            .fold(Poly::one(), |acc, (k, f)| acc.mul(&f.pow(k + 1)))
    }
}

pub fn cubic_root_profile(p: &PencilCubic) -> CubicRootProfile {
    let g = Poly::new(p.coefficients().to_vec());
    let squarefree = g.squarefree_decomposition();
    let mut roots = Vec::new();
    let mut conjugate_pair = false;
    for (k, factor) in squarefree.iter().enumerate() {
        let multiplicity = k + 1;
        let push = |roots: &mut Vec<RealRoot>, location| {
            roots.push(RealRoot {
                location,
                multiplicity,
                factor: factor.clone(),
            })
        };
        match factor.degree() {
            None | Some(0) => {}
            Some(1) => {
                let c = factor.coeffs();
                push(&mut roots, RootLocation::Exact(-&c[0] / &c[1]));
            }
            Some(2) => {
                let c = factor.coeffs();
                let disc = &c[1] * &c[1] - int(4) * &c[0] * &c[2];
                if disc.is_negative() {
                    conjugate_pair = true;
                } else if let Some(s) = rational_sqrt(&disc) {
                    let two_a = int(2) * &c[2];
                    push(&mut roots, RootLocation::Exact((-&c[1] - &s) / &two_a));
                    push(&mut roots, RootLocation::Exact((-&c[1] + s) / two_a));
                } else {
                    for (lo, hi) in factor.isolate_real_roots() {
                        push(&mut roots, RootLocation::Isolated { lo, hi });
                    }
                }
            }
            Some(_) => {
                let isolated = factor.isolate_real_roots();
                conjugate_pair = isolated.len() == 1;
                for (lo, hi) in isolated {
                    push(&mut roots, RootLocation::Isolated { lo, hi });
                }
            }
        }
    }
    roots.sort_by(|a, b| a.cmp_root(b));
    CubicRootProfile {
        roots,
        conjugate_pair,
        squarefree,
    }
}

/// One of the nine configurations of the four common points of `A₁`, `A₂`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntersectionCase(u8);

impl IntersectionCase {
    pub fn new(id: u8) -> Option<Self> {
        (1..=9).contains(&id).then_some(IntersectionCase(id))
    }

    pub fn id(self) -> u8 {
        self.0
    }

    pub fn description(self) -> &'static str {
        match self.0 {
            1 => "four real simple points",
            2 => "two pairs of complex conjugate simple points",
            3 => "two real simple points + a pair of complex conjugate simple points",
            4 => "two real simple points + a real double point (simple-contact)",
            5 => "a pair of complex conjugate simple points + a real double point (simple-contact)",
            6 => "two real double points (double contact)",
            7 => "a pair of complex conjugate double points (double contact)",
            8 => "a real simple point + a triple point (three-point contact)",
            _ => "a quadruple point (four-point contact)",
        }
    }

    /// No real transversal crossing: the form is nonnegative.
    pub fn is_semidefinite(self) -> bool {
        matches!(self.0, 2 | 5 | 6 | 7 | 9)
    }

    /// No real common point at all: the form is positive.
    pub fn is_definite(self) -> bool {
        matches!(self.0, 2 | 7)
    }
}

impl fmt::Display for IntersectionCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "case {}: {}", self.0, self.description())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("root profile of g matches no configuration: {0}")]
    NoMatchingRow(String),
}

/// Reads the configuration off the roots λ₁ ≤ λ₂ ≤ λ₃ of `g` and their
/// order relative to `a₃²/4`.
pub fn classify_case(m: &MonicQuartic) -> Result<IntersectionCase, ClassifyError> {
    let profile = cubic_root_profile(&pencil_coeffs(m));
    classify_profile(&profile, &m.a3_sq_over_4())
}

pub fn classify_profile(
    profile: &CubicRootProfile,
    threshold: &Rational,
) -> Result<IntersectionCase, ClassifyError> {
    use Ordering::*;
    let rel: Vec<Ordering> = profile
        .roots
        .iter()
        .map(|r| r.cmp_rational(threshold))
        .collect();
    let mults: Vec<usize> = profile.roots.iter().map(|r| r.multiplicity).collect();
    let id = match (profile.conjugate_pair, mults.as_slice()) {
        (true, [1]) if rel[0] != Greater => Some(3),
        (false, [1, 1, 1]) => {
            if rel[2] != Greater {
                Some(1)
            } else if rel[0] != Greater && rel[1] != Less {
                Some(2)
            } else {
                None
            }
        }
        // λ₁ = λ₂ < λ₃
        (false, [2, 1]) => match (rel[0], rel[1]) {
            (_, Less | Equal) => Some(4),
            (Equal, Greater) => Some(7),
            _ => None,
        },
        // λ₁ < λ₂ = λ₃
        (false, [1, 2]) => match (rel[0], rel[1]) {
            (_, Less) => Some(4),
            (Less | Equal, Greater) => Some(5),
            (_, Equal) => Some(6),
            _ => None,
        },
        (false, [3]) => match rel[0] {
            Less => Some(8),
            Equal => Some(9),
            Greater => None,
        },
        _ => None,
    };
    id.and_then(IntersectionCase::new).ok_or_else(|| {
        let roots: Vec<String> = profile
            .roots
            .iter()
            .zip(&rel)
            .map(|(r, o)| format!("{:.6}^{} ({:?} threshold)", r.approx(), r.multiplicity, o))
            .collect();
        ClassifyError::NoMatchingRow(format!(
            "real roots [{}], conjugate pair: {}",
            roots.join(", "),
            profile.conjugate_pair
        ))
    })
}

/// Multiplicity structure of the projective roots `(x : y)` of the form.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct QuarticRootNature {
    pub real_simple: usize,
    pub real_double: usize,
    pub real_triple: usize,
    pub real_quadruple: usize,
    pub complex_simple_pairs: usize,
    pub complex_double_pairs: usize,
}

impl QuarticRootNature {
    pub fn total_multiplicity(&self) -> usize {
        self.real_simple
            + 2 * self.real_double
            + 3 * self.real_triple
            + 4 * self.real_quadruple
            + 2 * self.complex_simple_pairs
            + 4 * self.complex_double_pairs
    }

    /// The configuration this root structure corresponds to.
    pub fn case(&self) -> Option<IntersectionCase> {
        let key = (
            self.real_simple,
            self.real_double,
            self.real_triple,
            self.real_quadruple,
            self.complex_simple_pairs,
            self.complex_double_pairs,
        );
        let id = match key {
            (4, 0, 0, 0, 0, 0) => 1,
            (0, 0, 0, 0, 2, 0) => 2,
            (2, 0, 0, 0, 1, 0) => 3,
            (2, 1, 0, 0, 0, 0) => 4,
            (0, 1, 0, 0, 1, 0) => 5,
            (0, 2, 0, 0, 0, 0) => 6,
            (0, 0, 0, 0, 0, 1) => 7,
            (1, 0, 1, 0, 0, 0) => 8,
            (0, 0, 0, 1, 0, 0) => 9,
            _ => return None,
        };
        IntersectionCase::new(id)
    }

    /// Every real root has even multiplicity.
    pub fn is_nonnegative(&self) -> bool {
        self.real_simple == 0 && self.real_triple == 0
    }

    pub fn has_no_real_roots(&self) -> bool {
        self.real_simple + self.real_double + self.real_triple + self.real_quadruple == 0
    }
}

/// Root structure of the form via square-free decomposition of `f(t, 1)`.
/// Monic forms have no root at `y = 0`, so every projective root is finite.
pub fn quartic_root_nature(m: &MonicQuartic) -> QuarticRootNature {
    let p = Poly::new(m.dehomogenized());
    let mut nature = QuarticRootNature::default();
    for (k, factor) in p.squarefree_decomposition().iter().enumerate() {
        let degree = factor.degree().unwrap_or(0);
        if degree == 0 {
            continue;
        }
        let real = factor.count_real_roots();
        let pairs = (degree - real) / 2;
        match k + 1 {
            1 => {
                nature.real_simple += real;
                nature.complex_simple_pairs += pairs;
            }
            2 => {
                nature.real_double += real;
                nature.complex_double_pairs += pairs;
            }
            3 => nature.real_triple += real,
            _ => nature.real_quadruple += real,
        }
    }
    nature
}

/// Checks the facts about λ₀ and `g(λ₀)` that each configuration implies.
pub fn table3_consistent(m: &MonicQuartic, case: IntersectionCase) -> bool {
    let p = pencil_coeffs(m);
    let tau = m.a3_sq_over_4();
    let CriticalParam::Real { value, .. } = critical_param(&p) else {
        return case.id() == 3;
    };
    let rel = value.minus(&value.lift(&tau)).sign();
    let g = g_eval(&p, &value).sign();
    use Sign::*;
    match case.id() {
        1 => rel == Negative && g == Positive,
        2 | 7 => rel == Positive && g == Positive,
        3 => rel == Negative || g == Negative,
        4 => rel == Negative && g != Negative,
        5 => rel == Positive && g == Zero,
        6 | 9 => rel == Zero && g == Zero,
        8 => rel == Negative && g == Zero,
        _ => false,
    }
}
