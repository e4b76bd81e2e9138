//! Dense univariate polynomials over ℚ with exactly the operations the
//! root classifiers need: gcd, square-free decomposition and Sturm-based
//! real root isolation.

use std::cmp::Ordering;

use num_traits::{One, Signed, Zero};

use crate::exactnum::{int, sign_of, Rational, Sign};

/// Coefficients stored constant term first, with no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::new(vec![Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial reported as `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    pub fn sign_at(&self, t: &Rational) -> Sign {
        sign_of(&self.eval(t))
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * int(i as i64))
                .collect(),
        )
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let lead = self.leading();
        Poly::new(self.coeffs.iter().map(|c| c / &lead).collect())
    }

    pub fn scale(&self, r: &Rational) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| c * r).collect())
    }

    pub fn mul(&self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }

    pub fn pow(&self, k: usize) -> Poly {
        (0..k).fold(Poly::one(), |acc, _| acc.mul(self))
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.leading();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree().filter(|&n| n >= dd) else {
            return (Poly::zero(), self.clone());
        };
        let mut quot = vec![Rational::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = &rem[k + dd] / &lead;
            if !c.is_zero() {
                for (j, dc) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] -= &c * dc;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Poly::new(quot), Poly::new(rem))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, rhs: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), rhs.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// Yun's square-free decomposition of a nonzero polynomial:
    /// `self = lc · Π fᵢ^i` with each `fᵢ` monic, square-free and pairwise
    /// coprime. Entry `k` of the result is `f_(k+1)`; trailing entries may
    /// be constant.
    pub fn squarefree_decomposition(&self) -> Vec<Poly> {
        let f = self.monic();
        if f.degree().unwrap_or(0) == 0 {
            return vec![Poly::one()];
        }
        let fp = f.derivative();
        let a = f.gcd(&fp);
        let mut b = f.div_rem(&a).0;
        let mut c = fp.div_rem(&a).0;
        let mut d = c.sub(&b.derivative());
        let mut out = Vec::new();
        loop {
            let fi = b.gcd(&d);
            b = b.div_rem(&fi).0;
            c = d.div_rem(&fi).0;
            out.push(fi);
            if b.degree() == Some(0) {
                break;
            }
            d = c.sub(&b.derivative());
        }
        while out.len() > 1 && out.last().is_some_and(|p| p.degree() == Some(0)) {
            out.pop();
        }
        out
    }

    pub fn sub(&self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new(
            (0..n)
                .map(|i| {
                    let a = self.coeffs.get(i).cloned().unwrap_or_default();
                    let b = rhs.coeffs.get(i).cloned().unwrap_or_default();
                    a - b
                })
                .collect(),
        )
    }

    /// Sturm chain `p, p′, −rem(p, p′), …`, each member rescaled by a
    /// positive constant to keep coefficients small.
    pub fn sturm_chain(&self) -> Vec<Poly> {
        let mut chain = vec![self.clone(), self.derivative()];
        while !chain.last().unwrap().is_zero() {
            let n = chain.len();
            let r = chain[n - 2].div_rem(&chain[n - 1]).1;
            if r.is_zero() {
                break;
            }
            let lead = r.leading().abs();
            chain.push(r.scale(&(-Rational::one() / lead)));
        }
        chain.retain(|p| !p.is_zero());
        chain
    }

    /// Strict bound `B` with every real root in `(−B, B)`.
    pub fn root_bound(&self) -> Rational {
        let lead = self.leading().abs();
        let max = self
            .coeffs
            .iter()
            .map(|c| c.abs() / &lead)
            .max()
            .unwrap_or_default();
        max + Rational::one()
    }

    /// Number of distinct real roots, for a square-free input.
    pub fn count_real_roots(&self) -> usize {
        if self.degree().unwrap_or(0) == 0 {
            return 0;
        }
        let chain = self.sturm_chain();
        let at_neg = variations(chain.iter().map(|p| {
            let s = sign_of(&p.leading());
            if p.degree().unwrap_or(0) % 2 == 1 {
                s.flip()
            } else {
                s
            }
        }));
        let at_pos = variations(chain.iter().map(|p| sign_of(&p.leading())));
        at_neg - at_pos
    }

    /// Disjoint open intervals `(lo, hi)`, sorted ascending, each holding
    /// exactly one real root of a square-free `self` with `self(lo)` and
    /// `self(hi)` nonzero and of opposite sign.
    pub fn isolate_real_roots(&self) -> Vec<(Rational, Rational)> {
        if self.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let chain = self.sturm_chain();
        let b = self.root_bound();
        let mut out = Vec::new();
        self.isolate_in(&chain, -b.clone(), b, &mut out);
        out
    }

    fn isolate_in(
        &self,
        chain: &[Poly],
        lo: Rational,
        hi: Rational,
        out: &mut Vec<(Rational, Rational)>,
    ) {
        let count = sturm_variations(chain, &lo) - sturm_variations(chain, &hi);
        match count {
            0 => {}
            1 => out.push((lo, hi)),
            _ => {
                let mid = self.split_point(&lo, &hi);
                self.isolate_in(chain, lo, mid.clone(), out);
                self.isolate_in(chain, mid, hi, out);
            }
        }
    }

    /// A point strictly inside `(lo, hi)` that is not a root.
    fn split_point(&self, lo: &Rational, hi: &Rational) -> Rational {
        (2..)
            .map(|k| (lo * int(k - 1) + hi) / int(k))
            .find(|t| self.sign_at(t) != Sign::Zero)
            .expect("finitely many roots")
    }
}

fn variations(signs: impl Iterator<Item = Sign>) -> usize {
    let mut last = Sign::Zero;
    let mut count = 0;
    for s in signs.filter(|s| *s != Sign::Zero) {
        if last != Sign::Zero && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

fn sturm_variations(chain: &[Poly], t: &Rational) -> usize {
    variations(chain.iter().map(|p| p.sign_at(t)))
}

/// Orders the root of square-free `factor` isolated in `(lo, hi)` against
/// the rational `t`, exactly.
pub fn compare_isolated_root(
    factor: &Poly,
    lo: &Rational,
    hi: &Rational,
    t: &Rational,
) -> Ordering {
    if t <= lo {
        return Ordering::Greater;
    }
    if t >= hi {
        return Ordering::Less;
    }
    match factor.sign_at(t) {
        Sign::Zero => Ordering::Equal,
        s if s == factor.sign_at(lo) => Ordering::Greater,
        _ => Ordering::Less,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> Poly {
        Poly::new(c.iter().map(|&v| int(v)).collect())
    }

    /// Product of (t − rᵢ).
    fn from_roots(roots: &[Rational]) -> Poly {
        roots.iter().fold(Poly::one(), |acc, r| {
            acc.mul(&Poly::new(vec![-r.clone(), Rational::one()]))
        })
    }

    #[test]
    fn division_and_gcd() {
        // (t² − 1) = (t − 1)(t + 1)
        let (q, r) = p(&[-1, 0, 1]).div_rem(&p(&[-1, 1]));
        assert_eq!(q, p(&[1, 1]));
        assert!(r.is_zero());
        let g = p(&[-1, 0, 1]).gcd(&p(&[1, 2, 1]));
        assert_eq!(g, p(&[1, 1]));
    }

    #[test]
    fn yun_decomposition() {
        // (t−1)(t+2)²(t−3)³
        let f = from_roots(&[int(1), int(-2), int(-2), int(3), int(3), int(3)]).scale(&int(5));
        let parts = f.squarefree_decomposition();
        assert_eq!(parts.len(), 3);
        assert_eq!(parts[0], p(&[-1, 1]));
        assert_eq!(parts[1], p(&[2, 1]));
        assert_eq!(parts[2], p(&[-3, 1]));
    }

    #[test]
    fn yun_decomposition_of_a_pure_power() {
        let f = from_roots(&[int(4), int(4), int(4)]);
        let parts = f.squarefree_decomposition();
        assert_eq!(parts, vec![Poly::one(), Poly::one(), p(&[-4, 1])]);
    }

    #[test]
    fn sturm_counts() {
        assert_eq!(p(&[1, 0, 1]).count_real_roots(), 0);
        assert_eq!(p(&[-2, 0, 1]).count_real_roots(), 2);
        // t³ − 4t + 1: three real roots
        assert_eq!(p(&[1, -4, 0, 1]).count_real_roots(), 3);
        assert_eq!(p(&[1, 1, 0, 1]).count_real_roots(), 1);
    }

    #[test]
    fn isolation_brackets_sign_changes() {
        let f = p(&[1, -4, 0, 1]);
        let roots = f.isolate_real_roots();
        assert_eq!(roots.len(), 3);
        for w in roots.windows(2) {
            assert!(w[0].1 <= w[1].0);
        }
        for (lo, hi) in &roots {
            assert_eq!(f.sign_at(lo).flip(), f.sign_at(hi));
        }
    }

    #[test]
    fn isolation_steps_around_rational_roots() {
        // Roots 0, ±1 sit on bisection points of the symmetric bound.
        let f = from_roots(&[int(-1), int(0), int(1)]);
        let roots = f.isolate_real_roots();
        assert_eq!(roots.len(), 3);
        for (lo, hi) in &roots {
            assert_ne!(f.sign_at(lo), Sign::Zero);
            assert_ne!(f.sign_at(hi), Sign::Zero);
        }
    }

    #[test]
    fn comparison_against_rationals() {
        let f = p(&[-2, 0, 1]);
        let roots = f.isolate_real_roots();
        let (lo, hi) = &roots[1];
        assert_eq!(
            compare_isolated_root(&f, lo, hi, &rat(141, 100)),
            Ordering::Greater
        );
        assert_eq!(
            compare_isolated_root(&f, lo, hi, &rat(142, 100)),
            Ordering::Less
        );
        let g = p(&[-4, 0, 1]);
        let roots = g.isolate_real_roots();
        let (lo, hi) = &roots[1];
        assert_eq!(compare_isolated_root(&g, lo, hi, &int(2)), Ordering::Equal);
    }

    proptest! {
        #[test]
        fn isolation_finds_planted_roots(
            roots in proptest::collection::btree_set((-30i64..30, 1i64..5), 1..5),
        ) {
            let roots: Vec<Rational> = roots.into_iter().map(|(n, d)| rat(n, d)).collect();
            let mut distinct = roots.clone();
            distinct.sort();
            distinct.dedup();
            // One conjugate pair t² + 1 that must not be counted.
            let f = from_roots(&distinct).mul(&p(&[1, 0, 1]));
            let found = f.isolate_real_roots();
            prop_assert_eq!(found.len(), distinct.len());
            prop_assert_eq!(f.count_real_roots(), distinct.len());
            for ((lo, hi), r) in found.iter().zip(&distinct) {
                prop_assert!(lo < r && r < hi);
            }
        }

        #[test]
        fn decomposition_reconstructs(
            roots in proptest::collection::vec((-9i64..9, 1i64..3), 1..6),
        ) {
            let roots: Vec<Rational> = roots.into_iter().map(|(n, d)| rat(n, d)).collect();
            let f = from_roots(&roots);
            let parts = f.squarefree_decomposition();
            let rebuilt = parts
                .iter()
                .enumerate()
                .fold(Poly::one(), |acc, (i, fi)| acc.mul(&fi.pow(i + 1)));
            prop_assert_eq!(rebuilt, f);
        }
    }
}
