use std::fmt;

use crate::exactnum::{Rational, Scalar};

/// Symmetric 3×3 matrix; only the upper triangle is stored.
#[derive(Debug, Clone, PartialEq)]
pub struct Sym3Matrix<S> {
    pub m11: S,
    pub m12: S,
    pub m13: S,
    pub m22: S,
    pub m23: S,
    pub m33: S,
}

impl<S: Scalar> Sym3Matrix<S> {
    pub fn new(m11: S, m12: S, m13: S, m22: S, m23: S, m33: S) -> Self {
        Sym3Matrix {
            m11,
            m12,
            m13,
            m22,
            m23,
            m33,
        }
    }

    pub fn entry(&self, i: usize, j: usize) -> &S {
        match (i.min(j), i.max(j)) {
            (0, 0) => &self.m11,
            (0, 1) => &self.m12,
            (0, 2) => &self.m13,
            (1, 1) => &self.m22,
            (1, 2) => &self.m23,
            (2, 2) => &self.m33,
            _ => panic!("index ({i}, {j}) out of range"),
        }
    }

    pub fn rows(&self) -> [[S; 3]; 3] {
        std::array::from_fn(|i| std::array::from_fn(|j| self.entry(i, j).clone()))
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Sym3Matrix<T> {
        Sym3Matrix::new(
            f(&self.m11),
            f(&self.m12),
            f(&self.m13),
            f(&self.m22),
            f(&self.m23),
            f(&self.m33),
        )
    }

    pub fn negated(&self) -> Self {
        self.map(|e| e.negated())
    }

    pub fn scaled(&self, r: &Rational) -> Self {
        self.map(|e| e.scale(r))
    }

    /// Minor on rows/columns `i < j`.
    pub fn minor2(&self, i: usize, j: usize) -> S {
        self.entry(i, i)
            .times(self.entry(j, j))
            .minus(&self.entry(i, j).times(self.entry(i, j)))
    }

    /// Cofactor expansion along the first row.
    pub fn det(&self) -> S {
        let c11 = self.m22.times(&self.m33).minus(&self.m23.times(&self.m23));
        let c12 = self.m12.times(&self.m33).minus(&self.m23.times(&self.m13));
        let c13 = self.m12.times(&self.m23).minus(&self.m22.times(&self.m13));
        self.m11
            .times(&c11)
            .minus(&self.m12.times(&c12))
            .plus(&self.m13.times(&c13))
    }

    pub fn leading_minors(&self) -> [S; 3] {
        [self.m11.clone(), self.minor2(0, 1), self.det()]
    }

    /// All seven principal minors: three 1×1, three 2×2, then the determinant.
    pub fn principal_minors(&self) -> [S; 7] {
        [
            self.m11.clone(),
            self.m22.clone(),
            self.m33.clone(),
            self.minor2(0, 1),
            self.minor2(0, 2),
            self.minor2(1, 2),
            self.det(),
        ]
    }

    /// `vᵀ M v`, expanded over the full matrix.
    pub fn quadratic_form(&self, v: &[S; 3]) -> S {
        let mut acc = v[0].lift(&Rational::default());
        for i in 0..3 {
            for j in 0..3 {
                acc = acc.plus(&v[i].times(self.entry(i, j)).times(&v[j]));
            }
        }
        acc
    }
}

impl<S: Scalar> fmt::Display for Sym3Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows().iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "[{}, {}, {}]", row[0], row[1], row[2])?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::int;

    fn m(e: [i64; 6]) -> Sym3Matrix<Rational> {
        Sym3Matrix::new(
            int(e[0]),
            int(e[1]),
            int(e[2]),
            int(e[3]),
            int(e[4]),
            int(e[5]),
        )
    }

    #[test]
    fn determinant_by_cofactors() {
        assert_eq!(m([1, 0, 0, 1, 0, 1]).det(), int(1));
        assert_eq!(m([1, 2, 1, 4, 2, 1]).det(), int(0));
        // [[2,1,0],[1,3,1],[0,1,4]] → 2(12−1) − 1(4−0) + 0 = 18
        assert_eq!(m([2, 1, 0, 3, 1, 4]).det(), int(18));
    }

    #[test]
    fn quadratic_form_matches_expansion() {
        let a = m([2, 1, 0, 3, 1, 4]);
        let v = [int(1), int(-2), int(3)];
        // 2 + 3·4 + 4·9 + 2(1·1·−2) + 2(0) + 2(1·−2·3) = 2+12+36−4−12 = 34
        assert_eq!(a.quadratic_form(&v), int(34));
    }
}
