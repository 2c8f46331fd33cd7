//! Sparse multivariate polynomials with exact rational coefficients.

use crate::error::{ArrError, Result};
use crate::monomial::{Monomial, TermOrder};
use crate::rational::{rat_to_string, Rat};
use num_traits::Zero;
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rat>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn var(nvars: usize, idx: usize) -> Self {
        let mut p = MultiPoly::zero(nvars);
        p.add_term(Monomial::var(nvars, idx), Rat::from_integer(1.into()));
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, Rat)>) -> Self {
        let mut p = MultiPoly::zero(nvars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn monomial(nvars: usize, m: Monomial, c: Rat) -> Self {
        MultiPoly::from_terms(nvars, [(m, c)])
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, m: Monomial, c: Rat) {
        debug_assert_eq!(m.nvars(), self.nvars);
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero(self.nvars);
        for (m1, c1) in self.terms() {
            for (m2, c2) in other.terms() {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn mul_monomial(&self, m: &Monomial) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(mm, c)| (mm.mul(m), c.clone()))
                .collect(),
        }
    }

    /// The single degree of a homogeneous polynomial, or an error.
    pub fn homogeneous_degree(&self) -> Result<usize> {
        let mut deg = None;
        for (m, _) in self.terms() {
            match deg {
                None => deg = Some(m.degree()),
                Some(d) if d == m.degree() => {}
                Some(d) => return Err(ArrError::NonHomogeneous(d)),
            }
        }
        Ok(deg.unwrap_or(0))
    }

    pub fn leading_term(&self, order: &TermOrder) -> Option<(&Monomial, &Rat)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| order.cmp(a, b))
    }

    /// Determinant of a square matrix of polynomials by Laplace expansion
    /// along the first row; fine at the sizes that occur here (k ≤ 5).
    pub fn det(matrix: &[Vec<MultiPoly>]) -> MultiPoly {
        let k = matrix.len();
        assert!(k > 0 && matrix.iter().all(|r| r.len() == k));
        let nvars = matrix[0][0].nvars();
        if k == 1 {
            return matrix[0][0].clone();
        }
        let mut out = MultiPoly::zero(nvars);
        for (j, entry) in matrix[0].iter().enumerate() {
            if entry.is_zero() {
                continue;
            }
            let minor: Vec<Vec<MultiPoly>> = matrix[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|(c, _)| *c != j)
                        .map(|(_, p)| p.clone())
                        .collect()
                })
                .collect();
            let cofactor = entry.mul(&MultiPoly::det(&minor));
            if j % 2 == 0 {
                out = out.add(&cofactor);
            } else {
                out = out.sub(&cofactor);
            }
        }
        out
    }
}

impl std::fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            if first {
                first = false;
            } else {
                write!(f, " + ")?;
            }
            write!(f, "{}", rat_to_string(c))?;
            for i in m.support() {
                let e = m.exp(i);
                if e == 1 {
                    write!(f, "*y{}", i + 1)?;
                } else {
                    write!(f, "*y{}^{}", i + 1, e)?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat_from_i64 as q;

    fn y(n: usize, i: usize) -> MultiPoly {
        MultiPoly::var(n, i)
    }

    #[test]
    fn arithmetic_cancels_exactly() {
        let p = y(3, 0).add(&y(3, 1));
        let m = p.mul(&p.sub(&y(3, 1).scale(&q(2)))); // (y1+y2)(y1-y2) = y1^2 - y2^2
        let mut expect = MultiPoly::zero(3);
        expect.add_term(Monomial::from_exps(vec![2, 0, 0]), q(1));
        expect.add_term(Monomial::from_exps(vec![0, 2, 0]), q(-1));
        assert_eq!(m, expect);
    }

    #[test]
    fn homogeneous_degree_detects_mixed_terms() {
        let mut p = y(2, 0);
        assert_eq!(p.homogeneous_degree().unwrap(), 1);
        p.add_term(Monomial::from_exps(vec![1, 1]), q(1));
        assert!(p.homogeneous_degree().is_err());
    }

    #[test]
    fn det_of_linear_matrix() {
        // det [[y1, y2], [y2, y1]] = y1^2 - y2^2
        let m = vec![vec![y(2, 0), y(2, 1)], vec![y(2, 1), y(2, 0)]];
        let d = MultiPoly::det(&m);
        let mut expect = MultiPoly::zero(2);
        expect.add_term(Monomial::from_exps(vec![2, 0]), q(1));
        expect.add_term(Monomial::from_exps(vec![0, 2]), q(-1));
        assert_eq!(d, expect);
    }
}
