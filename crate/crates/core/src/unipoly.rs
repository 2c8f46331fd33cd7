//! Dense univariate polynomials and rational power series in t.

use crate::error::{ArrError, Result};
use crate::rational::{rat_to_string, Rat};
use num_traits::{One, Zero};

/// Polynomial in t; `coeffs[d]` is the coefficient of t^d, trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<Rat>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        UniPoly::from_coeffs(vec![Rat::one()])
    }

    pub fn t() -> Self {
        UniPoly::from_coeffs(vec![Rat::zero(), Rat::one()])
    }

    pub fn from_coeffs(coeffs: Vec<Rat>) -> Self {
        let mut p = UniPoly { coeffs };
        p.trim();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        UniPoly::from_coeffs(coeffs.iter().map(|&c| Rat::from_integer(c.into())).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeff(&self, d: usize) -> Rat {
        self.coeffs.get(d).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        UniPoly::from_coeffs((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        UniPoly::from_coeffs((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::from_coeffs(out)
    }

    pub fn pow(&self, e: usize) -> UniPoly {
        let mut out = UniPoly::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Exact division; `None` if the remainder is nonzero.
    pub fn div_exact(&self, divisor: &UniPoly) -> Option<UniPoly> {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(UniPoly::zero());
        }
        if self.degree() < divisor.degree() {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let dd = divisor.degree();
        let lead = divisor.coeffs[dd].clone();
        let qd = self.degree() - dd;
        let mut quot = vec![Rat::zero(); qd + 1];
        for k in (0..=qd).rev() {
            let c = &rem[k + dd] / &lead;
            if !c.is_zero() {
                for (j, b) in divisor.coeffs.iter().enumerate() {
                    let v = &rem[k + j] - &c * b;
                    rem[k + j] = v;
                }
            }
            quot[k] = c;
        }
        if rem.iter().all(|c| c.is_zero()) {
            Some(UniPoly::from_coeffs(quot))
        } else {
            None
        }
    }

    /// 1 + c t, the ubiquitous factor of Poincaré polynomials.
    pub fn one_plus_ct(c: i64) -> UniPoly {
        UniPoly::from_i64(&[1, c])
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }
}

impl std::fmt::Display for UniPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match d {
                0 => write!(f, "{}", rat_to_string(c))?,
                1 => write!(f, "{}*t", rat_to_string(c))?,
                _ => write!(f, "{}*t^{}", rat_to_string(c), d)?,
            }
        }
        Ok(())
    }
}

/// Quotient of univariate polynomials, expandable as a power series at 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatFun {
    pub num: UniPoly,
    pub den: UniPoly,
}

impl RatFun {
    pub fn new(num: UniPoly, den: UniPoly) -> Result<Self> {
        if den.coeff(0).is_zero() {
            return Err(ArrError::PoleAtOrigin);
        }
        Ok(RatFun { num, den })
    }

    pub fn from_poly(p: UniPoly) -> Self {
        RatFun { num: p, den: UniPoly::one() }
    }

    pub fn mul(&self, other: &RatFun) -> RatFun {
        RatFun {
            num: self.num.mul(&other.num),
            den: self.den.mul(&other.den),
        }
    }

    /// 1/f; requires a unit constant term in the numerator.
    pub fn reciprocal(&self) -> Result<RatFun> {
        RatFun::new(self.den.clone(), self.num.clone())
    }

    /// Substitutes -t for t.
    pub fn at_neg_t(&self) -> RatFun {
        let flip = |p: &UniPoly| {
            UniPoly::from_coeffs(
                p.coeffs()
                    .iter()
                    .enumerate()
                    .map(|(d, c)| if d % 2 == 0 { c.clone() } else { -c.clone() })
                    .collect(),
            )
        };
        RatFun { num: flip(&self.num), den: flip(&self.den) }
    }
}

/// First D+1 Taylor coefficients of f at 0, exactly.
pub fn series_expand(f: &RatFun, d_max: usize) -> Result<Vec<Rat>> {
    let d0 = f.den.coeff(0);
    if d0.is_zero() {
        return Err(ArrError::PoleAtOrigin);
    }
    let mut out = Vec::with_capacity(d_max + 1);
    for k in 0..=d_max {
        let mut acc = f.num.coeff(k);
        for j in 1..=k {
            let dj = f.den.coeff(j);
            if !dj.is_zero() {
                acc -= dj * &out[k - j];
            }
        }
        out.push(acc / &d0);
    }
    Ok(out)
}

/// p(t/(1-t)) written over the denominator (1-t)^deg(p).
///
/// For a Poincaré polynomial this is the Hilbert series of the
/// corresponding Orlik-Terao algebra (Terao's formula).
pub fn substitute_t_over_1mt(p: &UniPoly) -> RatFun {
    let deg = if p.is_zero() { 0 } else { p.degree() };
    let one_minus_t = UniPoly::from_i64(&[1, -1]);
    let t = UniPoly::t();
    // num = sum_i a_i t^i (1-t)^(deg-i)
    let mut num = UniPoly::zero();
    for i in 0..=deg {
        let a = p.coeff(i);
        if a.is_zero() {
            continue;
        }
        let term = t.pow(i).mul(&one_minus_t.pow(deg - i));
        num = num.add(&term.mul(&UniPoly::from_coeffs(vec![a])));
    }
    RatFun { num, den: one_minus_t.pow(deg) }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat_from_i64 as q;

    #[test]
    fn geometric_series() {
        let f = RatFun::new(UniPoly::one(), UniPoly::from_i64(&[1, -1])).unwrap();
        assert_eq!(series_expand(&f, 3).unwrap(), vec![q(1), q(1), q(1), q(1)]);
    }

    #[test]
    fn series_of_one_plus_t_over_one_minus_t_squared() {
        // (1+t)/(1-t)^2 = 1 + 3t + 5t^2 + 7t^3 + ...; long division gives
        // the same sequence of odd numbers
        let den = UniPoly::from_i64(&[1, -1]).pow(2);
        let f = RatFun::new(UniPoly::from_i64(&[1, 1]), den).unwrap();
        assert_eq!(series_expand(&f, 3).unwrap(), vec![q(1), q(3), q(5), q(7)]);
    }

    #[test]
    fn binomial_expansion_of_poly() {
        let f = RatFun::from_poly(UniPoly::from_i64(&[1, 1]).pow(4));
        assert_eq!(series_expand(&f, 2).unwrap(), vec![q(1), q(4), q(6)]);
    }

    #[test]
    fn pole_at_origin_is_an_error() {
        let f = RatFun { num: UniPoly::one(), den: UniPoly::t() };
        assert!(matches!(series_expand(&f, 2), Err(ArrError::PoleAtOrigin)));
        assert!(RatFun::new(UniPoly::one(), UniPoly::t()).is_err());
    }

    #[test]
    fn substitution_on_constant() {
        let f = substitute_t_over_1mt(&UniPoly::one());
        assert_eq!(f.num, UniPoly::one());
        assert_eq!(f.den, UniPoly::one());
    }

    #[test]
    fn substitution_collapses_factored_form() {
        // 1 + 3t + 2t^2 = (1+t)(1+2t) maps to (1+t)/(1-t)^2: expanding
        // (1-t)^2 + 3t(1-t) + 2t^2 by hand gives 1 + t
        let f = substitute_t_over_1mt(&UniPoly::from_i64(&[1, 3, 2]));
        assert_eq!(f.num, UniPoly::from_i64(&[1, 1]));
        assert_eq!(f.den, UniPoly::from_i64(&[1, -1]).pow(2));
    }

    #[test]
    fn substitution_on_boolean_poincare() {
        // (1+t)^l becomes 1/(1-t)^l: the numerator collapses to 1
        for l in 1..5 {
            let p = UniPoly::from_i64(&[1, 1]).pow(l);
            let f = substitute_t_over_1mt(&p);
            assert_eq!(f.num, UniPoly::one());
            assert_eq!(f.den, UniPoly::from_i64(&[1, -1]).pow(l));
        }
    }

    #[test]
    fn div_exact_detects_non_divisibility() {
        let p = UniPoly::from_i64(&[1, 3, 2]);
        let d = p.div_exact(&UniPoly::from_i64(&[1, 1])).unwrap();
        assert_eq!(d, UniPoly::from_i64(&[1, 2]));
        assert!(p.div_exact(&UniPoly::from_i64(&[1, -1])).is_none());
    }
}
