//! Monomials in y_1..y_n with configurable term orders.
//!
//! Variable counts stay small (≤ 16 in practice) while degrees stay ≤ 12,
//! so exponents are stored densely as bytes. The `Ord` derived on the raw
//! exponent vector is only a storage order; mathematical comparisons go
//! through [`TermOrder`].

use std::cmp::Ordering;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u8>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial { exps: vec![0; nvars] }
    }

    pub fn var(nvars: usize, idx: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[idx] = 1;
        Monomial { exps }
    }

    pub fn from_exps(exps: Vec<u8>) -> Self {
        Monomial { exps }
    }

    /// Squarefree monomial supported on the given variable set.
    pub fn squarefree(nvars: usize, support: impl IntoIterator<Item = usize>) -> Self {
        let mut exps = vec![0; nvars];
        for i in support {
            exps[i] = 1;
        }
        Monomial { exps }
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exp(&self, idx: usize) -> u8 {
        self.exps[idx]
    }

    pub fn degree(&self) -> usize {
        self.exps.iter().map(|&e| e as usize).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// Variable indices with nonzero exponent.
    pub fn support(&self) -> Vec<usize> {
        (0..self.exps.len()).filter(|&i| self.exps[i] > 0).collect()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderKind {
    Lex,
    GrevLex,
}

/// A monomial order: lex or graded-reverse-lex on top of a variable
/// priority (priority[0] is the most significant variable).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermOrder {
    pub kind: OrderKind,
    pub priority: Vec<usize>,
}

impl TermOrder {
    pub fn lex(priority: Vec<usize>) -> Self {
        TermOrder { kind: OrderKind::Lex, priority }
    }

    pub fn grevlex(priority: Vec<usize>) -> Self {
        TermOrder { kind: OrderKind::GrevLex, priority }
    }

    /// Lex with priority y_n ≻ ... ≻ y_1. Paired with the ground order
    /// 1 < ... < n this makes the leading term of a circuit relation the
    /// broken-circuit monomial.
    pub fn lex_reverse_priority(nvars: usize) -> Self {
        TermOrder::lex((0..nvars).rev().collect())
    }

    pub fn grevlex_default(nvars: usize) -> Self {
        TermOrder::grevlex((0..nvars).collect())
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self.kind {
            OrderKind::Lex => {
                for &v in &self.priority {
                    match a.exp(v).cmp(&b.exp(v)) {
                        Ordering::Equal => continue,
                        ord => return ord,
                    }
                }
                Ordering::Equal
            }
            OrderKind::GrevLex => {
                match a.degree().cmp(&b.degree()) {
                    Ordering::Equal => {}
                    ord => return ord,
                }
                // among equal degrees: the monomial with the smaller
                // exponent on the least significant differing variable wins
                for &v in self.priority.iter().rev() {
                    match a.exp(v).cmp(&b.exp(v)) {
                        Ordering::Equal => continue,
                        Ordering::Less => return Ordering::Greater,
                        Ordering::Greater => return Ordering::Less,
                    }
                }
                Ordering::Equal
            }
        }
    }

    /// Ground order on [n] induced by the variable priority: the least
    /// ground element carries the least significant variable. Returned as a
    /// permutation listing elements from least to greatest.
    pub fn induced_ground_order(&self) -> Vec<usize> {
        self.priority.iter().rev().copied().collect()
    }
}

/// All monomials of the given total degree, in storage order.
pub fn monomials_of_degree(nvars: usize, degree: usize) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut current = vec![0u8; nvars];
    fn rec(current: &mut Vec<u8>, pos: usize, remaining: usize, out: &mut Vec<Monomial>) {
        if pos + 1 == current.len() {
            current[pos] = remaining as u8;
            out.push(Monomial::from_exps(current.clone()));
            return;
        }
        for take in (0..=remaining).rev() {
            current[pos] = take as u8;
            rec(current, pos + 1, remaining - take, out);
        }
        current[pos] = 0;
    }
    if nvars == 0 {
        if degree == 0 {
            out.push(Monomial::from_exps(vec![]));
        }
        return out;
    }
    rec(&mut current, 0, degree, &mut out);
    out
}

/// Number of monomials of the given degree: C(nvars-1+degree, degree).
pub fn monomial_count(nvars: usize, degree: usize) -> usize {
    if nvars == 0 {
        return usize::from(degree == 0);
    }
    binomial(nvars - 1 + degree, degree)
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as usize
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_enumeration_matches_count() {
        for nvars in 1..5 {
            for d in 0..6 {
                let monos = monomials_of_degree(nvars, d);
                assert_eq!(monos.len(), monomial_count(nvars, d));
                assert!(monos.iter().all(|m| m.degree() == d));
            }
        }
    }

    #[test]
    fn lex_reverse_priority_leading_is_high_index() {
        // priority y_3 > y_2 > y_1: y_3 beats y_2^5
        let ord = TermOrder::lex_reverse_priority(3);
        let y3 = Monomial::var(3, 2);
        let mut e = vec![0u8; 3];
        e[1] = 5;
        let y2_5 = Monomial::from_exps(e);
        assert_eq!(ord.cmp(&y3, &y2_5), Ordering::Greater);
    }

    #[test]
    fn grevlex_is_degree_first() {
        let ord = TermOrder::grevlex_default(3);
        let a = Monomial::squarefree(3, [0, 1]);
        let b = Monomial::var(3, 2);
        assert_eq!(ord.cmp(&a, &b), Ordering::Greater);
    }

    #[test]
    fn orders_are_total_and_multiplicative() {
        for ord in [
            TermOrder::lex_reverse_priority(3),
            TermOrder::grevlex_default(3),
            TermOrder::lex(vec![1, 0, 2]),
        ] {
            let monos = monomials_of_degree(3, 3);
            let t = Monomial::var(3, 1);
            for a in &monos {
                for b in &monos {
                    let c = ord.cmp(a, b);
                    assert_eq!(c, ord.cmp(b, a).reverse());
                    // multiplying both sides by a variable preserves order
                    assert_eq!(ord.cmp(&a.mul(&t), &b.mul(&t)), c);
                }
            }
        }
    }

    #[test]
    fn induced_ground_order_reverses_priority() {
        let ord = TermOrder::lex_reverse_priority(4);
        assert_eq!(ord.induced_ground_order(), vec![0, 1, 2, 3]);
    }
}
