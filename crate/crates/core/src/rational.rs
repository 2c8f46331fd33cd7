//! Exact rational scalars.
//!
//! All arithmetic in this crate is exact: scalars are arbitrary-precision
//! rationals kept in lowest terms with positive denominator (the invariants
//! `num_rational::BigRational` maintains by construction). Rationals
//! serialize as the strings `"p/q"` or `"p"` in all JSON I/O.

use crate::error::{ArrError, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rat = BigRational;

pub fn rat_zero() -> Rat {
    Rat::zero()
}

pub fn rat_one() -> Rat {
    Rat::one()
}

pub fn rat_from_i64(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat_from_pair(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Canonical string form: `"p"` for integers, `"p/q"` otherwise.
pub fn rat_to_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `"p"` or `"p/q"` (whitespace-trimmed). Rejects zero denominators.
pub fn rat_from_str(s: &str) -> Result<Rat> {
    let s = s.trim();
    let parse_int = |t: &str| -> Result<BigInt> {
        t.trim()
            .parse::<BigInt>()
            .map_err(|_| ArrError::Parse(format!("invalid integer {t:?}")))
    };
    match s.split_once('/') {
        None => Ok(Rat::from_integer(parse_int(s)?)),
        Some((p, q)) => {
            let num = parse_int(p)?;
            let den = parse_int(q)?;
            if den.is_zero() {
                return Err(ArrError::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Rat::new(num, den))
        }
    }
}

/// Scales a rational vector to a primitive integer vector (clears
/// denominators, divides by content, first nonzero entry positive).
/// Rank computations and row-span questions are invariant under this.
pub fn primitive_integer_vector(row: &[Rat]) -> Vec<BigInt> {
    use num_integer::Integer;
    let mut lcm = BigInt::one();
    for r in row {
        lcm = lcm.lcm(r.denom());
    }
    let mut ints: Vec<BigInt> = row.iter().map(|r| r.numer() * (&lcm / r.denom())).collect();
    let mut content = BigInt::zero();
    for v in &ints {
        content = content.gcd(v);
    }
    if !content.is_zero() && !content.is_one() {
        for v in &mut ints {
            *v = &*v / &content;
        }
    }
    if let Some(first) = ints.iter().find(|v| !v.is_zero()) {
        if first.is_negative() {
            for v in &mut ints {
                *v = -&*v;
            }
        }
    }
    ints
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn string_round_trip() {
        for s in ["3", "-7", "1/2", "-22/7", "0"] {
            let r = rat_from_str(s).unwrap();
            assert_eq!(rat_to_string(&r), s);
        }
    }

    #[test]
    fn parse_normalizes() {
        assert_eq!(rat_to_string(&rat_from_str("2/4").unwrap()), "1/2");
        assert_eq!(rat_to_string(&rat_from_str("3/-6").unwrap()), "-1/2");
        assert_eq!(rat_to_string(&rat_from_str("4/2").unwrap()), "2");
    }

    #[test]
    fn parse_rejects_zero_denominator() {
        assert!(rat_from_str("1/0").is_err());
        assert!(rat_from_str("x").is_err());
    }

    #[test]
    fn primitive_vector_clears_denominators() {
        let row = vec![rat_from_pair(1, 2), rat_from_pair(-1, 3), rat_zero()];
        let ints = primitive_integer_vector(&row);
        assert_eq!(ints, vec![BigInt::from(3), BigInt::from(-2), BigInt::from(0)]);
    }
}
