//! Exact rationals and the handful of helpers the rest of the crate needs.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// Parses `INT` or `INT/INT`, with an optional leading minus sign.
pub fn parse(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let (n, d) = match body.split_once('/') {
        Some((n, d)) => (n, d),
        None => (body, "1"),
    };
    if n.is_empty() || d.is_empty() || !n.bytes().all(|b| b.is_ascii_digit()) || !d.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let n: BigInt = n.parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    let r = Rational::new(n, d);
    Some(if neg { -r } else { r })
}

/// `p` or `p/q` in lowest terms.
pub fn fmt(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Bit size used for pivot selection.
pub fn bits(r: &Rational) -> u64 {
    r.numer().abs().bits() + r.denom().bits()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        assert_eq!(parse("3/6"), Some(frac(1, 2)));
        assert_eq!(parse("-7"), Some(int(-7)));
        assert_eq!(parse("1/0"), None);
        assert_eq!(parse("1/"), None);
        assert_eq!(parse("a"), None);
        assert_eq!(fmt(&frac(-2, 4)), "-1/2");
        assert_eq!(fmt(&int(5)), "5");
    }
}
