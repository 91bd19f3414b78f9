//! Exact scalars.
//!
//! All scalar values in this crate (metric parameters, tensor entries,
//! polynomial coefficients) are arbitrary-precision rationals. `BigRational`
//! already keeps `gcd(|num|, den) = 1` and `den > 0` after every operation,
//! which is exactly the normal form we rely on for `==`.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

pub type Rational = num_rational::BigRational;

/// `n/d` as a reduced rational. Panics on `d = 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Integer `n` as a rational.
pub fn rat_i(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"p/q"`, `"p"`, `"-p/q"`. Whitespace is not accepted.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let parse_int = |t: &str| -> Result<BigInt, String> {
        t.parse::<BigInt>()
            .map_err(|_| format_err(s))
    };
    match s.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(s)?)),
        Some((p, q)) => {
            let den = parse_int(q)?;
            if den.is_zero() {
                return Err(format_err(s));
            }
            Ok(Rational::new(parse_int(p)?, den))
        }
    }
}

fn format_err(s: &str) -> String {
    let mut m = String::from("malformed rational `");
    m.push_str(s);
    m.push_str("` (expected p or p/q with nonzero q)");
    m
}

/// Canonical `"p/q"` rendering; integers render as `"p"`.
pub fn format_rational(r: &Rational) -> String {
    if r.denom() == &BigInt::from(1) {
        r.numer().to_string()
    } else {
        let mut s = r.numer().to_string();
        s.push('/');
        s.push_str(&r.denom().to_string());
        s
    }
}

/// Exact square root of a nonnegative rational, if one exists.
pub fn exact_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    if r.is_zero() {
        return Some(Rational::zero());
    }
    let ns = r.numer().sqrt();
    let ds = r.denom().sqrt();
    if &(&ns * &ns) == r.numer() && &(&ds * &ds) == r.denom() {
        Some(Rational::new(ns, ds))
    } else {
        None
    }
}

/// True iff `r` is the square of a rational.
pub fn is_perfect_square(r: &Rational) -> bool {
    exact_sqrt(r).is_some()
}

/// Sum of a slice of rationals.
pub fn sum(vals: &[Rational]) -> Rational {
    vals.iter().fold(Rational::zero(), |a, b| a + b)
}

/// Dot product of two equal-length slices.
pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).fold(Rational::zero(), |s, t| s + t)
}

/// Componentwise `a + c*b`.
pub fn axpy(a: &[Rational], c: &Rational, b: &[Rational]) -> Vec<Rational> {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x + c * y).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_stays_reduced() {
        let a = rat(2, 4);
        assert_eq!(a, rat(1, 2));
        let b = rat(1, 3) + rat(1, 6);
        assert_eq!(b, rat(1, 2));
        assert_eq!(*b.denom(), BigInt::from(2));
        let c = rat(-3, -6);
        assert!(c.denom() > &BigInt::from(0));
        assert_eq!(c, rat(1, 2));
    }

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["-2/1", "1", "7/9", "-13/40", "0"] {
            let r = parse_rational(s).unwrap();
            let back = parse_rational(&format_rational(&r)).unwrap();
            assert_eq!(r, back);
        }
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("a/b").is_err());
        assert!(parse_rational("1.5").is_err());
    }

    #[test]
    fn sqrt_detects_squares() {
        assert_eq!(exact_sqrt(&rat(9, 16)), Some(rat(3, 4)));
        assert_eq!(exact_sqrt(&rat(2, 1)), None);
        assert_eq!(exact_sqrt(&rat(0, 1)), Some(rat(0, 1)));
        assert!(exact_sqrt(&rat(-4, 1)).is_none());
        assert!(is_perfect_square(&rat(25, 49)));
        assert!(!is_perfect_square(&rat(25, 48)));
    }
}
