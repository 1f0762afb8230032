//! Exact rational scalars.
//!
//! Every number in this crate is a [`Rational`]: an arbitrary-precision
//! fraction kept in lowest terms with a positive denominator.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// The integer `n` as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// The fraction `num/den`, reduced. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"a"` or `"a/b"` with `b > 0`. `field` names the input in the error.
pub fn parse_rational(field: &str, text: &str) -> Result<Rational> {
    let text = text.trim();
    let bad = |why: &str| Error::input(field, format!("malformed rational {text:?}: {why}"));
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| bad("numerator is not an integer"))?;
    let den: BigInt = den
        .parse()
        .map_err(|_| bad("denominator is not an integer"))?;
    if !den.is_positive() {
        return Err(bad("denominator must be positive"));
    }
    Ok(Rational::new(num, den))
}

/// Parses a comma-separated list of rationals. An empty string is an empty list.
pub fn parse_rational_list(field: &str, text: &str) -> Result<Vec<Rational>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',').map(|t| parse_rational(field, t)).collect()
}

/// Canonical exact text form: `"-3"`, `"22/7"`.
pub fn format_rational(x: &Rational) -> String {
    x.to_string()
}

/// Lossy conversion for display columns only.
pub fn approx(x: &Rational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

pub(crate) fn pow(x: &Rational, e: usize) -> Rational {
    let mut acc = int(1);
    for _ in 0..e {
        acc *= x;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_integers_and_fractions() {
        assert_eq!(parse_rational("x", "-3").unwrap(), int(-3));
        assert_eq!(parse_rational("x", "6/4").unwrap(), rat(3, 2));
        assert_eq!(parse_rational("x", " -22/7 ").unwrap(), rat(-22, 7));
    }

    #[test]
    fn rejects_bad_denominators() {
        for text in ["1/0", "1/-2", "a", "1/b", ""] {
            let err = parse_rational("q-coeffs", text).unwrap_err();
            assert!(err.to_string().contains("q-coeffs"), "{err}");
        }
    }

    #[test]
    fn canonical_text() {
        assert_eq!(format_rational(&rat(-6, 3)), "-2");
        assert_eq!(format_rational(&rat(44, 14)), "22/7");
        assert_eq!(format_rational(&rat(3, -4)), "-3/4");
    }

    #[test]
    fn list_parsing() {
        assert_eq!(
            parse_rational_list("nodes", "-1,1,4").unwrap(),
            vec![int(-1), int(1), int(4)]
        );
        assert!(parse_rational_list("nodes", "").unwrap().is_empty());
    }
}
