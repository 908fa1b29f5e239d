//! Exact rational scalars and their canonical text form.
//!
//! Every quantity in this crate is an arbitrary-precision rational; no
//! floating point is used anywhere. The canonical text form of a rational is
//! `p/q` in lowest terms with a positive denominator, printed as the bare
//! integer `p` when `q = 1`. [`parse_rational`] and [`format_rational`] are
//! inverse to each other on canonical strings.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::error::Error;

/// The exact scalar type used throughout the crate.
pub type Rational = BigRational;

/// The rational `n`.
pub fn rat(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// The rational `n/d`, reduced. Panics if `d == 0`; intended for literals.
pub fn ratio(n: i64, d: i64) -> Rational {
    assert!(d != 0, "ratio() requires a nonzero denominator");
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `p` or `p/q` (optionally negative) into a reduced rational.
///
/// # Errors
///
/// Rejects empty input, non-integer parts, and a zero denominator.
pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    let (num_part, den_part) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let numer: BigInt = num_part
        .parse()
        .map_err(|_| Error::invalid(format!("malformed rational `{s}`")))?;
    let denom: BigInt = match den_part {
        Some(d) => d
            .parse()
            .map_err(|_| Error::invalid(format!("malformed rational `{s}`")))?,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(Error::invalid(format!("zero denominator in `{s}`")));
    }
    // BigRational::new reduces to lowest terms and normalizes the sign.
    Ok(BigRational::new(numer, denom))
}

/// Formats a rational in canonical form: `p/q` in lowest terms, bare `p` when
/// the denominator is 1.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Floor of a rational as a `BigInt`.
pub fn floor_int(r: &Rational) -> BigInt {
    r.floor().to_integer()
}

/// True if `r` is an integer.
pub fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

/// `|r|`.
pub fn abs(r: &Rational) -> Rational {
    r.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_integers_and_fractions() {
        assert_eq!(parse_rational("3").unwrap(), rat(3));
        assert_eq!(parse_rational("-3").unwrap(), rat(-3));
        assert_eq!(parse_rational("4/6").unwrap(), ratio(2, 3));
        assert_eq!(parse_rational("-4/6").unwrap(), ratio(-2, 3));
        // Sign is normalized onto the numerator.
        assert_eq!(parse_rational("4/-6").unwrap(), ratio(-2, 3));
        assert_eq!(format_rational(&parse_rational("4/-6").unwrap()), "-2/3");
    }

    #[test]
    fn rejects_malformed_input() {
        for bad in ["", "x", "1/", "/2", "1/0", "1.5", "1 /2", "--3"] {
            assert!(parse_rational(bad).is_err(), "should reject {bad:?}");
        }
    }

    #[test]
    fn formats_canonically() {
        assert_eq!(format_rational(&rat(5)), "5");
        assert_eq!(format_rational(&rat(-5)), "-5");
        assert_eq!(format_rational(&ratio(1, 2)), "1/2");
        assert_eq!(format_rational(&ratio(-7, 2)), "-7/2");
        assert_eq!(format_rational(&rat(0)), "0");
    }

    #[test]
    fn floor_matches_integer_division() {
        assert_eq!(floor_int(&ratio(7, 2)), BigInt::from(3));
        assert_eq!(floor_int(&ratio(-7, 2)), BigInt::from(-4));
        assert_eq!(floor_int(&rat(4)), BigInt::from(4));
    }
}
