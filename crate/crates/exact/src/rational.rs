//! Parsing and printing of arbitrary-precision rationals.
//!
//! The wire format is `p/q` or `p` (for q = 1) with an optional leading
//! minus sign and no whitespace inside a token. `num_rational::BigRational`
//! already maintains the reduced-form invariant (gcd 1, positive
//! denominator), so it is used directly as the scalar type.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::ExactError;

/// The exact scalar type used throughout the workspace.
pub type Rat = BigRational;

/// Shorthand constructor for small rationals, mostly used in tests.
pub fn rat(num: i64, den: i64) -> Rat {
    assert!(den != 0, "rat: zero denominator");
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Parse a rational token of the form `p` or `p/q`.
///
/// `q` must be a positive integer literal; the sign, if any, belongs to `p`.
pub fn parse_rational(token: &str) -> Result<Rat, ExactError> {
    let bad = || ExactError::BadRational(token.to_string());
    let (num_str, den_str) = match token.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (token, None),
    };
    let num = parse_int(num_str, true).ok_or_else(bad)?;
    let den = match den_str {
        Some(d) => {
            let den = parse_int(d, false).ok_or_else(bad)?;
            if den.is_zero() {
                return Err(bad());
            }
            den
        }
        None => BigInt::one(),
    };
    Ok(Rat::new(num, den))
}

fn parse_int(s: &str, allow_sign: bool) -> Option<BigInt> {
    let digits = match s.strip_prefix('-') {
        Some(rest) if allow_sign => rest,
        Some(_) => return None,
        None => s,
    };
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

/// Print a rational as `p` (q = 1) or `p/q`.
pub fn format_rational(x: &Rat) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_roundtrip() {
        for s in ["0", "7", "-3", "1/2", "-22/7", "100000000000000000001/3"] {
            let x = parse_rational(s).unwrap();
            assert_eq!(format_rational(&x), s);
        }
    }

    #[test]
    fn parse_reduces() {
        assert_eq!(parse_rational("4/6").unwrap(), rat(2, 3));
        assert_eq!(format_rational(&parse_rational("8/4").unwrap()), "2");
    }

    #[test]
    fn parse_rejects_garbage() {
        for s in ["", "1/0", "1/-2", "1 /2", "a", "1.5", "--3", "+4", "3/", "/3"] {
            assert!(parse_rational(s).is_err(), "should reject {s:?}");
        }
    }
}
