//! The ground field: arbitrary-precision rationals.
//!
//! `BigRational` already keeps values in lowest terms with a positive
//! denominator, so the crate works with it directly and only adds the text
//! encoding used by input documents (`"p/q"` or `"p"`).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Scalar {
    Scalar::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

/// `(-1)^k` as a scalar.
pub fn sign(k: i64) -> Scalar {
    if k.rem_euclid(2) == 0 {
        one()
    } else {
        -one()
    }
}

/// Parses `"p/q"` or `"p"` (optional leading sign, no whitespace) into
/// canonical form.
pub fn parse_scalar(text: &str) -> Result<Scalar, Error> {
    let bad = || Error::BadScalar(text.to_string());
    let parse_int = |s: &str| -> Result<BigInt, Error> {
        if s.is_empty() || s.starts_with('+') && s.len() == 1 {
            return Err(bad());
        }
        s.parse::<BigInt>().map_err(|_| bad())
    };
    match text.split_once('/') {
        None => Ok(Scalar::from_integer(parse_int(text)?)),
        Some((n, d)) => {
            let n = parse_int(n)?;
            let d = parse_int(d)?;
            if d.is_zero() || d.is_negative() {
                return Err(bad());
            }
            Ok(Scalar::new(n, d))
        }
    }
}

/// Canonical `"p/q"` text; the denominator is always written.
pub fn format_scalar(x: &Scalar) -> String {
    format!("{}/{}", x.numer(), x.denom())
}
