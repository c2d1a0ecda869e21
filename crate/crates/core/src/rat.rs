//! Arbitrary-precision rational scalars and their text forms.
//!
//! All instance formats carry rationals as `p/q` strings (or plain integers,
//! or decimals which expand exactly), so values survive emit/parse without
//! precision loss.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

pub type Rational = BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RationalParseError {
    #[error("empty rational token")]
    Empty,
    #[error("invalid rational `{0}`")]
    Invalid(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
}

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    assert!(d != 0);
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `p/q`, an integer, or a decimal such as `-3.25` (expanded exactly
/// to `-13/4`).
pub fn parse_rational(token: &str) -> Result<Rational, RationalParseError> {
    let s = token.trim();
    if s.is_empty() {
        return Err(RationalParseError::Empty);
    }
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num
            .parse()
            .map_err(|_| RationalParseError::Invalid(token.to_string()))?;
        let d: BigInt = den
            .parse()
            .map_err(|_| RationalParseError::Invalid(token.to_string()))?;
        if d.is_zero() {
            return Err(RationalParseError::ZeroDenominator(token.to_string()));
        }
        return Ok(Rational::new(n, d));
    }
    if let Some((int_part, frac_part)) = s.split_once('.') {
        if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
            return Err(RationalParseError::Invalid(token.to_string()));
        }
        let negative = int_part.starts_with('-');
        let int_digits = if int_part.is_empty() || int_part == "-" || int_part == "+" {
            "0"
        } else {
            int_part.trim_start_matches(['-', '+'])
        };
        let whole: BigInt = int_digits
            .parse()
            .map_err(|_| RationalParseError::Invalid(token.to_string()))?;
        let frac: BigInt = frac_part
            .parse()
            .map_err(|_| RationalParseError::Invalid(token.to_string()))?;
        let scale = BigInt::from(10u8).pow(frac_part.len() as u32);
        let magnitude = Rational::new(whole * &scale + frac, scale);
        return Ok(if negative { -magnitude } else { magnitude });
    }
    let n: BigInt = s
        .parse()
        .map_err(|_| RationalParseError::Invalid(token.to_string()))?;
    Ok(Rational::from_integer(n))
}

/// Renders as a plain integer when the denominator is 1, else `p/q`.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Exact conversion of a finite double into a rational.
pub fn rational_from_f64(x: f64) -> Option<Rational> {
    Rational::from_float(x)
}

pub fn rational_to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // Fall back through a reduced approximation for out-of-range values.
        if r.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}
