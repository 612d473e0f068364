//! Exact rational scalars.
//!
//! Everything in this crate is computed over the rationals. `BigRational`
//! keeps values reduced with a positive denominator, so equality is exact.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

use crate::error::ParseScalarError;

pub type Scalar = BigRational;

pub fn int(v: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(v))
}

pub fn frac(num: i64, den: i64) -> Scalar {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

/// Parses `"7"`, `"-3/4"`, `"0.125"` or `"-2.5"`.
pub fn parse_scalar(text: &str) -> Result<Scalar, ParseScalarError> {
    let s = text.trim();
    let err = || ParseScalarError(text.to_string());
    if s.is_empty() {
        return Err(err());
    }
    if let Some((num, den)) = s.split_once('/') {
        let num: BigInt = num.trim().parse().map_err(|_| err())?;
        let den: BigInt = den.trim().parse().map_err(|_| err())?;
        if den.is_zero() {
            return Err(err());
        }
        return Ok(BigRational::new(num, den));
    }
    if let Some((whole, fraction)) = s.split_once('.') {
        let negative = whole.starts_with('-');
        let digits = whole.trim_start_matches(['-', '+']);
        if !fraction.chars().all(|c| c.is_ascii_digit())
            || !digits.chars().all(|c| c.is_ascii_digit())
            || (digits.is_empty() && fraction.is_empty())
        {
            return Err(err());
        }
        let mantissa: BigInt =
            format!("{}{}", if digits.is_empty() { "0" } else { digits }, fraction).parse().map_err(|_| err())?;
        let den = num_traits::pow(BigInt::from(10), fraction.len());
        let value = BigRational::new(mantissa, den);
        return Ok(if negative { -value } else { value });
    }
    let value: BigInt = s.parse().map_err(|_| err())?;
    Ok(BigRational::from_integer(value))
}

/// `"n"` for integers, `"n/d"` otherwise.
pub fn format_scalar(value: &Scalar) -> String {
    if value.is_integer() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// Display adapter used by the text dumps.
pub struct ScalarDisplay<'a>(pub &'a Scalar);

impl fmt::Display for ScalarDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_scalar(self.0))
    }
}

pub fn is_negative(value: &Scalar) -> bool {
    value.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_all_accepted_forms() {
        assert_eq!(parse_scalar("7").unwrap(), int(7));
        assert_eq!(parse_scalar(" -3/6 ").unwrap(), frac(-1, 2));
        assert_eq!(parse_scalar("0.125").unwrap(), frac(1, 8));
        assert_eq!(parse_scalar("-2.5").unwrap(), frac(-5, 2));
        assert_eq!(parse_scalar(".5").unwrap(), frac(1, 2));
    }

    #[test]
    fn rejects_garbage() {
        for bad in ["", "1/0", "a", "1.2.3", "--1", "1/x", "."] {
            assert!(parse_scalar(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn canonical_form() {
        let v = frac(4, -6);
        assert_eq!(v.denom(), &BigInt::from(3));
        assert_eq!(format_scalar(&v), "-2/3");
        assert_eq!(format_scalar(&int(-4)), "-4");
    }
}
