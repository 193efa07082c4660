//! Exact rational numbers.
//!
//! Every probability and measure value in the crate is a [`Rational`]:
//! an arbitrary-precision fraction kept in lowest terms with a positive
//! denominator. Nothing is ever rounded.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// Parses `"p/q"` or an integer string such as `"1"` or `"-3"`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let malformed = || Error::MalformedRational(text.to_string());
    let int = |s: &str| -> Result<BigInt> {
        let digits = s.strip_prefix('-').unwrap_or(s);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(malformed());
        }
        s.parse::<BigInt>().map_err(|_| malformed())
    };
    match text.split_once('/') {
        None => Ok(Rational::from_integer(int(text)?)),
        Some((num, den)) => {
            let den = int(den)?;
            if den.is_zero() || den.is_negative() {
                return Err(malformed());
            }
            Ok(Rational::new(int(num)?, den))
        }
    }
}

/// Lowest-terms `"p/q"`, or just `"p"` for integers.
pub fn format_rational(value: &Rational) -> String {
    value.to_string()
}

pub fn is_probability(value: &Rational) -> bool {
    !value.is_negative() && *value <= Rational::one()
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

pub(crate) fn dot(lhs: &[Rational], rhs: &[Rational]) -> Rational {
    assert_eq!(lhs.len(), rhs.len(), "dimension mismatch");
    lhs.iter()
        .zip(rhs)
        .filter(|(a, b)| !a.is_zero() && !b.is_zero())
        .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
}
