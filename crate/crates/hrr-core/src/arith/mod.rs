//! Exact scalar arithmetic and the small amount of classical machinery
//! the rest of the crate is built on: arbitrary-precision rationals,
//! truncated power series, univariate polynomials, dense linear algebra
//! over the rationals, and the Bernoulli/Chebyshev sequences.

mod matrix;
mod poly;
mod sequences;
mod series;

pub use matrix::{QMatrix, SolveOutcome};
pub use poly::Polynomial1;
pub use sequences::{
    bernoulli, binomial, chebyshev, chebyshev_even_lambda, falling_binomial_poly,
    modified_bernoulli, modified_bernoulli_closed_form,
};
pub use series::PowerSeries;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational number. Always in lowest terms with a
/// positive denominator; every operation in this crate is exact.
pub type Rat = BigRational;

/// Rational from an integer pair.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Rational from an integer.
pub fn rat_int(num: i64) -> Rat {
    Rat::from_integer(BigInt::from(num))
}

/// Renders a rational as `p/q`, or as a plain integer when `q` is one.
pub fn format_rat(value: &Rat) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// Parses what [`format_rat`] produces.
pub fn parse_rat(text: &str) -> Option<Rat> {
    let mut parts = text.splitn(2, '/');
    let numer: BigInt = parts.next()?.trim().parse().ok()?;
    match parts.next() {
        None => Some(Rat::from_integer(numer)),
        Some(d) => {
            let denom: BigInt = d.trim().parse().ok()?;
            if denom.is_zero() {
                None
            } else {
                Some(Rat::new(numer, denom))
            }
        }
    }
}

/// Exact integer extraction; `None` when the value is not an integer.
pub fn to_integer(value: &Rat) -> Option<BigInt> {
    if value.denom().is_one() {
        Some(value.numer().clone())
    } else {
        None
    }
}

/// Numerator magnitude, used by the pivot heuristic in [`QMatrix`].
pub(crate) fn numer_abs(value: &Rat) -> BigInt {
    value.numer().abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rat_formatting_round_trips() {
        for (n, d) in [(1, 48), (-1, 5760), (2592, 1), (0, 7)] {
            let r = rat(n, d);
            assert_eq!(parse_rat(&format_rat(&r)).unwrap(), r);
        }
        assert_eq!(format_rat(&rat(1, 48)), "1/48");
        assert_eq!(format_rat(&rat_int(2592)), "2592");
        assert_eq!(format_rat(&rat(-6, 4)), "-3/2");
    }

    #[test]
    fn integer_extraction() {
        assert_eq!(to_integer(&rat(84, 2)), Some(BigInt::from(42)));
        assert_eq!(to_integer(&rat(1, 2)), None);
    }
}
