//! Exact scalar types.
//!
//! Everything in this crate is computed over an integer ring `T` and its
//! field of fractions `Ratio<T>`. Machine integers (`i64`, `i128`) are fast
//! enough for every polygon and lattice computation at desk scale; `BigInt`
//! is used where intermediate values grow (interpolation matrices).

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// Integer ring the exact algorithms are generic over.
pub trait Scalar:
    Integer + Signed + Clone + Debug + Display + Hash + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
    /// Converts a small machine integer. Panics only if `T` cannot hold it,
    /// which never happens for the supported types.
    #[inline]
    fn of(value: i64) -> Self {
        Self::from_i64(value).expect("scalar type holds every i64")
    }
}

impl Scalar for i64 {}
impl Scalar for i128 {}
impl Scalar for BigInt {}

/// Builds the exact rational `num/den`.
#[inline]
pub fn frac<T: Scalar>(num: i64, den: i64) -> Ratio<T> {
    Ratio::new(T::of(num), T::of(den))
}

/// Lifts an integer to a rational.
#[inline]
pub fn lift<T: Scalar>(value: T) -> Ratio<T> {
    Ratio::from_integer(value)
}

/// Lowest-terms string form: `"5/2"`, `"-3"`, `"0"`.
pub fn fraction_string<T: Scalar>(value: &Ratio<T>) -> String {
    let value = value.reduced();
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// Parses `"p/q"` or `"p"` into a reduced rational.
pub fn parse_fraction<T: Scalar>(text: &str) -> Option<Ratio<T>> {
    let text = text.trim();
    match text.split_once('/') {
        Some((num, den)) => {
            let num = T::from_i64(num.trim().parse().ok()?)?;
            let den = T::from_i64(den.trim().parse().ok()?)?;
            if den.is_zero() {
                return None;
            }
            Some(Ratio::new(num, den))
        }
        None => Some(Ratio::from_integer(T::from_i64(text.parse().ok()?)?)),
    }
}

/// Smallest integer not below `value`.
pub fn ceil_ratio<T: Scalar>(value: &Ratio<T>) -> T {
    value.ceil().to_integer()
}

/// Largest integer not above `value`.
pub fn floor_ratio<T: Scalar>(value: &Ratio<T>) -> T {
    value.floor().to_integer()
}

/// gcd of all entries, zero for an all-zero slice.
pub fn content<T: Scalar>(values: &[T]) -> T {
    values.iter().fold(T::zero(), |acc, v| acc.gcd(v))
}

/// Least common multiple of the denominators.
pub fn common_denominator<T: Scalar>(values: &[Ratio<T>]) -> T {
    values.iter().fold(T::one(), |acc, v| acc.lcm(v.denom()))
}

/// Converts to the machine-integer type used in reports.
pub fn to_i64<T: Scalar>(value: &T) -> Option<i64> {
    value.to_i64()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fraction_strings_are_lowest_terms() {
        assert_eq!(fraction_string(&frac::<i64>(10, 4)), "5/2");
        assert_eq!(fraction_string(&frac::<i64>(-6, 3)), "-2");
        assert_eq!(fraction_string(&frac::<i64>(0, 7)), "0");
        assert_eq!(fraction_string(&frac::<BigInt>(-1, -3)), "1/3");
    }

    #[test]
    fn parse_round_trips() {
        for text in ["5/2", "-3", "0", "7/3"] {
            let value: Ratio<i64> = parse_fraction(text).unwrap();
            assert_eq!(fraction_string(&value), text);
        }
        assert!(parse_fraction::<i64>("1/0").is_none());
        assert!(parse_fraction::<i64>("x").is_none());
    }

    #[test]
    fn rounding() {
        assert_eq!(ceil_ratio(&frac::<i64>(43, 2)), 22);
        assert_eq!(ceil_ratio(&frac::<i64>(-1, 2)), 0);
        assert_eq!(floor_ratio(&frac::<i64>(-1, 2)), -1);
        assert_eq!(content(&[6i64, -4, 10]), 2);
        assert_eq!(content::<i64>(&[]), 0);
    }
}
