use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("denominator must be nonzero")]
pub struct ZeroDenominator;

/// Reduced fraction with a positive denominator.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactRational(BigRational);

impl ExactRational {
    pub fn new(numer: BigInt, denom: BigInt) -> Result<Self, ZeroDenominator> {
        if denom.is_zero() {
            return Err(ZeroDenominator);
        }
        // `Ratio::new` reduces and moves the sign onto the numerator.
        Ok(Self(BigRational::new(numer, denom)))
    }

    /// `favorable / total` for a pair of counts.
    pub fn from_counts(favorable: &BigUint, total: &BigUint) -> Result<Self, ZeroDenominator> {
        Self::new(BigInt::from(favorable.clone()), BigInt::from(total.clone()))
    }

    pub fn zero() -> Self {
        Self(BigRational::zero())
    }

    pub fn one() -> Self {
        Self(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    /// True when `0 <= self <= 1`.
    pub fn is_probability(&self) -> bool {
        !self.0.is_negative() && self.0 <= BigRational::one()
    }

    pub fn abs_diff(&self, other: &Self) -> Self {
        Self((&self.0 - &other.0).abs())
    }

    /// Nearest `f64`, for diagnostics and sampling comparisons only.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    pub fn as_ratio(&self) -> &BigRational {
        &self.0
    }
}

impl From<BigRational> for ExactRational {
    fn from(value: BigRational) -> Self {
        Self(value)
    }
}

impl fmt::Display for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl Serialize for ExactRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Builds the reduced fraction `num / den`.
pub fn make_rational(
    num: impl Into<BigInt>,
    den: impl Into<BigInt>,
) -> Result<ExactRational, ZeroDenominator> {
    ExactRational::new(num.into(), den.into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::Integer;
    use proptest::prelude::*;

    #[test]
    fn reduces_and_normalizes() {
        assert_eq!(make_rational(9, 15).unwrap().to_string(), "3/5");
        assert_eq!(make_rational(0, 7).unwrap().to_string(), "0/1");
        assert_eq!(make_rational(-2, -4).unwrap().to_string(), "1/2");
        assert_eq!(make_rational(2, -4).unwrap().to_string(), "-1/2");
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(make_rational(1, 0), Err(ZeroDenominator));
    }

    #[test]
    fn probability_range() {
        assert!(make_rational(0, 3).unwrap().is_probability());
        assert!(make_rational(3, 3).unwrap().is_probability());
        assert!(!make_rational(90, 66).unwrap().is_probability());
        assert!(!make_rational(-1, 66).unwrap().is_probability());
    }

    proptest! {
        #[test]
        fn stored_reduced_and_idempotent(num in -10_000i64..10_000, den in 1i64..10_000, flip in any::<bool>()) {
            let den = if flip { -den } else { den };
            let r = make_rational(num, den).unwrap();
            prop_assert!(r.denom() > &BigInt::zero());
            prop_assert!(r.numer().gcd(r.denom()).is_one());
            let again = ExactRational::new(r.numer().clone(), r.denom().clone()).unwrap();
            prop_assert_eq!(&again, &r);
            // Cross-multiplication against the unreduced input.
            prop_assert_eq!(r.numer() * BigInt::from(den), BigInt::from(num) * r.denom());
        }
    }
}
