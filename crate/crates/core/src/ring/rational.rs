use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{Integer, Ring};
use crate::error::{Error, Result};

/// Exact rational in lowest terms with a positive denominator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `numer / denom`, normalizing sign and common factors.
    pub fn new(numer: Integer, denom: Integer) -> Result<Self> {
        if denom.is_zero() {
            return Err(Error::DivideByZero);
        }
        Ok(Rational(BigRational::new(
            numer.into_bigint(),
            denom.into_bigint(),
        )))
    }

    pub fn from_integer(value: Integer) -> Self {
        Rational(BigRational::from_integer(value.into_bigint()))
    }

    pub fn numer(&self) -> Integer {
        Integer::new(self.0.numer().clone())
    }

    pub fn denom(&self) -> Integer {
        Integer::new(self.0.denom().clone())
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// True when the stored pair is already in canonical form.
    pub fn is_normalized(&self) -> bool {
        let renormalized = BigRational::new(self.0.numer().clone(), self.0.denom().clone());
        renormalized.numer() == self.0.numer() && renormalized.denom() == self.0.denom()
    }
}

impl Ring for Rational {
    const IS_FIELD: bool = true;

    fn zero() -> Self {
        Rational(BigRational::zero())
    }

    fn one() -> Self {
        Rational(BigRational::one())
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn add(&self, rhs: &Self) -> Self {
        Rational(&self.0 + &rhs.0)
    }

    fn sub(&self, rhs: &Self) -> Self {
        Rational(&self.0 - &rhs.0)
    }

    fn mul(&self, rhs: &Self) -> Self {
        Rational(&self.0 * &rhs.0)
    }

    fn exact_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.0.is_zero() {
            return Err(Error::DivideByZero);
        }
        Ok(Rational(&self.0 / &rhs.0))
    }

    fn size_bits(&self) -> u64 {
        self.0.numer().bits().max(self.0.denom().bits())
    }
}

impl From<Integer> for Rational {
    fn from(value: Integer) -> Self {
        Rational::from_integer(value)
    }
}

impl From<i64> for Rational {
    fn from(value: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(value)))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
