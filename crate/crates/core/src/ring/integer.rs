use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use super::Ring;
use crate::error::{Error, Result};

/// Arbitrary-precision signed integer.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Integer(BigInt);

impl Integer {
    pub fn new(value: BigInt) -> Self {
        Integer(value)
    }

    pub fn as_bigint(&self) -> &BigInt {
        &self.0
    }

    pub fn into_bigint(self) -> BigInt {
        self.0
    }

    /// Bit length of the magnitude; zero for zero.
    pub fn bits(&self) -> u64 {
        self.0.bits()
    }

    pub fn abs(&self) -> Integer {
        Integer(self.0.abs())
    }

    pub fn is_negative(&self) -> bool {
        self.0.sign() == Sign::Minus
    }

    pub fn to_i64(&self) -> Option<i64> {
        i64::try_from(&self.0).ok()
    }

    pub fn pow(&self, exp: u32) -> Integer {
        Integer(num_traits::pow(self.0.clone(), exp as usize))
    }
}

/// Nonnegative greatest common divisor; `gcd(0, 0) == 0`.
pub fn gcd(a: &Integer, b: &Integer) -> Integer {
    Integer(a.0.gcd(&b.0))
}

impl Ring for Integer {
    const IS_FIELD: bool = false;

    fn zero() -> Self {
        Integer(BigInt::zero())
    }

    fn one() -> Self {
        Integer(BigInt::one())
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn add(&self, rhs: &Self) -> Self {
        Integer(&self.0 + &rhs.0)
    }

    fn sub(&self, rhs: &Self) -> Self {
        Integer(&self.0 - &rhs.0)
    }

    fn mul(&self, rhs: &Self) -> Self {
        Integer(&self.0 * &rhs.0)
    }

    fn exact_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.0.is_zero() {
            return Err(Error::DivideByZero);
        }
        let (q, r) = self.0.div_rem(&rhs.0);
        if !r.is_zero() {
            return Err(Error::InexactDivision {
                dividend: self.to_string(),
                divisor: rhs.to_string(),
                at: None,
            });
        }
        Ok(Integer(q))
    }

    fn size_bits(&self) -> u64 {
        self.bits()
    }
}

impl From<i64> for Integer {
    fn from(v: i64) -> Self {
        Integer(BigInt::from(v))
    }
}

impl From<i32> for Integer {
    fn from(v: i32) -> Self {
        Integer(BigInt::from(v))
    }
}

impl From<BigInt> for Integer {
    fn from(v: BigInt) -> Self {
        Integer(v)
    }
}

impl FromStr for Integer {
    type Err = num_bigint::ParseBigIntError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        // BigInt accepts a leading '+' and underscores are rejected already.
        BigInt::from_str(s).map(Integer)
    }
}

impl fmt::Display for Integer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for Integer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl Add for &Integer {
    type Output = Integer;
    fn add(self, rhs: &Integer) -> Integer {
        Integer(&self.0 + &rhs.0)
    }
}

impl Sub for &Integer {
    type Output = Integer;
    fn sub(self, rhs: &Integer) -> Integer {
        Integer(&self.0 - &rhs.0)
    }
}

impl Mul for &Integer {
    type Output = Integer;
    fn mul(self, rhs: &Integer) -> Integer {
        Integer(&self.0 * &rhs.0)
    }
}

impl Neg for &Integer {
    type Output = Integer;
    fn neg(self) -> Integer {
        Integer(-&self.0)
    }
}

impl Neg for Integer {
    type Output = Integer;
    fn neg(self) -> Integer {
        Integer(-self.0)
    }
}
