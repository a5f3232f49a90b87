//! Exact arithmetic.
//!
//! Three rings share one contract: arbitrary-precision [`Integer`]s, normalized
//! [`Rational`]s and sparse multivariate [`MultiPoly`]s over the integers. All
//! tableau arithmetic is generic over [`Ring`], and every operation performed by
//! an elimination run goes through an [`OpTally`] owned by that run so the
//! operation counts are exact and never shared between runs.

mod integer;
mod poly;
mod rational;

use std::fmt;
use std::ops::{Add, AddAssign, Sub};

use serde::{Deserialize, Serialize};

use crate::error::Result;

pub use integer::{gcd, Integer};
pub use poly::{Monomial, MultiPoly, Var};
pub use rational::Rational;

/// Commutative ring with exact division.
///
/// `exact_div(a, b)` returns `q` with `q * b == a`, or an error when `b` is
/// zero or no such `q` exists in the ring.
pub trait Ring: Clone + Eq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    /// Whether every nonzero element is a unit.
    const IS_FIELD: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn exact_div(&self, rhs: &Self) -> Result<Self>;

    /// Size of the element in bits, the measure used for entry growth.
    fn size_bits(&self) -> u64;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

/// Rings that embed into the rationals; back substitution works over these.
pub trait ToRational: Ring {
    fn to_rational(&self) -> Rational;
}

impl ToRational for Integer {
    fn to_rational(&self) -> Rational {
        Rational::from(self.clone())
    }
}

impl ToRational for Rational {
    fn to_rational(&self) -> Rational {
        self.clone()
    }
}

/// Per-run arithmetic counter. Elimination code routes every ring operation
/// through one of these so reports can compare strategies operation by
/// operation.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OpTally {
    pub mul: u64,
    pub div: u64,
    pub addsub: u64,
}

impl OpTally {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add<T: Ring>(&mut self, a: &T, b: &T) -> T {
        self.addsub += 1;
        a.add(b)
    }

    pub fn sub<T: Ring>(&mut self, a: &T, b: &T) -> T {
        self.addsub += 1;
        a.sub(b)
    }

    pub fn mul<T: Ring>(&mut self, a: &T, b: &T) -> T {
        self.mul += 1;
        a.mul(b)
    }

    pub fn div<T: Ring>(&mut self, a: &T, b: &T) -> Result<T> {
        self.div += 1;
        a.exact_div(b)
    }

    /// Multiplications plus divisions.
    pub fn multiplicative(&self) -> u64 {
        self.mul + self.div
    }

    pub fn total(&self) -> u64 {
        self.mul + self.div + self.addsub
    }
}

impl Add for OpTally {
    type Output = OpTally;

    fn add(self, rhs: OpTally) -> OpTally {
        OpTally {
            mul: self.mul + rhs.mul,
            div: self.div + rhs.div,
            addsub: self.addsub + rhs.addsub,
        }
    }
}

impl AddAssign for OpTally {
    fn add_assign(&mut self, rhs: OpTally) {
        *self = *self + rhs;
    }
}

impl Sub for OpTally {
    type Output = OpTally;

    fn sub(self, rhs: OpTally) -> OpTally {
        OpTally {
            mul: self.mul - rhs.mul,
            div: self.div - rhs.div,
            addsub: self.addsub - rhs.addsub,
        }
    }
}

impl fmt::Display for OpTally {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "mul={} div={} addsub={}",
            self.mul, self.div, self.addsub
        )
    }
}
