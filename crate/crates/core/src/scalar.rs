//! Scalar traits for exact arithmetic.
//!
//! Every operation is checked: an overflow surfaces as [`Error::Overflow`]
//! instead of wrapping. Arbitrary precision is available through
//! [`num_bigint::BigInt`] and [`num_rational::BigRational`].

use std::fmt;
use std::hash::Hash;
use std::ops::Neg;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// An exact commutative ring element with checked arithmetic.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + Send
    + Sync
{
    fn from_i64(v: i64) -> Self;

    fn try_add(&self, rhs: &Self) -> Result<Self> {
        self.checked_add(rhs).ok_or(Error::Overflow)
    }

    fn try_sub(&self, rhs: &Self) -> Result<Self> {
        self.checked_sub(rhs).ok_or(Error::Overflow)
    }

    fn try_mul(&self, rhs: &Self) -> Result<Self> {
        self.checked_mul(rhs).ok_or(Error::Overflow)
    }
}

/// An exact integer type: the scalar of fraction-free elimination.
pub trait IntScalar: Scalar + Integer + Signed + CheckedDiv + ToPrimitive + Hash {
    /// Exact quotient; errors if `rhs` does not divide `self`.
    fn try_div_exact(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::Singular("division by zero".into()));
        }
        let (q, r) = self.div_rem(rhs);
        if !r.is_zero() {
            return Err(Error::InvalidArgument(format!("{self} is not divisible by {rhs}")));
        }
        Ok(q)
    }
}

macro_rules! prim_scalar {
    ($($t:ty),*) => {$(
        impl Scalar for $t {
            fn from_i64(v: i64) -> Self {
                v as $t
            }
        }
        impl IntScalar for $t {}
    )*};
}

prim_scalar!(i64, i128);

impl Scalar for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
}

impl IntScalar for BigInt {}

impl<T: IntScalar> Scalar for Ratio<T> {
    fn from_i64(v: i64) -> Self {
        Ratio::from_integer(T::from_i64(v))
    }
}
