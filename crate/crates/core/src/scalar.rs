//! Scalar field abstraction.
//!
//! Every routine in this crate is written against [`Field`], a thin bundle of
//! `num-traits` bounds describing an ordered field with exact arithmetic. The
//! crate root fixes the concrete choice to [`Rational`] (arbitrary-precision
//! fractions); `Ratio<i64>` also satisfies the bound and is handy for quick
//! experiments on small integer data, but it panics on overflow.
//!
//! Floating-point types technically satisfy the trait bounds too, but every
//! algorithm here compares against zero exactly, so they are not supported.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, NumAssignRef, NumRef, Signed};

/// An ordered field with exact arithmetic.
pub trait Field: Clone + Debug + PartialOrd + Signed + NumRef + NumAssignRef + FromPrimitive + Send + Sync {
    /// Embeds a machine integer.
    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("integer embeds into the field")
    }

    /// `self` raised to a non-negative integer power.
    fn pow_u64(&self, mut exp: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc *= &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = base.clone() * &base;
            }
        }
        acc
    }
}

impl<T> Field for T where T: Clone + Debug + PartialOrd + Signed + NumRef + NumAssignRef + FromPrimitive + Send + Sync {}

/// Arbitrary-precision rational number; the ground field of the crate.
pub type Rational = BigRational;

/// Builds `num / den` as a reduced [`Rational`].
///
/// Panics if `den` is zero.
pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Builds the integer `v` as a [`Rational`].
pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}
