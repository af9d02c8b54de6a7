//! Exact ground-ring arithmetic: rationals, sparse multivariate polynomials
//! and their fraction field.

mod multipoly;
mod polyrecord;
mod ratfunc;
mod rational;

pub use multipoly::{Monomial, MultiPoly};
pub use polyrecord::PolyRecord;
pub use ratfunc::RatFunc;
pub use rational::Rational;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::Result;

/// Coefficient ring shared by [`Rational`], [`MultiPoly`] and [`RatFunc`].
///
/// A polynomial needs to know its variable count before it can produce a
/// zero or a one, so constants are derived from an existing element
/// (`zero_like`, `one_like`, ...) rather than from thin air.
pub trait Ring:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + 'static
{
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn int_like(&self, n: i64) -> Self;
    fn rat_like(&self, q: &Rational) -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool {
        *self == self.one_like()
    }
}

/// Rings in which every nonzero element is invertible.
pub trait Field: Ring {
    /// Multiplicative inverse; error on zero.
    fn try_inv(&self) -> Result<Self>;

    fn try_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.clone() * rhs.try_inv()?)
    }
}
