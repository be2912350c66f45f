use std::fmt;

use crate::coeff::RatFunc;
use crate::error::{Error, Result};

/// A unital algebra element with scalars in the coefficient tower. Every
/// algebra in the crate implements this, so expressions, words and
/// certificates can be evaluated in any of them.
pub trait Element: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn one_like(&self) -> Self;
    fn zero_like(&self) -> Self;
    fn try_add(&self, other: &Self) -> Result<Self>;
    fn try_mul(&self, other: &Self) -> Result<Self>;
    /// Left multiplication by a scalar.
    fn scale(&self, c: &RatFunc) -> Self;
    fn is_zero(&self) -> bool;

    fn try_inverse(&self) -> Result<Self> {
        Err(Error::KindMismatch(format!("`{self}` is not invertible here")))
    }

    fn negated(&self) -> Self {
        self.scale(&RatFunc::from_int(-1))
    }

    fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.negated())
    }

    fn try_pow(&self, k: i64) -> Result<Self> {
        let base = if k < 0 {
            self.try_inverse()?
        } else {
            self.clone()
        };
        let mut acc = self.one_like();
        for _ in 0..k.unsigned_abs() {
            acc = acc.try_mul(&base)?;
        }
        Ok(acc)
    }
}

impl Element for RatFunc {
    fn one_like(&self) -> Self {
        RatFunc::one()
    }

    fn zero_like(&self) -> Self {
        RatFunc::zero()
    }

    fn try_add(&self, other: &Self) -> Result<Self> {
        Ok(self.add(other))
    }

    fn try_mul(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(other))
    }

    fn scale(&self, c: &RatFunc) -> Self {
        c.mul(self)
    }

    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }

    fn try_inverse(&self) -> Result<Self> {
        self.inv()
    }

    fn try_pow(&self, k: i64) -> Result<Self> {
        self.pow(k)
    }
}
