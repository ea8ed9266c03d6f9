//! Minimal algebraic contracts shared by the coefficient rings.
//!
//! Multiplication is fallible because products in the skew Laurent ring may
//! need to move a coefficient past a negative power of `t`, which is only
//! possible when the coefficient lies in the image of the shift.

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub trait Ring: Clone + fmt::Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    /// Zero test. For truncated series this means "no known nonzero coefficient".
    fn vanishes(&self) -> bool;
    fn plus(&self, rhs: &Self) -> Self;
    fn negate(&self) -> Self;
    fn minus(&self, rhs: &Self) -> Self {
        self.plus(&rhs.negate())
    }
    fn times(&self, rhs: &Self) -> Result<Self>;

    fn pow(&self, exp: u32) -> Result<Self> {
        let mut acc = self.one_like();
        for _ in 0..exp {
            acc = acc.times(self)?;
        }
        Ok(acc)
    }
}

pub trait DivisionRing: Ring {
    fn try_inv(&self) -> Result<Self>;
}

/// The shift endomorphism applied `k` times. Rings without a twist use the identity.
pub trait Endomorphic {
    fn twist(&self, k: u32) -> Self;
}

/// Embedding of a coefficient ring into an ambient ring, anchored at an
/// ambient element (needed when the ambient ring carries parameters).
pub trait Lift<C> {
    fn lift(&self, c: &C) -> Self;
}

impl Ring for BigRational {
    fn zero_like(&self) -> Self {
        BigRational::zero()
    }
    fn one_like(&self) -> Self {
        BigRational::one()
    }
    fn vanishes(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn negate(&self) -> Self {
        -self
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Result<Self> {
        Ok(self * rhs)
    }
}

impl DivisionRing for BigRational {
    fn try_inv(&self) -> Result<Self> {
        if Zero::is_zero(self) {
            return Err(Error::DivisionByZero);
        }
        Ok(self.recip())
    }
}

impl Endomorphic for BigRational {
    fn twist(&self, _k: u32) -> Self {
        self.clone()
    }
}

impl Lift<BigRational> for BigRational {
    fn lift(&self, c: &BigRational) -> Self {
        c.clone()
    }
}
