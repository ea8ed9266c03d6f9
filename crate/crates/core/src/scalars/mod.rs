//! The ground field `F = Q(x0, x1, ...)` and the shift endomorphism `x_i -> x_{i+1}`.

mod monomial;
mod mpoly;
mod ratfunc;

pub use monomial::Monomial;
pub use mpoly::MPoly;
pub(crate) use mpoly::fmt_rational;
pub use ratfunc::{clear_denominators, RatFunc};

use num_rational::BigRational;

use crate::error::Result;
use crate::ring::{DivisionRing, Endomorphic, Lift, Ring};

/// `sigma^k(f)`.
pub fn shift(f: &RatFunc, k: u32) -> RatFunc {
    f.shift(k)
}

/// The `g` with `sigma^k(g) = f`, when the stored form of `f` avoids `x0 .. x_{k-1}`.
pub fn unshift(f: &RatFunc, k: u32) -> Result<RatFunc> {
    f.unshift(k)
}

impl Ring for RatFunc {
    fn zero_like(&self) -> Self {
        RatFunc::zero()
    }
    fn one_like(&self) -> Self {
        RatFunc::one()
    }
    fn vanishes(&self) -> bool {
        RatFunc::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self.add(rhs)
    }
    fn negate(&self) -> Self {
        self.neg()
    }
    fn minus(&self, rhs: &Self) -> Self {
        self.sub(rhs)
    }
    fn times(&self, rhs: &Self) -> Result<Self> {
        Ok(self.mul(rhs))
    }
}

impl DivisionRing for RatFunc {
    fn try_inv(&self) -> Result<Self> {
        self.inv()
    }
}

impl Endomorphic for RatFunc {
    fn twist(&self, k: u32) -> Self {
        self.shift(k)
    }
}

impl Lift<BigRational> for RatFunc {
    fn lift(&self, c: &BigRational) -> Self {
        RatFunc::from_rational(c.clone())
    }
}

impl Lift<RatFunc> for RatFunc {
    fn lift(&self, c: &RatFunc) -> Self {
        c.clone()
    }
}
