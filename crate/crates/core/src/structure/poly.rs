//! Univariate polynomials over a commutative field such as `Q(i)`.

use std::fmt;

use crate::error::{Error, Result};
use crate::ring::{DivisionRing, Ring};

/// Coefficients `c0, c1, ...`; `one` anchors the field for constant creation.
#[derive(Clone, Debug)]
pub struct Poly<R> {
    coeffs: Vec<R>,
    one: R,
}

impl<R: DivisionRing> Poly<R> {
    pub fn new(mut coeffs: Vec<R>, one: &R) -> Self {
        while coeffs.last().is_some_and(Ring::vanishes) {
            coeffs.pop();
        }
        Poly {
            coeffs,
            one: one.one_like(),
        }
    }

    pub fn zero(one: &R) -> Self {
        Poly::new(Vec::new(), one)
    }

    pub fn constant(c: R) -> Self {
        let one = c.one_like();
        Poly::new(vec![c], &one)
    }

    /// `t - c`.
    pub fn linear(c: &R) -> Self {
        Poly::new(vec![c.negate(), c.one_like()], c)
    }

    pub fn var(one: &R) -> Self {
        Poly::new(vec![one.zero_like(), one.one_like()], one)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn unit(&self) -> &R {
        &self.one
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&R> {
        self.coeffs.last()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].minus(&self.one).vanishes()
    }

    pub fn add(&self, o: &Poly<R>) -> Poly<R> {
        let n = self.coeffs.len().max(o.coeffs.len());
        let zero = self.one.zero_like();
        let c = (0..n)
            .map(|i| {
                self.coeffs
                    .get(i)
                    .unwrap_or(&zero)
                    .plus(o.coeffs.get(i).unwrap_or(&zero))
            })
            .collect();
        Poly::new(c, &self.one)
    }

    pub fn neg(&self) -> Poly<R> {
        Poly::new(self.coeffs.iter().map(Ring::negate).collect(), &self.one)
    }

    pub fn sub(&self, o: &Poly<R>) -> Poly<R> {
        self.add(&o.neg())
    }

    pub fn scale(&self, c: &R) -> Result<Poly<R>> {
        let coeffs = self.coeffs.iter().map(|a| c.times(a)).collect::<Result<_>>()?;
        Ok(Poly::new(coeffs, &self.one))
    }

    pub fn mul(&self, o: &Poly<R>) -> Result<Poly<R>> {
        if self.is_zero() || o.is_zero() {
            return Ok(Poly::zero(&self.one));
        }
        let mut out = vec![self.one.zero_like(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].plus(&a.times(b)?);
            }
        }
        Ok(Poly::new(out, &self.one))
    }

    pub fn monic(&self) -> Result<Poly<R>> {
        match self.leading() {
            None => Ok(self.clone()),
            Some(lc) => self.scale(&lc.try_inv()?),
        }
    }

    pub fn div_rem(&self, divisor: &Poly<R>) -> Result<(Poly<R>, Poly<R>)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lc_inv = divisor.coeffs[dd].try_inv()?;
        let mut rem = self.coeffs.clone();
        let zero = self.one.zero_like();
        let mut quot = vec![zero.clone(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let k = rem.len() - 1;
            let factor = rem[k].times(&lc_inv)?;
            if !factor.vanishes() {
                for (j, c) in divisor.coeffs.iter().enumerate() {
                    rem[k - dd + j] = rem[k - dd + j].minus(&factor.times(c)?);
                }
                quot[k - dd] = factor;
            }
            rem.pop();
        }
        Ok((Poly::new(quot, &self.one), Poly::new(rem, &self.one)))
    }

    /// Exact quotient, failing when the remainder is nonzero.
    pub fn exact_div(&self, divisor: &Poly<R>) -> Result<Poly<R>> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(Error::InvalidArgument("polynomial division is not exact".into()));
        }
        Ok(q)
    }

    pub fn divides(&self, other: &Poly<R>) -> Result<bool> {
        Ok(other.div_rem(self)?.1.is_zero())
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, o: &Poly<R>) -> Result<Poly<R>> {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b)?.1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn lcm(&self, o: &Poly<R>) -> Result<Poly<R>> {
        if self.is_zero() || o.is_zero() {
            return Ok(Poly::zero(&self.one));
        }
        self.mul(o)?.exact_div(&self.gcd(o)?)?.monic()
    }

    /// Same polynomial (exact coefficientwise comparison).
    pub fn same(&self, o: &Poly<R>) -> bool {
        self.sub(o).is_zero()
    }

    pub fn eval(&self, x: &R) -> Result<R> {
        let mut acc = self.one.zero_like();
        for c in self.coeffs.iter().rev() {
            acc = acc.times(x)?.plus(c);
        }
        Ok(acc)
    }
}

impl<R: DivisionRing + fmt::Display> fmt::Display for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let as_ore = crate::ore::OrePoly::from_coeffs(self.coeffs.iter().cloned().map(Wrap).collect());
        f.write_str(&as_ore.render("t"))
    }
}

/// Borrows the skew-polynomial renderer for commutative coefficients.
#[derive(Clone, Debug)]
struct Wrap<R>(R);

impl<R: Ring> Ring for Wrap<R> {
    fn zero_like(&self) -> Self {
        Wrap(self.0.zero_like())
    }
    fn one_like(&self) -> Self {
        Wrap(self.0.one_like())
    }
    fn vanishes(&self) -> bool {
        self.0.vanishes()
    }
    fn plus(&self, rhs: &Self) -> Self {
        Wrap(self.0.plus(&rhs.0))
    }
    fn negate(&self) -> Self {
        Wrap(self.0.negate())
    }
    fn times(&self, rhs: &Self) -> Result<Self> {
        Ok(Wrap(self.0.times(&rhs.0)?))
    }
}

impl<R> crate::ring::Endomorphic for Wrap<R>
where
    R: Clone,
{
    fn twist(&self, _k: u32) -> Self {
        self.clone()
    }
}

impl<R: fmt::Display> fmt::Display for Wrap<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quaternion::Qi;
    use num_rational::BigRational;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn p(c: &[i64]) -> Poly<BigRational> {
        Poly::new(c.iter().map(|&v| q(v)).collect(), &q(1))
    }

    #[test]
    fn division_and_gcd() {
        // (t^2 - 1) = (t - 1)(t + 1)
        let f = p(&[-1, 0, 1]);
        let (quo, rem) = f.div_rem(&p(&[-1, 1])).unwrap();
        assert!(quo.same(&p(&[1, 1])) && rem.is_zero());
        let g = f.gcd(&p(&[1, 2, 1])).unwrap();
        assert!(g.same(&p(&[1, 1])));
        let l = p(&[-1, 1]).lcm(&p(&[1, 1])).unwrap();
        assert!(l.same(&f));
        assert_eq!(f.to_string(), "t^2 - 1");
    }

    #[test]
    fn gaussian_roots_of_t2_plus_1() {
        let a = q(-1);
        let i = Qi::gen(&a);
        let prod = Poly::linear(&i).mul(&Poly::linear(&i.neg())).unwrap();
        assert!(prod.same(&Poly::new(vec![Qi::from_rational(&a, q(1)), Qi::from_rational(&a, q(0)), Qi::from_rational(&a, q(1))], &i)));
        assert!(prod.eval(&i).unwrap().is_zero());
    }
}
