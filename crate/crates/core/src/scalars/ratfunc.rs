//! Elements of `F = Q(x0, x1, ...)`.
//!
//! The denominator is stored as a monomial times a product of powers of
//! primitive non-monomial factors. Factors are matched by equality, which is
//! enough to keep common denominators small under repeated addition without a
//! multivariate gcd. Equality is decided by cross-multiplication, never by
//! comparing representations.

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{fmt_rational, MPoly, Monomial};
use crate::error::{Error, Result};

#[derive(Clone, Debug, Default)]
struct Denom {
    mono: Monomial,
    /// Sorted, pairwise distinct, exponents > 0.
    factors: Vec<(MPoly, u32)>,
}

impl Denom {
    fn one() -> Self {
        Denom::default()
    }

    fn is_one(&self) -> bool {
        self.mono.is_one() && self.factors.is_empty()
    }

    fn expand(&self) -> MPoly {
        let mut p = MPoly::term(BigRational::one(), self.mono.clone());
        for (f, e) in &self.factors {
            p = p.mul(&f.pow(*e));
        }
        p
    }

    fn insert_factor(&mut self, f: MPoly, e: u32) {
        match self.factors.binary_search_by(|(g, _)| g.cmp(&f)) {
            Ok(pos) => self.factors[pos].1 += e,
            Err(pos) => self.factors.insert(pos, (f, e)),
        }
    }

    fn mul(&self, other: &Denom) -> Denom {
        let mut out = Denom {
            mono: self.mono.mul(&other.mono),
            factors: self.factors.clone(),
        };
        for (f, e) in &other.factors {
            out.insert_factor(f.clone(), *e);
        }
        out
    }

    fn lcm(&self, other: &Denom) -> Denom {
        let mut out = Denom {
            mono: self.mono.lcm(&other.mono),
            factors: self.factors.clone(),
        };
        for (f, e) in &other.factors {
            match out.factors.binary_search_by(|(g, _)| g.cmp(f)) {
                Ok(pos) => out.factors[pos].1 = out.factors[pos].1.max(*e),
                Err(pos) => out.factors.insert(pos, (f.clone(), *e)),
            }
        }
        out
    }

    /// `self / sub` expanded, for `sub` dividing `self` factor-wise.
    fn cofactor(&self, sub: &Denom) -> MPoly {
        let mono = self
            .mono
            .div(&sub.mono)
            .expect("cofactor taken against a factor-wise divisor");
        let mut p = MPoly::term(BigRational::one(), mono);
        for (f, e) in &self.factors {
            let have = sub
                .factors
                .binary_search_by(|(g, _)| g.cmp(f))
                .map(|pos| sub.factors[pos].1)
                .unwrap_or(0);
            if *e > have {
                p = p.mul(&f.pow(e - have));
            }
        }
        p
    }

    fn eval(&self, at: &dyn Fn(u32) -> BigRational) -> BigRational {
        self.factors.iter().fold(self.mono.eval(at), |acc, (f, e)| {
            acc * num_traits::pow(f.eval(at), *e as usize)
        })
    }

    fn shift(&self, k: u32) -> Denom {
        let mut factors: Vec<_> = self.factors.iter().map(|(f, e)| (f.shift(k), *e)).collect();
        factors.sort_by(|a, b| a.0.cmp(&b.0));
        Denom {
            mono: self.mono.shift(k),
            factors,
        }
    }

    fn unshift(&self, k: u32) -> Option<Denom> {
        let mut factors = self
            .factors
            .iter()
            .map(|(f, e)| f.unshift(k).map(|g| (g, *e)))
            .collect::<Option<Vec<_>>>()?;
        factors.sort_by(|a, b| a.0.cmp(&b.0));
        Some(Denom {
            mono: self.mono.unshift(k)?,
            factors,
        })
    }
}

/// Splits a nonzero polynomial as `scale * mono * primitive`, where
/// `primitive` has coprime integer coefficients, positive leading
/// coefficient, and no monomial content.
fn split_polynomial(p: &MPoly) -> (BigRational, Monomial, Option<MPoly>) {
    let mono = p.monomial_content();
    let rest = p.div_monomial(&mono).expect("monomial content divides");
    let scale = rest.rational_content();
    let prim = rest.scale(&scale.recip());
    if prim.is_one() {
        (scale, mono, None)
    } else {
        (scale, mono, Some(prim))
    }
}

/// A rational function `num / den` over the rationals in countably many variables.
#[derive(Clone, Debug)]
pub struct RatFunc {
    num: MPoly,
    den: Denom,
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc {
            num: MPoly::zero(),
            den: Denom::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(MPoly::one())
    }

    pub fn var(index: u32) -> Self {
        Self::from_poly(MPoly::var(index))
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(n.into()))
    }

    pub fn from_rational(c: BigRational) -> Self {
        Self::from_poly(MPoly::constant(c))
    }

    pub fn from_poly(p: MPoly) -> Self {
        RatFunc {
            num: p,
            den: Denom::one(),
        }
    }

    /// `num / den`, normalized by content and common monomial factors.
    pub fn new(num: MPoly, den: MPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (scale, mono, prim) = split_polynomial(&den);
        let mut d = Denom {
            mono,
            factors: Vec::new(),
        };
        if let Some(p) = prim {
            d.factors.push((p, 1));
        }
        Ok(RatFunc {
            num: num.scale(&scale.recip()),
            den: d,
        }
        .reduced())
    }

    fn reduced(mut self) -> Self {
        if self.num.is_zero() {
            return RatFunc::zero();
        }
        if !self.den.mono.is_one() {
            let g = self.num.monomial_content().gcd(&self.den.mono);
            if !g.is_one() {
                self.num = self.num.div_monomial(&g).expect("gcd divides");
                self.den.mono = self.den.mono.div(&g).expect("gcd divides");
            }
        }
        let mut i = 0;
        while i < self.den.factors.len() {
            while self.den.factors[i].1 > 0 {
                match self.num.exact_div(&self.den.factors[i].0) {
                    Some(q) => {
                        self.num = q;
                        self.den.factors[i].1 -= 1;
                    }
                    None => break,
                }
            }
            if self.den.factors[i].1 == 0 {
                self.den.factors.remove(i);
            } else {
                i += 1;
            }
        }
        self
    }

    pub fn num(&self) -> &MPoly {
        &self.num
    }

    /// The expanded denominator: content 1, positive leading coefficient.
    pub fn den(&self) -> MPoly {
        self.den.expand()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }

    /// Whether the denominator is 1.
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The value if this is a rational constant.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.den.is_one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn add(&self, other: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && other.den.is_one() {
            return RatFunc::from_poly(self.num.add(&other.num));
        }
        let l = self.den.lcm(&other.den);
        let a = self.num.mul(&l.cofactor(&self.den));
        let b = other.num.mul(&l.cofactor(&other.den));
        RatFunc { num: a.add(&b), den: l }.reduced()
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &RatFunc) -> RatFunc {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &RatFunc) -> RatFunc {
        if self.is_zero() || other.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && other.den.is_one() {
            return RatFunc::from_poly(self.num.mul(&other.num));
        }
        RatFunc {
            num: self.num.mul(&other.num),
            den: self.den.mul(&other.den),
        }
        .reduced()
    }

    pub fn scale(&self, c: &BigRational) -> RatFunc {
        if c.is_zero() {
            return RatFunc::zero();
        }
        RatFunc {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn inv(&self) -> Result<RatFunc> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (scale, mono, prim) = split_polynomial(&self.num);
        let mut den = Denom {
            mono,
            factors: Vec::new(),
        };
        if let Some(p) = prim {
            den.factors.push((p, 1));
        }
        Ok(RatFunc {
            num: self.den.expand().scale(&scale.recip()),
            den,
        }
        .reduced())
    }

    pub fn div(&self, other: &RatFunc) -> Result<RatFunc> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, exp: i64) -> Result<RatFunc> {
        let base = if exp < 0 { self.inv()? } else { self.clone() };
        let mut acc = RatFunc::one();
        for _ in 0..exp.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    /// Exact equality: `num1 * den2 == num2 * den1`.
    /// Value at the point `x_i = at(i)`; fails where the denominator vanishes.
    pub fn eval(&self, at: &dyn Fn(u32) -> BigRational) -> Result<BigRational> {
        let den = self.den.eval(at);
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.num.eval(at) / den)
    }

    pub fn eq_exact(&self, other: &RatFunc) -> bool {
        if self.den.is_one() && other.den.is_one() {
            return self.num == other.num;
        }
        let l = self.den.lcm(&other.den);
        let a = self.num.mul(&l.cofactor(&self.den));
        let b = other.num.mul(&l.cofactor(&other.den));
        a == b
    }

    /// `sigma^k`: raises every variable index by `k`.
    pub fn shift(&self, k: u32) -> RatFunc {
        if k == 0 {
            return self.clone();
        }
        RatFunc {
            num: self.num.shift(k),
            den: self.den.shift(k),
        }
    }

    /// The preimage under `sigma^k`, when every index in the stored form is at least `k`.
    pub fn unshift(&self, k: u32) -> Result<RatFunc> {
        if k == 0 {
            return Ok(self.clone());
        }
        let not_in_image = || Error::NotInImage {
            what: self.to_string(),
            k,
        };
        let num = self.num.unshift(k).ok_or_else(not_in_image)?;
        let den = self.den.unshift(k).ok_or_else(not_in_image)?;
        Ok(RatFunc { num, den })
    }

    /// Smallest variable index in the stored representation.
    pub fn min_var_index(&self) -> Option<u32> {
        let mut idx = self.num.min_var_index();
        let mut take = |i: Option<u32>| {
            if let Some(i) = i {
                idx = Some(idx.map_or(i, |j| j.min(i)));
            }
        };
        take(self.den.mono.min_index());
        for (f, _) in &self.den.factors {
            take(f.min_var_index());
        }
        idx
    }

    /// Sign of the numerator's leading coefficient; used to print `a - b` instead of `a + -b`.
    pub fn looks_negative(&self) -> bool {
        self.num.leading_is_negative()
    }
}

/// Rewrites `fs` over a common denominator, returning the numerators.
/// Any rational linear relation among the `fs` holds among the numerators and conversely.
pub fn clear_denominators(fs: &[RatFunc]) -> Vec<MPoly> {
    let l = fs.iter().fold(Denom::one(), |acc, f| acc.lcm(&f.den));
    fs.iter().map(|f| f.num.mul(&l.cofactor(&f.den))).collect()
}

impl PartialEq for RatFunc {
    fn eq(&self, other: &Self) -> bool {
        self.eq_exact(other)
    }
}

impl From<MPoly> for RatFunc {
    fn from(p: MPoly) -> Self {
        RatFunc::from_poly(p)
    }
}

fn wrap_if_sum(p: &MPoly) -> String {
    if p.len() > 1 {
        format!("({p})")
    } else {
        p.to_string()
    }
}

impl fmt::Display for RatFunc {
    /// Renders as `num*den^-1` so the output stays inside the expression grammar,
    /// e.g. `x0*(x0 - x1)^-1` or `(x0*x1)^-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let mut den_parts: Vec<String> = Vec::new();
        if !self.den.mono.is_one() {
            let m = &self.den.mono;
            if m.pairs().len() == 1 && m.pairs()[0].1 == 1 {
                den_parts.push(format!("{m}^-1"));
            } else {
                den_parts.push(format!("({m})^-1"));
            }
        }
        for (g, e) in &self.den.factors {
            den_parts.push(format!("({g})^-{e}"));
        }
        let den = den_parts.join("*");
        if let Some(c) = self.num.as_constant() {
            if c.is_one() {
                return write!(f, "{den}");
            }
            if (-c.clone()).is_one() {
                return write!(f, "-{den}");
            }
            return write!(f, "{}*{den}", fmt_rational(&c));
        }
        write!(f, "{}*{den}", wrap_if_sum(&self.num))
    }
}
