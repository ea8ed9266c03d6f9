//! Skew polynomials `f(t) = a0 + a1 t + ... + an t^n` with coefficients written
//! on the left, multiplied under `t a = sigma(a) t` (or the untwisted rule).
//!
//! Two substitutions are provided: [`OrePoly::right_eval`] computes
//! `sum a_i * a^i` (the element is a *right root* when this vanishes) and
//! [`OrePoly::left_eval`] computes `sum a^i * a_i`. They differ as soon as the
//! element fails to commute with the coefficients.

use std::fmt;

use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::ring::{DivisionRing, Endomorphic, Lift, Ring};

/// How the indeterminate commutes past coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Twist {
    /// `t a = a t`: the ordinary polynomial ring with left coefficients.
    Identity,
    /// `t a = sigma(a) t`.
    Shift,
}

#[derive(Clone, Debug)]
pub struct OrePoly<R> {
    coeffs: Vec<R>,
    twist: Twist,
}

impl<R: Ring + Endomorphic> OrePoly<R> {
    pub fn new(mut coeffs: Vec<R>, twist: Twist) -> Self {
        while coeffs.last().is_some_and(Ring::vanishes) {
            coeffs.pop();
        }
        OrePoly { coeffs, twist }
    }

    /// Untwisted polynomial from coefficients `a0, a1, ...`.
    pub fn from_coeffs(coeffs: Vec<R>) -> Self {
        Self::new(coeffs, Twist::Identity)
    }

    pub fn zero(twist: Twist) -> Self {
        OrePoly {
            coeffs: Vec::new(),
            twist,
        }
    }

    pub fn twist_kind(&self) -> Twist {
        self.twist
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Option<&R> {
        self.coeffs.get(i)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&R> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &OrePoly<R>) -> OrePoly<R> {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(match (self.coeffs.get(i), other.coeffs.get(i)) {
                (Some(a), Some(b)) => a.plus(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        OrePoly::new(out, self.twist)
    }

    pub fn neg(&self) -> OrePoly<R> {
        OrePoly::new(self.coeffs.iter().map(Ring::negate).collect(), self.twist)
    }

    pub fn sub(&self, other: &OrePoly<R>) -> OrePoly<R> {
        self.add(&other.neg())
    }

    /// `c * f`, multiplying every coefficient on the left.
    pub fn scale_left(&self, c: &R) -> Result<OrePoly<R>> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| c.times(a))
            .collect::<Result<Vec<_>>>()?;
        Ok(OrePoly::new(coeffs, self.twist))
    }

    /// Product under `t^i b = sigma^i(b) t^i`.
    pub fn mul(&self, other: &OrePoly<R>) -> Result<OrePoly<R>> {
        if self.is_zero() || other.is_zero() {
            return Ok(OrePoly::zero(self.twist));
        }
        let zero = self.coeffs[0].zero_like();
        let mut out = vec![zero; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                let b = match self.twist {
                    Twist::Identity => b.clone(),
                    Twist::Shift => b.twist(i as u32),
                };
                out[i + j] = out[i + j].plus(&a.times(&b)?);
            }
        }
        Ok(OrePoly::new(out, self.twist))
    }

    /// `sum a_i * a^i`: coefficients on the left of the powers.
    pub fn right_eval<A: Ring + Lift<R>>(&self, a: &A) -> Result<A> {
        let mut acc = a.zero_like();
        let mut power = a.one_like();
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                power = power.times(a)?;
            }
            if !c.vanishes() {
                acc = acc.plus(&a.lift(c).times(&power)?);
            }
        }
        Ok(acc)
    }

    /// `sum a^i * a_i`: coefficients on the right of the powers.
    pub fn left_eval<A: Ring + Lift<R>>(&self, a: &A) -> Result<A> {
        let mut acc = a.zero_like();
        let mut power = a.one_like();
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                power = power.times(a)?;
            }
            if !c.vanishes() {
                acc = acc.plus(&power.times(&a.lift(c))?);
            }
        }
        Ok(acc)
    }

    /// Re-expresses the coefficients in a larger ring.
    pub fn lift_coeffs<S>(&self, anchor: &S) -> OrePoly<S>
    where
        S: Ring + Endomorphic + Lift<R>,
    {
        OrePoly::new(self.coeffs.iter().map(|c| anchor.lift(c)).collect(), self.twist)
    }
}

impl<R: DivisionRing + Endomorphic> OrePoly<R> {
    /// Left-multiplies by the inverse of the leading coefficient.
    pub fn monic(&self) -> Result<OrePoly<R>> {
        match self.leading() {
            None => Ok(self.clone()),
            Some(lc) => {
                let inv = lc.try_inv()?;
                let mut out = self.scale_left(&inv)?;
                let n = out.coeffs.len() - 1;
                out.coeffs[n] = out.coeffs[n].one_like();
                Ok(out)
            }
        }
    }
}

/// Whether `s` contains `+` or `-` joining terms outside parentheses.
fn is_compound(s: &str) -> bool {
    let mut depth = 0i32;
    let bytes = s.as_bytes();
    for (i, &ch) in bytes.iter().enumerate() {
        match ch {
            b'(' => depth += 1,
            b')' => depth -= 1,
            b'+' | b'-' if depth == 0 && i > 0 && bytes[i - 1] == b' ' => return true,
            _ => {}
        }
    }
    false
}

/// Splits a rendered coefficient so sums are parenthesized and signs pulled out.
fn render_coefficient(s: &str) -> (bool, String) {
    let (negative, body) = match s.strip_prefix('-') {
        Some(rest) if !is_compound(rest) => (true, rest),
        _ => (false, s),
    };
    if is_compound(body) {
        (negative, format!("({body})"))
    } else {
        (negative, body.to_string())
    }
}

impl<R: Ring + Endomorphic + fmt::Display> OrePoly<R> {
    /// Renders with `var` as the indeterminate, highest degree first.
    pub fn render(&self, var: &str) -> String {
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.vanishes() {
                continue;
            }
            let (negative, body) = render_coefficient(&c.to_string());
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let power = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            match (power.is_empty(), body.as_str()) {
                (true, _) => out.push_str(&body),
                (false, "1") => out.push_str(&power),
                (false, _) => out.push_str(&format!("{body}*{power}")),
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl<R: Ring + Endomorphic + fmt::Display> fmt::Display for OrePoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("t"))
    }
}

/// `f = (t - alpha_1)...(t - alpha_n)` and `f_i = f / (t - alpha_i)` for
/// pairwise distinct rational (hence central) points.
pub fn central_interpolants(
    alphas: &[BigRational],
) -> Result<(OrePoly<BigRational>, Vec<OrePoly<BigRational>>)> {
    for (i, a) in alphas.iter().enumerate() {
        if alphas[..i].contains(a) {
            return Err(Error::DuplicateAlpha);
        }
    }
    let linear = |a: &BigRational| OrePoly::from_coeffs(vec![-a.clone(), BigRational::one()]);
    let product = |skip: Option<usize>| -> Result<OrePoly<BigRational>> {
        let mut acc = OrePoly::from_coeffs(vec![BigRational::one()]);
        for (j, a) in alphas.iter().enumerate() {
            if Some(j) != skip {
                acc = acc.mul(&linear(a))?;
            }
        }
        Ok(acc)
    };
    let f = product(None)?;
    let parts = (0..alphas.len())
        .map(|i| product(Some(i)))
        .collect::<Result<Vec<_>>>()?;
    Ok((f, parts))
}

/// `sum beta_i f_i` with coefficients `beta_i` from a ring containing the rationals.
pub fn combine_interpolants<R>(betas: &[R], parts: &[OrePoly<BigRational>]) -> Result<OrePoly<R>>
where
    R: Ring + Endomorphic + Lift<BigRational>,
{
    let anchor = betas
        .first()
        .ok_or_else(|| Error::InvalidArgument("no coefficients".into()))?;
    let mut acc = OrePoly::zero(Twist::Identity);
    for (beta, part) in betas.iter().zip(parts) {
        acc = acc.add(&part.lift_coeffs(anchor).scale_left(beta)?);
    }
    Ok(acc)
}
