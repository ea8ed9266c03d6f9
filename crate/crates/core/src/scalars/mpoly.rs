use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::Monomial;

/// Sparse polynomial in `x0, x1, ...` with rational coefficients.
/// Terms are keyed by monomial in graded lex order; no zero coefficients are stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MPoly {
    terms: BTreeMap<Monomial, BigRational>,
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn var(index: u32) -> Self {
        Self::term(BigRational::one(), Monomial::var(index))
    }

    pub fn term(c: BigRational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MPoly { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, BigRational)>>(iter: I) -> Self {
        let mut p = MPoly::zero();
        for (m, c) in iter {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    /// The value if this polynomial is a constant (including zero).
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn leading(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &MPoly) -> MPoly {
        let (mut big, small) = if self.len() >= other.len() {
            (self.clone(), other)
        } else {
            (other.clone(), self)
        };
        for (m, c) in &small.terms {
            big.add_term(m.clone(), c.clone());
        }
        big
    }

    pub fn neg(&self) -> MPoly {
        MPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }

    /// Value at the point `x_i = at(i)`.
    pub fn eval(&self, at: &dyn Fn(u32) -> BigRational) -> BigRational {
        self.terms.iter().map(|(m, c)| c * m.eval(at)).sum()
    }

    pub fn mul(&self, other: &MPoly) -> MPoly {
        if self.is_zero() || other.is_zero() {
            return MPoly::zero();
        }
        let mut out = MPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, exp: u32) -> MPoly {
        let mut acc = MPoly::one();
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn scale(&self, c: &BigRational) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> MPoly {
        MPoly {
            terms: self.terms.iter().map(|(n, c)| (n.mul(m), c.clone())).collect(),
        }
    }

    /// Divides every term by `m`; `None` unless `m` divides each term.
    pub fn div_monomial(&self, m: &Monomial) -> Option<MPoly> {
        let terms = self
            .terms
            .iter()
            .map(|(n, c)| n.div(m).map(|q| (q, c.clone())))
            .collect::<Option<BTreeMap<_, _>>>()?;
        Some(MPoly { terms })
    }

    /// The gcd of all monomials in the support (`1` for the zero polynomial).
    pub fn monomial_content(&self) -> Monomial {
        let mut iter = self.terms.keys();
        let Some(first) = iter.next() else {
            return Monomial::one();
        };
        let mut g = first.clone();
        for m in iter {
            if g.is_one() {
                break;
            }
            g = g.gcd(m);
        }
        g
    }

    /// Positive rational `c` such that `self / c` has coprime integer
    /// coefficients, with the sign chosen so the leading coefficient of
    /// `self / c` is positive.
    pub fn rational_content(&self) -> BigRational {
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        if num_gcd.is_zero() {
            return BigRational::one();
        }
        let content = BigRational::new(num_gcd, den_lcm);
        match self.leading() {
            Some((_, lc)) if lc.is_negative() => -content,
            _ => content,
        }
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a remainder.
    pub fn exact_div(&self, divisor: &MPoly) -> Option<MPoly> {
        let (lm, lc) = divisor.leading()?;
        if self.is_zero() {
            return Some(MPoly::zero());
        }
        if divisor.len() == 1 {
            return self.div_monomial(lm).map(|q| q.scale(&lc.recip()));
        }
        let lc_inv = lc.recip();
        let mut rem = self.clone();
        let mut quot = MPoly::zero();
        while let Some((rm, rc)) = rem.leading() {
            let qm = rm.div(lm)?;
            let qc = rc * &lc_inv;
            for (dm, dc) in &divisor.terms {
                rem.add_term(dm.mul(&qm), -(dc * &qc));
            }
            quot.add_term(qm, qc);
        }
        Some(quot)
    }

    pub fn shift(&self, k: u32) -> MPoly {
        if k == 0 {
            return self.clone();
        }
        MPoly {
            terms: self.terms.iter().map(|(m, c)| (m.shift(k), c.clone())).collect(),
        }
    }

    pub fn unshift(&self, k: u32) -> Option<MPoly> {
        if k == 0 {
            return Some(self.clone());
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| m.unshift(k).map(|n| (n, c.clone())))
            .collect::<Option<BTreeMap<_, _>>>()?;
        Some(MPoly { terms })
    }

    /// Smallest variable index occurring in any term.
    pub fn min_var_index(&self) -> Option<u32> {
        self.terms.keys().filter_map(Monomial::min_index).min()
    }

    /// Degree in the single variable `x_index`.
    pub fn degree_in(&self, index: u32) -> u32 {
        self.terms.keys().map(|m| m.exponent(index)).max().unwrap_or(0)
    }

    /// Splits by powers of `x_index`: entry `e` holds the coefficient of `x_index^e`.
    pub fn coefficients_in(&self, index: u32) -> Vec<MPoly> {
        let mut out = vec![MPoly::zero(); self.degree_in(index) as usize + 1];
        for (m, c) in &self.terms {
            let e = m.exponent(index);
            let rest = Monomial::from_pairs(m.pairs().iter().copied().filter(|&(i, _)| i != index));
            out[e as usize].add_term(rest, c.clone());
        }
        out
    }

    /// Whether the leading coefficient is negative (used for sign-aware rendering).
    pub fn leading_is_negative(&self) -> bool {
        self.leading().is_some_and(|(_, c)| c.is_negative())
    }
}

pub(crate) fn fmt_rational(c: &BigRational) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.numer().sign() == Sign::Minus;
            let abs = c.abs();
            if n == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if negative { " - " } else { " + " })?;
            }
            if m.is_one() {
                write!(f, "{}", fmt_rational(&abs))?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}*{m}", fmt_rational(&abs))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn exact_division() {
        let x0 = MPoly::var(0);
        let x1 = MPoly::var(1);
        let a = x0.add(&x1);
        let b = x0.sub(&x1.scale(&q(2, 1)));
        let prod = a.mul(&b);
        assert_eq!(prod.exact_div(&a), Some(b.clone()));
        assert_eq!(prod.exact_div(&b), Some(a.clone()));
        assert_eq!(prod.add(&MPoly::one()).exact_div(&a), None);
        assert_eq!(x0.exact_div(&MPoly::zero()), None);
    }

    #[test]
    fn content_extraction() {
        let p = MPoly::from_terms([
            (Monomial::var(0), q(-2, 3)),
            (Monomial::var(1), q(4, 9)),
        ]);
        let c = p.rational_content();
        assert_eq!(c, q(-2, 9));
        let prim = p.scale(&c.recip());
        assert_eq!(prim.coeff(&Monomial::var(0)), q(3, 1));
        assert_eq!(prim.coeff(&Monomial::var(1)), q(-2, 1));
    }

    #[test]
    fn display_is_descending_grlex() {
        let p = MPoly::from_terms([
            (Monomial::one(), q(1, 1)),
            (Monomial::var(1), q(-1, 1)),
            (Monomial::var_pow(0, 2), q(1, 1)),
            (Monomial::from_pairs([(0, 1), (1, 1)]), q(3, 2)),
        ]);
        assert_eq!(p.to_string(), "x0^2 + 3/2*x0*x1 - x1 + 1");
    }

    #[test]
    fn split_by_variable() {
        // (x0 + x1)^2 = x0^2 + 2 x0 x1 + x1^2
        let p = MPoly::var(0).add(&MPoly::var(1)).pow(2);
        let parts = p.coefficients_in(0);
        assert_eq!(parts.len(), 3);
        assert_eq!(parts[0], MPoly::var(1).pow(2));
        assert_eq!(parts[1], MPoly::var(1).scale(&q(2, 1)));
        assert_eq!(parts[2], MPoly::one());
    }
}
