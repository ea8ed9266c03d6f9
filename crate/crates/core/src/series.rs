//! Truncated elements of the skew Laurent series ring `D = F((t, sigma))` with
//! `t * a = sigma(a) * t`.
//!
//! A [`SkewSeries`] stores the coefficients it knows exactly plus a horizon:
//! every exponent at or beyond the horizon is unknown. An infinite horizon
//! means the element is an exact Laurent polynomial.
//!
//! `sigma` is injective but not onto, so moving a coefficient to the left of a
//! negative power of `t` can fail. Such products surface
//! [`Error::NotInImage`] rather than producing a value.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::ring::{DivisionRing, Endomorphic, Lift, Ring};
use crate::scalars::RatFunc;

/// Number of known terms given to inverses of exact multi-term elements.
pub const DEFAULT_PRECISION: usize = 12;

/// First unknown exponent of a truncated series.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Horizon {
    Finite(i64),
    Infinite,
}

impl Horizon {
    pub fn offset(self, by: i64) -> Horizon {
        match self {
            Horizon::Finite(h) => Horizon::Finite(h + by),
            Horizon::Infinite => Horizon::Infinite,
        }
    }

    fn plus(self, other: Horizon) -> Horizon {
        match (self, other) {
            (Horizon::Finite(a), Horizon::Finite(b)) => Horizon::Finite(a + b),
            _ => Horizon::Infinite,
        }
    }

    pub fn covers(self, exponent: i64) -> bool {
        match self {
            Horizon::Finite(h) => exponent < h,
            Horizon::Infinite => true,
        }
    }

    pub fn finite(self) -> Option<i64> {
        match self {
            Horizon::Finite(h) => Some(h),
            Horizon::Infinite => None,
        }
    }
}

impl fmt::Display for Horizon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Horizon::Finite(h) => write!(f, "{h}"),
            Horizon::Infinite => write!(f, "inf"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SkewSeries {
    coeffs: BTreeMap<i64, RatFunc>,
    known_upto: Horizon,
}

impl SkewSeries {
    pub fn zero() -> Self {
        SkewSeries {
            coeffs: BTreeMap::new(),
            known_upto: Horizon::Infinite,
        }
    }

    pub fn one() -> Self {
        Self::constant(RatFunc::one())
    }

    pub fn t() -> Self {
        Self::monomial(RatFunc::one(), 1)
    }

    pub fn constant(c: RatFunc) -> Self {
        Self::monomial(c, 0)
    }

    pub fn rational(c: BigRational) -> Self {
        Self::constant(RatFunc::from_rational(c))
    }

    /// `c * t^e`.
    pub fn monomial(c: RatFunc, e: i64) -> Self {
        Self::from_terms([(e, c)], Horizon::Infinite)
    }

    /// Builds a series, summing repeated exponents and dropping terms beyond the horizon.
    pub fn from_terms<I: IntoIterator<Item = (i64, RatFunc)>>(terms: I, known_upto: Horizon) -> Self {
        let mut coeffs: BTreeMap<i64, RatFunc> = BTreeMap::new();
        for (e, c) in terms {
            if !known_upto.covers(e) {
                continue;
            }
            accumulate(&mut coeffs, e, c);
        }
        coeffs.retain(|_, c| !c.is_zero());
        SkewSeries { coeffs, known_upto }
    }

    /// The element `O(t^h)`: zero below `h`, unknown from `h` on.
    pub fn unknown_from(h: i64) -> Self {
        SkewSeries {
            coeffs: BTreeMap::new(),
            known_upto: Horizon::Finite(h),
        }
    }

    pub fn known_upto(&self) -> Horizon {
        self.known_upto
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &RatFunc)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    /// The coefficient of `t^e`, `None` when `e` lies beyond the horizon.
    pub fn coeff(&self, e: i64) -> Option<RatFunc> {
        if !self.known_upto.covers(e) {
            return None;
        }
        Some(self.coeffs.get(&e).cloned().unwrap_or_else(RatFunc::zero))
    }

    /// The exact zero element (empty support, infinite horizon).
    pub fn is_exact_zero(&self) -> bool {
        self.coeffs.is_empty() && self.known_upto == Horizon::Infinite
    }

    /// No known nonzero coefficient (exact zero or `O(t^h)`).
    pub fn is_zero_on_window(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degmin(&self) -> Result<i64> {
        self.coeffs.keys().next().copied().ok_or(Error::UndefinedDegmin)
    }

    /// Lower bound on the valuation: `degmin` when known, else the horizon.
    fn lower(&self) -> Horizon {
        match self.coeffs.keys().next() {
            Some(&e) => Horizon::Finite(e),
            None => self.known_upto,
        }
    }

    /// Number of known exponents counted from `degmin`.
    pub fn relative_precision(&self) -> Option<i64> {
        let d = self.coeffs.keys().next()?;
        self.known_upto.finite().map(|h| h - d)
    }

    /// Forgets every coefficient at or beyond `h`.
    pub fn truncate(&self, h: Horizon) -> SkewSeries {
        let known_upto = self.known_upto.min(h);
        SkewSeries {
            coeffs: self
                .coeffs
                .iter()
                .filter(|(&e, _)| known_upto.covers(e))
                .map(|(&e, c)| (e, c.clone()))
                .collect(),
            known_upto,
        }
    }

    pub fn add(&self, other: &SkewSeries) -> SkewSeries {
        let known_upto = self.known_upto.min(other.known_upto);
        let mut coeffs: BTreeMap<i64, RatFunc> = BTreeMap::new();
        for (&e, c) in self.coeffs.iter().chain(other.coeffs.iter()) {
            if known_upto.covers(e) {
                accumulate(&mut coeffs, e, c.clone());
            }
        }
        coeffs.retain(|_, c| !c.is_zero());
        SkewSeries { coeffs, known_upto }
    }

    pub fn neg(&self) -> SkewSeries {
        SkewSeries {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e, c.neg())).collect(),
            known_upto: self.known_upto,
        }
    }

    pub fn sub(&self, other: &SkewSeries) -> SkewSeries {
        self.add(&other.neg())
    }

    /// Product under `(a t^i)(b t^j) = a sigma^i(b) t^(i+j)`.
    pub fn mul(&self, other: &SkewSeries) -> Result<SkewSeries> {
        let known_upto = self
            .lower()
            .plus(other.known_upto)
            .min(self.known_upto.plus(other.lower()));
        let mut coeffs: BTreeMap<i64, RatFunc> = BTreeMap::new();
        for (&i, a) in &self.coeffs {
            for (&j, b) in &other.coeffs {
                let e = i + j;
                if !known_upto.covers(e) {
                    break;
                }
                let twisted = twist_signed(b, i)?;
                accumulate(&mut coeffs, e, a.mul(&twisted));
            }
        }
        coeffs.retain(|_, c| !c.is_zero());
        Ok(SkewSeries { coeffs, known_upto })
    }

    pub fn scale_left(&self, c: &RatFunc) -> SkewSeries {
        if c.is_zero() {
            return SkewSeries {
                coeffs: BTreeMap::new(),
                known_upto: Horizon::Infinite,
            }
            .truncate(self.known_upto);
        }
        SkewSeries {
            coeffs: self.coeffs.iter().map(|(&e, a)| (e, c.mul(a))).collect(),
            known_upto: self.known_upto,
        }
    }

    /// `self * t^n`: exponents move, coefficients do not.
    pub fn mul_t_pow_right(&self, n: i64) -> SkewSeries {
        SkewSeries {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e + n, c.clone())).collect(),
            known_upto: self.known_upto.offset(n),
        }
    }

    /// `t^n * self`: every coefficient passes through `sigma^n`.
    pub fn mul_t_pow_left(&self, n: i64) -> Result<SkewSeries> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|(&e, c)| Ok((e + n, twist_signed(c, n)?)))
            .collect::<Result<BTreeMap<_, _>>>()?;
        Ok(SkewSeries {
            coeffs,
            known_upto: self.known_upto.offset(n),
        })
    }

    /// Two-sided inverse; exact multi-term elements get [`DEFAULT_PRECISION`] known terms.
    pub fn inv(&self) -> Result<SkewSeries> {
        self.inv_with_precision(DEFAULT_PRECISION)
    }

    /// Two-sided inverse. For `degmin = n`, writes `self = beta t^n` and returns
    /// `t^-n beta^-1`, where `beta^-1` comes from the recurrence
    /// `b_k = -a_0^-1 sum_{i>=1} a_i sigma^i(b_{k-i})`.
    pub fn inv_with_precision(&self, precision: usize) -> Result<SkewSeries> {
        let n = match self.coeffs.keys().next() {
            Some(&n) => n,
            None if self.is_exact_zero() => return Err(Error::DivisionByZero),
            None => {
                return Err(Error::InsufficientPrecision(format!(
                    "cannot invert {self}: no known coefficient"
                )))
            }
        };
        let unit = self.mul_t_pow_right(-n);
        let a0_inv = unit.coeffs[&0].inv()?;
        let beta_inv = if self.coeffs.len() == 1 && self.known_upto == Horizon::Infinite {
            SkewSeries::constant(a0_inv)
        } else {
            let len = match self.known_upto {
                Horizon::Finite(h) => h - n,
                Horizon::Infinite => precision as i64,
            };
            let mut b: Vec<RatFunc> = Vec::with_capacity(len.max(0) as usize);
            for k in 0..len {
                if k == 0 {
                    b.push(a0_inv.clone());
                    continue;
                }
                let mut acc = RatFunc::zero();
                for (&i, a) in unit.coeffs.range(1..=k) {
                    let prev = &b[(k - i) as usize];
                    if prev.is_zero() {
                        continue;
                    }
                    acc = acc.add(&a.mul(&prev.shift(i as u32)));
                }
                b.push(a0_inv.mul(&acc).neg());
            }
            SkewSeries::from_terms(
                b.into_iter().enumerate().map(|(k, c)| (k as i64, c)),
                Horizon::Finite(len),
            )
        };
        beta_inv.mul_t_pow_left(-n)
    }

    /// Integer power; negative exponents invert first.
    pub fn pow(&self, exp: i64) -> Result<SkewSeries> {
        let base = if exp < 0 { self.inv()? } else { self.clone() };
        let mut acc = SkewSeries::one();
        for _ in 0..exp.unsigned_abs() {
            acc = acc.mul(&base)?;
        }
        Ok(acc)
    }

    /// Coefficientwise `sigma^k`, i.e. conjugation `t^k alpha t^-k`.
    pub fn shift_coeffs(&self, k: u32) -> SkewSeries {
        SkewSeries {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e, c.shift(k))).collect(),
            known_upto: self.known_upto,
        }
    }

    /// Agreement on the common known window.
    pub fn eq_on_window(&self, other: &SkewSeries) -> bool {
        let h = self.known_upto.min(other.known_upto);
        let a = self.coeffs.iter().filter(|(&e, _)| h.covers(e));
        let b = other.coeffs.iter().filter(|(&e, _)| h.covers(e));
        let mut a = a.peekable();
        let mut b = b.peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => return true,
                (Some(_), None) | (None, Some(_)) => return false,
                (Some((ea, ca)), Some((eb, cb))) => match ea.cmp(eb) {
                    Ordering::Equal => {
                        if !ca.eq_exact(cb) {
                            return false;
                        }
                        a.next();
                        b.next();
                    }
                    _ => return false,
                },
            }
        }
    }

    pub fn has_even_support(&self) -> bool {
        self.coeffs.keys().all(|e| e % 2 == 0)
    }

    /// `alpha = alpha1 + alpha2 * t` with both parts supported on even exponents.
    pub fn decompose_left(&self) -> (KElement, KElement) {
        let even = self
            .coeffs
            .iter()
            .filter(|(&e, _)| e.rem_euclid(2) == 0)
            .map(|(&e, c)| (e, c.clone()));
        let odd = self
            .coeffs
            .iter()
            .filter(|(&e, _)| e.rem_euclid(2) == 1)
            .map(|(&e, c)| (e - 1, c.clone()));
        (
            KElement(SkewSeries::from_terms(even, self.known_upto)),
            KElement(SkewSeries::from_terms(odd, self.known_upto.offset(-1))),
        )
    }

    /// Smallest variable index across the stored coefficients.
    pub fn min_var_index(&self) -> Option<u32> {
        self.coeffs.values().filter_map(RatFunc::min_var_index).min()
    }
}

fn accumulate(coeffs: &mut BTreeMap<i64, RatFunc>, e: i64, c: RatFunc) {
    if c.is_zero() {
        return;
    }
    match coeffs.get_mut(&e) {
        Some(existing) => *existing = existing.add(&c),
        None => {
            coeffs.insert(e, c);
        }
    }
}

/// `sigma^k(c)` for any integer `k`; negative `k` pulls back through the shift.
fn twist_signed(c: &RatFunc, k: i64) -> Result<RatFunc> {
    if k >= 0 {
        Ok(c.shift(k as u32))
    } else {
        c.unshift(k.unsigned_abs() as u32)
    }
}

fn fmt_coefficient(c: &RatFunc) -> String {
    let s = c.to_string();
    if s.contains(" + ") || s.contains(" - ") {
        format!("({s})")
    } else {
        s
    }
}

impl fmt::Display for SkewSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (&e, c) in &self.coeffs {
            let negative = c.looks_negative();
            let shown = if negative { c.neg() } else { c.clone() };
            if first {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if negative { " - " } else { " + " })?;
            }
            first = false;
            let power = match e {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{e}"),
            };
            if power.is_empty() {
                write!(f, "{}", fmt_coefficient(&shown))?;
            } else if shown.is_one() {
                write!(f, "{power}")?;
            } else {
                write!(f, "{}*{power}", fmt_coefficient(&shown))?;
            }
        }
        match self.known_upto {
            Horizon::Finite(h) => {
                if !first {
                    write!(f, " + ")?;
                }
                write!(f, "O(t^{h})")
            }
            Horizon::Infinite if first => write!(f, "0"),
            Horizon::Infinite => Ok(()),
        }
    }
}

/// An element of the subring `K = F((t^2, sigma))`: a series with even support.
#[derive(Clone, Debug)]
pub struct KElement(SkewSeries);

impl KElement {
    pub fn new(s: SkewSeries) -> Result<Self> {
        if !s.has_even_support() {
            return Err(Error::InvalidArgument(format!("{s} has odd support, not in K")));
        }
        Ok(KElement(s))
    }

    pub fn zero() -> Self {
        KElement(SkewSeries::zero())
    }

    pub fn one() -> Self {
        KElement(SkewSeries::one())
    }

    pub fn as_series(&self) -> &SkewSeries {
        &self.0
    }

    pub fn into_series(self) -> SkewSeries {
        self.0
    }
}

impl fmt::Display for KElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Membership in `N = { alpha : degmin(alpha) = 0 }`.
pub fn n_contains(alpha: &SkewSeries) -> Result<bool> {
    Ok(alpha.degmin()? == 0)
}

/// `beta^-1 alpha beta` for `alpha` in `N`.
pub fn n_conjugate(alpha: &SkewSeries, beta: &SkewSeries) -> Result<SkewSeries> {
    if !n_contains(alpha)? {
        return Err(Error::InvalidArgument(format!("{alpha} is not in N")));
    }
    if beta.is_zero_on_window() {
        return Err(Error::DivisionByZero);
    }
    beta.inv()?.mul(alpha)?.mul(beta)
}

impl Ring for SkewSeries {
    fn zero_like(&self) -> Self {
        SkewSeries::zero()
    }
    fn one_like(&self) -> Self {
        SkewSeries::one()
    }
    fn vanishes(&self) -> bool {
        self.is_zero_on_window()
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
        self.mul(rhs)
    }
}

impl DivisionRing for SkewSeries {
    fn try_inv(&self) -> Result<Self> {
        self.inv()
    }
}

impl Endomorphic for SkewSeries {
    fn twist(&self, k: u32) -> Self {
        self.shift_coeffs(k)
    }
}

impl Ring for KElement {
    fn zero_like(&self) -> Self {
        KElement::zero()
    }
    fn one_like(&self) -> Self {
        KElement::one()
    }
    fn vanishes(&self) -> bool {
        self.0.is_zero_on_window()
    }
    fn plus(&self, rhs: &Self) -> Self {
        KElement(self.0.add(&rhs.0))
    }
    fn negate(&self) -> Self {
        KElement(self.0.neg())
    }
    fn minus(&self, rhs: &Self) -> Self {
        KElement(self.0.sub(&rhs.0))
    }
    fn times(&self, rhs: &Self) -> Result<Self> {
        Ok(KElement(self.0.mul(&rhs.0)?))
    }
}

impl DivisionRing for KElement {
    fn try_inv(&self) -> Result<Self> {
        Ok(KElement(self.0.inv()?))
    }
}

impl Endomorphic for KElement {
    fn twist(&self, k: u32) -> Self {
        KElement(self.0.shift_coeffs(k))
    }
}

impl Lift<BigRational> for SkewSeries {
    fn lift(&self, c: &BigRational) -> Self {
        SkewSeries::rational(c.clone())
    }
}

impl Lift<RatFunc> for SkewSeries {
    fn lift(&self, c: &RatFunc) -> Self {
        SkewSeries::constant(c.clone())
    }
}

impl Lift<KElement> for SkewSeries {
    fn lift(&self, c: &KElement) -> Self {
        c.0.clone()
    }
}

impl Lift<SkewSeries> for SkewSeries {
    fn lift(&self, c: &SkewSeries) -> Self {
        c.clone()
    }
}

impl Lift<BigRational> for KElement {
    fn lift(&self, c: &BigRational) -> Self {
        KElement(SkewSeries::rational(c.clone()))
    }
}

impl Lift<RatFunc> for KElement {
    fn lift(&self, c: &RatFunc) -> Self {
        KElement(SkewSeries::constant(c.clone()))
    }
}

impl Lift<KElement> for KElement {
    fn lift(&self, c: &KElement) -> Self {
        c.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: u32) -> RatFunc {
        RatFunc::var(i)
    }

    fn xs(i: u32) -> SkewSeries {
        SkewSeries::constant(x(i))
    }

    fn t() -> SkewSeries {
        SkewSeries::t()
    }

    fn t_pow(e: i64) -> SkewSeries {
        SkewSeries::monomial(RatFunc::one(), e)
    }

    #[test]
    fn addition_cancels_and_tracks_horizon() {
        let a = xs(0).add(&t());
        assert!(a.add(&xs(0).neg()).eq_on_window(&t()));
        assert!(a.add(&SkewSeries::zero()).eq_on_window(&a));
        let s = t_pow(-1).add(&t());
        assert_eq!(s.known_upto(), Horizon::Infinite);
        assert_eq!(s.num_terms(), 2);
        let trunc = a.add(&SkewSeries::unknown_from(1));
        assert_eq!(trunc.known_upto(), Horizon::Finite(1));
        assert_eq!(trunc.num_terms(), 1);
    }

    #[test]
    fn commutation_rule() {
        let p = t().mul(&xs(0)).unwrap();
        assert!(p.eq_on_window(&SkewSeries::monomial(x(1), 1)));
        assert!(matches!(t_pow(-1).mul(&xs(0)), Err(Error::NotInImage { .. })));
        let q = t_pow(-1).mul(&xs(1)).unwrap();
        assert!(q.eq_on_window(&SkewSeries::monomial(x(0), -1)));
        // oracle: t * (x0 t^-1) = x1
        assert!(t().mul(&q).unwrap().eq_on_window(&xs(1)));
    }

    #[test]
    fn square_of_x0_plus_t() {
        let a = xs(0).add(&t());
        let sq = a.mul(&a).unwrap();
        let expected = SkewSeries::from_terms(
            [(0, x(0).mul(&x(0))), (1, x(0).add(&x(1))), (2, RatFunc::one())],
            Horizon::Infinite,
        );
        assert!(sq.eq_on_window(&expected));
        assert_eq!(sq.known_upto(), Horizon::Infinite);
    }

    #[test]
    fn inverse_of_x0_plus_t() {
        let a = xs(0).add(&t());
        let inv = a.inv().unwrap();
        assert_eq!(inv.known_upto(), Horizon::Finite(DEFAULT_PRECISION as i64));
        // x0^-1 - (x0 x1)^-1 t + (x0 x1 x2)^-1 t^2 - ...
        let mut prod = RatFunc::one();
        for k in 0..5u32 {
            prod = prod.mul(&x(k));
            let mut expected = prod.inv().unwrap();
            if k % 2 == 1 {
                expected = expected.neg();
            }
            assert_eq!(inv.coeff(k as i64).unwrap(), expected, "coefficient {k}");
        }
        let one = a.mul(&inv).unwrap();
        assert!(one.eq_on_window(&SkewSeries::one()));
        assert_eq!(one.known_upto(), Horizon::Finite(DEFAULT_PRECISION as i64));
        assert!(inv.mul(&a).unwrap().eq_on_window(&SkewSeries::one()));
        assert!(inv.to_string().starts_with("x0^-1 - (x0*x1)^-1*t + (x0*x1*x2)^-1*t^2"));
    }

    #[test]
    fn monomial_inverses_are_exact() {
        let inv = t_pow(2).inv().unwrap();
        assert!(inv.eq_on_window(&t_pow(-2)));
        assert_eq!(inv.known_upto(), Horizon::Infinite);
        let c = SkewSeries::monomial(x(3), 2).inv().unwrap();
        assert!(c.eq_on_window(&SkewSeries::monomial(x(1).inv().unwrap(), -2)));
        assert!(matches!(SkewSeries::monomial(x(0), 1).inv(), Err(Error::NotInImage { .. })));
        assert_eq!(SkewSeries::zero().inv().unwrap_err(), Error::DivisionByZero);
        assert!(matches!(
            SkewSeries::unknown_from(3).inv(),
            Err(Error::InsufficientPrecision(_))
        ));
    }

    #[test]
    fn degmin_cases() {
        let a = t_pow(-2).add(&SkewSeries::monomial(x(0), 1));
        assert_eq!(a.degmin(), Ok(-2));
        assert_eq!(SkewSeries::zero().degmin(), Err(Error::UndefinedDegmin));
        assert_eq!(SkewSeries::unknown_from(4).degmin(), Err(Error::UndefinedDegmin));
    }

    #[test]
    fn left_decomposition() {
        let a = SkewSeries::one().add(&t()).add(&t_pow(2));
        let (a1, a2) = a.decompose_left();
        assert!(a1.as_series().eq_on_window(&SkewSeries::one().add(&t_pow(2))));
        assert!(a2.as_series().eq_on_window(&SkewSeries::one()));

        let b = SkewSeries::monomial(x(0), -1);
        let (b1, b2) = b.decompose_left();
        assert!(b1.as_series().is_exact_zero());
        assert!(b2.as_series().eq_on_window(&SkewSeries::monomial(x(0), -2)));
        assert!(b2.as_series().mul(&t()).unwrap().eq_on_window(&b));

        let k = SkewSeries::from_terms([(-2, x(4)), (0, x(1)), (4, x(0))], Horizon::Finite(7));
        let (k1, k2) = k.decompose_left();
        assert!(k1.as_series().eq_on_window(&k));
        assert!(k2.as_series().is_zero_on_window());
        assert_eq!(k2.as_series().known_upto(), Horizon::Finite(6));
    }

    #[test]
    fn normal_subgroup_membership() {
        let a = xs(0).add(&t());
        assert_eq!(n_contains(&a), Ok(true));
        assert_eq!(n_contains(&t()), Ok(false));
        let conj = n_conjugate(&xs(1).add(&t()), &t()).unwrap();
        assert_eq!(conj.degmin(), Ok(0));
        // t^-1 (x1 + t) t = x0 + t
        assert!(conj.eq_on_window(&xs(0).add(&t())));
    }

    #[test]
    fn rendering() {
        let s = t_pow(-1).add(&SkewSeries::monomial(x(0).add(&x(1)), 1)).add(&SkewSeries::monomial(x(2).neg(), 3));
        assert_eq!(s.to_string(), "t^-1 + (x0 + x1)*t - x2*t^3");
        assert_eq!(SkewSeries::unknown_from(2).to_string(), "O(t^2)");
        assert_eq!(SkewSeries::zero().to_string(), "0");
    }
}
