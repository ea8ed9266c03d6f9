//! The commutator gadget: for `b` in `N` and `d = ba - ab != 0`,
//! `d = b(a + alpha)(1 - c)` with `c = (a + alpha)^-1 b^-1 (a + alpha) b`,
//! and `(a + alpha)^-1` lies in the left `K`-span of powers of
//! `w = d^-1 b (a + alpha)` times `d^-1 b`.

use num_rational::BigRational;

use super::{left_minpoly, MinPolyResult, SeriesOverK};
use crate::error::{Error, Result};
use crate::ore::OrePoly;
use crate::ring::{DivisionRing, Ring};
use crate::series::{n_contains, Horizon, KElement, SkewSeries};

#[derive(Clone, Debug)]
pub struct Thm23Report {
    pub d: SkewSeries,
    pub c: SkewSeries,
    /// `b (a + alpha) (1 - c)`.
    pub factored: SkewSeries,
    pub identity_holds: bool,
    /// Exponents from `degmin(d)` up to the shared horizon; `None` when both sides are exact.
    pub verified_terms: Option<i64>,
    pub c_degmin: i64,
    pub one_minus_c_nonzero: bool,
}

impl Thm23Report {
    pub fn c_in_n(&self) -> bool {
        self.c_degmin == 0
    }

    pub fn passed(&self) -> bool {
        self.identity_holds && self.c_in_n() && self.one_minus_c_nonzero
    }
}

fn commutator_difference(a: &SkewSeries, b: &SkewSeries) -> Result<SkewSeries> {
    if !n_contains(b)? {
        return Err(Error::InvalidArgument(format!("{b} is not in N")));
    }
    let d = b.mul(a)?.sub(&a.mul(b)?);
    if d.is_zero_on_window() {
        return Err(Error::CentralPair);
    }
    Ok(d)
}

fn shifted(a: &SkewSeries, alpha: &BigRational) -> SkewSeries {
    a.add(&SkewSeries::rational(alpha.clone()))
}

fn window_terms(reference: &SkewSeries, other: &SkewSeries) -> Option<i64> {
    let h = reference.known_upto().min(other.known_upto());
    match (h, reference.degmin()) {
        (Horizon::Finite(h), Ok(low)) => Some(h - low),
        (Horizon::Finite(_), Err(_)) => Some(0),
        (Horizon::Infinite, _) => None,
    }
}

/// Checks the identity with inverses carrying enough terms that the
/// comparison covers `precision` exponents from `degmin(d)`.
pub fn thm23_identity(a: &SkewSeries, b: &SkewSeries, alpha: &BigRational, precision: usize) -> Result<Thm23Report> {
    let d = commutator_difference(a, b)?;
    let s = shifted(a, alpha);
    let extra = (d.degmin()? - s.degmin()?).max(0) as usize;
    let s_inv = s.inv_with_precision(precision + extra)?;
    let c = s_inv.mul(&b.inv_with_precision(precision + extra)?)?.mul(&s)?.mul(b)?;
    let one_minus_c = SkewSeries::one().sub(&c);
    let factored = b.mul(&s)?.mul(&one_minus_c)?;
    Ok(Thm23Report {
        identity_holds: factored.eq_on_window(&d),
        verified_terms: window_terms(&d, &factored),
        c_degmin: c.degmin()?,
        one_minus_c_nonzero: !one_minus_c.is_zero_on_window(),
        d,
        c,
        factored,
    })
}

/// `w = d^-1 b (a + alpha)`.
pub fn w_element(a: &SkewSeries, b: &SkewSeries, alpha: &BigRational, precision: usize) -> Result<SkewSeries> {
    let d = commutator_difference(a, b)?;
    d.inv_with_precision(precision)?.mul(b)?.mul(&shifted(a, alpha))
}

/// Minimal left relation of `w` over `K`, scaled so its constant term is 1.
pub fn w_relation(
    a: &SkewSeries,
    b: &SkewSeries,
    alpha: &BigRational,
    bound: usize,
    precision: usize,
) -> Result<OrePoly<KElement>> {
    let w = w_element(a, b, alpha, precision)?;
    match left_minpoly(&w, &SeriesOverK, bound)? {
        MinPolyResult::Algebraic { poly, .. } => {
            let c0 = poly.coeffs()[0].clone();
            if c0.vanishes() {
                return Err(Error::InsufficientPrecision("minimal relation has no constant term".into()));
            }
            poly.scale_left(&c0.try_inv()?)
        }
        MinPolyResult::ExceedsBound { bound } => Err(Error::InvalidArgument(format!(
            "w has no left relation over K of degree <= {bound}"
        ))),
        MinPolyResult::Indeterminate { reason } => Err(Error::InsufficientPrecision(reason)),
    }
}

/// Rebuilds `(a + alpha)^-1 = -sum_{i>=1} beta_i w^(i-1) d^-1 b` from a relation
/// `1 + beta_1 w + ... + beta_n w^n = 0` and compares with the series inverse.
pub fn inverse_span_check(
    a: &SkewSeries,
    b: &SkewSeries,
    alpha: &BigRational,
    relation: &OrePoly<KElement>,
    precision: usize,
) -> Result<bool> {
    Ok(compare_inverse(a, b, alpha, relation, precision)?.0)
}

/// Agreement flag and number of compared exponents.
fn compare_inverse(
    a: &SkewSeries,
    b: &SkewSeries,
    alpha: &BigRational,
    relation: &OrePoly<KElement>,
    precision: usize,
) -> Result<(bool, Option<i64>)> {
    let coeffs = relation.coeffs();
    let normalized = coeffs
        .first()
        .is_some_and(|c0| c0.as_series().sub(&SkewSeries::one()).is_zero_on_window());
    if !normalized || coeffs.len() < 2 {
        return Err(Error::InvalidArgument("relation must be 1 + beta_1 X + ... with degree >= 1".into()));
    }
    let d = commutator_difference(a, b)?;
    let d_inv_b = d.inv_with_precision(precision)?.mul(b)?;
    let w = d_inv_b.mul(&shifted(a, alpha))?;
    let mut power = SkewSeries::one();
    let mut acc = SkewSeries::zero();
    for (i, beta) in coeffs.iter().enumerate().skip(1) {
        if i > 1 {
            power = power.mul(&w)?;
        }
        acc = acc.add(&beta.as_series().mul(&power)?.mul(&d_inv_b)?);
    }
    let rebuilt = acc.neg();
    let target = shifted(a, alpha).inv_with_precision(precision)?;
    let terms = window_terms(&target, &rebuilt);
    Ok((rebuilt.eq_on_window(&target) && terms.map_or(true, |n| n > 0), terms))
}

/// Largest conjugation `t^k (.) t^-k` tried by [`inverse_span_certificate`].
pub const MAX_SHIFT: u32 = 8;

/// Extra working precision tried when a comparison window comes out short.
const WIDEN_STEPS: [usize; 3] = [0, 4, 8];

#[derive(Clone, Debug)]
pub struct SpanCertificate {
    /// The check ran on `sigma^shift` applied to every coefficient of `a` and `b`.
    pub shift: u32,
    pub relation: OrePoly<KElement>,
    pub holds: bool,
    /// Exponents compared from `degmin((a + alpha)^-1)`; `None` when exact.
    pub verified_terms: Option<i64>,
}

/// Finds the normalized relation of `w` and runs [`inverse_span_check`].
///
/// Powers of `w` can need `sigma^-1` of coefficients outside the image of the
/// shift. Conjugation by `t^k` is an injective ring map sending `(a, b)` to
/// the same elements with coefficients moved by `sigma^k`, so both the relation
/// and the comparison transfer; the smallest `k <= MAX_SHIFT` that avoids
/// leaving the image is used.
pub fn inverse_span_certificate(
    a: &SkewSeries,
    b: &SkewSeries,
    alpha: &BigRational,
    bound: usize,
    precision: usize,
) -> Result<SpanCertificate> {
    let mut last = None;
    for shift in 0..=MAX_SHIFT {
        let (a2, b2) = (a.shift_coeffs(shift), b.shift_coeffs(shift));
        let attempt = widened(&a2, &b2, alpha, bound, precision);
        match attempt {
            Ok((relation, (holds, verified_terms))) => {
                return Ok(SpanCertificate {
                    shift,
                    relation,
                    holds,
                    verified_terms,
                })
            }
            Err(e @ Error::NotInImage { .. }) => last = Some(e),
            Err(e) => return Err(e),
        }
    }
    Err(last.unwrap_or(Error::InvalidArgument("no shift attempted".into())))
}

type Attempt = (OrePoly<KElement>, (bool, Option<i64>));

/// Raises the working precision until at least `precision` exponents are compared.
fn widened(a: &SkewSeries, b: &SkewSeries, alpha: &BigRational, bound: usize, precision: usize) -> Result<Attempt> {
    let mut best = None;
    for extra in WIDEN_STEPS {
        let p = precision + extra;
        let rel = w_relation(a, b, alpha, bound, p)?;
        let cmp = compare_inverse(a, b, alpha, &rel, p)?;
        let enough = !cmp.0 || cmp.1.map_or(true, |n| n >= precision as i64);
        best = Some((rel, cmp));
        if enough {
            break;
        }
    }
    Ok(best.expect("at least one widening step"))
}
