//! Seeded element generation and sampled group-theoretic checks.
//!
//! Sample `index` of a configuration is drawn from the stream
//! `SplitMix64::for_index(seed, index)`, so any reported entry can be rebuilt
//! from `(seed, index)` alone.

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::algebraicity::{
    inverse_span_certificate, left_minpoly, thm23_identity, MinPolyResult, SeriesOverK,
};
use crate::error::{Error, Result};
use crate::rng::SplitMix64;
use crate::scalars::{MPoly, Monomial, RatFunc};
use crate::series::{n_conjugate, SkewSeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CoefficientPool {
    /// `c * x_v^e` with small nonzero integer `c`.
    Monomials,
    /// Monomials mixed with `c * x_v^e / (x_w + k)`.
    SimpleFractions,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SamplerConfig {
    pub seed: u64,
    /// Number of terms per sampled series.
    pub support_size: usize,
    /// Inclusive exponent interval.
    pub exponent_range: (i64, i64),
    /// Inclusive variable-index interval.
    pub variable_range: (u32, u32),
    pub coefficient_pool: CoefficientPool,
    /// Known terms for inverses of multi-term samples.
    pub precision: usize,
    /// Smallest variable index used by image-friendly samples.
    pub image_threshold: u32,
}

impl SamplerConfig {
    pub fn new(seed: u64) -> Self {
        SamplerConfig {
            seed,
            support_size: 3,
            exponent_range: (-2, 3),
            variable_range: (0, 4),
            coefficient_pool: CoefficientPool::Monomials,
            precision: 12,
            image_threshold: 4,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let (lo, hi) = self.exponent_range;
        let (vlo, vhi) = self.variable_range;
        if lo > hi || vlo > vhi {
            return Err(Error::InvalidArgument("sampler ranges must be nonempty".into()));
        }
        if self.support_size == 0 {
            return Err(Error::InvalidArgument("support size must be positive".into()));
        }
        if (self.precision as i64) < hi - lo + 1 {
            return Err(Error::InvalidArgument("precision must cover the exponent span".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Constraint {
    Any,
    /// Nonzero constant term and no negative exponents.
    Degmin0,
    /// Even exponents only.
    InK,
    /// Variables indexed at least `image_threshold`, so unshifts by up to that much succeed.
    ImageFriendly,
}

/// The variable range moved up so that it starts at or above `image_threshold`.
fn friendly_vars(cfg: &SamplerConfig) -> (u32, u32) {
    let (lo, hi) = cfg.variable_range;
    let lift = cfg.image_threshold.saturating_sub(lo);
    (lo + lift, hi + lift)
}

fn coefficient(cfg: &SamplerConfig, rng: &mut SplitMix64, vars: (u32, u32)) -> RatFunc {
    let c = BigRational::from_integer(rng.nonzero_i64(5).into());
    let v = rng.range_i64(i64::from(vars.0), i64::from(vars.1)) as u32;
    let e = rng.below(3) as u32;
    let num = MPoly::term(c, Monomial::var_pow(v, e));
    let fraction = cfg.coefficient_pool == CoefficientPool::SimpleFractions && rng.chance(1, 2);
    if fraction {
        let w = rng.range_i64(i64::from(vars.0), i64::from(vars.1)) as u32;
        let k = BigRational::from_integer(rng.range_i64(1, 3).into());
        let den = MPoly::var(w).add(&MPoly::constant(k));
        RatFunc::new(num, den).expect("x_w + k is nonzero")
    } else {
        RatFunc::from_poly(num)
    }
}

/// Distinct exponents drawn from `lo..=hi`, filtered by `keep`.
fn exponents(rng: &mut SplitMix64, lo: i64, hi: i64, count: usize, keep: impl Fn(i64) -> bool) -> Vec<i64> {
    let pool: Vec<i64> = (lo..=hi).filter(|&e| keep(e)).collect();
    let mut chosen = Vec::new();
    let mut guard = 0;
    while chosen.len() < count.min(pool.len()) && guard < 64 * count {
        let e = pool[rng.below(pool.len() as u64) as usize];
        if !chosen.contains(&e) {
            chosen.push(e);
        }
        guard += 1;
    }
    chosen.sort_unstable();
    chosen
}

/// Sample `index` of the stream under `constraint`; exact finite support.
pub fn sample_series(cfg: &SamplerConfig, constraint: Constraint, index: u64) -> Result<SkewSeries> {
    cfg.validate()?;
    let mut rng = SplitMix64::for_index(cfg.seed, index);
    let (lo, hi) = cfg.exponent_range;
    let vars = match constraint {
        Constraint::ImageFriendly => friendly_vars(cfg),
        _ => cfg.variable_range,
    };
    let n = cfg.support_size;
    let exps = match constraint {
        Constraint::Any | Constraint::ImageFriendly => exponents(&mut rng, lo, hi, n, |_| true),
        Constraint::InK => {
            let (elo, ehi) = (lo - lo.rem_euclid(2), hi);
            exponents(&mut rng, elo, ehi.max(elo), n, |e| e % 2 == 0)
        }
        Constraint::Degmin0 => {
            let mut rest = exponents(&mut rng, 1, hi.max(1), n.saturating_sub(1), |_| true);
            rest.insert(0, 0);
            rest
        }
    };
    let terms = exps
        .into_iter()
        .map(|e| (e, coefficient(cfg, &mut rng, vars)))
        .collect::<Vec<_>>();
    Ok(SkewSeries::from_terms(terms, crate::series::Horizon::Infinite))
}

/// A failing sample with everything needed to reproduce it.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Failure {
    pub seed: u64,
    pub index: u64,
    pub inputs: Vec<String>,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SampledCheck {
    pub name: String,
    pub attempts: usize,
    pub passed: usize,
    /// Attempts abandoned because a coefficient left the image of the shift.
    pub skipped: usize,
    pub failures: Vec<Failure>,
    /// Largest tolerated fraction of skipped attempts.
    pub max_skip_ratio: f64,
}

impl SampledCheck {
    fn new(name: &str, max_skip_ratio: f64) -> Self {
        SampledCheck {
            name: name.to_string(),
            attempts: 0,
            passed: 0,
            skipped: 0,
            failures: Vec::new(),
            max_skip_ratio,
        }
    }

    pub fn skip_ratio(&self) -> f64 {
        if self.attempts == 0 {
            0.0
        } else {
            self.skipped as f64 / self.attempts as f64
        }
    }

    pub fn ok(&self) -> bool {
        self.failures.is_empty() && self.skip_ratio() <= self.max_skip_ratio && self.passed > 0
    }

    /// Records one attempt: `Ok(None)` passes, `Ok(Some(reason))` fails,
    /// `NotInImage` skips, other errors fail.
    fn record(&mut self, seed: u64, index: u64, inputs: Vec<String>, outcome: Result<Option<String>>) {
        self.attempts += 1;
        let reason = match outcome {
            Ok(None) => {
                self.passed += 1;
                return;
            }
            Err(Error::NotInImage { .. }) => {
                self.skipped += 1;
                return;
            }
            Ok(Some(reason)) => reason,
            Err(e) => e.to_string(),
        };
        self.failures.push(Failure {
            seed,
            index,
            inputs,
            reason,
        });
    }
}

fn expect(cond: bool, reason: impl FnOnce() -> String) -> Option<String> {
    (!cond).then(reason)
}

/// `degmin(a b) = degmin a + degmin b` on `pairs` image-friendly pairs, and
/// `degmin(a^-1) = -degmin(a)` on `inverses` degmin-0 samples.
pub fn check_degmin_laws(cfg: &SamplerConfig, pairs: usize, inverses: usize) -> Result<Vec<SampledCheck>> {
    let mut add = SampledCheck::new("degmin_additivity", 0.0);
    for i in 0..pairs as u64 {
        let a = sample_series(cfg, Constraint::ImageFriendly, 2 * i)?;
        let b = sample_series(cfg, Constraint::ImageFriendly, 2 * i + 1)?;
        let outcome = a.mul(&b).and_then(|p| {
            let (dp, da, db) = (p.degmin()?, a.degmin()?, b.degmin()?);
            Ok(expect(dp == da + db, || format!("degmin(ab) = {dp}, expected {}", da + db)))
        });
        add.record(cfg.seed, i, vec![a.to_string(), b.to_string()], outcome);
    }
    let mut inv = SampledCheck::new("degmin_inverse", 0.0);
    for i in 0..inverses as u64 {
        let a = sample_series(cfg, Constraint::Degmin0, i)?;
        let outcome = a.inv_with_precision(cfg.precision).and_then(|ai| {
            let back = a.mul(&ai)?;
            Ok(expect(ai.degmin()? == -a.degmin()?, || "degmin(a^-1) != -degmin(a)".into())
                .or_else(|| expect(back.eq_on_window(&SkewSeries::one()), || "a * a^-1 != 1".into())))
        });
        inv.record(cfg.seed, i, vec![a.to_string()], outcome);
    }
    Ok(vec![add, inv])
}

/// Conjugation, product and inverse closure of `N = {degmin = 0}`.
pub fn check_n_normality(cfg: &SamplerConfig, count: usize) -> Result<Vec<SampledCheck>> {
    let mut conj = SampledCheck::new("n_conjugation", 0.2);
    let mut prod = SampledCheck::new("n_product", 0.0);
    let mut inv = SampledCheck::new("n_inverse", 0.0);
    for i in 0..count as u64 {
        let alpha = sample_series(cfg, Constraint::Degmin0, 2 * i)?;
        let beta = sample_series(cfg, Constraint::ImageFriendly, 2 * i + 1)?;
        let outcome = n_conjugate(&alpha, &beta)
            .and_then(|c| Ok(expect(c.degmin()? == 0, || format!("conjugate {c} has degmin != 0"))));
        conj.record(cfg.seed, i, vec![alpha.to_string(), beta.to_string()], outcome);

        let other = sample_series(cfg, Constraint::Degmin0, 2 * i + 1)?;
        let outcome = alpha
            .mul(&other)
            .and_then(|p| Ok(expect(p.degmin()? == 0, || format!("product {p} left N"))));
        prod.record(cfg.seed, i, vec![alpha.to_string(), other.to_string()], outcome);

        let outcome = alpha
            .inv_with_precision(cfg.precision)
            .and_then(|a| Ok(expect(a.degmin()? == 0, || format!("inverse {a} left N"))));
        inv.record(cfg.seed, i, vec![alpha.to_string()], outcome);
    }
    Ok(vec![conj, inv, prod])
}

/// Elements of `N` used to detect non-commutation, with image-friendly variables.
fn witness_pool(cfg: &SamplerConfig) -> Vec<SkewSeries> {
    let v = friendly_vars(cfg).1 + 1;
    let x = |i| SkewSeries::constant(RatFunc::var(i));
    vec![x(v), x(v).add(&SkewSeries::t()), x(v + 1).add(&SkewSeries::monomial(RatFunc::one(), 2))]
}

/// Rational scalars commute with `N`; every sampled non-central element fails
/// to commute with some element of `N`.
pub fn check_centralizer(cfg: &SamplerConfig, count: usize) -> Result<Vec<SampledCheck>> {
    let mut central = SampledCheck::new("centralizer_scalars_commute", 0.0);
    let mut witnesses = SampledCheck::new("centralizer_noncentral_witness", 0.2);
    let pool = witness_pool(cfg);
    for i in 0..count as u64 {
        let alpha = sample_series(cfg, Constraint::Degmin0, 2 * i)?;
        let mut rng = SplitMix64::for_index(cfg.seed ^ 0x00ce_47a1, i);
        let f = SkewSeries::rational(BigRational::new(
            rng.nonzero_i64(9).into(),
            rng.range_i64(1, 9).into(),
        ));
        let outcome = f
            .mul(&alpha)
            .and_then(|l| Ok(expect(l.eq_on_window(&alpha.mul(&f)?), || "f a != a f".into())));
        central.record(cfg.seed, i, vec![f.to_string(), alpha.to_string()], outcome);

        let beta = sample_series(cfg, Constraint::ImageFriendly, 2 * i + 1)?;
        if beta.terms().all(|(e, c)| e == 0 && c.as_rational().is_some()) {
            continue;
        }
        let outcome = (|| {
            for w in &pool {
                if !w.mul(&beta)?.eq_on_window(&beta.mul(w)?) {
                    return Ok(None);
                }
            }
            Ok(Some(format!("{beta} commuted with every witness")))
        })();
        witnesses.record(cfg.seed, i, vec![beta.to_string()], outcome);
    }
    Ok(vec![central, witnesses])
}

/// Left degree over `K` is at most 2 for sampled degmin-0 series. Coordinates
/// over `K` need one `sigma^-1`, so samples draw from the lifted variable range.
pub fn check_left_degree(cfg: &SamplerConfig, count: usize) -> Result<SampledCheck> {
    let mut check = SampledCheck::new("left_degree_at_most_2", 0.0);
    let lifted = SamplerConfig {
        variable_range: friendly_vars(cfg),
        ..cfg.clone()
    };
    for i in 0..count as u64 {
        let a = sample_series(&lifted, Constraint::Degmin0, i)?;
        let outcome = left_minpoly(&a, &SeriesOverK, 2).map(|r| match r {
            MinPolyResult::Algebraic { degree, .. } => expect(degree <= 2, || format!("degree {degree}")),
            other => Some(format!("{other:?}")),
        });
        check.record(cfg.seed, i, vec![a.to_string()], outcome);
    }
    Ok(check)
}

/// An admissible triple for the commutator identity, from stream `(seed, index)`:
/// `a = c t^k` with `k` in `1..=2`, `b = b0 + b1 t^j` in `N` with rational `b0`, and
/// `alpha = index mod 3`. Both `a` and `b` use image-friendly variables.
///
/// A rational `b0` makes `d = ba - ab` a single term and `a + alpha` has at most two,
/// so every coefficient of their inverses is a single product.
pub fn sample_thm23_triple(cfg: &SamplerConfig, index: u64) -> Result<(SkewSeries, SkewSeries, BigRational)> {
    cfg.validate()?;
    let mut rng = SplitMix64::for_index(cfg.seed, index);
    let vars = friendly_vars(cfg);
    let k = rng.range_i64(1, 2);
    let a = SkewSeries::monomial(coefficient(cfg, &mut rng, vars), k);
    let j = rng.range_i64(1, cfg.exponent_range.1.max(1));
    let b0 = RatFunc::from_int(rng.nonzero_i64(5));
    let b1 = coefficient(cfg, &mut rng, vars);
    let b = SkewSeries::from_terms([(0, b0), (j, b1)], crate::series::Horizon::Infinite);
    Ok((a, b, BigRational::from_integer((index % 3).into())))
}

/// The commutator identity and the inverse-span reconstruction on `count`
/// sampled admissible triples; pairs that commute are redrawn from the next index.
pub fn check_thm23(cfg: &SamplerConfig, count: usize, min_terms: usize) -> Result<Vec<SampledCheck>> {
    let mut identity = SampledCheck::new("thm23_identity", 0.2);
    let mut span = SampledCheck::new("thm23_inverse_span", 0.2);
    let mut index = 0u64;
    while identity.attempts < count && index < 8 * count as u64 {
        let (a, b, alpha) = sample_thm23_triple(cfg, index)?;
        let i = index;
        index += 1;
        let inputs = vec![a.to_string(), b.to_string(), alpha.to_string()];
        let report = match thm23_identity(&a, &b, &alpha, min_terms) {
            Err(Error::CentralPair) => continue,
            other => other,
        };
        let outcome = report.map(|r| {
            expect(r.passed(), || "identity d = b(a+alpha)(1-c) failed".into()).or_else(|| {
                expect(r.verified_terms.map_or(true, |n| n >= min_terms as i64), || {
                    format!("only {:?} terms verified", r.verified_terms)
                })
            })
        });
        identity.record(cfg.seed, i, inputs.clone(), outcome);
        let outcome = inverse_span_certificate(&a, &b, &alpha, 2, min_terms).map(|cert| {
            expect(cert.holds, || "reconstruction differs from the series inverse".into()).or_else(|| {
                expect(cert.verified_terms.map_or(true, |n| n >= min_terms as i64), || {
                    format!("only {:?} terms compared", cert.verified_terms)
                })
            })
        });
        span.record(cfg.seed, i, inputs, outcome);
    }
    Ok(vec![identity, span])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constraints_hold_by_construction() {
        let cfg = SamplerConfig::new(42);
        for i in 0..40 {
            assert_eq!(sample_series(&cfg, Constraint::Degmin0, i).unwrap().degmin().unwrap(), 0);
            assert!(sample_series(&cfg, Constraint::InK, i).unwrap().has_even_support());
            let f = sample_series(&cfg, Constraint::ImageFriendly, i).unwrap();
            assert!(f.min_var_index().map_or(true, |v| v >= cfg.image_threshold));
        }
    }

    #[test]
    fn streams_are_deterministic() {
        let cfg = SamplerConfig::new(7);
        let a = sample_series(&cfg, Constraint::Any, 3).unwrap();
        let b = sample_series(&cfg, Constraint::Any, 3).unwrap();
        assert!(a.eq_on_window(&b));
        let c = sample_series(&cfg, Constraint::Any, 4).unwrap();
        assert!(!a.eq_on_window(&c) || a.to_string() == c.to_string());
    }

    #[test]
    fn invalid_configs_are_rejected() {
        let mut cfg = SamplerConfig::new(1);
        cfg.exponent_range = (3, 1);
        assert!(cfg.validate().is_err());
        let mut cfg = SamplerConfig::new(1);
        cfg.precision = 2;
        assert!(cfg.validate().is_err());
    }

    #[test]
    fn conjugating_x1_plus_t_by_t() {
        let alpha = SkewSeries::constant(RatFunc::var(1)).add(&SkewSeries::t());
        let c = n_conjugate(&alpha, &SkewSeries::t()).unwrap();
        assert_eq!(c.degmin().unwrap(), 0);
    }

    #[test]
    fn t_does_not_centralize_n() {
        let x0 = SkewSeries::constant(RatFunc::var(0));
        let t = SkewSeries::t();
        assert!(!t.mul(&x0).unwrap().eq_on_window(&x0.mul(&t).unwrap()));
    }

    #[test]
    fn small_sampled_runs_pass() {
        let cfg = SamplerConfig::new(2024);
        let mut all = check_degmin_laws(&cfg, 20, 10).unwrap();
        all.extend(check_n_normality(&cfg, 10).unwrap());
        all.extend(check_centralizer(&cfg, 10).unwrap());
        all.extend(check_thm23(&cfg, 6, 8).unwrap());
        all.push(check_left_degree(&cfg, 10).unwrap());
        for c in all {
            assert!(c.ok(), "{c:?}");
        }
    }

    #[test]
    fn fraction_coefficients_keep_degmin_additive() {
        let mut cfg = SamplerConfig::new(99);
        cfg.coefficient_pool = CoefficientPool::SimpleFractions;
        let checks = check_degmin_laws(&cfg, 30, 0).unwrap();
        let additivity = checks.iter().find(|c| c.name == "degmin_additivity").unwrap();
        assert!(additivity.ok(), "{additivity:?}");
    }
}
