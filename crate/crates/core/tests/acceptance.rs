//! Acceptance run: one PASS/FAIL line per criterion, with the time spent
//! against its limit. Exits nonzero when any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_rational::BigRational;
use num_traits::Zero;

use skewalg::algebraicity::{
    inverse_span_certificate, left_minpoly, left_sanity_kernel, lemma22_independence, monomial_witness,
    right_alg_kernel, substitute_witness, thm23_identity, Independence, MinPolyResult, QuatOverQi, SeriesOverK,
    SeriesOverQ,
};
use skewalg::quaternion::{minpoly_over_center, random_unit, sample_derived, QAlgebra, Qi, Quat};
use skewalg::rng::SplitMix64;
use skewalg::sampling::{
    check_degmin_laws, check_left_degree, check_n_normality, check_thm23, SampledCheck, SamplerConfig,
};
use skewalg::scalars::RatFunc;
use skewalg::series::{Horizon, SkewSeries};
use skewalg::structure::{
    build_operator, cyclic_vector, invariant_factors, operator_minpoly, standard_basis, theorem33_pipeline,
    LinearOperator,
};

const SEED: u64 = 2024;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn q(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn xs(i: u32) -> SkewSeries {
    SkewSeries::constant(RatFunc::var(i))
}

fn x0_plus_t() -> SkewSeries {
    xs(0).add(&SkewSeries::t())
}

fn sampled(checks: &[SampledCheck]) -> Outcome {
    for c in checks {
        ensure(c.ok(), || {
            let first = c.failures.first().map(|f| format!("; first failure {f:?}")).unwrap_or_default();
            format!("{} passed {}/{}, skipped {}{first}", c.name, c.passed, c.attempts, c.skipped)
        })?;
    }
    Ok(checks
        .iter()
        .map(|c| format!("{} {}/{} (skipped {})", c.name, c.passed, c.attempts, c.skipped))
        .collect::<Vec<_>>()
        .join(", "))
}

fn example_left_algebraicity() -> Outcome {
    let a = x0_plus_t();
    let result = left_minpoly(&a, &SeriesOverK, 2).map_err(err)?;
    let MinPolyResult::Algebraic { poly, degree: 2 } = &result else {
        return Err(format!("expected a degree-2 relation, got {result:?}"));
    };
    let t2 = SkewSeries::t().pow(2).map_err(err)?;
    let expected = [
        SkewSeries::constant(RatFunc::var(0).mul(&RatFunc::var(1))).sub(&t2),
        xs(0).add(&xs(1)).neg(),
        SkewSeries::one(),
    ];
    for (got, want) in poly.coeffs().iter().zip(&expected) {
        let exact = got.as_series().known_upto() == Horizon::Infinite;
        ensure(exact && got.as_series().eq_on_window(want), || format!("coefficient {got} != {want}"))?;
    }
    ensure(poly.right_eval(&a).map_err(err)?.is_exact_zero(), || "right evaluation is nonzero".into())?;
    let samples = sampled(&[check_left_degree(&SamplerConfig::new(SEED), 500).map_err(err)?])?;
    Ok(format!("{}; {samples}", poly.render("X")))
}

fn right_non_algebraicity() -> Outcome {
    let mut largest = 0;
    for n in 1..=3 {
        for m in 1..=4 {
            let r = right_alg_kernel(n, m, 2 * (n + m) + 2).map_err(err)?;
            ensure(r.dimension == 0, || format!("kernel dimension {} at n={n}, M={m}", r.dimension))?;
            largest = largest.max(r.unknowns);
        }
    }
    let sanity = left_sanity_kernel(2, 2, 10).map_err(err)?;
    ensure(sanity.dimension >= 1, || "left system at n = 2 has a trivial kernel".into())?;
    Ok(format!(
        "right kernels trivial for 12 (n, M) pairs (up to {largest} unknowns); left kernel at n=2 has dimension {}",
        sanity.dimension
    ))
}

fn monomial_witnesses() -> Outcome {
    for n in 1..=6 {
        ensure(monomial_witness(n).map_err(err)?, || format!("witness fails at n = {n}"))?;
    }
    Ok("n = 1..6".into())
}

fn degmin_laws() -> Outcome {
    sampled(&check_degmin_laws(&SamplerConfig::new(SEED), 1000, 500).map_err(err)?)
}

fn normal_subgroup() -> Outcome {
    sampled(&check_n_normality(&SamplerConfig::new(SEED), 500).map_err(err)?)
}

fn commutator_gadget() -> Outcome {
    let (a, b) = (SkewSeries::t(), xs(1));
    for alpha in 0..=2 {
        let alpha = q(alpha);
        let r = thm23_identity(&a, &b, &alpha, 8).map_err(err)?;
        ensure(r.passed() && r.verified_terms.map_or(true, |n| n >= 8), || {
            format!("identity fails for alpha = {alpha}: {:?}", r.verified_terms)
        })?;
        let cert = inverse_span_certificate(&a, &b, &alpha, 2, 8).map_err(err)?;
        ensure(cert.holds && cert.verified_terms.map_or(true, |n| n >= 8), || {
            format!("inverse span fails for alpha = {alpha}")
        })?;
    }
    let samples = sampled(&check_thm23(&SamplerConfig::new(SEED), 100, 8).map_err(err)?)?;
    Ok(format!("worked instance alpha = 0, 1, 2; {samples}"))
}

fn lemma22_dichotomy() -> Outcome {
    let alphas = [q(0), q(1), q(2)];
    let window = match lemma22_independence(&x0_plus_t(), &alphas, &SeriesOverQ).map_err(err)? {
        Independence::Independent { rank: 3, window } => window,
        other => return Err(format!("x0 + t over Q: {other:?}")),
    };
    ensure(window.map_or(true, |h| h >= Horizon::Finite(8)), || format!("window {window:?} < 8"))?;
    let t = SkewSeries::t();
    let Independence::DependentWitness { betas } = lemma22_independence(&t, &alphas, &SeriesOverK).map_err(err)?
    else {
        return Err("t over K: expected a dependence".into());
    };
    let residual = substitute_witness(&t, &alphas, &betas).map_err(err)?;
    ensure(residual.is_zero_on_window(), || "witness does not vanish".into())?;
    Ok(format!("independent over Q (window {window:?}); dependent over K, witness verified"))
}

fn quaternion_instance() -> Outcome {
    let alg = QAlgebra::hamilton();
    let r = theorem33_pipeline(&Quat::j(&alg), 2, SEED).map_err(err)?;
    ensure(r.m == 2 && r.u_degree() == 2 && r.dim_f_d == 4, || {
        format!("m = {}, deg u = {}, dim = {}", r.m, r.u_degree(), r.dim_f_d)
    })?;
    let mut rng = SplitMix64::new(SEED);
    let zero = Quat::scalar(&alg, BigRational::zero());
    for _ in 0..1000 {
        let (x, y) = (random_unit(&alg, &mut rng, 9), random_unit(&alg, &mut rng, 9));
        ensure(minpoly_over_center(&x).right_eval(&x).map_err(err)? == zero, || format!("{x} misses its minpoly"))?;
        let xy = x.mul(&y).map_err(err)?;
        ensure(xy.norm() == x.norm() * y.norm(), || format!("norm of {x} * {y}"))?;
    }
    for level in 1..=3 {
        for e in sample_derived(&alg, level, 200, SEED).map_err(err)? {
            let deg = left_minpoly(&e, &QuatOverQi, 2).map_err(err)?.degree();
            ensure(matches!(deg, Some(1 | 2)), || format!("D^({level}) element {e} has degree {deg:?}"))?;
        }
    }
    Ok(format!("m = 2, u = {}, minpoly {}; 1000 quaternions; 600 derived elements", r.u, r.u_minpoly))
}

fn structure_checks(op: &LinearOperator<Qi>, label: &str) -> Result<(), String> {
    let inv = invariant_factors(op).map_err(err)?;
    ensure(inv.chain_holds().map_err(err)?, || format!("{label}: divisibility chain broken"))?;
    ensure(inv.total_degree() == op.dim(), || format!("{label}: degrees sum to {}", inv.total_degree()))?;
    let f = operator_minpoly(op).map_err(err)?;
    let cyc = cyclic_vector(op, SEED).map_err(err)?;
    ensure(cyc.krylov_rank == f.degree().unwrap_or(0), || format!("{label}: Krylov rank {}", cyc.krylov_rank))?;
    Ok(())
}

fn structure_algorithms() -> Outcome {
    let alg = QAlgebra::hamilton();
    let basis = standard_basis(&alg);
    for (label, x) in [("j", Quat::j(&alg)), ("i", Quat::i(&alg)), ("3", Quat::from_ints(&alg, 3, 0, 0, 0))] {
        structure_checks(&build_operator(&x, &basis).map_err(err)?, label)?;
    }
    let mut rng = SplitMix64::new(SEED);
    for n in 0..50 {
        let mut entry = || Qi::new(&alg.a, q(rng.range_i64(-3, 3)), q(rng.range_i64(-3, 3)));
        let m = vec![vec![entry(), entry()], vec![entry(), entry()]];
        structure_checks(&LinearOperator::from_matrix(m).map_err(err)?, &format!("random #{n}"))?;
    }
    Ok("right multiplication by j, i, 3 and 50 random operators".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, u64, fn() -> Outcome); 9] = [
        ("example left-algebraicity", 30, example_left_algebraicity),
        ("example right non-algebraicity", 60, right_non_algebraicity),
        ("monomial witness", 5, monomial_witnesses),
        ("degmin laws", 30, degmin_laws),
        ("N is a normal subgroup", 60, normal_subgroup),
        ("commutator gadget", 60, commutator_gadget),
        ("inverse independence dichotomy", 30, lemma22_dichotomy),
        ("quaternion instance", 60, quaternion_instance),
        ("structure algorithms", 30, structure_algorithms),
    ];
    let mut failed = 0;
    for (n, (title, limit, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let in_time = elapsed <= Duration::from_secs(limit);
        let (status, detail) = match (&outcome, in_time) {
            (Ok(d), true) => ("PASS", d.clone()),
            (Ok(d), false) => ("FAIL", format!("over time limit; {d}")),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!(
            "criterion {} {status} [{:.2}s / {limit}s] {title}: {detail}",
            n + 1,
            elapsed.as_secs_f64()
        );
    }
    println!("acceptance: {} of 9 criteria passed", 9 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
