//! One function per subcommand; each fills a [`Report`].

use std::fmt::Display;

use num_rational::BigRational;
use skewalg::algebraicity::{
    inverse_span_certificate, left_minpoly, left_sanity_kernel, lemma22_independence, monomial_witness,
    right_alg_kernel, substitute_witness, thm23_identity, witness_polynomial, Coordinatizer, Independence,
    MinPolyResult, QuatOverQi, SeriesOverF, SeriesOverK, SeriesOverQ, Subring,
};
use skewalg::quaternion::{minpoly_over_center, QAlgebra, Quat};
use skewalg::ring::{Lift, Ring};
use skewalg::sampling::{check_centralizer, check_degmin_laws, check_left_degree, check_n_normality, check_thm23};
use skewalg::sampling::SamplerConfig;
use skewalg::scalars::RatFunc;
use skewalg::series::{Horizon, SkewSeries};
use skewalg::structure::theorem33_pipeline;
use skewalg::Result;

use crate::report::{Check, Report, Status};

/// Flags shared by every subcommand.
#[derive(Clone, Debug)]
pub struct Settings {
    pub seed: u64,
    pub precision: usize,
    pub samples: Option<usize>,
}

impl Settings {
    fn sampler(&self) -> SamplerConfig {
        SamplerConfig {
            precision: self.precision.max(SamplerConfig::new(self.seed).precision),
            ..SamplerConfig::new(self.seed)
        }
    }

    fn samples_or(&self, default: usize) -> usize {
        self.samples.unwrap_or(default)
    }
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

fn join<T: Display>(items: &[T]) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

pub fn verify_example(s: &Settings, right_degree: usize, window: usize, r: &mut Report) {
    r.param("right_degree", right_degree).param("window", window);
    r.run("example_minpoly", || {
        let a = x0_plus_t();
        let result = left_minpoly(&a, &SeriesOverK, 2)?;
        let Some(poly) = result.poly() else {
            return Ok(vec![Check::fail("example_minpoly", format!("{result:?}"))]);
        };
        let exact = poly.right_eval(&a)?.is_exact_zero();
        let check = Check::verdict(
            "example_minpoly",
            result.degree() == Some(2) && exact,
            "x0 + t is left algebraic of degree 2 over K; right evaluation is exactly 0",
        );
        Ok(vec![check.with("poly", poly.render("X"))])
    });
    r.run("left_degree_at_most_2", || {
        Ok(vec![Check::from_sampled(&check_left_degree(&s.sampler(), s.samples_or(100))?)])
    });
    r.run("right_alg_kernel", || {
        let mut dims = Vec::new();
        let mut ok = true;
        for n in 1..=right_degree {
            for m in 1..=window {
                let k = right_alg_kernel(n, m, 2 * (n + m) + 2)?;
                ok &= k.dimension == 0;
                dims.push(format!("n={n} M={m}: {}", k.dimension));
            }
        }
        let details = format!("kernel dimensions for n <= {right_degree}, M <= {window} (precision 2(n+M)+2)");
        Ok(vec![Check::verdict("right_alg_kernel", ok, details).with("dimensions", join(&dims))])
    });
    r.run("left_sanity_kernel", || {
        let m = window.max(1);
        let k = left_sanity_kernel(2, m, 2 * (2 + m) + 2)?;
        let mut check = Check::verdict(
            "left_sanity_kernel",
            k.dimension >= 1,
            format!("left system at n = 2, M = {m} has kernel dimension {}", k.dimension),
        );
        if let Some(w) = k.witnesses.first() {
            check = check.with("witness", join(w));
        }
        Ok(vec![check])
    });
    r.run("monomial_witness", || {
        let top = (2 * right_degree).max(1);
        let failing: Vec<usize> = (1..=top)
            .map(|n| monomial_witness(n).map(|ok| (n, ok)))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .filter_map(|(n, ok)| (!ok).then_some(n))
            .collect();
        let details = if failing.is_empty() {
            format!("x0^(n-1) t separates both sides for n = 1..{top}")
        } else {
            format!("fails for n in [{}]", join(&failing))
        };
        Ok(vec![Check::verdict("monomial_witness", failing.is_empty(), details)])
    });
}

pub fn verify_degmin(s: &Settings, r: &mut Report) {
    let pairs = s.samples_or(1000);
    r.param("pairs", pairs);
    r.run("degmin", || {
        Ok(check_degmin_laws(&s.sampler(), pairs, pairs.div_ceil(2))?
            .iter()
            .map(Check::from_sampled)
            .collect())
    });
}

pub fn verify_normal_subgroup(s: &Settings, r: &mut Report) {
    let count = s.samples_or(500);
    r.param("count", count);
    r.run("normal_subgroup", || {
        Ok(check_n_normality(&s.sampler(), count)?.iter().map(Check::from_sampled).collect())
    });
}

pub fn verify_centralizer(s: &Settings, r: &mut Report) {
    let count = s.samples_or(100);
    r.param("count", count);
    r.run("centralizer", || {
        Ok(check_centralizer(&s.sampler(), count)?.iter().map(Check::from_sampled).collect())
    });
}

pub fn verify_thm23(s: &Settings, r: &mut Report) {
    let count = s.samples_or(100);
    let terms = s.precision;
    r.param("count", count).param("window", terms);
    let (a, b) = (SkewSeries::t(), xs(1));
    for alpha in 0..=2 {
        let name = format!("thm23_worked_alpha_{alpha}");
        let (a, b) = (a.clone(), b.clone());
        r.run(&name.clone(), move || {
            let alpha = q(alpha);
            let id = thm23_identity(&a, &b, &alpha, terms)?;
            let cert = inverse_span_certificate(&a, &b, &alpha, 2, terms)?;
            let wide = |n: Option<i64>| n.map_or(true, |n| n >= terms as i64);
            let ok = id.passed() && wide(id.verified_terms) && cert.holds && wide(cert.verified_terms);
            let details = format!("a = t, b = x1, alpha = {alpha}: identity and inverse span over {terms} terms");
            Ok(vec![Check::verdict(&name, ok, details)
                .with("d", &id.d)
                .with("c", &id.c)
                .with("w_relation", cert.relation.render("W"))
                .with("shift", cert.shift)])
        });
    }
    r.run("thm23_samples", || {
        Ok(check_thm23(&s.sampler(), count, terms)?.iter().map(Check::from_sampled).collect())
    });
}

pub fn verify_lemma22(r: &mut Report) {
    let alphas = [q(0), q(1), q(2)];
    r.param("alphas", join(&alphas));
    r.run("lemma22_independent_over_q", || {
        let check = match lemma22_independence(&x0_plus_t(), &alphas, &SeriesOverQ)? {
            Independence::Independent { rank, window } => {
                let wide = window.map_or(true, |h| h >= Horizon::Finite(8));
                Check::verdict(
                    "lemma22_independent_over_q",
                    rank == alphas.len() && wide,
                    "inverses (x0 + t - alpha)^-1 are independent over Q",
                )
                .with("rank", rank)
                .with("window", window.map_or("exact".to_string(), |h| h.to_string()))
            }
            other => Check::fail("lemma22_independent_over_q", format!("{other:?}")),
        };
        Ok(vec![check])
    });
    r.run("lemma22_dependent_over_k", || {
        let t = SkewSeries::t();
        let check = match lemma22_independence(&t, &alphas, &SeriesOverK)? {
            Independence::DependentWitness { betas } => {
                let residual = substitute_witness(&t, &alphas, &betas)?;
                let g = witness_polynomial(&alphas, &betas)?;
                Check::verdict(
                    "lemma22_dependent_over_k",
                    residual.is_zero_on_window(),
                    "inverses (t - alpha)^-1 are dependent over K; witness verified by substitution",
                )
                .with("betas", join(&betas))
                .with("relation", g.render("X"))
            }
            other => Check::fail("lemma22_dependent_over_k", format!("{other:?}")),
        };
        Ok(vec![check])
    });
}

fn minpoly_check<A, C>(a: &A, coord: &C, bound: usize) -> Result<Check>
where
    A: Ring + Lift<C::Scalar>,
    C: Coordinatizer<A>,
    C::Scalar: Display,
{
    Ok(match left_minpoly(a, coord, bound)? {
        MinPolyResult::Algebraic { poly, degree } => Check::pass(
            "minpoly",
            format!("left algebraic of degree {degree} over {}", coord.label()),
        )
        .with("degree", degree)
        .with("poly", poly.render("X")),
        MinPolyResult::ExceedsBound { bound } => Check::pass(
            "minpoly",
            format!("no left relation of degree <= {bound} over {}", coord.label()),
        ),
        MinPolyResult::Indeterminate { reason } => Check::new("minpoly", Status::Skip, reason),
    })
}

pub fn minpoly(s: &Settings, element: &SkewSeries, over: Subring, bound: usize, r: &mut Report) {
    r.param("element", element).param("over", over).param("bound", bound);
    r.param("precision", s.precision);
    r.run("minpoly", || {
        Ok(vec![match over {
            Subring::K => minpoly_check(element, &SeriesOverK, bound)?,
            Subring::F => minpoly_check(element, &SeriesOverF, bound)?,
            Subring::Q => minpoly_check(element, &SeriesOverQ, bound)?,
        }])
    });
}

pub fn quat_pipeline(s: &Settings, x: &Quat, d: usize, r: &mut Report) {
    let alg = x.algebra();
    r.param("a", &alg.a).param("b", &alg.b).param("x", x).param("d", d);
    r.run("pipeline", || {
        let p = theorem33_pipeline(x, d, s.seed)?;
        let factors: Vec<String> = p.invariant_factors.factors.iter().map(ToString::to_string).collect();
        let y: Vec<String> = p.y.coords_over_k().iter().map(ToString::to_string).collect();
        let summary = Check::pass("pipeline", format!("operator degree m = {} <= d = {d}", p.m))
            .with("certification", format!("{:?}", p.certification))
            .with("operator_minpoly", &p.minpoly)
            .with("invariant_factors", factors.join("; "))
            .with("y", &p.y)
            .with("y_coordinates", y.join(", "))
            .with("u", &p.u)
            .with("u_minpoly", p.u_minpoly.render("X"));
        let degree = Check::verdict(
            "pipeline_u_degree",
            p.maximal() && p.u_degree() == p.m,
            format!("u = y x y^-1 has left degree {} over Q(i); m = {}", p.u_degree(), p.m),
        );
        let dims = Check::verdict(
            "pipeline_dimension",
            p.dimension_matches(),
            format!("dim_F D = {} = m^2 <= d^2 = {}", p.dim_f_d, d * d),
        );
        Ok(vec![summary, degree, dims])
    });
}

pub fn quat_minpoly(q: &Quat, r: &mut Report) {
    let alg = q.algebra();
    r.param("a", &alg.a).param("b", &alg.b).param("q", q);
    r.run("quat_minpoly", || {
        let center = minpoly_over_center(q);
        let root = center.right_eval(q)?.is_zero();
        let mut check = Check::verdict("quat_minpoly_center", root, "minimal polynomial over Q annihilates q")
            .with("poly", center.render("X"))
            .with("trace", q.trace())
            .with("norm", q.norm());
        if let Some(p) = left_minpoly(q, &QuatOverQi, 2)?.poly() {
            check = check.with("left_minpoly_over_qi", p.render("X"));
        }
        Ok(vec![check])
    });
}

/// Builds the algebra `(a, b | Q)` after the division check.
pub fn algebra(a: BigRational, b: BigRational) -> Result<std::sync::Arc<QAlgebra>> {
    let alg = QAlgebra::new(a, b)?;
    alg.certify(skewalg::quaternion::DEFAULT_ISOTROPY_BOUND)?;
    Ok(alg)
}
