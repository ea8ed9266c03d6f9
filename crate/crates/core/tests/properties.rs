use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

use skewalg::ore::{OrePoly, Twist};
use skewalg::quaternion::{minpoly_over_center, QAlgebra, Quat};
use skewalg::scalars::{shift, unshift, MPoly, Monomial, RatFunc};
use skewalg::series::{Horizon, SkewSeries};

fn q(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn monomial() -> impl Strategy<Value = Monomial> {
    prop::collection::vec((0u32..4, 0u32..3), 0..3).prop_map(Monomial::from_pairs)
}

fn mpoly() -> impl Strategy<Value = MPoly> {
    prop::collection::vec((monomial(), -4i64..=4), 1..4)
        .prop_map(|terms| MPoly::from_terms(terms.into_iter().map(|(m, c)| (m, q(c)))))
}

fn nonzero_mpoly() -> impl Strategy<Value = MPoly> {
    mpoly().prop_filter("nonzero", |p| !p.is_zero())
}

/// Numerator over a denominator that is a monomial or `x_v + c`.
fn ratfunc() -> impl Strategy<Value = RatFunc> {
    let den = prop_oneof![
        monomial().prop_map(|m| MPoly::term(BigRational::one(), m)),
        (0u32..4, 1i64..4).prop_map(|(v, c)| MPoly::var(v).add(&MPoly::constant(q(c)))),
    ];
    (mpoly(), den).prop_map(|(n, d)| RatFunc::new(n, d).unwrap())
}

fn nonzero_ratfunc() -> impl Strategy<Value = RatFunc> {
    ratfunc().prop_filter("nonzero", |f| !f.is_zero())
}

/// Exact finite series with small monomial coefficients. Variables start at
/// `x6`, so products of up to three factors never leave the image of `sigma`.
fn series() -> impl Strategy<Value = SkewSeries> {
    prop::collection::btree_map(-2i64..4, (6u32..10, 0u32..3, -3i64..=3), 1..4).prop_map(|terms| {
        SkewSeries::from_terms(
            terms
                .into_iter()
                .filter(|(_, (_, _, c))| *c != 0)
                .map(|(e, (v, p, c))| (e, RatFunc::from_poly(MPoly::term(q(c), Monomial::var_pow(v, p))))),
            Horizon::Infinite,
        )
    })
}

fn nonzero_series() -> impl Strategy<Value = SkewSeries> {
    series().prop_filter("nonzero", |s| !s.is_exact_zero())
}

/// Two-term unit `c0 + c1 t^e`, whose inverse stays cheap.
fn binomial_series() -> impl Strategy<Value = SkewSeries> {
    (-2i64..3, 1i64..4, 6u32..10, -3i64..=3, 6u32..10, 1i64..=3).prop_map(|(lo, gap, v, c, w, d)| {
        let lead = RatFunc::from_poly(MPoly::term(q(d), Monomial::var(w)));
        let next = RatFunc::from_poly(MPoly::term(q(c), Monomial::var(v)));
        SkewSeries::from_terms([(lo, lead), (lo + gap, next)], Horizon::Infinite)
    })
}

fn point(i: u32) -> BigRational {
    BigRational::new(BigInt::from(7 * i + 5), BigInt::from(3))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn ratfunc_field_axioms(a in ratfunc(), b in ratfunc(), c in ratfunc()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn ratfunc_inverse(a in nonzero_ratfunc()) {
        prop_assert!(a.mul(&a.inv().unwrap()).is_one());
    }

    #[test]
    fn zero_has_no_inverse(_x in 0u8..1) {
        prop_assert!(RatFunc::zero().inv().is_err());
    }

    #[test]
    fn shift_is_a_ring_homomorphism(a in ratfunc(), b in ratfunc(), k in 0u32..4) {
        prop_assert_eq!(shift(&a.add(&b), k), shift(&a, k).add(&shift(&b, k)));
        prop_assert_eq!(shift(&a.mul(&b), k), shift(&a, k).mul(&shift(&b, k)));
        prop_assert_eq!(shift(&shift(&a, k), 1), shift(&a, k + 1));
    }

    #[test]
    fn unshift_inverts_shift(a in ratfunc(), k in 0u32..4) {
        prop_assert_eq!(unshift(&shift(&a, k), k).unwrap(), a);
    }

    #[test]
    fn unshift_fails_below_the_image(k in 1u32..4, v in 0u32..4) {
        prop_assume!(v < k);
        prop_assert!(unshift(&RatFunc::var(v), k).is_err());
    }

    #[test]
    fn evaluation_is_multiplicative(a in ratfunc(), b in ratfunc()) {
        let at = |i: u32| point(i);
        if let (Ok(x), Ok(y)) = (a.eval(&at), b.eval(&at)) {
            prop_assert_eq!(a.mul(&b).eval(&at).unwrap(), &x * &y);
            prop_assert_eq!(a.add(&b).eval(&at).unwrap(), x + y);
        }
    }

    #[test]
    fn exact_polynomial_division(a in nonzero_mpoly(), b in nonzero_mpoly()) {
        prop_assert_eq!(a.mul(&b).exact_div(&b), Some(a));
    }

    #[test]
    fn degmin_is_additive(a in nonzero_series(), b in nonzero_series()) {
        let ab = a.mul(&b).unwrap();
        prop_assert_eq!(ab.degmin().unwrap(), a.degmin().unwrap() + b.degmin().unwrap());
    }

    #[test]
    fn series_multiplication_is_associative(a in series(), b in series(), c in series()) {
        let left = a.mul(&b).unwrap().mul(&c).unwrap();
        let right = a.mul(&b.mul(&c).unwrap()).unwrap();
        prop_assert!(left.eq_on_window(&right));
    }

    #[test]
    fn series_distributes(a in series(), b in series(), c in series()) {
        let left = a.mul(&b.add(&c)).unwrap();
        let right = a.mul(&b).unwrap().add(&a.mul(&c).unwrap());
        prop_assert!(left.eq_on_window(&right));
    }

    #[test]
    fn series_inverse_both_sides(a in binomial_series()) {
        let inv = a.inv().unwrap();
        prop_assert_eq!(inv.degmin().unwrap(), -a.degmin().unwrap());
        prop_assert!(a.mul(&inv).unwrap().eq_on_window(&SkewSeries::one()));
        prop_assert!(inv.mul(&a).unwrap().eq_on_window(&SkewSeries::one()));
    }

    #[test]
    fn commutation_rule(c in ratfunc(), e in -3i64..4) {
        // For negative e, start from sigma^|e|(c) so that the pullback exists.
        let (arg, image) = if e >= 0 {
            (c.clone(), shift(&c, e as u32))
        } else {
            (shift(&c, (-e) as u32), c.clone())
        };
        let te = SkewSeries::t().pow(e).unwrap();
        let left = te.mul(&SkewSeries::constant(arg)).unwrap();
        let right = SkewSeries::constant(image).mul(&te).unwrap();
        prop_assert!(left.eq_on_window(&right));
    }

    #[test]
    fn decomposition_round_trip(a in series()) {
        let (even, odd) = a.decompose_left();
        prop_assert!(even.as_series().has_even_support());
        prop_assert!(odd.as_series().has_even_support());
        let rebuilt = even.as_series().add(&odd.as_series().mul(&SkewSeries::t()).unwrap());
        prop_assert!(rebuilt.eq_on_window(&a));
    }

    #[test]
    fn ore_multiplication_is_associative(
        a in prop::collection::vec(ratfunc(), 1..3),
        b in prop::collection::vec(ratfunc(), 1..3),
        c in prop::collection::vec(ratfunc(), 1..3),
    ) {
        let (a, b, c) = (
            OrePoly::new(a, Twist::Shift),
            OrePoly::new(b, Twist::Shift),
            OrePoly::new(c, Twist::Shift),
        );
        let left = a.mul(&b).unwrap().mul(&c).unwrap();
        let right = a.mul(&b.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(left.coeffs(), right.coeffs());
    }

    #[test]
    fn ore_degrees_add(
        a in prop::collection::vec(nonzero_ratfunc(), 1..4),
        b in prop::collection::vec(nonzero_ratfunc(), 1..4),
    ) {
        let (a, b) = (OrePoly::new(a, Twist::Shift), OrePoly::new(b, Twist::Shift));
        let ab = a.mul(&b).unwrap();
        prop_assert_eq!(ab.degree().unwrap(), a.degree().unwrap() + b.degree().unwrap());
    }

    #[test]
    fn quaternion_norm_is_multiplicative(
        p in prop::array::uniform4(-6i64..=6),
        r in prop::array::uniform4(-6i64..=6),
        params in prop::sample::select(vec![(-1i64, -1i64), (-1, -3), (-2, -5)]),
    ) {
        let alg = QAlgebra::new(q(params.0), q(params.1)).unwrap();
        let x = Quat::from_ints(&alg, p[0], p[1], p[2], p[3]);
        let y = Quat::from_ints(&alg, r[0], r[1], r[2], r[3]);
        prop_assert_eq!(x.mul(&y).unwrap().norm(), x.norm() * y.norm());
        prop_assert_eq!(x.mul(&y).unwrap().conj(), y.conj().mul(&x.conj()).unwrap());
    }

    #[test]
    fn quaternion_inverse_and_minpoly(p in prop::array::uniform4(-6i64..=6)) {
        let alg = QAlgebra::hamilton();
        let x = Quat::from_ints(&alg, p[0], p[1], p[2], p[3]);
        prop_assert_eq!(minpoly_over_center(&x).right_eval(&x).unwrap(), Quat::scalar(&alg, BigRational::zero()));
        prop_assume!(!x.is_zero());
        prop_assert!(x.mul(&x.inv().unwrap()).unwrap().is_one());
    }

    #[test]
    fn quaternion_coordinates_round_trip(p in prop::array::uniform4(-6i64..=6)) {
        let alg = QAlgebra::new(q(-1), q(-3)).unwrap();
        let x = Quat::from_ints(&alg, p[0], p[1], p[2], p[3]);
        prop_assert_eq!(Quat::from_coords_over_k(&alg, &x.coords_over_k()), x);
    }
}
