//! Coordinate maps from an ambient ring to finite vectors over a subring.
//!
//! Each map is left-linear over its scalar ring, so a left dependence among
//! coordinate vectors is a left dependence among the elements themselves.

use std::collections::BTreeSet;

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::linalg;
use crate::quaternion::{Qi, Quat};
use crate::ring::{DivisionRing, Endomorphic};
use crate::rng::mix64;
use crate::scalars::RatFunc;
use crate::series::{Horizon, KElement, SkewSeries};

pub trait Coordinatizer<A> {
    type Scalar: DivisionRing + Endomorphic;

    /// Short label used in reports.
    fn label(&self) -> &'static str;

    /// Coordinates of all elements with respect to one shared basis.
    fn coordinates(&self, elems: &[A]) -> Result<Vec<Vec<Self::Scalar>>>;

    /// Independent rank computation used to cross-check elimination, if any.
    fn rank_cross_check(&self, _rows: &[Vec<Self::Scalar>]) -> Option<usize> {
        None
    }

    /// Whether a window-zero residual still carries information.
    fn informative(&self, _residual: &A, _reference: &[A]) -> bool {
        true
    }

    /// Known window shared by the elements, when coordinates are windowed.
    fn window(&self, _elems: &[A]) -> Option<Horizon> {
        None
    }
}

/// `D` as a left vector space over `K = F((t^2, sigma))` with basis `{1, t}`.
#[derive(Clone, Copy, Debug, Default)]
pub struct SeriesOverK;

/// Coefficient windows over `F`, one coordinate per exponent.
#[derive(Clone, Copy, Debug, Default)]
pub struct SeriesOverF;

/// Coefficient windows evaluated at fixed integer points, giving rational coordinates.
#[derive(Clone, Copy, Debug, Default)]
pub struct SeriesOverQ;

/// A quaternion algebra as a left `Q(i)`-space with basis `{1, j}`.
#[derive(Clone, Copy, Debug, Default)]
pub struct QuatOverQi;

fn series_informative(residual: &SkewSeries, reference: &[SkewSeries]) -> bool {
    let floor = reference.iter().filter_map(|s| s.degmin().ok()).min();
    match (residual.known_upto(), floor) {
        (Horizon::Finite(h), Some(f)) => h > f,
        _ => true,
    }
}

pub(crate) fn common_horizon(elems: &[SkewSeries]) -> Horizon {
    elems
        .iter()
        .map(SkewSeries::known_upto)
        .min()
        .unwrap_or(Horizon::Infinite)
}

impl Coordinatizer<SkewSeries> for SeriesOverK {
    type Scalar = KElement;

    fn label(&self) -> &'static str {
        "K"
    }

    fn coordinates(&self, elems: &[SkewSeries]) -> Result<Vec<Vec<KElement>>> {
        Ok(elems
            .iter()
            .map(|e| {
                let (a1, a2) = e.decompose_left();
                vec![a1, a2]
            })
            .collect())
    }

    fn informative(&self, residual: &SkewSeries, reference: &[SkewSeries]) -> bool {
        series_informative(residual, reference)
    }
}

fn window_matrix(elems: &[SkewSeries]) -> Vec<Vec<RatFunc>> {
    let h = common_horizon(elems);
    let exponents: BTreeSet<i64> = elems
        .iter()
        .flat_map(|s| s.terms().map(|(e, _)| e))
        .filter(|&e| h.covers(e))
        .collect();
    elems
        .iter()
        .map(|s| {
            exponents
                .iter()
                .map(|&e| s.coeff(e).unwrap_or_else(RatFunc::zero))
                .collect()
        })
        .collect()
}

fn pad_empty<R: Clone>(mut rows: Vec<Vec<R>>, filler: R) -> Vec<Vec<R>> {
    if rows.first().is_some_and(Vec::is_empty) {
        for r in &mut rows {
            r.push(filler.clone());
        }
    }
    rows
}

impl Coordinatizer<SkewSeries> for SeriesOverF {
    type Scalar = RatFunc;

    fn label(&self) -> &'static str {
        "F"
    }

    fn coordinates(&self, elems: &[SkewSeries]) -> Result<Vec<Vec<RatFunc>>> {
        Ok(pad_empty(window_matrix(elems), RatFunc::zero()))
    }

    fn informative(&self, residual: &SkewSeries, reference: &[SkewSeries]) -> bool {
        series_informative(residual, reference)
    }

    fn window(&self, elems: &[SkewSeries]) -> Option<Horizon> {
        Some(common_horizon(elems))
    }
}

/// Integer value of `x_var` at evaluation point `point`, drawn from `3..100`.
fn sample_value(point: u64, var: u32) -> BigRational {
    let h = mix64(EVAL_SEED ^ mix64(point.wrapping_mul(0x1_0000_0001) ^ u64::from(var)));
    BigRational::from_integer(((h % 97) as i64 + 3).into())
}

const EVAL_SEED: u64 = 0x5eed_0f_c0de;

impl Coordinatizer<SkewSeries> for SeriesOverQ {
    type Scalar = BigRational;

    fn label(&self) -> &'static str {
        "Q"
    }

    /// Evaluates every windowed coefficient at `rows + 2` rational points. A
    /// rational relation among the series survives evaluation, so full rank
    /// here certifies independence; a rank drop only proposes a relation,
    /// which callers confirm symbolically.
    fn coordinates(&self, elems: &[SkewSeries]) -> Result<Vec<Vec<BigRational>>> {
        let m = window_matrix(elems);
        let wanted = elems.len() + 2;
        let mut columns: Vec<Vec<BigRational>> = Vec::new();
        let mut used = 0;
        let mut point = 0u64;
        while used < wanted && point < 64 * wanted as u64 {
            let at = |var: u32| sample_value(point, var);
            let evaluated: Result<Vec<Vec<BigRational>>> = (0..m.first().map_or(0, Vec::len))
                .map(|c| m.iter().map(|row| row[c].eval(&at)).collect())
                .collect();
            point += 1;
            match evaluated {
                Ok(cols) => {
                    columns.extend(cols);
                    used += 1;
                }
                Err(Error::DivisionByZero) => continue,
                Err(e) => return Err(e),
            }
        }
        if used < wanted {
            return Err(Error::InsufficientPrecision("no pole-free evaluation points found".into()));
        }
        let zero = BigRational::from_integer(0.into());
        let rows = (0..elems.len())
            .map(|r| columns.iter().map(|col| col[r].clone()).collect())
            .collect();
        Ok(pad_empty(rows, zero))
    }

    fn rank_cross_check(&self, rows: &[Vec<BigRational>]) -> Option<usize> {
        Some(linalg::rational_rank(rows))
    }

    fn informative(&self, residual: &SkewSeries, reference: &[SkewSeries]) -> bool {
        series_informative(residual, reference)
    }

    fn window(&self, elems: &[SkewSeries]) -> Option<Horizon> {
        Some(common_horizon(elems))
    }
}

impl Coordinatizer<Quat> for QuatOverQi {
    type Scalar = Qi;

    fn label(&self) -> &'static str {
        "Q(i)"
    }

    fn coordinates(&self, elems: &[Quat]) -> Result<Vec<Vec<Qi>>> {
        if let Some(first) = elems.first() {
            if elems.iter().any(|q| q.algebra() != first.algebra()) {
                return Err(Error::AlgebraMismatch);
            }
        }
        Ok(elems.iter().map(|q| q.coords_over_k().to_vec()).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quaternion::QAlgebra;
    use crate::ring::Ring;

    fn x(i: u32) -> SkewSeries {
        SkewSeries::constant(RatFunc::var(i))
    }

    #[test]
    fn k_coordinates_split_parity() {
        let a = x(0).add(&SkewSeries::t());
        let c = SeriesOverK.coordinates(&[a]).unwrap();
        assert!(c[0][0].as_series().eq_on_window(&x(0)));
        assert!(c[0][1].as_series().eq_on_window(&SkewSeries::one()));
    }

    #[test]
    fn rational_flattening_is_left_linear() {
        let a = x(0).add(&SkewSeries::t());
        let two_a = a.scale_left(&RatFunc::from_int(2));
        let rows = SeriesOverQ.coordinates(&[a, two_a]).unwrap();
        assert_eq!(linalg::rational_rank(&rows), 1);
    }

    #[test]
    fn window_uses_shortest_horizon() {
        let inv = x(0).add(&SkewSeries::t()).inv().unwrap();
        let rows = SeriesOverF.coordinates(&[SkewSeries::one(), inv]).unwrap();
        assert_eq!(rows[0].len(), 12);
        assert!(rows[0][0].is_one());
        assert!(rows[0][1..].iter().all(Ring::vanishes));
    }

    #[test]
    fn quaternion_coordinates() {
        let alg = QAlgebra::hamilton();
        let rows = QuatOverQi.coordinates(&[Quat::k(&alg)]).unwrap();
        assert!(rows[0][0].is_zero());
        assert_eq!(rows[0][1], Qi::gen(&BigRational::from_integer((-1).into())));
    }
}
