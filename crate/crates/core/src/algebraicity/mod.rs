//! Bounded-degree algebraicity: minimal polynomials by exact elimination,
//! independence of inverses `(a - alpha)^-1`, the right-hand obstruction for
//! `x0 + t`, and the commutator identity used for subgroups of `D*`.

mod coords;
mod right;
mod thm23;

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;

pub use coords::{Coordinatizer, QuatOverQi, SeriesOverF, SeriesOverK, SeriesOverQ};
pub use right::{left_sanity_kernel, monomial_witness, right_alg_kernel, BlockRank, KernelReport};
pub use thm23::{
    inverse_span_certificate, inverse_span_check, thm23_identity, w_element, w_relation, SpanCertificate, Thm23Report,
    MAX_SHIFT,
};

use crate::error::{Error, Result};
use crate::linalg::LeftEliminator;
use crate::ore::{central_interpolants, combine_interpolants, OrePoly, Twist};
use crate::ring::{DivisionRing, Endomorphic, Lift, Ring};
use crate::series::Horizon;

/// Scalar subrings the engine can test against.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Subring {
    K,
    F,
    Q,
}

impl FromStr for Subring {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "K" => Ok(Subring::K),
            "F" => Ok(Subring::F),
            "Q" => Ok(Subring::Q),
            other => Err(Error::InvalidArgument(format!("unknown subring {other:?}"))),
        }
    }
}

impl fmt::Display for Subring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Subring::K => "K",
            Subring::F => "F",
            Subring::Q => "Q",
        })
    }
}

#[derive(Clone, Debug)]
pub enum MinPolyResult<R> {
    /// Monic left relation of least degree.
    Algebraic { poly: OrePoly<R>, degree: usize },
    /// `1, a, ..., a^bound` are left independent.
    ExceedsBound { bound: usize },
    Indeterminate { reason: String },
}

impl<R> MinPolyResult<R> {
    pub fn degree(&self) -> Option<usize> {
        match self {
            MinPolyResult::Algebraic { degree, .. } => Some(*degree),
            _ => None,
        }
    }

    pub fn poly(&self) -> Option<&OrePoly<R>> {
        match self {
            MinPolyResult::Algebraic { poly, .. } => Some(poly),
            _ => None,
        }
    }
}

/// Least-degree monic `p` over the coordinatizer's scalars with
/// `sum p_i a^i = 0`, searching degrees up to `bound`.
pub fn left_minpoly<A, C>(a: &A, coord: &C, bound: usize) -> Result<MinPolyResult<C::Scalar>>
where
    A: Ring + Lift<C::Scalar>,
    C: Coordinatizer<A>,
{
    if bound == 0 {
        return Err(Error::InvalidArgument("degree bound must be at least 1".into()));
    }
    let mut powers = vec![a.one_like()];
    for k in 1..=bound {
        match powers[k - 1].times(a) {
            Ok(p) => powers.push(p),
            Err(Error::InsufficientPrecision(reason)) => {
                return Ok(MinPolyResult::Indeterminate { reason })
            }
            Err(e) => return Err(e),
        }
    }
    let rows = coord.coordinates(&powers)?;
    let mut elim = LeftEliminator::new(rows[0].len());
    for (k, row) in rows.into_iter().enumerate() {
        let pushed = match elim.push(row) {
            Ok(p) => p,
            Err(Error::InsufficientPrecision(reason)) => {
                return Ok(MinPolyResult::Indeterminate { reason })
            }
            Err(e) => return Err(e),
        };
        if let Some(comb) = pushed {
            let poly = OrePoly::new(comb, Twist::Identity).monic()?;
            let residual = poly.right_eval(a)?;
            if !residual.vanishes() {
                return Ok(MinPolyResult::Indeterminate {
                    reason: format!("degree-{k} relation fails to annihilate on the window"),
                });
            }
            if !coord.informative(&residual, &powers[..=k]) {
                return Ok(MinPolyResult::Indeterminate {
                    reason: format!("no known terms left to confirm the degree-{k} relation"),
                });
            }
            return Ok(MinPolyResult::Algebraic { poly, degree: k });
        }
    }
    Ok(MinPolyResult::ExceedsBound { bound })
}

#[derive(Clone, Debug)]
pub enum Independence<R> {
    /// Full rank; `window` is the shared known horizon for windowed coordinates.
    Independent { rank: usize, window: Option<Horizon> },
    /// Nonzero `beta` with `sum beta_i (a - alpha_i)^-1 = 0`.
    DependentWitness { betas: Vec<R> },
}

/// The inverses `(a - alpha_i)^-1`, in order.
pub fn shifted_inverses<A: DivisionRing + Lift<BigRational>>(a: &A, alphas: &[BigRational]) -> Result<Vec<A>> {
    central_interpolants(alphas)?;
    alphas.iter().map(|al| a.minus(&a.lift(al)).try_inv()).collect()
}

/// Decides left independence of `{(a - alpha_i)^-1}` over the coordinatizer's scalars.
pub fn lemma22_independence<A, C>(a: &A, alphas: &[BigRational], coord: &C) -> Result<Independence<C::Scalar>>
where
    A: DivisionRing + Lift<BigRational> + Lift<C::Scalar>,
    C: Coordinatizer<A>,
{
    if alphas.is_empty() {
        return Err(Error::InvalidArgument("at least one alpha is required".into()));
    }
    let inverses = shifted_inverses(a, alphas)?;
    let rows = coord.coordinates(&inverses)?;
    let mut elim = LeftEliminator::new(rows[0].len());
    for row in &rows {
        if let Some(mut betas) = elim.push(row.clone())? {
            betas.resize(alphas.len(), row[0].zero_like());
            if !substitute_witness(a, alphas, &betas)?.vanishes() {
                return Err(Error::InsufficientPrecision(
                    "coordinate dependence does not hold for the elements".into(),
                ));
            }
            return Ok(Independence::DependentWitness { betas });
        }
    }
    let rank = elim.rank();
    if let Some(other) = coord.rank_cross_check(&rows) {
        if other != rank {
            return Err(Error::InsufficientPrecision(format!(
                "elimination rank {rank} disagrees with fraction-free rank {other}"
            )));
        }
    }
    Ok(Independence::Independent {
        rank,
        window: coord.window(&inverses),
    })
}

/// `sum beta_i (a - alpha_i)^-1`, which a witness must send to zero.
pub fn substitute_witness<A, S>(a: &A, alphas: &[BigRational], betas: &[S]) -> Result<A>
where
    A: DivisionRing + Lift<BigRational> + Lift<S>,
{
    let inverses = shifted_inverses(a, alphas)?;
    let mut acc = a.zero_like();
    for (b, inv) in betas.iter().zip(&inverses) {
        acc = acc.plus(&a.lift(b).times(inv)?);
    }
    Ok(acc)
}

/// The annihilating polynomial `g = sum beta_i f_i` with `f_i = prod_{j != i} (X - alpha_j)`.
pub fn witness_polynomial<R>(alphas: &[BigRational], betas: &[R]) -> Result<OrePoly<R>>
where
    R: Ring + Endomorphic + Lift<BigRational>,
{
    let (_, parts) = central_interpolants(alphas)?;
    combine_interpolants(betas, &parts)
}
