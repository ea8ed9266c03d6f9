//! The dimension argument on a quaternion instance: with `T(v) = v x`, a
//! cyclic vector `y` of `T` yields `u = y x y^-1`, whose left minimal
//! polynomial over `K` has degree `m = deg minpoly(T)`, and `dim_F D = m^2`.

use num_rational::BigRational;

use super::{build_operator, cyclic_vector, invariant_factors, operator_minpoly, standard_basis};
use super::{InvariantFactors, LinearOperator, Poly};
use crate::algebraicity::{left_minpoly, MinPolyResult, QuatOverQi};
use crate::error::{Error, Result};
use crate::ore::OrePoly;
use crate::quaternion::{minpoly_over_center, Certification, Qi, Quat, DEFAULT_ISOTROPY_BOUND};

#[derive(Clone, Debug)]
pub struct PipelineReport {
    pub x: Quat,
    pub d: usize,
    pub certification: Certification,
    pub operator: LinearOperator<Qi>,
    pub minpoly: Poly<Qi>,
    pub invariant_factors: InvariantFactors<Qi>,
    pub y: Quat,
    pub order: Poly<Qi>,
    pub krylov_rank: usize,
    pub m: usize,
    pub u: Quat,
    pub u_minpoly: OrePoly<Qi>,
    pub dim_f_d: usize,
    /// Degree of `F(x)` over the center, from the minimal polynomial of `x` over `Q`.
    pub dim_f_fx: usize,
}

impl PipelineReport {
    pub fn u_degree(&self) -> usize {
        self.u_minpoly.degree().unwrap_or(0)
    }

    pub fn maximal(&self) -> bool {
        self.dim_f_fx * self.m == self.dim_f_d
    }

    pub fn dimension_matches(&self) -> bool {
        self.m * self.m == self.dim_f_d && self.dim_f_d <= self.d * self.d
    }
}

/// Runs the pipeline for `x` in its algebra over `K = Q(i)` with degree bound `d`.
pub fn theorem33_pipeline(x: &Quat, d: usize, seed: u64) -> Result<PipelineReport> {
    if x.is_central() {
        return Err(Error::XCentral);
    }
    let alg = x.algebra().clone();
    let certification = alg.certify(DEFAULT_ISOTROPY_BOUND)?;
    let basis = standard_basis(&alg);
    let operator = build_operator(x, &basis)?;
    let minpoly = operator_minpoly(&operator)?;
    let factors = invariant_factors(&operator)?;
    let cyclic = cyclic_vector(&operator, seed)?;
    let m = cyclic.order.degree().unwrap_or(0);
    if m > d {
        return Err(Error::BoundViolated { m, d });
    }
    let mut y = Quat::scalar(&alg, BigRational::from_integer(0.into()));
    for (c, b) in cyclic.y.iter().zip(&basis) {
        y = y.add(&Quat::from_qi(&alg, c).mul(b)?);
    }
    let u = y.mul(x)?.mul(&y.inv()?)?;
    let u_minpoly = match left_minpoly(&u, &QuatOverQi, d.max(m + 1))? {
        MinPolyResult::Algebraic { poly, .. } => poly,
        other => {
            return Err(Error::InvalidArgument(format!(
                "u = {u} has no left relation over Q(i) within the bound: {other:?}"
            )))
        }
    };
    Ok(PipelineReport {
        x: x.clone(),
        d,
        certification,
        operator,
        minpoly,
        invariant_factors: factors,
        y,
        order: cyclic.order,
        krylov_rank: cyclic.krylov_rank,
        m,
        u,
        u_minpoly,
        dim_f_d: alg.dimension(),
        dim_f_fx: minpoly_over_center(x).degree().unwrap_or(0),
    })
}
