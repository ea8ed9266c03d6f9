//! The obstruction to right algebraicity of `a = x0 + t` over `K`.
//!
//! A right relation `sum_i a^i h_i(t^2) = 0` with `h_i = sum_j c_ij t^(2j)`
//! expands, with `a^i = sum_k p_ik t^k`, to the equations
//! `sum_{k + 2j = e} p_ik sigma^k(c_ij) = 0`, one per exponent `e`. These are
//! semilinear in the unknowns, so the rank is certified block by block: in
//! increasing `j`, equation `2j + 1` involves `c_ij` (for `i >= 1`) only
//! through `sigma(c_ij)` with coefficient `p_i1`, all other terms involving
//! `c_ij'` with `j' < j`. Equation `2j` then pins `c_0j` with coefficient
//! `p_00 = 1`. Splitting `p_i1` by powers of `x0`, which is transcendental over
//! `sigma(F)`, turns each odd block into an honest linear system over `sigma(F)`.

use crate::error::{Error, Result};
use crate::linalg::{column_kernel, left_rank};
use crate::scalars::{Monomial, RatFunc};
use crate::series::SkewSeries;

#[derive(Clone, Debug, PartialEq)]
pub struct BlockRank {
    /// Exponent of `t` whose equation the block solves.
    pub equation: usize,
    pub unknowns: Vec<String>,
    pub rank: usize,
    pub nullity: usize,
}

#[derive(Clone, Debug)]
pub struct KernelReport {
    pub n: usize,
    pub m: usize,
    pub precision: usize,
    pub unknowns: usize,
    pub equations: usize,
    pub dimension: usize,
    pub blocks: Vec<BlockRank>,
    /// Kernel vectors of the rank-deficient blocks, in block unknown order.
    pub witnesses: Vec<Vec<RatFunc>>,
}

fn element() -> SkewSeries {
    SkewSeries::constant(RatFunc::var(0)).add(&SkewSeries::t())
}

/// `p_ik` for `0 <= k <= i <= n`.
fn power_coefficients(n: usize) -> Result<Vec<Vec<RatFunc>>> {
    let a = element();
    let mut power = SkewSeries::one();
    let mut out = Vec::with_capacity(n + 1);
    for i in 0..=n {
        if i > 0 {
            power = power.mul(&a)?;
        }
        let row = (0..=i as i64)
            .map(|k| power.coeff(k).ok_or_else(|| Error::InsufficientPrecision("exact power lost terms".into())))
            .collect::<Result<Vec<_>>>()?;
        out.push(row);
    }
    Ok(out)
}

fn validate(n: usize, m: usize) -> Result<()> {
    if n == 0 || m == 0 {
        return Err(Error::InvalidArgument("degree bound and window must be positive".into()));
    }
    Ok(())
}

/// Kernel dimension of the right system for `x0 + t` with `deg_X <= n`,
/// `deg_{t^2} h_i <= m`, keeping the equations for exponents below `precision`.
pub fn right_alg_kernel(n: usize, m: usize, precision: usize) -> Result<KernelReport> {
    validate(n, m)?;
    let p = power_coefficients(n)?;
    let one = RatFunc::one();
    let mut blocks = Vec::new();
    let mut witnesses = Vec::new();
    for j in 0..=m {
        let odd = 2 * j + 1;
        let names: Vec<String> = (1..=n).map(|i| format!("sigma(c_{i}_{j})")).collect();
        let (rank, nullity) = if odd < precision {
            let split: Vec<Vec<RatFunc>> = (1..=n)
                .map(|i| {
                    let c = &p[i][1];
                    if !c.is_polynomial() {
                        return Err(Error::InvalidArgument("t-coefficient is not a polynomial".into()));
                    }
                    Ok(c.num().coefficients_in(0).into_iter().map(RatFunc::from_poly).collect())
                })
                .collect::<Result<_>>()?;
            let height = split.iter().map(Vec::len).max().unwrap_or(0);
            let matrix: Vec<Vec<RatFunc>> = (0..height)
                .map(|r| {
                    split
                        .iter()
                        .map(|col| col.get(r).cloned().unwrap_or_else(RatFunc::zero))
                        .collect()
                })
                .collect();
            let rank = left_rank(&matrix)?;
            let kernel = column_kernel(&matrix, n, &one)?;
            debug_assert_eq!(kernel.len(), n - rank);
            witnesses.extend(kernel);
            (rank, n - rank)
        } else {
            (0, n)
        };
        blocks.push(BlockRank {
            equation: odd,
            unknowns: names,
            rank,
            nullity,
        });
        let even = 2 * j;
        let pinned = even < precision && p[0][0].is_one();
        blocks.push(BlockRank {
            equation: even,
            unknowns: vec![format!("c_0_{j}")],
            rank: usize::from(pinned),
            nullity: usize::from(!pinned),
        });
    }
    Ok(KernelReport {
        n,
        m,
        precision,
        unknowns: (n + 1) * (m + 1),
        equations: precision.min(n + 2 * m + 1),
        dimension: blocks.iter().map(|b| b.nullity).sum(),
        blocks,
        witnesses,
    })
}

/// Kernel of the left system `sum_i h_i(t^2) a^i = 0`, which is linear over `F`.
/// Unknowns are ordered `c_0_0, c_0_1, ..., c_n_m`.
pub fn left_sanity_kernel(n: usize, m: usize, precision: usize) -> Result<KernelReport> {
    validate(n, m)?;
    let a = element();
    let rows = precision.min(n + 2 * m + 1);
    let mut columns = Vec::new();
    let mut names = Vec::new();
    let mut power = SkewSeries::one();
    for i in 0..=n {
        if i > 0 {
            power = power.mul(&a)?;
        }
        for j in 0..=m {
            let col = SkewSeries::t().pow(2 * j as i64)?.mul(&power)?;
            columns.push(
                (0..rows as i64)
                    .map(|e| col.coeff(e).unwrap_or_else(RatFunc::zero))
                    .collect::<Vec<_>>(),
            );
            names.push(format!("c_{i}_{j}"));
        }
    }
    let matrix: Vec<Vec<RatFunc>> = (0..rows)
        .map(|r| columns.iter().map(|c| c[r].clone()).collect())
        .collect();
    let cols = columns.len();
    let witnesses = column_kernel(&matrix, cols, &RatFunc::one())?;
    let rank = cols - witnesses.len();
    Ok(KernelReport {
        n,
        m,
        precision,
        unknowns: cols,
        equations: rows,
        dimension: witnesses.len(),
        blocks: vec![BlockRank {
            equation: rows,
            unknowns: names,
            rank,
            nullity: witnesses.len(),
        }],
        witnesses,
    })
}

/// Whether `x0^(n-1)` occurs with coefficient 1 in the `t`-coefficient of
/// `(x0 + t)^n` and in no `t`-coefficient of a lower power.
pub fn monomial_witness(n: usize) -> Result<bool> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    let target = Monomial::var_pow(0, n as u32 - 1);
    let p = power_coefficients(n)?;
    let coefficient_of_target = |c: &RatFunc| {
        if c.is_zero() {
            return Some(num_traits::Zero::zero());
        }
        c.is_polynomial().then(|| c.num().coeff(&target))
    };
    for (i, row) in p.iter().enumerate() {
        let t1 = row.get(1).cloned().unwrap_or_else(RatFunc::zero);
        let Some(coef) = coefficient_of_target(&t1) else {
            return Ok(false);
        };
        let expected = if i == n { 1 } else { 0 };
        if coef != num_rational::BigRational::from_integer(expected.into()) {
            return Ok(false);
        }
    }
    Ok(true)
}
