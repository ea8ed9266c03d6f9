//! Right multiplication `T(v) = v x` on a quaternion algebra viewed as a left
//! `K`-space, and the module over `K[t]` it defines through `f(t).v = f(T)(v)`.
//!
//! The linear algebra is written for any commutative coefficient field; the
//! quaternion instances use `K = Q(i)`.

mod pipeline;
mod poly;

pub use pipeline::{theorem33_pipeline, PipelineReport};
pub use poly::Poly;

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::linalg::{left_rank, LeftEliminator};
use crate::quaternion::{Qi, Quat};
use crate::ring::{DivisionRing, Lift, Ring};
use crate::rng::SplitMix64;

/// Square matrix acting on coordinate columns: `[T v] = A [v]`.
#[derive(Clone, Debug)]
pub struct LinearOperator<R> {
    matrix: Vec<Vec<R>>,
}

impl<R: DivisionRing> LinearOperator<R> {
    pub fn from_matrix(matrix: Vec<Vec<R>>) -> Result<Self> {
        let m = matrix.len();
        if m == 0 || matrix.iter().any(|r| r.len() != m) {
            return Err(Error::InvalidArgument("operator matrix must be square and nonempty".into()));
        }
        Ok(LinearOperator { matrix })
    }

    pub fn dim(&self) -> usize {
        self.matrix.len()
    }

    pub fn matrix(&self) -> &[Vec<R>] {
        &self.matrix
    }

    fn unit(&self) -> R {
        self.matrix[0][0].one_like()
    }

    pub fn identity_like(&self) -> Vec<Vec<R>> {
        let (zero, one) = (self.unit().zero_like(), self.unit());
        (0..self.dim())
            .map(|i| (0..self.dim()).map(|j| if i == j { one.clone() } else { zero.clone() }).collect())
            .collect()
    }

    pub fn apply(&self, v: &[R]) -> Result<Vec<R>> {
        self.matrix
            .iter()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .try_fold(self.unit().zero_like(), |acc, (a, b)| Ok(acc.plus(&a.times(b)?)))
            })
            .collect()
    }

    fn compose(&self, a: &[Vec<R>], b: &[Vec<R>]) -> Result<Vec<Vec<R>>> {
        let n = self.dim();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        (0..n).try_fold(self.unit().zero_like(), |acc, k| Ok(acc.plus(&a[i][k].times(&b[k][j])?)))
                    })
                    .collect()
            })
            .collect()
    }

    /// `g(T)` as a matrix.
    pub fn poly_matrix(&self, g: &Poly<R>) -> Result<Vec<Vec<R>>> {
        let n = self.dim();
        let mut acc: Vec<Vec<R>> = vec![vec![self.unit().zero_like(); n]; n];
        for c in g.coeffs().iter().rev() {
            acc = self.compose(&acc, &self.matrix)?;
            for (i, row) in acc.iter_mut().enumerate() {
                row[i] = row[i].plus(c);
            }
        }
        Ok(acc)
    }

    /// `g(T)(v)`.
    pub fn apply_poly(&self, g: &Poly<R>, v: &[R]) -> Result<Vec<R>> {
        let mut acc = vec![self.unit().zero_like(); self.dim()];
        for c in g.coeffs().iter().rev() {
            acc = self.apply(&acc)?;
            for (a, x) in acc.iter_mut().zip(v) {
                *a = a.plus(&c.times(x)?);
            }
        }
        Ok(acc)
    }

    /// Least monic `g` with `g(T) = 0`, from the first dependence among `I, T, T^2, ...`.
    pub fn minpoly(&self) -> Result<Poly<R>> {
        let mut power = self.identity_like();
        let mut flats = Vec::new();
        for _ in 0..=self.dim() * self.dim() {
            flats.push(power.iter().flatten().cloned().collect::<Vec<_>>());
            power = self.compose(&power, &self.matrix)?;
        }
        first_relation(flats, &self.unit())
    }

    /// Least monic `g` with `g(T)(v) = 0`.
    pub fn vector_order(&self, v: &[R]) -> Result<Poly<R>> {
        if v.iter().all(Ring::vanishes) {
            return Ok(Poly::constant(self.unit()));
        }
        let mut krylov = vec![v.to_vec()];
        for k in 0..self.dim() {
            let next = self.apply(&krylov[k])?;
            krylov.push(next);
        }
        first_relation(krylov, &self.unit())
    }

    /// Rank of `v, T v, ..., T^(k-1) v`.
    pub fn krylov_rank(&self, v: &[R], k: usize) -> Result<usize> {
        let mut rows = Vec::with_capacity(k);
        let mut cur = v.to_vec();
        for _ in 0..k {
            let next = self.apply(&cur)?;
            rows.push(std::mem::replace(&mut cur, next));
        }
        left_rank(&rows)
    }
}

fn first_relation<R: DivisionRing>(rows: Vec<Vec<R>>, unit: &R) -> Result<Poly<R>> {
    let mut elim = LeftEliminator::new(rows[0].len());
    for row in rows {
        if let Some(comb) = elim.push(row)? {
            return Poly::new(comb, unit).monic();
        }
    }
    Err(Error::InvalidArgument("no relation among the given powers".into()))
}

/// Least-degree monic annihilating polynomial of `T`.
pub fn operator_minpoly<R: DivisionRing>(op: &LinearOperator<R>) -> Result<Poly<R>> {
    op.minpoly()
}

/// Coordinates of `q` in a left `Q(i)`-basis of the algebra.
pub fn coordinates_in_basis(q: &Quat, basis: &[Quat]) -> Result<Vec<Qi>> {
    let mut elim = LeftEliminator::new(2);
    for b in basis {
        if b.algebra() != q.algebra() {
            return Err(Error::AlgebraMismatch);
        }
        if elim.push(b.coords_over_k().to_vec())?.is_some() {
            return Err(Error::BasisNotIndependent);
        }
    }
    if basis.len() != 2 {
        return Err(Error::BasisNotIndependent);
    }
    let comb = elim
        .push(q.coords_over_k().to_vec())?
        .ok_or(Error::BasisNotIndependent)?;
    Ok(comb[..2].iter().map(Ring::negate).collect())
}

/// Matrix of `T(v) = v x`; column `i` holds the coordinates of `basis_i * x`.
pub fn build_operator(x: &Quat, basis: &[Quat]) -> Result<LinearOperator<Qi>> {
    let images = basis
        .iter()
        .map(|b| coordinates_in_basis(&b.mul(x)?, basis))
        .collect::<Result<Vec<_>>>()?;
    let m = basis.len();
    LinearOperator::from_matrix((0..m).map(|r| (0..m).map(|c| images[c][r].clone()).collect()).collect())
}

/// The ordered basis `{1, j}`.
pub fn standard_basis(alg: &std::sync::Arc<crate::quaternion::QAlgebra>) -> Vec<Quat> {
    vec![Quat::scalar(alg, BigRational::from_integer(1.into())), Quat::j(alg)]
}

#[derive(Clone, Debug)]
pub struct InvariantFactors<R> {
    pub factors: Vec<Poly<R>>,
}

impl<R: DivisionRing> InvariantFactors<R> {
    pub fn chain_holds(&self) -> Result<bool> {
        for w in self.factors.windows(2) {
            if !w[0].divides(&w[1])? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn total_degree(&self) -> usize {
        self.factors.iter().filter_map(Poly::degree).sum()
    }

    pub fn last(&self) -> Option<&Poly<R>> {
        self.factors.last()
    }
}

/// Invariant factors of the `K[t]`-module, from the Smith form of `t I - A`.
pub fn invariant_factors<R: DivisionRing>(op: &LinearOperator<R>) -> Result<InvariantFactors<R>> {
    let unit = op.unit();
    let n = op.dim();
    let mut m: Vec<Vec<Poly<R>>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let a = Poly::constant(op.matrix[i][j].negate());
                    if i == j {
                        a.add(&Poly::var(&unit))
                    } else {
                        a
                    }
                })
                .collect()
        })
        .collect();
    let diag = smith_diagonal(&mut m)?;
    Ok(InvariantFactors {
        factors: diag.into_iter().filter(|p| p.degree() != Some(0)).collect(),
    })
}

/// Reduces a square polynomial matrix in place to Smith form; returns the monic diagonal.
fn smith_diagonal<R: DivisionRing>(m: &mut [Vec<Poly<R>>]) -> Result<Vec<Poly<R>>> {
    let n = m.len();
    for k in 0..n {
        loop {
            let pivot = (k..n)
                .flat_map(|i| (k..n).map(move |j| (i, j)))
                .filter(|&(i, j)| !m[i][j].is_zero())
                .min_by_key(|&(i, j)| m[i][j].degree());
            let Some((pi, pj)) = pivot else {
                break;
            };
            m.swap(k, pi);
            for row in m.iter_mut() {
                row.swap(k, pj);
            }
            let mut clean = true;
            for i in k + 1..n {
                let (q, r) = m[i][k].div_rem(&m[k][k])?;
                clean &= r.is_zero();
                for j in k..n {
                    m[i][j] = m[i][j].sub(&q.mul(&m[k][j])?);
                }
            }
            for j in k + 1..n {
                let (q, r) = m[k][j].div_rem(&m[k][k])?;
                clean &= r.is_zero();
                for row in m.iter_mut().skip(k) {
                    row[j] = row[j].sub(&row[k].mul(&q)?);
                }
            }
            if !clean {
                continue;
            }
            let stray = (k + 1..n)
                .flat_map(|i| (k + 1..n).map(move |j| (i, j)))
                .find(|&(i, j)| !m[k][k].divides(&m[i][j]).unwrap_or(false));
            match stray {
                Some((i, _)) => {
                    for j in k..n {
                        m[k][j] = m[k][j].add(&m[i][j]);
                    }
                }
                None => break,
            }
        }
    }
    (0..n).map(|k| m[k][k].monic()).collect()
}

#[derive(Clone, Debug)]
pub struct CyclicVectorResult<R> {
    pub y: Vec<R>,
    pub order: Poly<R>,
    /// Rank of `y, T y, ..., T^(deg order - 1) y`.
    pub krylov_rank: usize,
    /// Whether the constructive path succeeded without random fallback.
    pub constructive: bool,
}

/// Attempts per call of the randomized fallback.
const RANDOM_ATTEMPTS: usize = 64;

/// A vector whose annihilator is the minimal polynomial of `T`.
///
/// Orders of basis vectors are merged pairwise: for orders `p`, `q` a coprime
/// split `p1 | p`, `q1 | q` with `p1 q1 = lcm(p, q)` gives the vector
/// `(p/p1)(T) y + (q/q1)(T) u` of order `lcm(p, q)`. Seeded random
/// combinations are tried if that path fails; any returned vector is verified.
pub fn cyclic_vector<R>(op: &LinearOperator<R>, seed: u64) -> Result<CyclicVectorResult<R>>
where
    R: DivisionRing + Lift<BigRational>,
{
    let f = op.minpoly()?;
    let deg = f.degree().unwrap_or(0);
    let unit = op.unit();
    let basis = op.identity_like();
    let accept = |y: Vec<R>, constructive: bool| -> Result<Option<CyclicVectorResult<R>>> {
        let order = op.vector_order(&y)?;
        if !order.same(&f) {
            return Ok(None);
        }
        let krylov_rank = op.krylov_rank(&y, deg)?;
        Ok((krylov_rank == deg).then_some(CyclicVectorResult {
            y,
            order,
            krylov_rank,
            constructive,
        }))
    };
    if let Ok(y) = merge_orders(op, &basis) {
        if let Some(found) = accept(y, true)? {
            return Ok(found);
        }
    }
    let mut rng = SplitMix64::new(seed);
    for _ in 0..RANDOM_ATTEMPTS {
        let mut y = vec![unit.zero_like(); op.dim()];
        for e in &basis {
            let c = unit.lift(&BigRational::from_integer(rng.range_i64(-5, 5).into()));
            for (a, b) in y.iter_mut().zip(e) {
                *a = a.plus(&c.times(b)?);
            }
        }
        if let Some(found) = accept(y, false)? {
            return Ok(found);
        }
    }
    Err(Error::InvalidArgument("no cyclic vector found".into()))
}

fn merge_orders<R: DivisionRing>(op: &LinearOperator<R>, basis: &[Vec<R>]) -> Result<Vec<R>> {
    let mut y = basis[0].clone();
    let mut p = op.vector_order(&y)?;
    for u in &basis[1..] {
        let q = op.vector_order(u)?;
        let l = p.lcm(&q)?;
        if l.same(&p) {
            continue;
        }
        let mut p1 = p.clone();
        let mut q1 = q.exact_div(&p.gcd(&q)?)?;
        loop {
            let g = p1.gcd(&q1)?;
            if g.is_one() {
                break;
            }
            p1 = p1.exact_div(&g)?;
            q1 = q1.mul(&g)?;
        }
        let left = op.apply_poly(&p.exact_div(&p1)?, &y)?;
        let right = op.apply_poly(&q.exact_div(&q1)?, u)?;
        y = left.iter().zip(&right).map(|(a, b)| a.plus(b)).collect();
        p = l;
    }
    Ok(y)
}
