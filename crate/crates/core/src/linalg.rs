//! Exact linear algebra over division rings.
//!
//! Vectors are rows and scalars act on the left, so everything here is valid
//! for left vector spaces over non-commutative division rings such as
//! `K = F((t^2, sigma))`. Over the rationals, rank is computed a second way by
//! fraction-free (Bareiss) elimination on integer matrices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ring::DivisionRing;

struct Pivot<R> {
    col: usize,
    row: Vec<R>,
    comb: Vec<R>,
}

/// Incremental row reduction that reports the first left dependence.
///
/// After `push(v_1), ..., push(v_k)`, a `Some(beta)` result from the `k`-th
/// push means `sum beta_i v_i = 0` with `beta_k = 1`.
pub struct LeftEliminator<R> {
    width: usize,
    pushed: usize,
    pivots: Vec<Pivot<R>>,
}

impl<R: DivisionRing> LeftEliminator<R> {
    pub fn new(width: usize) -> Self {
        LeftEliminator {
            width,
            pushed: 0,
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn push(&mut self, row: Vec<R>) -> Result<Option<Vec<R>>> {
        if row.len() != self.width || row.is_empty() {
            return Err(Error::InvalidArgument(format!(
                "row of length {} pushed into width {}",
                row.len(),
                self.width
            )));
        }
        let zero = row[0].zero_like();
        let mut comb = vec![zero.clone(); self.pushed];
        comb.push(row[0].one_like());
        self.pushed += 1;
        let mut r = row;
        for p in &self.pivots {
            if r[p.col].vanishes() {
                continue;
            }
            let factor = r[p.col].times(&p.row[p.col].try_inv()?)?;
            for (j, entry) in r.iter_mut().enumerate() {
                if j == p.col {
                    *entry = zero.clone();
                } else if !p.row[j].vanishes() {
                    *entry = entry.minus(&factor.times(&p.row[j])?);
                }
            }
            for (j, c) in p.comb.iter().enumerate() {
                if !c.vanishes() {
                    comb[j] = comb[j].minus(&factor.times(c)?);
                }
            }
        }
        match r.iter().position(|e| !e.vanishes()) {
            None => Ok(Some(comb)),
            Some(col) => {
                self.pivots.push(Pivot { col, row: r, comb });
                Ok(None)
            }
        }
    }
}

/// Rank of the left span of `rows`.
pub fn left_rank<R: DivisionRing>(rows: &[Vec<R>]) -> Result<usize> {
    let Some(first) = rows.first() else {
        return Ok(0);
    };
    let mut e = LeftEliminator::new(first.len());
    for r in rows {
        e.push(r.clone())?;
    }
    Ok(e.rank())
}

/// First left dependence among `rows`, as coefficients over all rows.
pub fn left_dependence<R: DivisionRing>(rows: &[Vec<R>]) -> Result<Option<Vec<R>>> {
    let Some(first) = rows.first() else {
        return Ok(None);
    };
    let mut e = LeftEliminator::new(first.len());
    for r in rows {
        if let Some(mut comb) = e.push(r.clone())? {
            comb.resize(rows.len(), r[0].zero_like());
            return Ok(Some(comb));
        }
    }
    Ok(None)
}

/// Basis of `{v : A v = 0}` for a matrix over a commutative field.
///
/// Columns are reduced one at a time; each dependent column yields the
/// kernel vector expressing it through the earlier ones.
pub fn column_kernel<R: DivisionRing>(matrix: &[Vec<R>], cols: usize, unit: &R) -> Result<Vec<Vec<R>>> {
    let zero = unit.zero_like();
    if matrix.is_empty() {
        return Ok((0..cols)
            .map(|j| {
                let mut v = vec![zero.clone(); cols];
                v[j] = unit.one_like();
                v
            })
            .collect());
    }
    let mut e = LeftEliminator::new(matrix.len());
    let mut basis = Vec::new();
    for j in 0..cols {
        let column: Vec<R> = matrix.iter().map(|row| row[j].clone()).collect();
        if let Some(mut comb) = e.push(column)? {
            comb.resize(cols, zero.clone());
            basis.push(comb);
        }
    }
    Ok(basis)
}

/// Rank of an integer matrix by fraction-free Gaussian elimination.
pub fn bareiss_rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][col].clone();
        for i in rank + 1..rows {
            let lead = m[i][col].clone();
            for j in col + 1..cols {
                let v = &pivot * &m[i][j] - &lead * &m[rank][j];
                let (q, r) = v.div_rem(&prev);
                debug_assert!(r.is_zero(), "Bareiss step must divide exactly");
                m[i][j] = q;
            }
            m[i][col] = BigInt::zero();
        }
        prev = pivot;
        rank += 1;
    }
    rank
}

/// Rank of a rational matrix: clears each row's denominators, then Bareiss.
pub fn rational_rank(rows: &[Vec<BigRational>]) -> usize {
    let int_rows = rows
        .iter()
        .map(|r| {
            let l = r.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
            r.iter().map(|c| (c * BigRational::from_integer(l.clone())).to_integer()).collect()
        })
        .collect();
    bareiss_rank(int_rows)
}
