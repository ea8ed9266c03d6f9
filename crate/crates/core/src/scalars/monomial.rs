use std::cmp::Ordering;
use std::fmt;

use num_rational::BigRational;
use num_traits::One;

/// A power product `x_{i1}^{e1} * x_{i2}^{e2} * ...` with strictly increasing
/// variable indices and positive exponents. The empty product is `1`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<(u32, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { exps: Vec::new() }
    }

    pub fn var(index: u32) -> Self {
        Monomial {
            exps: vec![(index, 1)],
        }
    }

    pub fn var_pow(index: u32, exp: u32) -> Self {
        if exp == 0 {
            return Self::one();
        }
        Monomial {
            exps: vec![(index, exp)],
        }
    }

    /// Builds a monomial from arbitrary `(index, exponent)` pairs, merging
    /// repeated indices and dropping zero exponents.
    pub fn from_pairs<I: IntoIterator<Item = (u32, u32)>>(pairs: I) -> Self {
        let mut exps: Vec<(u32, u32)> = pairs.into_iter().filter(|&(_, e)| e > 0).collect();
        exps.sort_unstable_by_key(|&(i, _)| i);
        let mut merged: Vec<(u32, u32)> = Vec::with_capacity(exps.len());
        for (i, e) in exps {
            match merged.last_mut() {
                Some(last) if last.0 == i => last.1 += e,
                _ => merged.push((i, e)),
            }
        }
        Monomial { exps: merged }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&(_, e)| e as u64).sum()
    }

    pub fn exponent(&self, index: u32) -> u32 {
        self.exps
            .binary_search_by_key(&index, |&(i, _)| i)
            .map(|pos| self.exps[pos].1)
            .unwrap_or(0)
    }

    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.exps
    }

    pub fn min_index(&self) -> Option<u32> {
        self.exps.first().map(|&(i, _)| i)
    }

    /// Value at the point `x_i = at(i)`.
    pub fn eval(&self, at: &dyn Fn(u32) -> BigRational) -> BigRational {
        self.exps
            .iter()
            .fold(BigRational::one(), |acc, &(i, e)| acc * num_traits::pow(at(i), e as usize))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut a, mut b) = (0, 0);
        while a < self.exps.len() && b < other.exps.len() {
            let (ia, ea) = self.exps[a];
            let (ib, eb) = other.exps[b];
            match ia.cmp(&ib) {
                Ordering::Less => {
                    out.push((ia, ea));
                    a += 1;
                }
                Ordering::Greater => {
                    out.push((ib, eb));
                    b += 1;
                }
                Ordering::Equal => {
                    out.push((ia, ea + eb));
                    a += 1;
                    b += 1;
                }
            }
        }
        out.extend_from_slice(&self.exps[a..]);
        out.extend_from_slice(&other.exps[b..]);
        Monomial { exps: out }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().all(|&(i, e)| other.exponent(i) >= e)
    }

    /// `self / other`, or `None` when `other` does not divide `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.exps.len());
        let mut b = 0;
        for &(i, e) in &self.exps {
            let mut sub = 0;
            if b < other.exps.len() && other.exps[b].0 == i {
                sub = other.exps[b].1;
                b += 1;
            } else if b < other.exps.len() && other.exps[b].0 < i {
                return None;
            }
            match e.cmp(&sub) {
                Ordering::Less => return None,
                Ordering::Equal => {}
                Ordering::Greater => out.push((i, e - sub)),
            }
        }
        if b < other.exps.len() {
            return None;
        }
        Some(Monomial { exps: out })
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let exps = self
            .exps
            .iter()
            .filter_map(|&(i, e)| {
                let f = other.exponent(i);
                (f > 0).then(|| (i, e.min(f)))
            })
            .collect();
        Monomial { exps }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut pairs = self.exps.clone();
        for &(i, e) in &other.exps {
            match pairs.binary_search_by_key(&i, |&(j, _)| j) {
                Ok(pos) => pairs[pos].1 = pairs[pos].1.max(e),
                Err(pos) => pairs.insert(pos, (i, e)),
            }
        }
        Monomial { exps: pairs }
    }

    pub fn shift(&self, k: u32) -> Monomial {
        Monomial {
            exps: self.exps.iter().map(|&(i, e)| (i + k, e)).collect(),
        }
    }

    /// Lowers every index by `k`; `None` if some index is below `k`.
    pub fn unshift(&self, k: u32) -> Option<Monomial> {
        let exps = self
            .exps
            .iter()
            .map(|&(i, e)| i.checked_sub(k).map(|j| (j, e)))
            .collect::<Option<Vec<_>>>()?;
        Some(Monomial { exps })
    }
}

/// Graded lexicographic order with `x0 > x1 > x2 > ...`.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for (&(ia, ea), &(ib, eb)) in self.exps.iter().zip(other.exps.iter()) {
            if ia != ib {
                // The side with the smaller index has a positive exponent where the other has 0.
                return if ia < ib { Ordering::Greater } else { Ordering::Less };
            }
            if ea != eb {
                return ea.cmp(&eb);
            }
        }
        self.exps.len().cmp(&other.exps.len())
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return write!(f, "1");
        }
        for (n, &(i, e)) in self.exps.iter().enumerate() {
            if n > 0 {
                write!(f, "*")?;
            }
            if e == 1 {
                write!(f, "x{i}")?;
            } else {
                write!(f, "x{i}^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grlex_orders_by_degree_then_low_index() {
        let x0 = Monomial::var(0);
        let x1 = Monomial::var(1);
        let x0x1 = x0.mul(&x1);
        let x1sq = Monomial::var_pow(1, 2);
        assert!(x0 > x1);
        assert!(x0x1 > x0);
        assert!(x0x1 > x1sq);
        assert!(Monomial::var_pow(0, 2) > x0x1);
        assert!(x1 > Monomial::one());
    }

    #[test]
    fn division_and_gcd() {
        let m = Monomial::from_pairs([(0, 2), (3, 1)]);
        let d = Monomial::from_pairs([(0, 1)]);
        assert_eq!(m.div(&d), Some(Monomial::from_pairs([(0, 1), (3, 1)])));
        assert_eq!(d.div(&m), None);
        assert_eq!(m.div(&Monomial::var(2)), None);
        assert_eq!(m.gcd(&Monomial::from_pairs([(0, 5), (1, 1)])), Monomial::var_pow(0, 2));
        assert_eq!(m.lcm(&Monomial::var(1)), Monomial::from_pairs([(0, 2), (1, 1), (3, 1)]));
    }

    #[test]
    fn shift_roundtrip() {
        let m = Monomial::from_pairs([(2, 1), (5, 3)]);
        assert_eq!(m.shift(4).unshift(4), Some(m.clone()));
        assert_eq!(m.unshift(3), None);
        assert_eq!(m.unshift(2), Some(Monomial::from_pairs([(0, 1), (3, 3)])));
    }
}
