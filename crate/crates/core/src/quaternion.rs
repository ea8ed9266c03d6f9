//! Generalized quaternion algebras `(a, b | Q)`: `i^2 = a`, `j^2 = b`,
//! `ij = -ji = k`. When the norm form is anisotropic the algebra is a
//! division ring of dimension 4 over its center `Q`, with maximal subfield
//! `K = Q(i)` and left `K`-basis `{1, j}`.

use std::fmt;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ore::OrePoly;
use crate::ring::{DivisionRing, Endomorphic, Lift, Ring};
use crate::rng::SplitMix64;
use crate::scalars::fmt_rational;

fn q(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

/// Parameters known to give division algebras.
pub const PRESET_DIVISION_PARAMETERS: [(i64, i64); 3] = [(-1, -1), (-1, -3), (-2, -5)];

/// Default box for the isotropy search.
pub const DEFAULT_ISOTROPY_BOUND: i64 = 24;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QAlgebra {
    pub a: BigRational,
    pub b: BigRational,
}

/// Outcome of the division check on algebra parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certification {
    /// One of [`PRESET_DIVISION_PARAMETERS`].
    Preset,
    /// No isotropic vector with `|x|, |y| <= bound`; accepted with a warning.
    Unrefuted { bound: i64 },
}

impl QAlgebra {
    pub fn new(a: BigRational, b: BigRational) -> Result<Arc<QAlgebra>> {
        if a.is_zero() || b.is_zero() {
            return Err(Error::InvalidArgument("quaternion parameters must be nonzero".into()));
        }
        Ok(Arc::new(QAlgebra { a, b }))
    }

    pub fn hamilton() -> Arc<QAlgebra> {
        Arc::new(QAlgebra { a: q(-1), b: q(-1) })
    }

    pub fn is_preset(&self) -> bool {
        PRESET_DIVISION_PARAMETERS
            .iter()
            .any(|&(a, b)| self.a == q(a) && self.b == q(b))
    }

    /// Searches for `(x, y, z) != 0` with `a x^2 + b y^2 = z^2`, `|x|, |y| <= bound`.
    /// A hit proves the algebra is split; a miss proves nothing.
    pub fn find_isotropic(&self, bound: i64) -> Option<(i64, i64, BigRational)> {
        for x in 0..=bound {
            for y in -bound..=bound {
                if x == 0 && y <= 0 {
                    continue;
                }
                let v = &self.a * q(x * x) + &self.b * q(y * y);
                if let Some(z) = rational_sqrt(&v) {
                    return Some((x, y, z));
                }
            }
        }
        None
    }

    /// Division check: presets pass outright, everything else must survive the isotropy search.
    pub fn certify(&self, bound: i64) -> Result<Certification> {
        if self.is_preset() {
            return Ok(Certification::Preset);
        }
        match self.find_isotropic(bound) {
            Some((x, y, z)) => Err(Error::NotDivisionAlgebra {
                a: fmt_rational(&self.a),
                b: fmt_rational(&self.b),
                witness: format!("(x, y, z) = ({x}, {y}, {})", fmt_rational(&z)),
            }),
            None => Ok(Certification::Unrefuted { bound }),
        }
    }

    /// Dimension over the center `Q`.
    pub fn dimension(&self) -> usize {
        4
    }
}

fn rational_sqrt(v: &BigRational) -> Option<BigRational> {
    if v.is_negative() {
        return None;
    }
    let n = v.numer().sqrt();
    let d = v.denom().sqrt();
    (&n * &n == *v.numer() && &d * &d == *v.denom()).then(|| BigRational::new(n, d))
}

/// Element `re + im * i` of the quadratic field `K = Q(i)`, `i^2 = a`.
#[derive(Clone, Debug)]
pub struct Qi {
    a: BigRational,
    pub re: BigRational,
    pub im: BigRational,
}

impl Qi {
    pub fn new(a: &BigRational, re: BigRational, im: BigRational) -> Qi {
        Qi { a: a.clone(), re, im }
    }

    pub fn from_rational(a: &BigRational, re: BigRational) -> Qi {
        Qi::new(a, re, BigRational::zero())
    }

    pub fn gen(a: &BigRational) -> Qi {
        Qi::new(a, BigRational::zero(), BigRational::one())
    }

    pub fn square_of_gen(&self) -> &BigRational {
        &self.a
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn zero(&self) -> Qi {
        Qi::from_rational(&self.a, BigRational::zero())
    }

    pub fn one(&self) -> Qi {
        Qi::from_rational(&self.a, BigRational::one())
    }

    pub fn add(&self, o: &Qi) -> Qi {
        Qi::new(&self.a, &self.re + &o.re, &self.im + &o.im)
    }

    pub fn sub(&self, o: &Qi) -> Qi {
        Qi::new(&self.a, &self.re - &o.re, &self.im - &o.im)
    }

    pub fn neg(&self) -> Qi {
        Qi::new(&self.a, -&self.re, -&self.im)
    }

    pub fn mul(&self, o: &Qi) -> Qi {
        debug_assert_eq!(self.a, o.a, "elements of different quadratic fields");
        Qi::new(
            &self.a,
            &self.re * &o.re + &self.a * &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }

    pub fn conj(&self) -> Qi {
        Qi::new(&self.a, self.re.clone(), -&self.im)
    }

    /// Field norm `re^2 - a im^2`.
    pub fn norm(&self) -> BigRational {
        &self.re * &self.re - &self.a * &self.im * &self.im
    }

    pub fn inv(&self) -> Result<Qi> {
        let n = self.norm();
        if n.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let c = self.conj();
        Ok(Qi::new(&self.a, c.re / &n, c.im / &n))
    }

    pub fn div(&self, o: &Qi) -> Result<Qi> {
        Ok(self.mul(&o.inv()?))
    }
}

impl PartialEq for Qi {
    fn eq(&self, other: &Self) -> bool {
        self.re == other.re && self.im == other.im
    }
}

impl Eq for Qi {}

fn fmt_parts(f: &mut fmt::Formatter<'_>, parts: &[(&BigRational, &str)]) -> fmt::Result {
    let mut first = true;
    for (c, unit) in parts {
        if c.is_zero() {
            continue;
        }
        let abs = c.abs();
        if first {
            if c.is_negative() {
                write!(f, "-")?;
            }
        } else {
            write!(f, "{}", if c.is_negative() { " - " } else { " + " })?;
        }
        first = false;
        if unit.is_empty() {
            write!(f, "{}", fmt_rational(&abs))?;
        } else if abs.is_one() {
            write!(f, "{unit}")?;
        } else {
            write!(f, "{}{unit}", fmt_rational(&abs))?;
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for Qi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_parts(f, &[(&self.re, ""), (&self.im, "i")])
    }
}

/// `w + x i + y j + z k` in a [`QAlgebra`].
#[derive(Clone, Debug)]
pub struct Quat {
    alg: Arc<QAlgebra>,
    pub w: BigRational,
    pub x: BigRational,
    pub y: BigRational,
    pub z: BigRational,
}

impl Quat {
    pub fn new(alg: &Arc<QAlgebra>, w: BigRational, x: BigRational, y: BigRational, z: BigRational) -> Quat {
        Quat {
            alg: Arc::clone(alg),
            w,
            x,
            y,
            z,
        }
    }

    pub fn from_ints(alg: &Arc<QAlgebra>, w: i64, x: i64, y: i64, z: i64) -> Quat {
        Quat::new(alg, q(w), q(x), q(y), q(z))
    }

    pub fn scalar(alg: &Arc<QAlgebra>, c: BigRational) -> Quat {
        Quat::new(alg, c, BigRational::zero(), BigRational::zero(), BigRational::zero())
    }

    pub fn i(alg: &Arc<QAlgebra>) -> Quat {
        Quat::from_ints(alg, 0, 1, 0, 0)
    }

    pub fn j(alg: &Arc<QAlgebra>) -> Quat {
        Quat::from_ints(alg, 0, 0, 1, 0)
    }

    pub fn k(alg: &Arc<QAlgebra>) -> Quat {
        Quat::from_ints(alg, 0, 0, 0, 1)
    }

    pub fn algebra(&self) -> &Arc<QAlgebra> {
        &self.alg
    }

    pub fn is_zero(&self) -> bool {
        self.w.is_zero() && self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.w.is_one() && self.is_central()
    }

    /// In the center `Q`: no `i`, `j`, `k` part.
    pub fn is_central(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    fn same_algebra(&self, o: &Quat) -> Result<()> {
        if Arc::ptr_eq(&self.alg, &o.alg) || self.alg == o.alg {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    pub fn add(&self, o: &Quat) -> Quat {
        Quat::new(&self.alg, &self.w + &o.w, &self.x + &o.x, &self.y + &o.y, &self.z + &o.z)
    }

    pub fn neg(&self) -> Quat {
        Quat::new(&self.alg, -&self.w, -&self.x, -&self.y, -&self.z)
    }

    pub fn sub(&self, o: &Quat) -> Quat {
        self.add(&o.neg())
    }

    pub fn scale(&self, c: &BigRational) -> Quat {
        Quat::new(&self.alg, &self.w * c, &self.x * c, &self.y * c, &self.z * c)
    }

    pub fn mul(&self, o: &Quat) -> Result<Quat> {
        self.same_algebra(o)?;
        let (a, b) = (&self.alg.a, &self.alg.b);
        let ab = a * b;
        let (w1, x1, y1, z1) = (&self.w, &self.x, &self.y, &self.z);
        let (w2, x2, y2, z2) = (&o.w, &o.x, &o.y, &o.z);
        let w = w1 * w2 + a * x1 * x2 + b * y1 * y2 - &ab * z1 * z2;
        let x = w1 * x2 + x1 * w2 - b * y1 * z2 + b * z1 * y2;
        let y = w1 * y2 + y1 * w2 + a * x1 * z2 - a * z1 * x2;
        let z = w1 * z2 + z1 * w2 + x1 * y2 - y1 * x2;
        Ok(Quat::new(&self.alg, w, x, y, z))
    }

    pub fn conj(&self) -> Quat {
        Quat::new(&self.alg, self.w.clone(), -&self.x, -&self.y, -&self.z)
    }

    /// Reduced trace `2w`.
    pub fn trace(&self) -> BigRational {
        &self.w * q(2)
    }

    /// Reduced norm `w^2 - a x^2 - b y^2 + ab z^2`.
    pub fn norm(&self) -> BigRational {
        let (a, b) = (&self.alg.a, &self.alg.b);
        &self.w * &self.w - a * &self.x * &self.x - b * &self.y * &self.y + a * b * &self.z * &self.z
    }

    pub fn inv(&self) -> Result<Quat> {
        let n = self.norm();
        if n.is_zero() {
            return Err(Error::ZeroNorm);
        }
        Ok(self.conj().scale(&n.recip()))
    }

    pub fn pow(&self, exp: i64) -> Result<Quat> {
        let base = if exp < 0 { self.inv()? } else { self.clone() };
        let mut acc = Quat::scalar(&self.alg, BigRational::one());
        for _ in 0..exp.unsigned_abs() {
            acc = acc.mul(&base)?;
        }
        Ok(acc)
    }

    /// Group commutator `u v u^-1 v^-1`.
    pub fn commutator(&self, v: &Quat) -> Result<Quat> {
        self.mul(v)?.mul(&self.inv()?)?.mul(&v.inv()?)
    }

    /// Left coordinates over `K = Q(i)` in the basis `{1, j}`:
    /// `w + xi + yj + zk = (w + xi) + (y + zi) j`.
    pub fn coords_over_k(&self) -> [Qi; 2] {
        let a = &self.alg.a;
        [
            Qi::new(a, self.w.clone(), self.x.clone()),
            Qi::new(a, self.y.clone(), self.z.clone()),
        ]
    }

    /// Inverse of [`Quat::coords_over_k`].
    pub fn from_coords_over_k(alg: &Arc<QAlgebra>, c: &[Qi; 2]) -> Quat {
        Quat::new(alg, c[0].re.clone(), c[0].im.clone(), c[1].re.clone(), c[1].im.clone())
    }

    pub fn from_qi(alg: &Arc<QAlgebra>, c: &Qi) -> Quat {
        Quat::new(alg, c.re.clone(), c.im.clone(), BigRational::zero(), BigRational::zero())
    }
}

impl PartialEq for Quat {
    fn eq(&self, o: &Self) -> bool {
        self.alg == o.alg && self.w == o.w && self.x == o.x && self.y == o.y && self.z == o.z
    }
}

impl Eq for Quat {}

impl fmt::Display for Quat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_parts(f, &[(&self.w, ""), (&self.x, "i"), (&self.y, "j"), (&self.z, "k")])
    }
}

/// Minimal polynomial over the center: `t - w` for central `q`, else `t^2 - tr(q) t + n(q)`.
pub fn minpoly_over_center(q: &Quat) -> OrePoly<BigRational> {
    if q.is_central() {
        OrePoly::from_coeffs(vec![-q.w.clone(), BigRational::one()])
    } else {
        OrePoly::from_coeffs(vec![q.norm(), -q.trace(), BigRational::one()])
    }
}

/// A random unit with small integer coordinates in `-bound..=bound`.
pub fn random_unit(alg: &Arc<QAlgebra>, rng: &mut SplitMix64, bound: i64) -> Quat {
    loop {
        let c: Vec<i64> = (0..4).map(|_| rng.range_i64(-bound, bound)).collect();
        let u = Quat::from_ints(alg, c[0], c[1], c[2], c[3]);
        if !u.norm().is_zero() {
            return u;
        }
    }
}

/// One element of the `level`-th derived subgroup, built as a commutator of
/// two elements of the previous level (level 0 is a random unit).
pub fn random_derived(alg: &Arc<QAlgebra>, level: u32, rng: &mut SplitMix64) -> Result<Quat> {
    if level == 0 {
        return Ok(random_unit(alg, rng, 3));
    }
    let u = random_derived(alg, level - 1, rng)?;
    let v = random_derived(alg, level - 1, rng)?;
    u.commutator(&v)
}

/// `count` seeded samples from `D^(level)`; sample `n` uses stream `(seed, n)`.
/// Every other sample is a product of two nested commutators.
pub fn sample_derived(alg: &Arc<QAlgebra>, level: u32, count: usize, seed: u64) -> Result<Vec<Quat>> {
    if level == 0 {
        return Err(Error::InvalidArgument("derived level must be at least 1".into()));
    }
    (0..count)
        .map(|n| {
            let mut rng = SplitMix64::for_index(seed, n as u64);
            let first = random_derived(alg, level, &mut rng)?;
            if n % 2 == 1 {
                first.mul(&random_derived(alg, level, &mut rng)?)
            } else {
                Ok(first)
            }
        })
        .collect()
}

impl Ring for Quat {
    fn zero_like(&self) -> Self {
        Quat::scalar(&self.alg, BigRational::zero())
    }
    fn one_like(&self) -> Self {
        Quat::scalar(&self.alg, BigRational::one())
    }
    fn vanishes(&self) -> bool {
        Quat::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self.add(rhs)
    }
    fn negate(&self) -> Self {
        self.neg()
    }
    fn minus(&self, rhs: &Self) -> Self {
        self.sub(rhs)
    }
    fn times(&self, rhs: &Self) -> Result<Self> {
        self.mul(rhs)
    }
}

impl DivisionRing for Quat {
    fn try_inv(&self) -> Result<Self> {
        self.inv()
    }
}

impl Endomorphic for Quat {
    fn twist(&self, _k: u32) -> Self {
        self.clone()
    }
}

impl Lift<BigRational> for Quat {
    fn lift(&self, c: &BigRational) -> Self {
        Quat::scalar(&self.alg, c.clone())
    }
}

impl Lift<Qi> for Quat {
    fn lift(&self, c: &Qi) -> Self {
        Quat::from_qi(&self.alg, c)
    }
}

impl Lift<Quat> for Quat {
    fn lift(&self, c: &Quat) -> Self {
        c.clone()
    }
}

impl Ring for Qi {
    fn zero_like(&self) -> Self {
        self.zero()
    }
    fn one_like(&self) -> Self {
        self.one()
    }
    fn vanishes(&self) -> bool {
        Qi::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self.add(rhs)
    }
    fn negate(&self) -> Self {
        self.neg()
    }
    fn minus(&self, rhs: &Self) -> Self {
        self.sub(rhs)
    }
    fn times(&self, rhs: &Self) -> Result<Self> {
        Ok(self.mul(rhs))
    }
}

impl DivisionRing for Qi {
    fn try_inv(&self) -> Result<Self> {
        self.inv()
    }
}

impl Endomorphic for Qi {
    fn twist(&self, _k: u32) -> Self {
        self.clone()
    }
}

impl Lift<BigRational> for Qi {
    fn lift(&self, c: &BigRational) -> Self {
        Qi::from_rational(&self.a, c.clone())
    }
}

impl Lift<Qi> for Qi {
    fn lift(&self, c: &Qi) -> Self {
        c.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defining_relations() {
        let h = QAlgebra::hamilton();
        let (i, j, k) = (Quat::i(&h), Quat::j(&h), Quat::k(&h));
        assert_eq!(i.mul(&j).unwrap(), k);
        assert_eq!(j.mul(&i).unwrap(), k.neg());
        assert_eq!(i.mul(&i).unwrap(), Quat::from_ints(&h, -1, 0, 0, 0));
        assert_eq!(k.mul(&k).unwrap(), Quat::from_ints(&h, -1, 0, 0, 0));
        let one_plus_i = Quat::from_ints(&h, 1, 1, 0, 0);
        let one_minus_i = Quat::from_ints(&h, 1, -1, 0, 0);
        assert_eq!(one_plus_i.mul(&one_minus_i).unwrap(), Quat::from_ints(&h, 2, 0, 0, 0));
    }

    #[test]
    fn general_parameters_relations() {
        let alg = QAlgebra::new(q(-2), q(-5)).unwrap();
        let (i, j, k) = (Quat::i(&alg), Quat::j(&alg), Quat::k(&alg));
        assert_eq!(i.mul(&i).unwrap(), Quat::from_ints(&alg, -2, 0, 0, 0));
        assert_eq!(j.mul(&j).unwrap(), Quat::from_ints(&alg, -5, 0, 0, 0));
        assert_eq!(k.mul(&k).unwrap(), Quat::from_ints(&alg, -10, 0, 0, 0));
        assert_eq!(i.mul(&k).unwrap(), j.scale(&q(-2)));
        assert_eq!(k.mul(&j).unwrap(), i.scale(&q(-5)));
    }

    #[test]
    fn square_and_minpoly_of_one_plus_i_plus_j() {
        let h = QAlgebra::hamilton();
        let v = Quat::from_ints(&h, 1, 1, 1, 0);
        assert_eq!(v.mul(&v).unwrap(), Quat::from_ints(&h, -1, 2, 2, 0));
        let m = minpoly_over_center(&v);
        assert_eq!(m.coeffs(), &[q(3), q(-2), q(1)]);
        assert!(m.right_eval(&v).unwrap().is_zero());
        assert_eq!(minpoly_over_center(&Quat::from_ints(&h, 3, 0, 0, 0)).coeffs(), &[q(-3), q(1)]);
        assert_eq!(minpoly_over_center(&Quat::i(&h)).coeffs(), &[q(1), q(0), q(1)]);
    }

    #[test]
    fn inverses_and_zero_norm() {
        let h = QAlgebra::hamilton();
        let v = Quat::from_ints(&h, 1, 2, -3, 4);
        assert!(v.mul(&v.inv().unwrap()).unwrap().is_one());
        let split = QAlgebra::new(q(1), q(1)).unwrap();
        let zero_norm = Quat::from_ints(&split, 1, 1, 0, 0);
        assert_eq!(zero_norm.inv().unwrap_err(), Error::ZeroNorm);
    }

    #[test]
    fn division_certification() {
        assert_eq!(QAlgebra::hamilton().certify(10), Ok(Certification::Preset));
        let split = QAlgebra::new(q(1), q(-1)).unwrap();
        assert!(matches!(split.certify(10), Err(Error::NotDivisionAlgebra { .. })));
        // negative definite norm form: nothing to find
        let other = QAlgebra::new(q(-1), q(-7)).unwrap();
        assert_eq!(other.certify(10), Ok(Certification::Unrefuted { bound: 10 }));
        let (x, y, z) = QAlgebra::new(q(2), q(7)).unwrap().find_isotropic(10).unwrap();
        assert_eq!(q(2) * q(x * x) + q(7) * q(y * y), &z * &z);
    }

    #[test]
    fn commutators_have_norm_one() {
        let h = QAlgebra::hamilton();
        let v = Quat::from_ints(&h, 2, -1, 0, 3);
        assert!(v.commutator(&v).unwrap().is_one());
        for e in sample_derived(&h, 1, 20, 5).unwrap() {
            assert!(e.norm().is_one(), "{e}");
        }
    }

    #[test]
    fn coordinates_over_k() {
        let h = QAlgebra::hamilton();
        let v = Quat::from_ints(&h, 1, 2, 3, 4);
        let c = v.coords_over_k();
        assert_eq!(Quat::from_coords_over_k(&h, &c), v);
        // (y + z i) j = y j + z k
        let back = Quat::from_qi(&h, &c[0]).add(&Quat::from_qi(&h, &c[1]).mul(&Quat::j(&h)).unwrap());
        assert_eq!(back, v);
    }

    #[test]
    fn rendering() {
        let h = QAlgebra::hamilton();
        assert_eq!(Quat::from_ints(&h, 1, 2, -3, 1).to_string(), "1 + 2i - 3j + k");
        assert_eq!(Quat::from_ints(&h, 0, 0, 0, -1).to_string(), "-k");
        assert_eq!(Quat::from_ints(&h, 0, 0, 0, 0).to_string(), "0");
    }
}
