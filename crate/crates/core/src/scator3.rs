//! 1+3 dimensional scators.
//!
//! The embedding generalises to `F(a) = a0 ∏_k (1 + (ak/a0) ik)` in the
//! 8-dimensional commutative algebra generated by `i1, i2, i3` with `ik² = 1`.
//! The product is defined through that embedding: `ab = π(F(a) F(b))`, which
//! stays inside the image because the factorised form is preserved.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::error::{Result, ScatorError};
use crate::number::{Number, Rational, Tolerance};
use crate::scator::{require_nonzero, Scator};
use crate::table::{table_product, BLADES8, TABLE8};

/// A 1+3 scator `(a0; a1, a2, a3)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Scator3<N = Rational> {
    pub a0: N,
    pub a1: N,
    pub a2: N,
    pub a3: N,
}

/// Element of the 8-dimensional algebra, coefficients in basis order
/// `(1, i1, i2, i3, i1i2, i1i3, i2i3, i1i2i3)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiVec8<N = Rational> {
    pub coeffs: [N; 8],
}

impl<N: Number> MultiVec8<N> {
    pub const LABELS: [&'static str; 8] = ["1", "i1", "i2", "i3", "i1i2", "i1i3", "i2i3", "i1i2i3"];

    pub fn new(coeffs: [N; 8]) -> Self {
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self::new(std::array::from_fn(|_| N::zero()))
    }

    pub fn basis(index: usize) -> Self {
        let mut v = Self::zero();
        v.coeffs[index] = N::one();
        v
    }

    /// Basis element for a set of generators given as a bitmask
    /// (bit 0 = i1, bit 1 = i2, bit 2 = i3).
    pub fn blade(mask: u8) -> Option<Self> {
        BLADES8.iter().position(|&b| b == mask).map(Self::basis)
    }

    pub fn mv_product(&self, other: &Self) -> Self {
        Self::new(table_product(&self.coeffs, &other.coeffs, &TABLE8))
    }

    pub fn scale(&self, lambda: &N) -> Self {
        self.map(|x| lambda.clone() * x.clone())
    }

    pub fn map<M>(&self, f: impl Fn(&N) -> M) -> MultiVec8<M> {
        MultiVec8 {
            coeffs: std::array::from_fn(|i| f(&self.coeffs[i])),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(N::is_zero)
    }

    pub fn approx_eq(&self, other: &Self, eps: f64) -> bool {
        self.coeffs.iter().zip(&other.coeffs).all(|(x, y)| x.approx_eq(y, eps))
    }

    /// Whether `self` is `F(a)` for some scator `a`: `c0 != 0`,
    /// `c_jk c0 = c_j c_k` and `c_123 c0² = c1 c2 c3`.
    pub fn in_image(&self, tol: &Tolerance) -> bool {
        let c = &self.coeffs;
        if c[0].is_negligible(tol.guard) {
            return false;
        }
        let c0 = c[0].clone();
        let pairs = [(4, 1, 2), (5, 1, 3), (6, 2, 3)];
        let pairs_ok = pairs
            .iter()
            .all(|&(jk, j, k)| (c[jk].clone() * c0.clone()).approx_eq(&(c[j].clone() * c[k].clone()), tol.eps));
        let triple = c[7].clone() * c0.clone() * c0;
        pairs_ok && triple.approx_eq(&(c[1].clone() * c[2].clone() * c[3].clone()), tol.eps)
    }
}

impl<N: Number> Add for MultiVec8<N> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        Self::new(std::array::from_fn(|i| self.coeffs[i].clone() + rhs.coeffs[i].clone()))
    }
}

impl<N: Number> Sub for MultiVec8<N> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        Self::new(std::array::from_fn(|i| self.coeffs[i].clone() - rhs.coeffs[i].clone()))
    }
}

impl<N: fmt::Display> fmt::Display for MultiVec8<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = &self.coeffs;
        write!(
            f,
            "({}; {}, {}, {}; {}, {}, {}; {})",
            c[0], c[1], c[2], c[3], c[4], c[5], c[6], c[7]
        )
    }
}

impl<N: Number> Scator3<N> {
    pub fn new(a0: N, a1: N, a2: N, a3: N) -> Self {
        Self { a0, a1, a2, a3 }
    }

    pub fn from_ints(a0: i64, a1: i64, a2: i64, a3: i64) -> Self {
        Self::new(N::from_i64(a0), N::from_i64(a1), N::from_i64(a2), N::from_i64(a3))
    }

    pub fn one() -> Self {
        Self::new(N::one(), N::zero(), N::zero(), N::zero())
    }

    pub fn zero() -> Self {
        Self::new(N::zero(), N::zero(), N::zero(), N::zero())
    }

    /// Lifts a 1+2 scator with a vanishing third director.
    pub fn from_scator(a: &Scator<N>) -> Self {
        Self::new(a.a0.clone(), a.a1.clone(), a.a2.clone(), N::zero())
    }

    /// Drops the third director.
    pub fn truncate(&self) -> Scator<N> {
        Scator::new(self.a0.clone(), self.a1.clone(), self.a2.clone())
    }

    pub fn components(&self) -> [&N; 4] {
        [&self.a0, &self.a1, &self.a2, &self.a3]
    }

    pub fn is_zero(&self) -> bool {
        self.components().into_iter().all(N::is_zero)
    }

    pub fn map<M>(&self, f: impl Fn(&N) -> M) -> Scator3<M> {
        Scator3 {
            a0: f(&self.a0),
            a1: f(&self.a1),
            a2: f(&self.a2),
            a3: f(&self.a3),
        }
    }

    pub fn approx_eq(&self, other: &Self, eps: f64) -> bool {
        self.components()
            .into_iter()
            .zip(other.components())
            .all(|(x, y)| x.approx_eq(y, eps))
    }

    pub fn scale(&self, lambda: &N) -> Self {
        self.map(|x| lambda.clone() * x.clone())
    }

    pub fn conjugate(&self) -> Self {
        Self::new(self.a0.clone(), -self.a1.clone(), -self.a2.clone(), -self.a3.clone())
    }

    pub fn product(&self, other: &Self) -> Result<Self> {
        Ok(project3(&embed3(self)?.mv_product(&embed3(other)?)))
    }

    /// `a0² ∏_k (1 - ak²/a0²)`.
    pub fn modulus_squared(&self) -> Result<N> {
        require_nonzero(&self.a0, 0.0, "modulus_squared", "scalar component")?;
        let t = self.a0.clone() * self.a0.clone();
        let factors = [&self.a1, &self.a2, &self.a3]
            .into_iter()
            .fold(N::one(), |acc, ak| acc * (t.clone() - ak.clone() * ak.clone()));
        Ok(factors / (t.clone() * t))
    }

    pub fn inverse(&self) -> Result<Self> {
        let m = self.modulus_squared()?;
        if m.is_zero() {
            return Err(ScatorError::NotInvertible);
        }
        Ok(self.conjugate().map(|x| x.clone() / m.clone()))
    }
}

impl<N: Number> Add for Scator3<N> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        Self::new(self.a0 + rhs.a0, self.a1 + rhs.a1, self.a2 + rhs.a2, self.a3 + rhs.a3)
    }
}

impl<N: Number> Add for &Scator3<N> {
    type Output = Scator3<N>;

    fn add(self, rhs: Self) -> Scator3<N> {
        self.clone() + rhs.clone()
    }
}

impl<N: Number> Sub for Scator3<N> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        Self::new(self.a0 - rhs.a0, self.a1 - rhs.a1, self.a2 - rhs.a2, self.a3 - rhs.a3)
    }
}

impl<N: Number> Neg for Scator3<N> {
    type Output = Self;

    fn neg(self) -> Self {
        self.map(|x| -x.clone())
    }
}

impl<N: fmt::Display> fmt::Display for Scator3<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}; {}, {}, {})", self.a0, self.a1, self.a2, self.a3)
    }
}

/// The 1+3 embedding.
pub fn embed3<N: Number>(a: &Scator3<N>) -> Result<MultiVec8<N>> {
    require_nonzero(&a.a0, 0.0, "embed3", "scalar component")?;
    let a0 = a.a0.clone();
    let pair = |x: &N, y: &N| x.clone() * y.clone() / a0.clone();
    let triple = a.a1.clone() * a.a2.clone() * a.a3.clone() / (a0.clone() * a0.clone());
    Ok(MultiVec8::new([
        a0.clone(),
        a.a1.clone(),
        a.a2.clone(),
        a.a3.clone(),
        pair(&a.a1, &a.a2),
        pair(&a.a1, &a.a3),
        pair(&a.a2, &a.a3),
        triple,
    ]))
}

/// Keeps the `(1, i1, i2, i3)` coefficients.
pub fn project3<N: Number>(x: &MultiVec8<N>) -> Scator3<N> {
    let c = &x.coeffs;
    Scator3::new(c[0].clone(), c[1].clone(), c[2].clone(), c[3].clone())
}

pub fn unembed3<N: Number>(x: &MultiVec8<N>) -> Result<Scator3<N>> {
    if x.in_image(&Tolerance::default()) {
        Ok(project3(x))
    } else {
        Err(ScatorError::NotInImage)
    }
}

/// Additive defect `F(a + b) - F(a) - F(b)` from its closed form: zero on
/// `1, i1, i2, i3`, `c_jk = (aj+bj)(ak+bk)/(a0+b0) - aj ak/a0 - bj bk/b0` on
/// `ij ik` and `c_123 = (a1+b1)(a2+b2)(a3+b3)/(a0+b0)² - a1a2a3/a0² -
/// b1b2b3/b0²` on `i1i2i3`.
pub fn additive_defect3<N: Number>(a: &Scator3<N>, b: &Scator3<N>) -> Result<MultiVec8<N>> {
    const OP: &str = "additive_defect3";
    require_nonzero(&a.a0, 0.0, OP, "a0")?;
    require_nonzero(&b.a0, 0.0, OP, "b0")?;
    let s0 = a.a0.clone() + b.a0.clone();
    require_nonzero(&s0, 0.0, OP, "a0 + b0")?;

    let ad = [&a.a1, &a.a2, &a.a3];
    let bd = [&b.a1, &b.a2, &b.a3];
    let sd: [N; 3] = std::array::from_fn(|k| ad[k].clone() + bd[k].clone());
    let pair = |j: usize, k: usize| {
        sd[j].clone() * sd[k].clone() / s0.clone()
            - ad[j].clone() * ad[k].clone() / a.a0.clone()
            - bd[j].clone() * bd[k].clone() / b.a0.clone()
    };
    let sq = |x: &N| x.clone() * x.clone();
    let triple = sd[0].clone() * sd[1].clone() * sd[2].clone() / sq(&s0)
        - ad[0].clone() * ad[1].clone() * ad[2].clone() / sq(&a.a0)
        - bd[0].clone() * bd[1].clone() * bd[2].clone() / sq(&b.a0);
    Ok(MultiVec8::new([
        N::zero(),
        N::zero(),
        N::zero(),
        N::zero(),
        pair(0, 1),
        pair(0, 2),
        pair(1, 2),
        triple,
    ]))
}

/// `δ_d(a) = π(d F(a))` for the basis element `d` at `index` of the
/// 8-dimensional basis.
pub fn dual3<N: Number>(a: &Scator3<N>, index: usize) -> Result<Scator3<N>> {
    Ok(project3(&MultiVec8::basis(index).mv_product(&embed3(a)?)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::number::rational as q;
    use num_traits::Zero;

    type S3 = Scator3<Rational>;
    type M8 = MultiVec8<Rational>;

    #[test]
    fn embed_examples() {
        let ones = embed3(&S3::from_ints(1, 1, 1, 1)).unwrap();
        assert!(ones.coeffs.iter().all(|c| *c == q(1, 1)));
        let e = embed3(&S3::from_ints(2, 1, 1, 0)).unwrap();
        assert_eq!(
            e.coeffs,
            [q(2, 1), q(1, 1), q(1, 1), q(0, 1), q(1, 2), q(0, 1), q(0, 1), q(0, 1)]
        );
        let s = embed3(&S3::from_ints(-5, 0, 0, 0)).unwrap();
        assert_eq!(s, M8::basis(0).scale(&q(-5, 1)));
        assert!(embed3(&S3::from_ints(0, 1, 1, 1)).is_err());
    }

    #[test]
    fn embed_factorises() {
        let a = S3::new(q(3, 2), q(-1, 4), q(5, 3), q(2, 7));
        let factor = |k: usize, ak: &Rational| M8::basis(0) + M8::basis(k).scale(&(ak / &a.a0));
        let expected = factor(1, &a.a1)
            .mv_product(&factor(2, &a.a2))
            .mv_product(&factor(3, &a.a3))
            .scale(&a.a0);
        assert_eq!(embed3(&a).unwrap(), expected);
        assert!(expected.in_image(&Tolerance::default()));
    }

    #[test]
    fn blades_by_mask() {
        let i1 = M8::blade(0b001).unwrap();
        let i2 = M8::blade(0b010).unwrap();
        let i3 = M8::blade(0b100).unwrap();
        assert_eq!(i1.mv_product(&i2), M8::basis(4));
        assert_eq!(i1.mv_product(&i3), M8::basis(5));
        assert_eq!(i2.mv_product(&i3), M8::basis(6));
        assert_eq!(i1.mv_product(&i2).mv_product(&i3), M8::basis(7));
    }

    #[test]
    fn product_examples() {
        let b = S3::new(q(3, 2), q(-1, 4), q(5, 3), q(2, 7));
        assert_eq!(S3::one().product(&b).unwrap(), b);

        let a = S3::from_ints(2, 1, 1, 1);
        let sq = a.product(&a).unwrap();
        assert_eq!(sq, S3::new(q(125, 16), q(25, 4), q(25, 4), q(25, 4)));
        assert!(S3::from_ints(0, 1, 0, 0).product(&b).is_err());
    }

    #[test]
    fn inverse_and_modulus() {
        let a = S3::from_ints(2, 1, 1, 1);
        assert_eq!(a.modulus_squared().unwrap(), q(27, 16));
        assert_eq!(a.product(&a.inverse().unwrap()).unwrap(), S3::one());
        assert_eq!(S3::from_ints(1, 0, 1, 0).inverse(), Err(ScatorError::NotInvertible));
    }

    #[test]
    fn defect_examples() {
        let d = additive_defect3(&S3::from_ints(1, 1, 0, 0), &S3::from_ints(1, 0, 1, 0)).unwrap();
        let mut expected = M8::zero();
        expected.coeffs[4] = q(1, 2);
        assert_eq!(d, expected);

        let a = S3::new(q(3, 2), q(-1, 4), q(5, 3), q(2, 7));
        assert!(additive_defect3(&a, &a.scale(&q(4, 9))).unwrap().is_zero());
        assert!(additive_defect3(&a, &S3::from_ints(-3, 1, 1, 1).scale(&q(1, 2))).is_err());
    }

    #[test]
    fn unembed_rejects_outside_image() {
        let mut x = embed3(&S3::from_ints(2, 1, 3, -1)).unwrap();
        assert_eq!(unembed3(&x).unwrap(), S3::from_ints(2, 1, 3, -1));
        x.coeffs[7] = q(5, 1);
        assert_eq!(unembed3(&x), Err(ScatorError::NotInImage));
    }

    #[test]
    fn dual3_is_involutive() {
        let a = S3::new(q(3, 2), q(-1, 4), q(5, 3), q(2, 7));
        for index in 0..8 {
            let d = dual3(&a, index).unwrap();
            if !d.a0.is_zero() {
                assert_eq!(dual3(&d, index).unwrap(), a, "basis {index}");
            }
        }
    }
}
