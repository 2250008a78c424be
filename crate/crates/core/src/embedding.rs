//! The 4-dimensional distributive algebra `A` with basis `(1, i1, i2, i12)`
//! and the fundamental embedding of scators into it.
//!
//! The embedding `F(a) = a0 + a1 i1 + a2 i2 + (a1 a2 / a0) i12` is a
//! multiplicative homomorphism, so the scator product is the projection of a
//! distributive product. `F` is not additive: the failure is carried entirely
//! by the `i12` component and measured by [`kappa`].

use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::error::{Result, ScatorError};
use crate::number::{Number, Rational, Tolerance};
use crate::scator::{require_nonzero, Scator};
use crate::table::{table_product, TABLE4};

/// Element `c0 + c1 i1 + c2 i2 + c12 i12` of the algebra `A`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiVec4<N = Rational> {
    /// Coefficients in basis order `(1, i1, i2, i12)`.
    pub coeffs: [N; 4],
}

impl<N: Number> MultiVec4<N> {
    pub fn new(c0: N, c1: N, c2: N, c12: N) -> Self {
        Self {
            coeffs: [c0, c1, c2, c12],
        }
    }

    pub fn from_ints(c0: i64, c1: i64, c2: i64, c12: i64) -> Self {
        Self::new(N::from_i64(c0), N::from_i64(c1), N::from_i64(c2), N::from_i64(c12))
    }

    pub fn zero() -> Self {
        Self::basis_scaled(0, N::zero())
    }

    /// Basis element by index: 0 = 1, 1 = i1, 2 = i2, 3 = i12.
    pub fn basis(index: usize) -> Self {
        Self::basis_scaled(index, N::one())
    }

    fn basis_scaled(index: usize, value: N) -> Self {
        let mut coeffs: [N; 4] = std::array::from_fn(|_| N::zero());
        coeffs[index] = value;
        Self { coeffs }
    }

    pub fn one() -> Self {
        Self::basis(0)
    }

    pub fn i1() -> Self {
        Self::basis(1)
    }

    pub fn i2() -> Self {
        Self::basis(2)
    }

    pub fn i12() -> Self {
        Self::basis(3)
    }

    pub fn c0(&self) -> &N {
        &self.coeffs[0]
    }

    pub fn c1(&self) -> &N {
        &self.coeffs[1]
    }

    pub fn c2(&self) -> &N {
        &self.coeffs[2]
    }

    pub fn c12(&self) -> &N {
        &self.coeffs[3]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(N::is_zero)
    }

    pub fn map<M>(&self, f: impl Fn(&N) -> M) -> MultiVec4<M> {
        MultiVec4 {
            coeffs: std::array::from_fn(|i| f(&self.coeffs[i])),
        }
    }

    pub fn approx_eq(&self, other: &Self, eps: f64) -> bool {
        self.coeffs.iter().zip(&other.coeffs).all(|(x, y)| x.approx_eq(y, eps))
    }

    /// Distributive product of the algebra.
    pub fn mv_product(&self, other: &Self) -> Self {
        Self {
            coeffs: table_product(&self.coeffs, &other.coeffs, &TABLE4),
        }
    }

    pub fn scale(&self, lambda: &N) -> Self {
        self.map(|x| lambda.clone() * x.clone())
    }

    /// Negates the `i1` and `i2` coefficients, fixing `1` and `i12`.
    pub fn conjugate(&self) -> Self {
        let [c0, c1, c2, c12] = self.coeffs.clone();
        Self::new(c0, -c1, -c2, c12)
    }

    /// Membership in the image of the embedding: `c0 != 0` and
    /// `c12 c0 = c1 c2`. On the floating backend the second condition is
    /// `|c12 c0 - c1 c2| <= eps (1 + |c1 c2|)`.
    pub fn in_image(&self, tol: &Tolerance) -> bool {
        let [c0, c1, c2, c12] = &self.coeffs;
        if c0.is_negligible(tol.guard) {
            return false;
        }
        let lhs = c12.clone() * c0.clone();
        let rhs = c1.clone() * c2.clone();
        if N::EXACT {
            lhs == rhs
        } else {
            let slack = tol.eps * (1.0 + rhs.to_f64().abs());
            (lhs - rhs).to_f64().abs() <= slack
        }
    }
}

impl<N: Number> Add for MultiVec4<N> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        let [a, b, c, d] = self.coeffs;
        let [e, f, g, h] = rhs.coeffs;
        Self::new(a + e, b + f, c + g, d + h)
    }
}

impl<N: Number> Sub for MultiVec4<N> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<N: Number> Neg for MultiVec4<N> {
    type Output = Self;

    fn neg(self) -> Self {
        self.map(|x| -x.clone())
    }
}

impl<N: fmt::Display> fmt::Display for MultiVec4<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [c0, c1, c2, c12] = &self.coeffs;
        write!(f, "({c0}; {c1}, {c2}, {c12})")
    }
}

/// The fundamental embedding `F`.
pub fn embed<N: Number>(a: &Scator<N>) -> Result<MultiVec4<N>> {
    require_nonzero(&a.a0, 0.0, "embed", "scalar component")?;
    let c12 = a.a1.clone() * a.a2.clone() / a.a0.clone();
    Ok(MultiVec4::new(a.a0.clone(), a.a1.clone(), a.a2.clone(), c12))
}

/// The projection `π`, dropping the `i12` coefficient. Defined on all of `A`.
pub fn project<N: Number>(x: &MultiVec4<N>) -> Scator<N> {
    let [c0, c1, c2, _] = x.coeffs.clone();
    Scator::new(c0, c1, c2)
}

/// The partial inverse `F⁻¹`, defined only on the image of [`embed`].
pub fn unembed<N: Number>(x: &MultiVec4<N>) -> Result<Scator<N>> {
    unembed_with(x, &Tolerance::default())
}

pub fn unembed_with<N: Number>(x: &MultiVec4<N>, tol: &Tolerance) -> Result<Scator<N>> {
    if x.in_image(tol) {
        Ok(project(x))
    } else {
        Err(ScatorError::NotInImage)
    }
}

/// Additive defect coefficient:
/// `F(a + b) - F(a) - F(b) = kappa(a, b) i12`, with
/// `kappa = (a1 + b1)(a2 + b2)/(a0 + b0) - a1 a2/a0 - b1 b2/b0`.
pub fn kappa<N: Number>(a: &Scator<N>, b: &Scator<N>) -> Result<N> {
    const OP: &str = "kappa";
    require_nonzero(&a.a0, 0.0, OP, "a0")?;
    require_nonzero(&b.a0, 0.0, OP, "b0")?;
    let s0 = a.a0.clone() + b.a0.clone();
    require_nonzero(&s0, 0.0, OP, "a0 + b0")?;
    let s1 = a.a1.clone() + b.a1.clone();
    let s2 = a.a2.clone() + b.a2.clone();
    Ok(s1 * s2 / s0 - a.a1.clone() * a.a2.clone() / a.a0.clone() - b.a1.clone() * b.a2.clone() / b.a0.clone())
}

/// `kappa_n(a_1, ..., a_n) = Σ_{j>=2} kappa(a_1 + ... + a_{j-1}, a_j)`, so that
/// `F(Σ a_i) = Σ F(a_i) + kappa_n i12`. Zero for fewer than two scators.
pub fn kappa_n<N: Number>(scators: &[Scator<N>]) -> Result<N> {
    let Some((first, rest)) = scators.split_first() else {
        return Ok(N::zero());
    };
    let mut prefix = first.clone();
    let mut total = N::zero();
    for next in rest {
        total = total + kappa(&prefix, next)?;
        prefix = prefix + next.clone();
    }
    Ok(total)
}
