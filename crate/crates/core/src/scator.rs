//! The 1+2 dimensional scator and its non-distributive product.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::error::{Result, ScatorError};
use crate::number::{Number, Rational, Tolerance};

/// A 1+2 scator `(a0; a1, a2)`.
///
/// Any triple is a valid value. Operations that divide by the scalar
/// component reject `a0 = 0` with [`ScatorError::Domain`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Scator<N = Rational> {
    pub a0: N,
    pub a1: N,
    pub a2: N,
}

/// Causal type of a scator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Causality {
    TimeLike,
    SpaceLike,
    LightLike,
}

impl Causality {
    /// One-letter code: `T`, `S` or `L`.
    pub fn code(self) -> char {
        match self {
            Causality::TimeLike => 'T',
            Causality::SpaceLike => 'S',
            Causality::LightLike => 'L',
        }
    }

    /// Exchange time-like and space-like, fixing light-like.
    pub fn swapped(self) -> Self {
        match self {
            Causality::TimeLike => Causality::SpaceLike,
            Causality::SpaceLike => Causality::TimeLike,
            Causality::LightLike => Causality::LightLike,
        }
    }
}

impl fmt::Display for Causality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Causality::TimeLike => "TimeLike",
            Causality::SpaceLike => "SpaceLike",
            Causality::LightLike => "LightLike",
        };
        f.write_str(name)
    }
}

pub(crate) fn require_nonzero<N: Number>(x: &N, guard: f64, op: &'static str, what: &'static str) -> Result<()> {
    if x.is_negligible(guard) {
        Err(ScatorError::domain(op, what))
    } else {
        Ok(())
    }
}

impl<N: Number> Scator<N> {
    pub fn new(a0: N, a1: N, a2: N) -> Self {
        Self { a0, a1, a2 }
    }

    /// Scator with integer components.
    pub fn from_ints(a0: i64, a1: i64, a2: i64) -> Self {
        Self::new(N::from_i64(a0), N::from_i64(a1), N::from_i64(a2))
    }

    pub fn zero() -> Self {
        Self::new(N::zero(), N::zero(), N::zero())
    }

    /// The multiplicative identity `(1; 0, 0)`.
    pub fn one() -> Self {
        Self::scalar(N::one())
    }

    pub fn scalar(a0: N) -> Self {
        Self::new(a0, N::zero(), N::zero())
    }

    pub fn components(&self) -> [&N; 3] {
        [&self.a0, &self.a1, &self.a2]
    }

    pub fn is_zero(&self) -> bool {
        self.a0.is_zero() && self.a1.is_zero() && self.a2.is_zero()
    }

    pub fn map<M>(&self, f: impl Fn(&N) -> M) -> Scator<M> {
        Scator {
            a0: f(&self.a0),
            a1: f(&self.a1),
            a2: f(&self.a2),
        }
    }

    pub fn to_f64(&self) -> Scator<f64> {
        self.map(N::to_f64)
    }

    /// Componentwise [`Number::approx_eq`].
    pub fn approx_eq(&self, other: &Self, eps: f64) -> bool {
        self.a0.approx_eq(&other.a0, eps) && self.a1.approx_eq(&other.a1, eps) && self.a2.approx_eq(&other.a2, eps)
    }

    pub fn scale(&self, lambda: &N) -> Self {
        self.map(|x| lambda.clone() * x.clone())
    }

    /// Hypercomplex conjugate `(a0; -a1, -a2)`.
    pub fn conjugate(&self) -> Self {
        Self::new(self.a0.clone(), -self.a1.clone(), -self.a2.clone())
    }

    /// The scator product. Fails when either scalar component is zero.
    pub fn product(&self, other: &Self) -> Result<Self> {
        self.product_guarded(other, 0.0)
    }

    /// [`Scator::product`], treating scalar components with magnitude at or
    /// below `guard` as zero on the floating backend.
    pub fn product_guarded(&self, other: &Self, guard: f64) -> Result<Self> {
        let (a, b) = (self, other);
        require_nonzero(&a.a0, guard, "product", "scalar component of left factor")?;
        require_nonzero(&b.a0, guard, "product", "scalar component of right factor")?;

        let a12 = a.a1.clone() * a.a2.clone();
        let b12 = b.a1.clone() * b.a2.clone();
        let s0 = a.a0.clone() * b.a0.clone()
            + a.a1.clone() * b.a1.clone()
            + a.a2.clone() * b.a2.clone()
            + a12.clone() * b12.clone() / (a.a0.clone() * b.a0.clone());
        let s1 = a.a0.clone() * b.a1.clone()
            + a.a1.clone() * b.a0.clone()
            + a12.clone() * b.a2.clone() / a.a0.clone()
            + a.a2.clone() * b12.clone() / b.a0.clone();
        let s2 = a.a0.clone() * b.a2.clone()
            + a.a2.clone() * b.a0.clone()
            + a12 * b.a1.clone() / a.a0.clone()
            + a.a1.clone() * b12 / b.a0.clone();
        Ok(Self::new(s0, s1, s2))
    }

    /// Modulus squared `a0² (1 - a1²/a0²)(1 - a2²/a0²)`. May be negative.
    pub fn modulus_squared(&self) -> Result<N> {
        require_nonzero(&self.a0, 0.0, "modulus_squared", "scalar component")?;
        let s = self.a0.clone() * self.a0.clone();
        let d1 = s.clone() - self.a1.clone() * self.a1.clone();
        let d2 = s.clone() - self.a2.clone() * self.a2.clone();
        Ok(d1 * d2 / s)
    }

    /// Inverse with respect to the scator product: `conjugate / modulus²`.
    pub fn inverse(&self) -> Result<Self> {
        self.inverse_guarded(0.0)
    }

    pub fn inverse_guarded(&self, guard: f64) -> Result<Self> {
        require_nonzero(&self.a0, guard, "inverse", "scalar component")?;
        let m = self.modulus_squared()?;
        if m.is_negligible(guard) {
            return Err(ScatorError::NotInvertible);
        }
        Ok(self.conjugate().map(|x| x.clone() / m.clone()))
    }

    /// Causal classification with the default tolerance.
    pub fn classify(&self) -> Causality {
        self.classify_with(&Tolerance::default())
    }

    /// Causal classification.
    ///
    /// Light-like wins whenever `a0² = a1²` or `a0² = a2²` (within `tol.eps`
    /// on the floating backend). Otherwise the scator is time-like when both
    /// directors lie on the same side of `|a0|` (inside the bipyramid or in
    /// the wings) and space-like when exactly one director dominates.
    pub fn classify_with(&self, tol: &Tolerance) -> Causality {
        let t = self.a0.clone() * self.a0.clone();
        let x = self.a1.clone() * self.a1.clone();
        let y = self.a2.clone() * self.a2.clone();
        if t.approx_eq(&x, tol.eps) || t.approx_eq(&y, tol.eps) {
            return Causality::LightLike;
        }
        if (t > x) == (t > y) {
            Causality::TimeLike
        } else {
            Causality::SpaceLike
        }
    }
}

/// Distributivity defect `(a + b)c - ac - bc` in closed form:
/// `(b0 a1 - a0 b1)(a0 b2 - b0 a2) / (a0 b0 (a0 + b0))` times the ordinary
/// dual `(c1 c2 / c0; c2, c1)`.
pub fn delta_defect<N: Number>(a: &Scator<N>, b: &Scator<N>, c: &Scator<N>) -> Result<Scator<N>> {
    const OP: &str = "delta_defect";
    require_nonzero(&a.a0, 0.0, OP, "a0")?;
    require_nonzero(&b.a0, 0.0, OP, "b0")?;
    require_nonzero(&c.a0, 0.0, OP, "c0")?;
    let sum0 = a.a0.clone() + b.a0.clone();
    require_nonzero(&sum0, 0.0, OP, "a0 + b0")?;

    let coeff = (b.a0.clone() * a.a1.clone() - a.a0.clone() * b.a1.clone())
        * (a.a0.clone() * b.a2.clone() - b.a0.clone() * a.a2.clone())
        / (a.a0.clone() * b.a0.clone() * sum0);
    let dual = Scator::new(c.a1.clone() * c.a2.clone() / c.a0.clone(), c.a2.clone(), c.a1.clone());
    Ok(dual.scale(&coeff))
}

impl<N: Number> Add for Scator<N> {
    type Output = Scator<N>;

    fn add(self, rhs: Self) -> Self::Output {
        Scator::new(self.a0 + rhs.a0, self.a1 + rhs.a1, self.a2 + rhs.a2)
    }
}

impl<N: Number> Add for &Scator<N> {
    type Output = Scator<N>;

    fn add(self, rhs: Self) -> Self::Output {
        self.clone() + rhs.clone()
    }
}

impl<N: Number> Sub for Scator<N> {
    type Output = Scator<N>;

    fn sub(self, rhs: Self) -> Self::Output {
        Scator::new(self.a0 - rhs.a0, self.a1 - rhs.a1, self.a2 - rhs.a2)
    }
}

impl<N: Number> Sub for &Scator<N> {
    type Output = Scator<N>;

    fn sub(self, rhs: Self) -> Self::Output {
        self.clone() - rhs.clone()
    }
}

impl<N: Number> Neg for Scator<N> {
    type Output = Scator<N>;

    fn neg(self) -> Self::Output {
        Scator::new(-self.a0, -self.a1, -self.a2)
    }
}

impl<N: fmt::Display> fmt::Display for Scator<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}; {}, {})", self.a0, self.a1, self.a2)
    }
}
