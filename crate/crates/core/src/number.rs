//! Scalar backends.
//!
//! All algebra in this crate is generic over [`Number`]. Two backends are
//! provided: [`Rational`] (arbitrary precision, exact) and `f64`. Identity
//! checks are exact on the rational backend; the floating backend compares
//! through a [`Tolerance`].

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

/// Exact arbitrary-precision rational.
pub type Rational = BigRational;

/// Shorthand for `numer / denom` as an exact rational.
///
/// Panics if `denom` is zero.
pub fn rational(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Comparison settings for the floating backend.
///
/// `eps` is a relative tolerance used by [`Number::approx_eq`] and by the
/// light-like test in classification. `guard` is the magnitude at or below
/// which a scalar component counts as zero for division preconditions; it
/// defaults to `0`, so only an exact floating zero is rejected unless the
/// caller opts in.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub eps: f64,
    pub guard: f64,
}

impl Tolerance {
    pub const DEFAULT_EPS: f64 = 1e-9;

    pub fn new(eps: f64, guard: f64) -> Self {
        Self { eps, guard }
    }

    pub fn with_eps(eps: f64) -> Self {
        Self { eps, ..Self::default() }
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Self {
            eps: Self::DEFAULT_EPS,
            guard: 0.0,
        }
    }
}

/// A scalar field element usable as a scator component.
pub trait Number: Clone + Debug + Display + PartialEq + PartialOrd + Signed {
    /// True for backends whose arithmetic is exact.
    const EXACT: bool;

    fn from_rational(r: &Rational) -> Self;

    fn from_i64(i: i64) -> Self {
        Self::from_rational(&Rational::from_integer(BigInt::from(i)))
    }

    fn to_f64(&self) -> f64;

    /// Whether `self` must be treated as zero before dividing by it.
    fn is_negligible(&self, guard: f64) -> bool;

    /// Equality under `eps`. Exact backends ignore `eps`.
    ///
    /// Floating values compare as `|a - b| <= eps * max(|a|, |b|, 1)`.
    fn approx_eq(&self, other: &Self, eps: f64) -> bool;
}

impl Number for Rational {
    const EXACT: bool = true;

    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }

    fn to_f64(&self) -> f64 {
        // `ToPrimitive` on `Ratio<BigInt>` rounds correctly and never fails for
        // finite values; huge magnitudes saturate to infinity.
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn is_negligible(&self, _guard: f64) -> bool {
        self.is_zero()
    }

    fn approx_eq(&self, other: &Self, _eps: f64) -> bool {
        self == other
    }
}

impl Number for f64 {
    const EXACT: bool = false;

    fn from_rational(r: &Rational) -> Self {
        Number::to_f64(r)
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn is_negligible(&self, guard: f64) -> bool {
        self.abs() <= guard
    }

    fn approx_eq(&self, other: &Self, eps: f64) -> bool {
        let scale = self.abs().max(other.abs()).max(1.0);
        (self - other).abs() <= eps * scale
    }
}

/// Relative distance `|a - b| / max(|a|, |b|, 1)` as an `f64`.
pub fn relative_error<N: Number>(a: &N, b: &N) -> f64 {
    let a = a.to_f64();
    let b = b.to_f64();
    (a - b).abs() / a.abs().max(b.abs()).max(1.0)
}
