//! Duality operations.
//!
//! Every duality is multiplication by a basis element `d` of the embedding
//! algebra followed by projection: `δ_d(a) = π(d F(a))`. With `d = i12` this
//! is the ordinary dual `(a1 a2/a0; a2, a1)`, with `d = i1` the internal dual
//! `(a1; a0, a1 a2/a0)` and with `d = i2` the external dual
//! `(a2; a1 a2/a0, a0)`. Since `d² = 1` each duality is an involution.
//!
//! The ordinary dual preserves the modulus; the internal and external duals
//! negate it and so swap time-like and space-like scators.

use std::fmt;

use crate::embedding::MultiVec4;
use crate::error::Result;
use crate::number::{relative_error, Number, Rational, Tolerance};
use crate::scator::{require_nonzero, Scator};
use crate::table::BLADES4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DualityKind {
    /// `d = 1`
    Identity,
    /// `d = i1`
    Internal,
    /// `d = i2`
    External,
    /// `d = i12`
    Ordinary,
}

impl DualityKind {
    pub const ALL: [DualityKind; 4] = [
        DualityKind::Identity,
        DualityKind::Internal,
        DualityKind::External,
        DualityKind::Ordinary,
    ];

    /// The three non-identity dualities.
    pub const PROPER: [DualityKind; 3] = [DualityKind::Internal, DualityKind::External, DualityKind::Ordinary];

    /// Index of `d` in the basis `(1, i1, i2, i12)`.
    pub fn basis_index(self) -> usize {
        match self {
            DualityKind::Identity => 0,
            DualityKind::Internal => 1,
            DualityKind::External => 2,
            DualityKind::Ordinary => 3,
        }
    }

    pub fn from_basis_index(index: usize) -> Option<Self> {
        Self::ALL.get(index).copied()
    }

    pub fn basis_element<N: Number>(self) -> MultiVec4<N> {
        MultiVec4::basis(self.basis_index())
    }

    /// The duality whose basis element is the product of both basis elements,
    /// so that `δ_p(a) δ_q(b) = δ_{pq}(ab)`.
    pub fn compose(self, other: Self) -> Self {
        let blade = BLADES4[self.basis_index()] ^ BLADES4[other.basis_index()];
        let index = BLADES4.iter().position(|&b| b == blade).expect("closed under xor");
        Self::ALL[index]
    }

    /// Basis symbol: `1`, `i1`, `i2` or `i12`.
    pub fn symbol(self) -> &'static str {
        match self {
            DualityKind::Identity => "1",
            DualityKind::Internal => "i1",
            DualityKind::External => "i2",
            DualityKind::Ordinary => "i12",
        }
    }
}

impl fmt::Display for DualityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// `δ_kind(a)`.
///
/// Only `a0 = 0` is rejected. The result may itself have a zero scalar
/// component (for instance the ordinary dual of `(a0; 0, a2)`); such a value
/// is returned as-is and will be rejected by any later product.
pub fn dual<N: Number>(a: &Scator<N>, kind: DualityKind) -> Result<Scator<N>> {
    require_nonzero(&a.a0, 0.0, "dual", "scalar component")?;
    let a3 = || a.a1.clone() * a.a2.clone() / a.a0.clone();
    Ok(match kind {
        DualityKind::Identity => a.clone(),
        DualityKind::Ordinary => Scator::new(a3(), a.a2.clone(), a.a1.clone()),
        DualityKind::Internal => Scator::new(a.a1.clone(), a.a0.clone(), a3()),
        DualityKind::External => Scator::new(a.a2.clone(), a3(), a.a0.clone()),
    })
}

/// Multiplication by the basis element of `kind` in the embedding algebra.
pub fn dual_mv<N: Number>(x: &MultiVec4<N>, kind: DualityKind) -> MultiVec4<N> {
    kind.basis_element().mv_product(x)
}

/// One evaluated equality between two independently computed scators.
#[derive(Debug, Clone, PartialEq)]
pub struct IdentityCheck<N = Rational> {
    pub name: String,
    pub lhs: Scator<N>,
    pub rhs: Scator<N>,
    pub holds: bool,
}

impl<N: Number> IdentityCheck<N> {
    pub fn new(name: impl Into<String>, lhs: Scator<N>, rhs: Scator<N>, eps: f64) -> Self {
        let holds = lhs.approx_eq(&rhs, eps);
        Self {
            name: name.into(),
            lhs,
            rhs,
            holds,
        }
    }

    pub fn residual(&self) -> Scator<N> {
        &self.lhs - &self.rhs
    }

    /// Largest componentwise relative error between the two sides.
    pub fn max_relative_error(&self) -> f64 {
        self.lhs
            .components()
            .into_iter()
            .zip(self.rhs.components())
            .map(|(x, y)| relative_error(x, y))
            .fold(0.0, f64::max)
    }
}

/// Outcome of evaluating every product law of the dualities on one pair.
#[derive(Debug, Clone, PartialEq)]
pub struct TranslatorReport<N = Rational> {
    pub checks: Vec<IdentityCheck<N>>,
}

impl<N: Number> TranslatorReport<N> {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &IdentityCheck<N>> {
        self.checks.iter().filter(|c| !c.holds)
    }
}

/// Evaluates the fifteen product laws of the dualities on `(a, b)`:
///
/// * `δ_p(ab) = δ_p(a) b` and `δ_p(a) b = a δ_p(b)` for each proper `p`;
/// * `δ_p(a) δ_q(b) = δ_q(a) δ_p(b)` and `δ_q(a) δ_p(b) = δ_{pq}(ab)` for
///   each unordered pair `p != q`;
/// * `δ_p(a) δ_p(b) = ab` for each proper `p`.
///
/// Each side is computed from scratch. Any zero scalar component met along
/// the way is reported as an error.
pub fn translator_table<N: Number>(a: &Scator<N>, b: &Scator<N>, tol: &Tolerance) -> Result<TranslatorReport<N>> {
    let ab = a.product_guarded(b, tol.guard)?;
    let mul = |x: &Scator<N>, y: &Scator<N>| x.product_guarded(y, tol.guard);
    let mut checks = Vec::with_capacity(15);

    for p in DualityKind::PROPER {
        let lhs = dual(&ab, p)?;
        let mid = mul(&dual(a, p)?, b)?;
        let rhs = mul(a, &dual(b, p)?)?;
        checks.push(IdentityCheck::new(
            format!("δ{p}(ab) = δ{p}(a)b"),
            lhs,
            mid.clone(),
            tol.eps,
        ));
        checks.push(IdentityCheck::new(format!("δ{p}(a)b = aδ{p}(b)"), mid, rhs, tol.eps));
    }

    let pairs = [
        (DualityKind::Internal, DualityKind::External),
        (DualityKind::Internal, DualityKind::Ordinary),
        (DualityKind::External, DualityKind::Ordinary),
    ];
    for (p, q) in pairs {
        let pq = p.compose(q);
        let left = mul(&dual(a, p)?, &dual(b, q)?)?;
        let swapped = mul(&dual(a, q)?, &dual(b, p)?)?;
        let composed = dual(&ab, pq)?;
        checks.push(IdentityCheck::new(
            format!("δ{p}(a)δ{q}(b) = δ{q}(a)δ{p}(b)"),
            left,
            swapped.clone(),
            tol.eps,
        ));
        checks.push(IdentityCheck::new(
            format!("δ{q}(a)δ{p}(b) = δ{pq}(ab)"),
            swapped,
            composed,
            tol.eps,
        ));
    }

    for p in DualityKind::PROPER {
        let lhs = mul(&dual(a, p)?, &dual(b, p)?)?;
        checks.push(IdentityCheck::new(
            format!("δ{p}(a)δ{p}(b) = ab"),
            lhs,
            ab.clone(),
            tol.eps,
        ));
    }

    Ok(TranslatorReport { checks })
}

/// Smallest integer pair `(a, b)` in a fixed search order with
/// `δ(ab) != δ(a) δ(b)`, showing that the duality is not a homomorphism.
pub fn homomorphism_counterexample(kind: DualityKind) -> Option<(Scator<Rational>, Scator<Rational>)> {
    let range = -2i64..=2;
    let scators: Vec<Scator<Rational>> = (1..=2)
        .flat_map(|a0| {
            range
                .clone()
                .flat_map(move |a1| (-2..=2).map(move |a2| Scator::from_ints(a0, a1, a2)))
        })
        .collect();
    for a in &scators {
        for b in &scators {
            let witness = (|| {
                let lhs = dual(&a.product(b).ok()?, kind).ok()?;
                let rhs = dual(a, kind).ok()?.product(&dual(b, kind).ok()?).ok()?;
                Some(lhs != rhs)
            })();
            if witness == Some(true) {
                return Some((a.clone(), b.clone()));
            }
        }
    }
    None
}
