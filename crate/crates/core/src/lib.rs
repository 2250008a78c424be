//! Hyperbolic scators.
//!
//! A 1+2 dimensional scator `(a0; a1, a2)` carries one scalar (temporal)
//! component and two director components. The scator product is commutative
//! and, away from zero divisors, associative, but it is not distributive over
//! addition. This crate provides:
//!
//! * [`Scator`] with its product, conjugate, modulus, inverse and causal
//!   classification ([`scator`]);
//! * the 4-dimensional distributive algebra that the scators embed into,
//!   together with the embedding, projection and the additive defect
//!   coefficient kappa ([`embedding`]);
//! * the ordinary, internal and external dualities ([`duality`]);
//! * the (non-bilinear) scalar product ([`metric`]);
//! * the 1+3 dimensional generalisation over an 8-dimensional algebra
//!   ([`scator3`]).
//!
//! Every numeric type is generic over [`Number`], implemented for exact
//! [`Rational`] values and for `f64`.

pub mod duality;
pub mod embedding;
mod error;
pub mod metric;
pub mod number;
pub mod sample;
pub mod scator;
pub mod scator3;
mod table;

pub use duality::{
    dual, dual_mv, homomorphism_counterexample, translator_table, DualityKind, IdentityCheck, TranslatorReport,
};
pub use embedding::{embed, kappa, kappa_n, project, unembed, unembed_with, MultiVec4};
pub use error::{Result, ScatorError};
pub use metric::{dot, nonbilinearity_witness, norm_product_check, NonBilinearityWitness, NormProductReport};
pub use number::{rational, relative_error, Number, Rational, Tolerance};
pub use scator::{delta_defect, Causality, Scator};
pub use scator3::{additive_defect3, dual3, embed3, project3, unembed3, MultiVec8, Scator3};
