#![allow(dead_code)]

use num_bigint::BigInt;
use proptest::prelude::*;
use scator::{Rational, Scator, Scator3};

fn nonzero_digit() -> impl Strategy<Value = i64> {
    prop_oneof![-9i64..=-1, 1i64..=9]
}

pub fn scalar() -> impl Strategy<Value = Rational> {
    (nonzero_digit(), nonzero_digit()).prop_map(|(p, q)| Rational::new(BigInt::from(p), BigInt::from(q)))
}

pub fn director() -> impl Strategy<Value = Rational> {
    (-9i64..=9, nonzero_digit()).prop_map(|(p, q)| Rational::new(BigInt::from(p), BigInt::from(q)))
}

pub fn scator() -> impl Strategy<Value = Scator> {
    (scalar(), director(), director()).prop_map(|(a0, a1, a2)| Scator::new(a0, a1, a2))
}

/// All components nonzero.
pub fn generic_scator() -> impl Strategy<Value = Scator> {
    (scalar(), scalar(), scalar()).prop_map(|(a0, a1, a2)| Scator::new(a0, a1, a2))
}

pub fn scator3() -> impl Strategy<Value = Scator3> {
    (scalar(), director(), director(), director()).prop_map(|(a0, a1, a2, a3)| Scator3::new(a0, a1, a2, a3))
}

pub fn q(n: i64, d: i64) -> Rational {
    scator::rational(n, d)
}
