//! Seeded random rational scators for property sweeps.
//!
//! Components are small rationals `p/q` with `p ∈ [-9, 9]` and
//! `q ∈ [-9, 9] \ {0}`; scalar components additionally have `p != 0`.

use num_bigint::BigInt;
use rand::Rng;

use crate::number::Rational;
use crate::scator::Scator;
use crate::scator3::Scator3;

fn nonzero_digit<R: Rng + ?Sized>(rng: &mut R) -> i64 {
    let d = rng.gen_range(1..=9);
    if rng.gen_bool(0.5) {
        d
    } else {
        -d
    }
}

/// A nonzero small rational.
pub fn scalar<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    let p = nonzero_digit(rng);
    let q = nonzero_digit(rng);
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// A small rational, possibly zero.
pub fn director<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    let p = rng.gen_range(-9..=9);
    let q = nonzero_digit(rng);
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn scator<R: Rng + ?Sized>(rng: &mut R) -> Scator<Rational> {
    Scator::new(scalar(rng), director(rng), director(rng))
}

/// A scator whose directors are also nonzero, so that every duality of it
/// has a nonzero scalar component.
pub fn generic_scator<R: Rng + ?Sized>(rng: &mut R) -> Scator<Rational> {
    Scator::new(scalar(rng), scalar(rng), scalar(rng))
}

pub fn scator3<R: Rng + ?Sized>(rng: &mut R) -> Scator3<Rational> {
    Scator3::new(scalar(rng), director(rng), director(rng), director(rng))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{Signed, Zero};
    use rand::SeedableRng;

    #[test]
    fn draws_stay_in_range() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for _ in 0..500 {
            let a = scator(&mut rng);
            assert!(!a.a0.is_zero());
            for c in a.components() {
                assert!(c.numer().abs() <= BigInt::from(9));
                assert!(c.abs() <= Rational::from_integer(9.into()));
            }
            assert!(generic_scator(&mut rng).components().iter().all(|c| !c.is_zero()));
        }
    }
}
