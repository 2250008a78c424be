mod common;

use common::*;
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use scator::{delta_defect, Causality, Number, Rational, Scator};

/// Product from the factorised embedding,
/// `a0 b0 (1 + x1 y1 + (x1 + y1) i1)(1 + x2 y2 + (x2 + y2) i2)`.
fn factorised_product(a: &Scator, b: &Scator) -> Scator {
    let (x1, x2) = (&a.a1 / &a.a0, &a.a2 / &a.a0);
    let (y1, y2) = (&b.a1 / &b.a0, &b.a2 / &b.a0);
    let k = &a.a0 * &b.a0;
    let p1 = q(1, 1) + &x1 * &y1;
    let p2 = q(1, 1) + &x2 * &y2;
    Scator::new(&k * &p1 * &p2, &k * (x1 + y1) * &p2, &k * &p1 * (x2 + y2))
}

proptest! {
    #[test]
    fn product_matches_factorised_oracle(a in scator(), b in scator()) {
        prop_assert_eq!(a.product(&b).unwrap(), factorised_product(&a, &b));
    }

    #[test]
    fn commutative(a in scator(), b in scator()) {
        prop_assert_eq!(a.product(&b).unwrap(), b.product(&a).unwrap());
    }

    #[test]
    fn associative_away_from_zero_divisors(a in scator(), b in scator(), c in scator()) {
        let ab = a.product(&b).unwrap();
        let bc = b.product(&c).unwrap();
        prop_assume!(!ab.a0.is_zero() && !bc.a0.is_zero());
        prop_assert_eq!(ab.product(&c).unwrap(), a.product(&bc).unwrap());
    }

    #[test]
    fn conjugation_is_a_homomorphism(a in scator(), b in scator()) {
        let lhs = a.product(&b).unwrap().conjugate();
        let rhs = a.conjugate().product(&b.conjugate()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn polarization_combination_is_real(a in scator(), b in scator()) {
        let sum = a.conjugate().product(&b).unwrap() + a.product(&b.conjugate()).unwrap();
        let expected = q(2, 1)
            * (&a.a0 * &b.a0 - &a.a1 * &b.a1 - &a.a2 * &b.a2
                + &a.a1 * &a.a2 * &b.a1 * &b.a2 / (&a.a0 * &b.a0));
        prop_assert_eq!(sum, Scator::scalar(expected));
    }

    #[test]
    fn defect_closed_form_matches_direct(a in scator(), b in scator(), c in scator()) {
        prop_assume!(!(&a.a0 + &b.a0).is_zero());
        let direct = (&a + &b).product(&c).unwrap() - a.product(&c).unwrap() - b.product(&c).unwrap();
        prop_assert_eq!(delta_defect(&a, &b, &c).unwrap(), direct);
    }

    #[test]
    fn modulus_is_scalar_part_of_self_conjugate_product(a in scator()) {
        let p = a.product(&a.conjugate()).unwrap();
        prop_assert!(p.a1.is_zero() && p.a2.is_zero());
        prop_assert_eq!(a.modulus_squared().unwrap(), p.a0);
    }

    #[test]
    fn classification_sign_law(a in scator()) {
        let m = a.modulus_squared().unwrap();
        let expected = if m.is_positive() {
            Causality::TimeLike
        } else if m.is_negative() {
            Causality::SpaceLike
        } else {
            Causality::LightLike
        };
        prop_assert_eq!(a.classify(), expected);
    }

    #[test]
    fn inverse_inverts(a in scator()) {
        prop_assume!(a.classify() != Causality::LightLike);
        prop_assert_eq!(a.product(&a.inverse().unwrap()).unwrap(), Scator::one());
    }

    #[test]
    fn float_backend_tracks_exact(a in scator(), b in scator()) {
        let exact = a.product(&b).unwrap().to_f64();
        let float = a.to_f64().product(&b.to_f64()).unwrap();
        prop_assert!(float.approx_eq(&exact, 1e-9), "{float} vs {exact}");
    }
}

#[test]
fn wings_have_positive_modulus() {
    for (a1, a2) in [(2, 3), (-5, 2), (-2, -2), (7, -4)] {
        let a: Scator<Rational> = Scator::from_ints(1, a1, a2);
        assert_eq!(a.classify(), Causality::TimeLike);
        assert!(a.modulus_squared().unwrap().is_positive());
    }
    let f = Scator::<f64>::new(0.5, 0.75, -3.0);
    assert_eq!(f.classify(), Causality::TimeLike);
    assert!(Number::to_f64(&f.modulus_squared().unwrap()) > 0.0);
}
