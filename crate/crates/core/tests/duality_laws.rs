mod common;

use common::*;
use num_traits::Zero;
use proptest::prelude::*;
use scator::duality::homomorphism_counterexample;
use scator::{dual, dual_mv, embed, project, translator_table, Causality, DualityKind, MultiVec4, Tolerance};

proptest! {
    #[test]
    fn dualities_are_idempotent(a in generic_scator()) {
        for k in DualityKind::ALL {
            prop_assert_eq!(dual(&dual(&a, k).unwrap(), k).unwrap(), a.clone());
        }
    }

    #[test]
    fn dual_agrees_with_algebra(a in scator()) {
        for k in DualityKind::ALL {
            prop_assert_eq!(dual(&a, k).unwrap(), project(&dual_mv(&embed(&a).unwrap(), k)));
        }
    }

    #[test]
    fn ordinary_dual_commutes_with_conjugation(a in scator()) {
        let k = DualityKind::Ordinary;
        prop_assert_eq!(dual(&a, k).unwrap().conjugate(), dual(&a.conjugate(), k).unwrap());
    }

    #[test]
    fn internal_external_anticommute_with_conjugation(a in scator()) {
        for k in [DualityKind::Internal, DualityKind::External] {
            let sum = dual(&a, k).unwrap().conjugate() + dual(&a.conjugate(), k).unwrap();
            prop_assert!(sum.is_zero());
        }
    }

    #[test]
    fn ordinary_dual_is_an_isometry(a in generic_scator()) {
        let d = dual(&a, DualityKind::Ordinary).unwrap();
        prop_assert_eq!(d.modulus_squared().unwrap(), a.modulus_squared().unwrap());
        prop_assert_eq!(d.classify(), a.classify());
    }

    #[test]
    fn internal_external_swap_causality(a in generic_scator()) {
        for k in [DualityKind::Internal, DualityKind::External] {
            let d = dual(&a, k).unwrap();
            prop_assert_eq!(d.modulus_squared().unwrap(), -a.modulus_squared().unwrap());
            prop_assert_eq!(d.classify(), a.classify().swapped());
        }
    }

    #[test]
    fn product_laws_hold(a in generic_scator(), b in generic_scator()) {
        let ab = a.product(&b).unwrap();
        prop_assume!(!ab.a0.is_zero() && !ab.a1.is_zero() && !ab.a2.is_zero());
        let report = translator_table(&a, &b, &Tolerance::default()).unwrap();
        prop_assert_eq!(report.checks.len(), 15);
        let failures: Vec<_> = report.failures().map(|c| c.name.clone()).collect();
        prop_assert!(failures.is_empty(), "{:?}", failures);
    }

    #[test]
    fn duality_commutes_with_inversion(a in generic_scator()) {
        prop_assume!(a.classify() != Causality::LightLike);
        for k in DualityKind::ALL {
            let lhs = dual(&a.inverse().unwrap(), k).unwrap();
            let rhs = dual(&a, k).unwrap().inverse().unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn dual_quotients(a in generic_scator()) {
        prop_assume!(a.classify() != Causality::LightLike);
        let finv = embed(&a.inverse().unwrap()).unwrap();
        let fa = embed(&a).unwrap();
        prop_assert_eq!(dual_mv(&fa, DualityKind::Internal).mv_product(&finv), MultiVec4::i1());
        prop_assert_eq!(dual_mv(&fa, DualityKind::External).mv_product(&finv), MultiVec4::i2());
        prop_assert_eq!(dual_mv(&fa, DualityKind::Ordinary).mv_product(&finv), MultiVec4::i12());
    }

    #[test]
    fn ordinary_dual_is_the_defect_direction(c in generic_scator()) {
        let d = dual(&c, DualityKind::Ordinary).unwrap();
        prop_assert_eq!(&d, &scator::Scator::new(&c.a1 * &c.a2 / &c.a0, c.a2.clone(), c.a1.clone()));
        prop_assert!(!d.a0.is_zero());
    }
}

#[test]
fn dualities_are_not_homomorphisms() {
    for k in DualityKind::PROPER {
        let (a, b) = homomorphism_counterexample(k).unwrap();
        let lhs = dual(&a.product(&b).unwrap(), k).unwrap();
        let rhs = dual(&a, k).unwrap().product(&dual(&b, k).unwrap()).unwrap();
        assert_ne!(lhs, rhs, "{k}: {a} {b}");
    }
}

#[test]
fn float_translator_within_tolerance() {
    let a = scator::Scator::<f64>::new(1.7, -0.3, 2.2);
    let b = scator::Scator::<f64>::new(-0.9, 0.45, 1.1);
    let report = translator_table(&a, &b, &Tolerance::default()).unwrap();
    for c in &report.checks {
        assert!(
            c.holds,
            "{}: {} vs {} ({:e})",
            c.name,
            c.lhs,
            c.rhs,
            c.max_relative_error()
        );
    }
}
