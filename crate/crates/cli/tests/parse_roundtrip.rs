use proptest::prelude::*;
use scator::{DualityKind, Rational, Scator, Scator3};
use scator_cli::{parse, Expr, Literal};

fn number() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=12).prop_map(|(p, q)| scator::rational(p, q))
}

fn literal() -> impl Strategy<Value = Expr> {
    prop_oneof![
        (number(), number(), number()).prop_map(|(a, b, c)| Expr::Lit(Literal::Scator(Scator::new(a, b, c)))),
        (number(), number(), number(), number())
            .prop_map(|(a, b, c, d)| Expr::Lit(Literal::Scator3(Scator3::new(a, b, c, d)))),
    ]
}

fn expr() -> impl Strategy<Value = Expr> {
    literal().prop_recursive(4, 24, 2, |inner| {
        let b = |e: Expr| Box::new(e);
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(l, r)| Expr::product(l, r)),
            (inner.clone(), inner.clone()).prop_map(|(l, r)| Expr::sum(l, r)),
            inner.clone().prop_map(move |e| Expr::Conj(b(e))),
            (inner.clone(), prop::sample::select(DualityKind::PROPER.to_vec()))
                .prop_map(move |(e, k)| Expr::Dual(b(e), k)),
            inner.clone().prop_map(move |e| Expr::Inv(b(e))),
            inner.clone().prop_map(move |e| Expr::Norm2(b(e))),
            (inner.clone(), inner.clone()).prop_map(move |(l, r)| Expr::Dot(b(l), b(r))),
            (inner.clone(), inner.clone()).prop_map(move |(l, r)| Expr::Kappa(b(l), b(r))),
            inner.clone().prop_map(move |e| Expr::Classify(b(e))),
            (number(), inner).prop_map(move |(n, e)| Expr::Scale(n, b(e))),
        ]
    })
}

proptest! {
    #[test]
    fn print_then_parse_is_identity(e in expr()) {
        let printed = e.to_string();
        let reparsed = parse(&printed).map_err(|err| TestCaseError::fail(format!("{printed}: {err}")))?;
        prop_assert_eq!(reparsed, e);
    }

    #[test]
    fn parser_never_panics(s in "[-0-9a-z();,*+/. ]{0,40}") {
        let _ = parse(&s);
    }
}
