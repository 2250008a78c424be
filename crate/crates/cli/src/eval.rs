//! Evaluation of parsed expressions on either number backend.

use std::fmt;

use scator::{dot, dual, kappa, Causality, DualityKind, Number, Rational, Scator, Scator3, ScatorError};

use crate::expr::{Expr, Literal};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Backend {
    #[default]
    Exact,
    Float,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Value<N = Rational> {
    Scator(Scator<N>),
    Scator3(Scator3<N>),
    Number(N),
    Causality(Causality),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EvalErrorKind {
    Scator(ScatorError),
    Type(&'static str),
}

/// Failure at a particular subexpression, printed in source syntax.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvalError {
    pub subexpr: String,
    pub kind: EvalErrorKind,
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            EvalErrorKind::Scator(e) => write!(f, "in `{}`: {e}", self.subexpr),
            EvalErrorKind::Type(msg) => write!(f, "in `{}`: {msg}", self.subexpr),
        }
    }
}

impl std::error::Error for EvalError {}

/// Writes a number with `-0` shown as `0`.
pub fn format_number<N: Number>(x: &N) -> String {
    if x.is_zero() {
        "0".to_string()
    } else {
        x.to_string()
    }
}

impl<N: Number> fmt::Display for Value<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Scator(s) => write!(f, "{}", s.map(|x| Tidy(format_number(x)))),
            Value::Scator3(s) => write!(f, "{}", s.map(|x| Tidy(format_number(x)))),
            Value::Number(x) => f.write_str(&format_number(x)),
            Value::Causality(c) => write!(f, "{c}"),
        }
    }
}

struct Tidy(String);

impl fmt::Display for Tidy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

fn fail<T>(e: &Expr, kind: EvalErrorKind) -> Result<T, EvalError> {
    Err(EvalError {
        subexpr: e.to_string(),
        kind,
    })
}

fn lift<T>(e: &Expr, r: scator::Result<T>) -> Result<T, EvalError> {
    r.or_else(|err| fail(e, EvalErrorKind::Scator(err)))
}

fn scator_arg<N: Number>(e: &Expr) -> Result<Scator<N>, EvalError> {
    match eval_in(e)? {
        Value::Scator(s) => Ok(s),
        _ => fail(e, EvalErrorKind::Type("expected a 1+2 scator")),
    }
}

/// Evaluates on backend `N`.
pub fn eval_in<N: Number>(e: &Expr) -> Result<Value<N>, EvalError> {
    use Value as V;
    let conv = |r: &Rational| N::from_rational(r);
    Ok(match e {
        Expr::Lit(Literal::Scator(s)) => V::Scator(s.map(conv)),
        Expr::Lit(Literal::Scator3(s)) => V::Scator3(s.map(conv)),
        Expr::Mul(l, r) | Expr::Add(l, r) => {
            let add = matches!(e, Expr::Add(..));
            match (eval_in::<N>(l)?, eval_in::<N>(r)?) {
                (V::Scator(a), V::Scator(b)) if add => V::Scator(a + b),
                (V::Scator(a), V::Scator(b)) => V::Scator(lift(e, a.product(&b))?),
                (V::Scator3(a), V::Scator3(b)) if add => V::Scator3(a + b),
                (V::Scator3(a), V::Scator3(b)) => V::Scator3(lift(e, a.product(&b))?),
                _ => return fail(e, EvalErrorKind::Type("operands must be scators of the same dimension")),
            }
        }
        Expr::Conj(x) => match eval_in::<N>(x)? {
            V::Scator(a) => V::Scator(a.conjugate()),
            V::Scator3(a) => V::Scator3(a.conjugate()),
            _ => return fail(e, EvalErrorKind::Type("expected a scator")),
        },
        Expr::Inv(x) => match eval_in::<N>(x)? {
            V::Scator(a) => V::Scator(lift(e, a.inverse())?),
            V::Scator3(a) => V::Scator3(lift(e, a.inverse())?),
            _ => return fail(e, EvalErrorKind::Type("expected a scator")),
        },
        Expr::Norm2(x) => match eval_in::<N>(x)? {
            V::Scator(a) => V::Number(lift(e, a.modulus_squared())?),
            V::Scator3(a) => V::Number(lift(e, a.modulus_squared())?),
            _ => return fail(e, EvalErrorKind::Type("expected a scator")),
        },
        Expr::Scale(lambda, x) => {
            let lambda = conv(lambda);
            match eval_in::<N>(x)? {
                V::Scator(a) => V::Scator(a.scale(&lambda)),
                V::Scator3(a) => V::Scator3(a.scale(&lambda)),
                _ => return fail(e, EvalErrorKind::Type("expected a scator")),
            }
        }
        Expr::Dual(x, DualityKind::Identity) => eval_in(x)?,
        Expr::Dual(x, kind) => V::Scator(lift(e, dual(&scator_arg::<N>(x)?, *kind))?),
        Expr::Dot(a, b) => V::Number(lift(e, dot(&scator_arg::<N>(a)?, &scator_arg::<N>(b)?))?),
        Expr::Kappa(a, b) => V::Number(lift(e, kappa(&scator_arg::<N>(a)?, &scator_arg::<N>(b)?))?),
        Expr::Classify(x) => V::Causality(scator_arg::<N>(x)?.classify()),
    })
}

/// Evaluates and prints canonically: rationals on the exact backend,
/// shortest round-trip decimals on the floating one.
pub fn eval_to_string(e: &Expr, backend: Backend) -> Result<String, EvalError> {
    Ok(match backend {
        Backend::Exact => eval_in::<Rational>(e)?.to_string(),
        Backend::Float => eval_in::<f64>(e)?.to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse;

    fn run(text: &str, backend: Backend) -> Result<String, EvalError> {
        eval_to_string(&parse(text).unwrap(), backend)
    }

    #[test]
    fn examples() {
        assert_eq!(run("norm2((2;1,1))", Backend::Exact).unwrap(), "9/4");
        assert_eq!(run("norm2((2;1,1))", Backend::Float).unwrap(), "2.25");
        assert_eq!(
            run("dual((2;1,1)) * inv((2;1,1))", Backend::Exact).unwrap(),
            "(0; 0, 0)"
        );
        assert_eq!(
            run("dual((2;1,1)) * inv((2;1,1))", Backend::Float).unwrap(),
            "(0; 0, 0)"
        );
        assert_eq!(run("classify((1;2,3))", Backend::Exact).unwrap(), "TimeLike");
        assert_eq!(run("inv((2;1,1))", Backend::Exact).unwrap(), "(8/9; -4/9, -4/9)");
        assert_eq!(
            run("(2;1,1,1)*(2;1,1,1)", Backend::Exact).unwrap(),
            "(125/16; 25/4, 25/4, 25/4)"
        );
        assert_eq!(run("dot((1;1,0), (1;0,1))", Backend::Exact).unwrap(), "9/8");
        assert_eq!(run("kappa((1;1,0), (1;0,1))", Backend::Exact).unwrap(), "1/2");
        assert_eq!(
            run("scale(1/2, (2;1,1)) + conj((1;1,1))", Backend::Exact).unwrap(),
            "(2; -1/2, -1/2)"
        );
    }

    #[test]
    fn errors_name_the_subexpression() {
        let err = run("norm2(inv((1;1,0)))", Backend::Exact).unwrap_err();
        assert_eq!(err.subexpr, "inv((1; 1, 0))");
        assert_eq!(err.kind, EvalErrorKind::Scator(ScatorError::NotInvertible));

        let err = run("(1;0,0) * norm2((1;0,0))", Backend::Exact).unwrap_err();
        assert!(matches!(err.kind, EvalErrorKind::Type(_)));

        let err = run("dual((1;0,0,0))", Backend::Exact).unwrap_err();
        assert_eq!(err.subexpr, "(1; 0, 0, 0)");

        let err = run("(1;1,0) + (1;0,0,0)", Backend::Exact).unwrap_err();
        assert!(matches!(err.kind, EvalErrorKind::Type(_)));
    }
}
