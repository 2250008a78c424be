//! Expression tree for `scator eval`.

use std::fmt;

use scator::{DualityKind, Rational, Scator, Scator3};

/// A scator literal, `(a0; a1, a2)` or `(a0; a1, a2, a3)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Literal {
    Scator(Scator<Rational>),
    Scator3(Scator3<Rational>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Lit(Literal),
    Mul(Box<Expr>, Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Conj(Box<Expr>),
    Dual(Box<Expr>, DualityKind),
    Inv(Box<Expr>),
    Norm2(Box<Expr>),
    Dot(Box<Expr>, Box<Expr>),
    Kappa(Box<Expr>, Box<Expr>),
    Classify(Box<Expr>),
    Scale(Rational, Box<Expr>),
}

impl Expr {
    pub fn lit(a0: Rational, a1: Rational, a2: Rational) -> Self {
        Expr::Lit(Literal::Scator(Scator::new(a0, a1, a2)))
    }

    pub fn lit_ints(a0: i64, a1: i64, a2: i64) -> Self {
        Expr::Lit(Literal::Scator(Scator::from_ints(a0, a1, a2)))
    }

    pub fn product(l: Expr, r: Expr) -> Self {
        Expr::Mul(Box::new(l), Box::new(r))
    }

    pub fn sum(l: Expr, r: Expr) -> Self {
        Expr::Add(Box::new(l), Box::new(r))
    }
}

/// Function name used for a duality in expressions.
pub fn duality_function(kind: DualityKind) -> &'static str {
    match kind {
        DualityKind::Ordinary => "dual",
        DualityKind::Internal => "idual",
        DualityKind::External => "edual",
        DualityKind::Identity => "",
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Literal::Scator(s) => write!(f, "{s}"),
            Literal::Scator3(s) => write!(f, "{s}"),
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Lit(l) => write!(f, "{l}"),
            Expr::Mul(l, r) => {
                let lp = matches!(**l, Expr::Add(..));
                let rp = matches!(**r, Expr::Add(..) | Expr::Mul(..));
                write_operand(f, l, lp)?;
                f.write_str(" * ")?;
                write_operand(f, r, rp)
            }
            Expr::Add(l, r) => {
                write_operand(f, l, false)?;
                f.write_str(" + ")?;
                write_operand(f, r, matches!(**r, Expr::Add(..)))
            }
            Expr::Conj(e) => write!(f, "conj({e})"),
            // δ_1 has no spelling of its own; it prints as its argument.
            Expr::Dual(e, DualityKind::Identity) => write!(f, "{e}"),
            Expr::Dual(e, kind) => write!(f, "{}({e})", duality_function(*kind)),
            Expr::Inv(e) => write!(f, "inv({e})"),
            Expr::Norm2(e) => write!(f, "norm2({e})"),
            Expr::Dot(a, b) => write!(f, "dot({a}, {b})"),
            Expr::Kappa(a, b) => write!(f, "kappa({a}, {b})"),
            Expr::Classify(e) => write!(f, "classify({e})"),
            Expr::Scale(n, e) => write!(f, "scale({n}, {e})"),
        }
    }
}

fn write_operand(f: &mut fmt::Formatter<'_>, e: &Expr, parens: bool) -> fmt::Result {
    if parens {
        write!(f, "({e})")
    } else {
        write!(f, "{e}")
    }
}
