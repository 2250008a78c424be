//! Scalar product of scators and norm multiplicativity.
//!
//! The modulus squared is not a quadratic form, so the scalar product
//! `a·b = (‖a+b‖² - ‖a‖² - ‖b‖²)/2` obtained by polarization is symmetric and
//! quadratically homogeneous but neither additive nor linear in each slot.

use crate::error::Result;
use crate::number::{relative_error, Number, Rational, Tolerance};
use crate::scator::{require_nonzero, Scator};

/// Scalar product in closed form:
///
/// `a0 b0 - a1 b1 - a2 b2 + (a1+b1)²(a2+b2)²/(2(a0+b0)²)
///  - a1² a2²/(2 a0²) - b1² b2²/(2 b0²)`.
///
/// Ill-defined, and rejected, when `a0`, `b0` or `a0 + b0` is zero.
pub fn dot<N: Number>(a: &Scator<N>, b: &Scator<N>) -> Result<N> {
    const OP: &str = "dot";
    require_nonzero(&a.a0, 0.0, OP, "a0")?;
    require_nonzero(&b.a0, 0.0, OP, "b0")?;
    let s0 = a.a0.clone() + b.a0.clone();
    require_nonzero(&s0, 0.0, OP, "a0 + b0")?;

    let two = N::one() + N::one();
    let sq = |x: N| x.clone() * x;
    let s12 = sq((a.a1.clone() + b.a1.clone()) * (a.a2.clone() + b.a2.clone()));
    let a12 = sq(a.a1.clone() * a.a2.clone());
    let b12 = sq(b.a1.clone() * b.a2.clone());

    Ok(
        a.a0.clone() * b.a0.clone() - a.a1.clone() * b.a1.clone() - a.a2.clone() * b.a2.clone()
            + s12 / (two.clone() * sq(s0))
            - a12 / (two.clone() * sq(a.a0.clone()))
            - b12 / (two * sq(b.a0.clone())),
    )
}

/// Residuals of `‖ab‖² = ‖a‖²‖b‖²` and `‖λa‖² = λ²‖a‖²`.
#[derive(Debug, Clone, PartialEq)]
pub struct NormProductReport<N = Rational> {
    pub product_norm: N,
    pub norm_product: N,
    pub scaled_norm: N,
    pub scaled_expected: N,
    pub holds: bool,
}

impl<N: Number> NormProductReport<N> {
    pub fn product_residual(&self) -> N {
        self.product_norm.clone() - self.norm_product.clone()
    }

    pub fn scaling_residual(&self) -> N {
        self.scaled_norm.clone() - self.scaled_expected.clone()
    }

    pub fn max_relative_error(&self) -> f64 {
        relative_error(&self.product_norm, &self.norm_product)
            .max(relative_error(&self.scaled_norm, &self.scaled_expected))
    }
}

pub fn norm_product_check<N: Number>(
    a: &Scator<N>,
    b: &Scator<N>,
    lambda: &N,
    tol: &Tolerance,
) -> Result<NormProductReport<N>> {
    let product_norm = a.product_guarded(b, tol.guard)?.modulus_squared()?;
    let na = a.modulus_squared()?;
    let norm_product = na.clone() * b.modulus_squared()?;
    let scaled_norm = a.scale(lambda).modulus_squared()?;
    let scaled_expected = lambda.clone() * lambda.clone() * na;
    let holds = product_norm.approx_eq(&norm_product, tol.eps) && scaled_norm.approx_eq(&scaled_expected, tol.eps);
    Ok(NormProductReport {
        product_norm,
        norm_product,
        scaled_norm,
        scaled_expected,
        holds,
    })
}

/// Exact counterexamples to bilinearity of [`dot`].
#[derive(Debug, Clone, PartialEq)]
pub struct NonBilinearityWitness {
    /// `(a + b)·c != a·c + b·c`
    pub a: Scator<Rational>,
    pub b: Scator<Rational>,
    pub c: Scator<Rational>,
    pub sum_then_dot: Rational,
    pub dot_then_sum: Rational,
    /// `(λx)·y != λ(x·y)`
    pub lambda: Rational,
    pub x: Scator<Rational>,
    pub y: Scator<Rational>,
    pub scale_then_dot: Rational,
    pub dot_then_scale: Rational,
}

impl NonBilinearityWitness {
    /// Re-evaluates both inequalities from the stored inputs.
    pub fn verify(&self) -> Result<bool> {
        let additive = dot(&(&self.a + &self.b), &self.c)? != dot(&self.a, &self.c)? + dot(&self.b, &self.c)?;
        let homogeneous = dot(&self.x.scale(&self.lambda), &self.y)? != self.lambda.clone() * dot(&self.x, &self.y)?;
        Ok(additive && homogeneous)
    }
}

fn proportional(a: &Scator<Rational>, b: &Scator<Rational>) -> bool {
    let (u, v) = (a.components(), b.components());
    (0..3).all(|i| (0..3).all(|j| u[i] * v[j] == u[j] * v[i]))
}

/// Deterministic search over small integer scators (positive scalar
/// components, directors in `-1..=1`) for the first non-proportional triple
/// violating additivity and the first pair violating homogeneity in the
/// left slot for `λ ∈ {2, 3, -1}`.
pub fn nonbilinearity_witness() -> NonBilinearityWitness {
    let grid: Vec<Scator<Rational>> = (1..=2)
        .flat_map(|a0| (-1..=1).flat_map(move |a1| (-1..=1).map(move |a2| Scator::from_ints(a0, a1, a2))))
        .collect();
    let grid = &grid;

    let (a, b, c, sum_then_dot, dot_then_sum) = grid
        .iter()
        .flat_map(|a| grid.iter().map(move |b| (a, b)))
        .filter(|(a, b)| !proportional(a, b))
        .flat_map(|(a, b)| grid.iter().map(move |c| (a, b, c)))
        .find_map(|(a, b, c)| {
            let lhs = dot(&(a + b), c).ok()?;
            let rhs = dot(a, c).ok()? + dot(b, c).ok()?;
            (lhs != rhs).then(|| (a.clone(), b.clone(), c.clone(), lhs, rhs))
        })
        .expect("grid contains an additivity counterexample");

    let lambdas = [2i64, 3, -1].map(|l| Rational::from_integer(l.into()));
    let (lambda, x, y, scale_then_dot, dot_then_scale) = lambdas
        .iter()
        .flat_map(|l| grid.iter().flat_map(move |x| grid.iter().map(move |y| (l, x, y))))
        .find_map(|(l, x, y)| {
            let lhs = dot(&x.scale(l), y).ok()?;
            let rhs = l * dot(x, y).ok()?;
            (lhs != rhs).then(|| (l.clone(), x.clone(), y.clone(), lhs, rhs))
        })
        .expect("grid contains a homogeneity counterexample");

    NonBilinearityWitness {
        a,
        b,
        c,
        sum_then_dot,
        dot_then_sum,
        lambda,
        x,
        y,
        scale_then_dot,
        dot_then_scale,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::number::rational as q;
    use crate::ScatorError;

    type S = Scator<Rational>;

    fn polarization(a: &S, b: &S) -> Rational {
        let n = |x: &S| x.modulus_squared().unwrap();
        (n(&(a + b)) - n(a) - n(b)) / q(2, 1)
    }

    #[test]
    fn dot_examples() {
        let a = S::from_ints(1, 1, 0);
        let b = S::from_ints(1, 0, 1);
        assert_eq!(dot(&a, &b).unwrap(), q(9, 8));
        assert_eq!(polarization(&a, &b), q(9, 8));
        let three = q(3, 1);
        assert_eq!(dot(&a.scale(&three), &b.scale(&three)).unwrap(), q(81, 8));

        let c = S::new(q(7, 3), q(-2, 5), q(4, 1));
        assert_eq!(dot(&c, &c).unwrap(), c.modulus_squared().unwrap());
    }

    #[test]
    fn dot_rejects_vanishing_denominators() {
        let err = dot(&S::from_ints(1, 1, 0), &S::from_ints(-1, 0, 1)).unwrap_err();
        assert_eq!(
            err,
            ScatorError::Domain {
                op: "dot",
                what: "a0 + b0"
            }
        );
        assert!(dot(&S::from_ints(0, 1, 0), &S::from_ints(1, 0, 1)).is_err());
    }

    #[test]
    fn norm_product_examples() {
        let a = S::from_ints(2, 1, 1);
        let r = norm_product_check(&a, &a, &q(-2, 1), &Tolerance::default()).unwrap();
        assert_eq!(r.product_norm, q(81, 16));
        assert_eq!(r.scaled_norm, q(9, 1));
        assert!(r.holds);

        let light = S::from_ints(3, 3, 1);
        let r = norm_product_check(&a, &light, &q(1, 1), &Tolerance::default()).unwrap();
        assert_eq!(r.product_norm, q(0, 1));
        assert!(r.holds);
    }

    #[test]
    fn witness_is_strict_and_deterministic() {
        let w = nonbilinearity_witness();
        assert_ne!(w.sum_then_dot, w.dot_then_sum);
        assert_ne!(w.scale_then_dot, w.dot_then_scale);
        assert!(!proportional(&w.a, &w.b));
        assert!(w.verify().unwrap());
        assert_eq!(w, nonbilinearity_witness());
    }
}
