//! Causal-region sampler: classifies every point of a square grid in the
//! `(a1, a2)` plane at a fixed scalar component and writes it as CSV.

use std::io::Write;

use num_traits::Zero;
use scator::{Causality, Number, Rational, Scator};

use crate::eval::{format_number, Backend};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridSpec {
    pub a0: Rational,
    pub min: Rational,
    pub max: Rational,
    pub step: Rational,
}

#[derive(Debug, thiserror::Error)]
pub enum GridError {
    #[error("usage: {0}")]
    Usage(&'static str),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Row {
    pub a1: Rational,
    pub a2: Rational,
    pub class: Causality,
    pub norm2: f64,
}

pub const HEADER: [&str; 4] = ["a1", "a2", "class", "norm2"];

impl GridSpec {
    pub fn validate(&self) -> Result<(), GridError> {
        if self.step <= Rational::zero() {
            return Err(GridError::Usage("--step must be positive"));
        }
        if self.a0.is_zero() {
            return Err(GridError::Usage("--a0 must be nonzero"));
        }
        if self.min > self.max {
            return Err(GridError::Usage("--min must not exceed --max"));
        }
        Ok(())
    }

    /// Axis values `min, min + step, ...` up to and including `max`. Empty
    /// when `min == max`.
    pub fn axis(&self) -> Vec<Rational> {
        if self.min >= self.max {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut x = self.min.clone();
        while x <= self.max {
            out.push(x.clone());
            x += &self.step;
        }
        out
    }
}

fn classify_point<N: Number>(a0: &Rational, a1: &Rational, a2: &Rational) -> (Causality, f64) {
    let s = Scator::new(N::from_rational(a0), N::from_rational(a1), N::from_rational(a2));
    let norm2 = s.modulus_squared().expect("a0 is nonzero").to_f64();
    (s.classify(), norm2)
}

/// All grid rows in `a1`-major ascending order.
pub fn rows(spec: &GridSpec, backend: Backend) -> Result<Vec<Row>, GridError> {
    spec.validate()?;
    let axis = spec.axis();
    let mut out = Vec::with_capacity(axis.len() * axis.len());
    for a1 in &axis {
        for a2 in &axis {
            let (class, norm2) = match backend {
                Backend::Exact => classify_point::<Rational>(&spec.a0, a1, a2),
                Backend::Float => classify_point::<f64>(&spec.a0, a1, a2),
            };
            out.push(Row {
                a1: a1.clone(),
                a2: a2.clone(),
                class,
                norm2,
            });
        }
    }
    Ok(out)
}

/// Writes the CSV (`,` separator, LF line endings, header
/// `a1,a2,class,norm2`) and returns the number of data rows.
pub fn sample_regions<W: Write>(spec: &GridSpec, backend: Backend, out: W) -> Result<usize, GridError> {
    let rows = rows(spec, backend)?;
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out);
    w.write_record(HEADER)?;
    for r in &rows {
        let class = r.class.code().to_string();
        w.write_record([
            format_number(&Number::to_f64(&r.a1)),
            format_number(&Number::to_f64(&r.a2)),
            class,
            format_number(&r.norm2),
        ])?;
    }
    w.flush()?;
    Ok(rows.len())
}
