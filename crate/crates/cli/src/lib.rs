//! Command-line surface for the scator algebra: an expression evaluator, a
//! seeded identity runner and a causal-region sampler.

pub mod eval;
pub mod expr;
pub mod grid;
pub mod parse;
pub mod verify;

pub use eval::{eval_in, eval_to_string, Backend, EvalError, Value};
pub use expr::{Expr, Literal};
pub use grid::{sample_regions, GridError, GridSpec};
pub use parse::{parse, parse_number, ParseError};
pub use verify::{run_identity_suite, Module, Record, Summary};
