//! Exact arithmetic in cyclotomic fields.

mod cyclotomic;
mod parse;
mod rational;

pub use cyclotomic::{arith, ArithOp, Cyclotomic};
pub(crate) use cyclotomic::{lcm, Dense};
pub use parse::parse_cyclotomic;
pub use rational::Rational;
