//! Exact matrix groups over cyclotomic fields.

mod action;
mod group;
pub mod io;
mod matrix;

pub use action::VectorAction;
pub use group::{closure, MatrixGroup};
pub use matrix::{dagger, kron, matmul, UnitaryMatrix};
