//! Leibniz-derivation algebras of finite-dimensional Lie algebras over ℚ.

pub mod catalog;
pub mod degeneration;
pub mod error;
pub mod leibniz;
pub mod liealg;
pub mod linalg;
pub mod nilpotency;

pub use error::{Error, Result};
pub use liealg::LieAlgebra;
