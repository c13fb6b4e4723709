//! Exact dense linear algebra over ℚ.

mod echelon;
mod eigen;
mod matrix;
mod poly;
mod rational;
mod subspace;

pub(crate) use echelon::Echelon;
pub use eigen::generalized_eigenspaces;
pub use matrix::Matrix;
pub use poly::{rational_roots, RationalRoots, UniPoly};
pub use rational::{
    format_rational, is_zero_vector, parse_rational, rat, ratio, unit_vector, zero_vector, Rational, Vector,
};
pub use subspace::{subspace_algebra, Subspace, SubspaceOp, SubspaceOutcome};
