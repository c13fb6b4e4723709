//! Leibniz-derivations of order `k`: endomorphisms `P` with
//! `P[x_1, …, x_{k+1}] = Σ_j [x_1, …, P x_j, …, x_{k+1}]` for the right-nested
//! bracket.
//!
//! Endomorphisms are vectorized row-major: entry `(r, c)` sits at `r·n + c`.

mod checks;
mod membership;
mod solver;
mod star;

use serde_json::{json, Value};

use crate::liealg::LieAlgebra;
use crate::linalg::{format_rational, Matrix, Rational, Subspace};
use crate::Result;

pub use checks::{verify_bracket_closure, ChainReport, DecompositionReport, Inclusion, Summands};
pub use membership::{is_leibniz_automorphism, is_leibniz_derivation};
pub use solver::{LeibnizSolver, TupleCap, DEFAULT_TUPLE_CAP};
pub use star::StarSystem;

/// A subspace of `gl(g)` attached to an order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivationSpace {
    pub algebra: String,
    /// Dimension of the algebra; the space lives in `ℚ^(n·n)`.
    pub n: usize,
    pub order: usize,
    pub space: Subspace,
}

impl DerivationSpace {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn is_full(&self) -> bool {
        self.space.is_full()
    }

    pub fn basis_matrices(&self) -> Vec<Matrix> {
        self.space.basis_vectors().map(|v| devectorize(self.n, v)).collect()
    }

    pub fn contains(&self, p: &Matrix) -> bool {
        p.rows() == self.n && p.cols() == self.n && self.space.contains_vector(p.as_slice())
    }

    /// `{"algebra", "order", "dim", "basis"}` with row-major `"p/q"` rows.
    pub fn to_json(&self) -> Value {
        let basis: Vec<Vec<String>> =
            self.space.basis_vectors().map(|v| v.iter().map(format_rational).collect()).collect();
        json!({
            "algebra": self.algebra,
            "order": self.order,
            "dim": self.dim(),
            "basis": basis,
        })
    }
}

pub(crate) fn devectorize(n: usize, v: &[Rational]) -> Matrix {
    Matrix::from_row_major(n, n, v.to_vec()).expect("vector of length n·n")
}

/// `LDer_k(g)` under the default tuple cap.
pub fn leibniz_derivation_space(g: &LieAlgebra, k: usize) -> Result<DerivationSpace> {
    LeibnizSolver::new(g).lder(k)
}

/// `Inn(g)`, the span of `ad(e_i)`.
pub fn inner_derivations(g: &LieAlgebra) -> Subspace {
    let n = g.dim();
    let rows: Vec<&[Rational]> = (0..n).map(|i| g.ad_basis(i).as_slice()).collect();
    Subspace::span(n * n, &rows)
}

/// The order-`k` (∗_{m,k}) solution space under the default tuple cap.
pub fn star_identity_space(g: &LieAlgebra, m: &Rational, k: usize) -> Result<StarSystem> {
    LeibnizSolver::new(g).star_identity_space(m, k)
}
