use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Rational, Subspace};

use super::LieAlgebra;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct StructuralPredicates {
    pub is_abelian: bool,
    pub is_nilpotent: bool,
    pub is_solvable: bool,
    pub is_perfect: bool,
    pub is_semisimple: bool,
    pub is_reductive: bool,
    pub is_centerless: bool,
}

impl StructuralPredicates {
    /// Names of the predicates that hold, in declaration order.
    pub fn tags(&self) -> Vec<&'static str> {
        [
            ("abelian", self.is_abelian),
            ("nilpotent", self.is_nilpotent),
            ("solvable", self.is_solvable),
            ("perfect", self.is_perfect),
            ("semisimple", self.is_semisimple),
            ("reductive", self.is_reductive),
            ("centerless", self.is_centerless),
        ]
        .into_iter()
        .filter_map(|(name, on)| on.then_some(name))
        .collect()
    }
}

impl LieAlgebra {
    /// `K[i][j] = tr(ad(e_i)·ad(e_j))`.
    pub fn killing_form(&self) -> Matrix {
        let n = self.dim();
        let mut k = Matrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let t = self.ad_basis(i).mul(self.ad_basis(j)).trace();
                k[(j, i)] = t.clone();
                k[(i, j)] = t;
            }
        }
        k
    }

    /// Solvable radical `{x : K(x, [g, g]) = 0}`, re-checked for solvability.
    pub fn radical(&self) -> Result<Subspace> {
        let n = self.dim();
        let killing = self.killing_form();
        let derived = self.subspace_bracket(&Subspace::full(n), &Subspace::full(n));
        let rows: Vec<Vec<Rational>> = derived.basis_vectors().map(|d| killing.mul_vec(d)).collect();
        let radical = if rows.is_empty() {
            Subspace::full(n)
        } else {
            Matrix::from_rows(rows).expect("equal rows").nullspace()
        };
        if !self.derived_series_of(&radical).reaches_zero() {
            return Err(Error::InternalInconsistency(
                "Killing-orthogonal of the derived algebra is not solvable".into(),
            ));
        }
        if !self.is_ideal(&radical) {
            return Err(Error::InternalInconsistency(
                "Killing-orthogonal of the derived algebra is not an ideal".into(),
            ));
        }
        Ok(radical)
    }

    pub fn structural_predicates(&self) -> Result<StructuralPredicates> {
        let n = self.dim();
        let g = Subspace::full(n);
        let derived = self.subspace_bracket(&g, &g);
        let center = self.center();
        let radical = self.radical()?;
        let semisimple = !self.killing_form().det()?.is_zero();
        Ok(StructuralPredicates {
            is_abelian: derived.is_zero(),
            is_nilpotent: self.nilpotency_class().is_some(),
            is_solvable: self.derived_series().reaches_zero(),
            is_perfect: derived == g,
            is_semisimple: semisimple,
            is_reductive: radical == center,
            is_centerless: center.is_zero(),
        })
    }
}
