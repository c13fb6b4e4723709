use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{Rational, Subspace, Vector};

use super::LieAlgebra;

impl LieAlgebra {
    /// The subalgebra `s` in the coordinates of its RREF basis.
    pub fn subalgebra(&self, s: &Subspace, name: impl Into<String>) -> Result<LieAlgebra> {
        let d = s.dim();
        let basis: Vec<&[Rational]> = s.basis_vectors().collect();
        let mut constants = vec![Rational::zero(); d * d * d];
        for a in 0..d {
            let ada = self.ad(basis[a])?;
            for b in 0..d {
                let v = ada.mul_vec(basis[b]);
                let coords = s.coordinates(&v).ok_or(Error::NotClosed("a subalgebra"))?;
                for (k, c) in coords.into_iter().enumerate() {
                    constants[(a * d + b) * d + k] = c;
                }
            }
        }
        LieAlgebra::from_tensor(name, d, constants)
    }

    /// `g / ideal`, with basis the images of the standard basis vectors at the
    /// non-pivot columns of the ideal's RREF basis.
    pub fn quotient(&self, ideal: &Subspace, name: impl Into<String>) -> Result<LieAlgebra> {
        if !self.is_ideal(ideal) {
            return Err(Error::NotClosed("an ideal"));
        }
        let keep = ideal.coordinate_complement();
        let d = keep.len();
        let reduce = |v: Vector| -> Vector {
            let mut r = v;
            for (row, &p) in ideal.basis_vectors().zip(ideal.pivots()) {
                let c = r[p].clone();
                if c.is_zero() {
                    continue;
                }
                for (x, b) in r.iter_mut().zip(row) {
                    if !b.is_zero() {
                        *x -= &c * b;
                    }
                }
            }
            keep.iter().map(|&i| r[i].clone()).collect()
        };
        let mut constants = vec![Rational::zero(); d * d * d];
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate() {
                for (k, c) in reduce(self.basis_bracket(i, j)).into_iter().enumerate() {
                    constants[(a * d + b) * d + k] = c;
                }
            }
        }
        LieAlgebra::from_tensor(name, d, constants)
    }

    /// `self ⊕ other` with `self`'s basis first.
    pub fn direct_sum(&self, other: &LieAlgebra, name: impl Into<String>) -> LieAlgebra {
        let (p, q) = (self.dim(), other.dim());
        let n = p + q;
        let mut constants = vec![Rational::zero(); n * n * n];
        for i in 0..p {
            for j in 0..p {
                for k in 0..p {
                    constants[(i * n + j) * n + k] = self.structure_constant(i, j, k).clone();
                }
            }
        }
        for i in 0..q {
            for j in 0..q {
                for k in 0..q {
                    constants[((p + i) * n + p + j) * n + p + k] = other.structure_constant(i, j, k).clone();
                }
            }
        }
        LieAlgebra::from_tensor(name, n, constants).expect("positive dimension")
    }
}
