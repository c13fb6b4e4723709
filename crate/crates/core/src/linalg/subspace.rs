use num_traits::Zero;

use super::echelon::Echelon;
use super::matrix::Matrix;
use super::rational::{Rational, Vector};
use crate::error::{Error, Result};

/// A subspace of `ℚ^n`, stored by its reduced row echelon basis.
///
/// The RREF basis is canonical, so two subspaces are equal exactly when their
/// representations are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

/// Binary operations accepted by [`subspace_algebra`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SubspaceOp {
    Sum,
    Intersect,
    Contains,
    Equals,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SubspaceOutcome {
    Space(Subspace),
    Bool(bool),
}

pub fn subspace_algebra(a: &Subspace, b: &Subspace, op: SubspaceOp) -> Result<SubspaceOutcome> {
    Ok(match op {
        SubspaceOp::Sum => SubspaceOutcome::Space(a.sum(b)?),
        SubspaceOp::Intersect => SubspaceOutcome::Space(a.intersect(b)?),
        SubspaceOp::Contains => SubspaceOutcome::Bool(a.contains(b)?),
        SubspaceOp::Equals => SubspaceOutcome::Bool(a.equals(b)?),
    })
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Self { ambient, basis: Matrix::zeros(0, ambient), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Self { ambient, basis: Matrix::identity(ambient), pivots: (0..ambient).collect() }
    }

    /// Span of the given vectors. Panics if a vector has the wrong length.
    pub fn span<V: AsRef<[Rational]>>(ambient: usize, vectors: &[V]) -> Self {
        let mut e = Echelon::new(ambient);
        for v in vectors {
            e.insert(v.as_ref());
        }
        Self::from_echelon(e)
    }

    pub(crate) fn from_echelon(e: Echelon) -> Self {
        let ambient = e.cols();
        let (basis, pivots) = e.into_rref();
        debug_assert_eq!(basis.cols(), ambient);
        Self { ambient, basis, pivots }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// RREF basis; rows are the basis vectors.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_vectors(&self) -> impl Iterator<Item = &[Rational]> + '_ {
        self.basis.row_vectors()
    }

    /// Coordinates of `v` in the RREF basis, or `None` when `v` is outside.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vector> {
        assert_eq!(v.len(), self.ambient, "vector length mismatch");
        let coords: Vector = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut residual = v.to_vec();
        for (c, row) in coords.iter().zip(self.basis.row_vectors()) {
            if c.is_zero() {
                continue;
            }
            for (r, b) in residual.iter_mut().zip(row) {
                if !b.is_zero() {
                    *r -= c * b;
                }
            }
        }
        residual.iter().all(Zero::is_zero).then_some(coords)
    }

    pub fn contains_vector(&self, v: &[Rational]) -> bool {
        if self.is_full() {
            assert_eq!(v.len(), self.ambient, "vector length mismatch");
            return true;
        }
        self.coordinates(v).is_some()
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient == other.ambient {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected: self.ambient, found: other.ambient })
        }
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(other.dim() <= self.dim() && other.basis_vectors().all(|v| self.contains_vector(v)))
    }

    pub fn equals(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(self == other)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let mut e = Echelon::new(self.ambient);
        for v in self.basis_vectors().chain(other.basis_vectors()) {
            e.insert(v);
        }
        Ok(Self::from_echelon(e))
    }

    /// Intersection via the kernel of `[A^T | −B^T]`: each null vector `(a, b)`
    /// yields the common element `Σ a_i·u_i`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let (da, db) = (self.dim(), other.dim());
        if da == 0 || db == 0 {
            return Ok(Subspace::zero(self.ambient));
        }
        let system = Matrix::from_fn(self.ambient, da + db, |r, c| {
            if c < da {
                self.basis[(c, r)].clone()
            } else {
                -other.basis[(c - da, r)].clone()
            }
        });
        let kernel = system.nullspace();
        let common: Vec<Vector> = kernel
            .basis_vectors()
            .map(|coeffs| {
                let mut v = vec![Rational::zero(); self.ambient];
                for (c, row) in coeffs[..da].iter().zip(self.basis_vectors()) {
                    if c.is_zero() {
                        continue;
                    }
                    for (x, b) in v.iter_mut().zip(row) {
                        *x += c * b;
                    }
                }
                v
            })
            .collect();
        Ok(Subspace::span(self.ambient, &common))
    }

    /// Image of the subspace under a linear map `ℚ^ambient → ℚ^m`.
    pub fn image(&self, map: &Matrix) -> Subspace {
        assert_eq!(map.cols(), self.ambient, "map domain mismatch");
        let images: Vec<Vector> = self.basis_vectors().map(|v| map.mul_vec(v)).collect();
        Subspace::span(map.rows(), &images)
    }

    /// Linear functionals vanishing on the subspace, as a subspace of the dual.
    pub fn annihilator(&self) -> Subspace {
        self.basis.nullspace()
    }

    /// The standard basis vectors at non-pivot columns; they span a complement.
    pub fn coordinate_complement(&self) -> Vec<usize> {
        (0..self.ambient).filter(|c| !self.pivots.contains(c)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::{rat, unit_vector};

    fn e(n: usize, i: usize) -> Vector {
        unit_vector(n, i)
    }

    #[test]
    fn sum_and_intersection() {
        let e1 = Subspace::span(3, &[e(3, 0)]);
        let e2 = Subspace::span(3, &[e(3, 1)]);
        assert_eq!(e1.sum(&e2).unwrap().dim(), 2);
        let a = Subspace::span(3, &[e(3, 0), e(3, 1)]);
        let b = Subspace::span(3, &[e(3, 1), e(3, 2)]);
        assert_eq!(a.intersect(&b).unwrap(), e2);
        assert!(a.contains(&Subspace::zero(3)).unwrap());
        assert!(!a.contains(&b).unwrap());
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        let a = Subspace::full(2);
        let b = Subspace::full(3);
        assert!(matches!(subspace_algebra(&a, &b, SubspaceOp::Sum), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn coordinates_in_rref_basis() {
        let s = Subspace::span(3, &[vec![rat(1), rat(1), rat(0)], vec![rat(0), rat(1), rat(1)]]);
        let v = vec![rat(2), rat(5), rat(3)];
        let c = s.coordinates(&v).unwrap();
        let rebuilt: Vector =
            (0..3).map(|j| &c[0] * &s.basis()[(0, j)] + &c[1] * &s.basis()[(1, j)]).collect();
        assert_eq!(rebuilt, v);
        assert!(s.coordinates(&[rat(1), rat(0), rat(0)]).is_none());
    }
}
