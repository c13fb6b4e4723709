//! Lie algebras given by structure constants.

mod construct;
mod series;
mod structure;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{is_zero_vector, Echelon, Matrix, Rational, Subspace, Vector};

pub use series::{SeriesChain, SeriesKind};
pub use structure::StructuralPredicates;

/// `(i, j, [(k, c)])`: `[e_i, e_j] = Σ c·e_k`, with 0-based indices.
pub type Bracket<T = Rational> = (usize, usize, Vec<(usize, T)>);

/// A finite-dimensional Lie algebra over ℚ with basis `e_0, …, e_{n-1}`.
///
/// `[e_i, e_j] = Σ_k c[i][j][k]·e_k`. Construction does not enforce the Lie
/// axioms; call [`LieAlgebra::validate`] for that.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    name: String,
    dim: usize,
    constants: Vec<Rational>,
    // ad_basis[i][(k, j)] = c[i][j][k]
    ad_basis: Vec<Matrix>,
}

/// Outcome of [`LieAlgebra::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub antisymmetry_ok: bool,
    pub jacobi_ok: bool,
    /// Basis pairs `(i, j)`, `i ≤ j`, with `c[i][j] ≠ −c[j][i]`.
    pub antisymmetry_failures: Vec<(usize, usize)>,
    pub failing_triples: Vec<JacobiFailure>,
}

/// A basis triple `i < j < k` whose Jacobiator
/// `[[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]` is nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiFailure {
    pub triple: (usize, usize, usize),
    pub defect: Vector,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.antisymmetry_ok && self.jacobi_ok
    }

    /// One-line description of the first failure, 1-based like the file format.
    pub fn summary(&self) -> String {
        if let Some(&(i, j)) = self.antisymmetry_failures.first() {
            return format!("antisymmetry fails for the pair ({}, {})", i + 1, j + 1);
        }
        if let Some(f) = self.failing_triples.first() {
            let (i, j, k) = f.triple;
            return format!("Jacobi identity fails on ({}, {}, {})", i + 1, j + 1, k + 1);
        }
        "ok".to_string()
    }
}

impl LieAlgebra {
    /// Builds an algebra from a flat tensor, `constants[(i*n + j)*n + k] = c[i][j][k]`.
    pub fn from_tensor(name: impl Into<String>, dim: usize, constants: Vec<Rational>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::ValidationFailed("dimension must be at least 1".into()));
        }
        if constants.len() != dim * dim * dim {
            return Err(Error::DimensionMismatch { expected: dim * dim * dim, found: constants.len() });
        }
        let ad_basis = (0..dim)
            .map(|i| Matrix::from_fn(dim, dim, |k, j| constants[(i * dim + j) * dim + k].clone()))
            .collect();
        Ok(Self { name: name.into(), dim, constants, ad_basis })
    }

    /// Builds an algebra from brackets `[e_i, e_j] = Σ coeff·e_k` (0-based) and
    /// fills in `[e_j, e_i]` by antisymmetry.
    pub fn from_brackets(name: impl Into<String>, dim: usize, brackets: &[Bracket]) -> Result<Self> {
        let mut constants = vec![Rational::zero(); dim * dim * dim];
        for (i, j, terms) in brackets {
            for (k, c) in terms {
                if *i >= dim || *j >= dim || *k >= dim {
                    return Err(Error::DimensionMismatch { expected: dim, found: (*i).max(*j).max(*k) + 1 });
                }
                constants[(i * dim + j) * dim + k] += c;
                if i != j {
                    constants[(j * dim + i) * dim + k] -= c;
                }
            }
        }
        Self::from_tensor(name, dim, constants)
    }

    pub fn abelian(dim: usize) -> Self {
        Self::from_tensor(format!("abelian_{dim}"), dim, vec![Rational::zero(); dim * dim * dim])
            .expect("abelian algebra of positive dimension")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.constants[(i * self.dim + j) * self.dim + k]
    }

    pub fn constants(&self) -> &[Rational] {
        &self.constants
    }

    /// Exact check of antisymmetry on all pairs and the Jacobi identity on all
    /// triples `i < j < k`.
    pub fn validate(&self) -> ValidationReport {
        let n = self.dim;
        let mut antisymmetry_failures = Vec::new();
        for i in 0..n {
            for j in i..n {
                let ok = (0..n).all(|k| {
                    let a = self.structure_constant(i, j, k);
                    let b = self.structure_constant(j, i, k);
                    (a + b).is_zero()
                });
                if !ok {
                    antisymmetry_failures.push((i, j));
                }
            }
        }
        let mut failing_triples = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let defect = self.jacobiator(i, j, k);
                    if !is_zero_vector(&defect) {
                        failing_triples.push(JacobiFailure { triple: (i, j, k), defect });
                    }
                }
            }
        }
        ValidationReport {
            antisymmetry_ok: antisymmetry_failures.is_empty(),
            jacobi_ok: failing_triples.is_empty(),
            antisymmetry_failures,
            failing_triples,
        }
    }

    fn jacobiator(&self, i: usize, j: usize, k: usize) -> Vector {
        // [[x,y],z] = -ad(z)[x,y]
        let term = |a: usize, b: usize, c: usize| {
            let ab = self.basis_bracket(a, b);
            self.ad_basis[c].mul_vec(&ab)
        };
        let t1 = term(i, j, k);
        let t2 = term(j, k, i);
        let t3 = term(k, i, j);
        t1.iter().zip(&t2).zip(&t3).map(|((a, b), c)| -(a + b + c)).collect()
    }

    /// `[e_i, e_j]` in coordinates.
    pub fn basis_bracket(&self, i: usize, j: usize) -> Vector {
        self.ad_basis[i].column(j)
    }

    fn check_len(&self, v: &[Rational]) -> Result<()> {
        if v.len() == self.dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected: self.dim, found: v.len() })
        }
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Result<Vector> {
        self.check_len(y)?;
        Ok(self.ad(x)?.mul_vec(y))
    }

    /// Right-nested bracket `[x_1, [x_2, [… , [x_k, x_{k+1}]…]]]`.
    pub fn nested_bracket<V: AsRef<[Rational]>>(&self, xs: &[V]) -> Result<Vector> {
        if xs.len() < 2 {
            return Err(Error::BracketTooShort(xs.len()));
        }
        for x in xs {
            self.check_len(x.as_ref())?;
        }
        let (last, init) = xs.split_last().expect("length checked");
        let mut acc = last.as_ref().to_vec();
        for x in init.iter().rev() {
            acc = self.ad_unchecked(x.as_ref()).mul_vec(&acc);
        }
        Ok(acc)
    }

    /// Matrix of `y ↦ [x, y]`.
    pub fn ad(&self, x: &[Rational]) -> Result<Matrix> {
        self.check_len(x)?;
        Ok(self.ad_unchecked(x))
    }

    pub(crate) fn ad_unchecked(&self, x: &[Rational]) -> Matrix {
        let n = self.dim;
        let mut m = Matrix::zeros(n, n);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            m = m.add(&self.ad_basis[i].scale(xi));
        }
        m
    }

    /// `ad(e_i)`.
    pub fn ad_basis(&self, i: usize) -> &Matrix {
        &self.ad_basis[i]
    }

    /// `[A, B]`: span of the brackets of basis pairs.
    pub fn subspace_bracket(&self, a: &Subspace, b: &Subspace) -> Subspace {
        let mut e = Echelon::new(self.dim);
        for x in a.basis_vectors() {
            let adx = self.ad_unchecked(x);
            for y in b.basis_vectors() {
                e.insert(&adx.mul_vec(y));
                if e.is_full() {
                    return Subspace::full(self.dim);
                }
            }
        }
        Subspace::from_echelon(e)
    }

    /// `[I, g] ⊆ I`.
    pub fn is_ideal(&self, s: &Subspace) -> bool {
        let g = Subspace::full(self.dim);
        s.contains(&self.subspace_bracket(&g, s)).unwrap_or(false)
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> bool {
        s.contains(&self.subspace_bracket(s, s)).unwrap_or(false)
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::linalg::{rat, unit_vector};

    pub fn h3() -> LieAlgebra {
        LieAlgebra::from_brackets("heisenberg_3", 3, &[(0, 1, vec![(2, rat(1))])]).unwrap()
    }

    pub fn sl2() -> LieAlgebra {
        LieAlgebra::from_brackets(
            "sl2",
            3,
            &[(0, 1, vec![(1, rat(2))]), (0, 2, vec![(2, rat(-2))]), (1, 2, vec![(0, rat(1))])],
        )
        .unwrap()
    }

    fn e(i: usize) -> Vector {
        unit_vector(3, i)
    }

    #[test]
    fn validation_examples() {
        assert!(h3().validate().is_ok());
        assert!(sl2().validate().is_ok());
        let bad = LieAlgebra::from_brackets(
            "bad",
            3,
            &[(0, 1, vec![(0, rat(1))]), (1, 2, vec![(1, rat(1))]), (2, 0, vec![(2, rat(1))])],
        )
        .unwrap();
        let report = bad.validate();
        assert!(report.antisymmetry_ok);
        assert!(!report.jacobi_ok);
        assert_eq!(report.failing_triples.len(), 1);
        assert_eq!(report.failing_triples[0].triple, (0, 1, 2));
        assert_eq!(report.failing_triples[0].defect, vec![rat(-1), rat(-1), rat(-1)]);
    }

    #[test]
    fn jacobi_defect_by_hand() {
        // [[e1,e2],e3] = [e1,e3] = -e3; [[e2,e3],e1] = [e2,e1] = -e1; [[e3,e1],e2] = [e3,e2] = -e2
        let bad = LieAlgebra::from_brackets(
            "bad",
            3,
            &[(0, 1, vec![(0, rat(1))]), (1, 2, vec![(1, rat(1))]), (2, 0, vec![(2, rat(1))])],
        )
        .unwrap();
        let b = |x: &Vector, y: &Vector| bad.bracket(x, y).unwrap();
        let t1 = b(&b(&e(0), &e(1)), &e(2));
        let t2 = b(&b(&e(1), &e(2)), &e(0));
        let t3 = b(&b(&e(2), &e(0)), &e(1));
        let sum: Vector = (0..3).map(|i| &t1[i] + &t2[i] + &t3[i]).collect();
        assert_eq!(sum, vec![rat(-1), rat(-1), rat(-1)]);
    }

    #[test]
    fn antisymmetry_violation_is_reported() {
        let mut c = vec![rat(0); 8];
        c[1] = rat(1); // c[0][0][1]
        let g = LieAlgebra::from_tensor("bad", 2, c).unwrap();
        let report = g.validate();
        assert!(!report.antisymmetry_ok);
        assert_eq!(report.antisymmetry_failures, vec![(0, 0)]);
    }

    #[test]
    fn brackets_and_nesting() {
        let h = h3();
        assert_eq!(h.bracket(&e(0), &e(1)).unwrap(), e(2));
        let x = vec![rat(3), rat(-1), rat(2)];
        assert!(is_zero_vector(&h.bracket(&x, &x).unwrap()));
        assert!(is_zero_vector(&h.nested_bracket(&[e(0), e(0), e(1)]).unwrap()));
        let s = sl2();
        assert_eq!(s.bracket(&e(1), &e(2)).unwrap(), e(0));
        let four_e: Vector = vec![rat(0), rat(4), rat(0)];
        assert_eq!(s.nested_bracket(&[e(0), e(0), e(1)]).unwrap(), four_e);
        assert_eq!(s.nested_bracket(&[e(1), e(2)]).unwrap(), s.bracket(&e(1), &e(2)).unwrap());
        assert!(matches!(s.nested_bracket(&[e(0)]), Err(Error::BracketTooShort(1))));
        assert!(s.bracket(&e(0), &[rat(1)]).is_err());
    }

    #[test]
    fn adjoint_examples() {
        let adh = sl2().ad(&e(0)).unwrap();
        assert_eq!(adh, Matrix::diagonal(&[rat(0), rat(2), rat(-2)]));
        let ad1 = h3().ad(&e(0)).unwrap();
        let mut expected = Matrix::zeros(3, 3);
        expected[(2, 1)] = rat(1);
        assert_eq!(ad1, expected);
        assert!(LieAlgebra::abelian(3).ad(&e(1)).unwrap().is_zero());
    }
}
