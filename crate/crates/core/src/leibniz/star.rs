use crate::linalg::{Matrix, Rational, Subspace};

use super::devectorize;

/// Solutions `f` of the (∗_{m,k}) identity
/// `m·f([x_1, …, x_k]) + Σ_{i=2}^{k} [x_1, …, x_{i-1}, f([x_i, …, x_k])] = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarSystem {
    pub m: Rational,
    pub k: usize,
    /// Dimension of the algebra.
    pub n: usize,
    pub space: Subspace,
}

impl StarSystem {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn basis_matrices(&self) -> Vec<Matrix> {
        self.space.basis_vectors().map(|v| devectorize(self.n, v)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::leibniz::{oracle, star_identity_space, LeibnizSolver};
    use crate::liealg::tests::{h3, sl2};
    use crate::liealg::LieAlgebra;
    use crate::linalg::{is_zero_vector, rat, ratio, unit_vector, Vector};

    /// The (∗_{m,k}) left side on a basis tuple, by direct expansion.
    fn star_residual(g: &LieAlgebra, f: &Matrix, m: &Rational, tuple: &[usize]) -> Vector {
        let n = g.dim();
        let xs: Vec<Vector> = tuple.iter().map(|&i| unit_vector(n, i)).collect();
        let nest = |ys: &[Vector]| {
            if ys.len() == 1 {
                ys[0].clone()
            } else {
                g.nested_bracket(ys).unwrap()
            }
        };
        let mut total: Vector = f.mul_vec(&nest(&xs)).iter().map(|v| v * m).collect();
        for i in 1..xs.len() {
            let mut ys = xs[..i].to_vec();
            ys.push(f.mul_vec(&nest(&xs[i..])));
            for (t, v) in total.iter_mut().zip(nest(&ys)) {
                *t += v;
            }
        }
        total
    }

    fn dense_star(g: &LieAlgebra, m: &Rational, k: usize) -> Subspace {
        let n = g.dim();
        let mut rows = Vec::new();
        for t in oracle::tuples(n, k) {
            let cols: Vec<Vector> = (0..n * n)
                .map(|q| {
                    let unit = Matrix::from_fn(n, n, |r, c| rat(i64::from(r * n + c == q)));
                    star_residual(g, &unit, m, &t)
                })
                .collect();
            for r in 0..n {
                rows.push(cols.iter().map(|c| c[r].clone()).collect::<Vector>());
            }
        }
        Matrix::from_rows(rows).unwrap().nullspace()
    }

    #[test]
    fn perfect_algebra_admits_only_zero() {
        for m in [rat(1), rat(2), ratio(1, 2)] {
            for k in [2, 3] {
                assert_eq!(star_identity_space(&sl2(), &m, k).unwrap().dim(), 0);
                let ab = star_identity_space(&LieAlgebra::abelian(3), &m, k).unwrap();
                assert_eq!(ab.dim(), 9);
                assert_eq!(ab.basis_matrices().len(), 9);
            }
        }
    }

    #[test]
    fn agrees_with_dense_expansion() {
        for g in [h3(), sl2()] {
            let solver = LeibnizSolver::new(&g);
            for m in [rat(1), rat(3), ratio(-1, 2)] {
                for k in [2, 3] {
                    let s = solver.star_identity_space(&m, k).unwrap();
                    assert_eq!(s.space, dense_star(&g, &m, k));
                    for f in s.basis_matrices() {
                        for t in oracle::tuples(3, k) {
                            assert!(is_zero_vector(&star_residual(&g, &f, &m, &t)));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn invalid_parameters() {
        let g = sl2();
        for m in [rat(0), rat(-1), rat(-3)] {
            assert!(matches!(star_identity_space(&g, &m, 2), Err(Error::InvalidM(_))));
        }
        assert!(star_identity_space(&g, &ratio(-1, 2), 2).is_ok());
        assert!(matches!(star_identity_space(&g, &rat(1), 1), Err(Error::InvalidOrder(1))));
    }
}
