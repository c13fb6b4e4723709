use crate::error::{Error, Result};
use crate::leibniz::LeibnizSolver;
use crate::linalg::{generalized_eigenspaces, Matrix, Rational, Subspace};

/// Generalized eigenspaces of an operator together with its order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradingDecomposition {
    pub operator: Matrix,
    pub order: usize,
    pub parts: Vec<(Rational, Subspace)>,
}

impl GradingDecomposition {
    pub fn part(&self, eigenvalue: &Rational) -> Option<&Subspace> {
        self.parts.iter().find(|(a, _)| a == eigenvalue).map(|(_, s)| s)
    }
}

/// One eigenvalue tuple and whether its nested brackets land in the
/// eigenspace of the summed eigenvalue.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradingTuple {
    pub eigenvalues: Vec<Rational>,
    pub target: Rational,
    pub bracket_dim: usize,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradingReport {
    pub decomposition: GradingDecomposition,
    pub tuples: Vec<GradingTuple>,
}

impl GradingReport {
    pub fn holds(&self) -> bool {
        self.tuples.iter().all(|t| t.holds)
    }
}

/// Checks `[g_{α_1}, …, g_{α_{k+1}}] ⊆ g_{α_1 + … + α_{k+1}}` for every tuple
/// of eigenvalues of `p`, after confirming `p ∈ LDer_k`.
pub fn grading_check(solver: &LeibnizSolver<'_>, p: &Matrix, k: usize) -> Result<GradingReport> {
    let g = solver.algebra();
    if !solver.is_leibniz_derivation(p, k)? {
        return Err(Error::NotADerivation { order: k });
    }
    let parts = generalized_eigenspaces(p)?;
    solver.cap().check(parts.len(), k + 1)?;
    let mut tuples = Vec::new();
    let mut idx = vec![0usize; k + 1];
    loop {
        let mut acc = parts[idx[k]].1.clone();
        for &i in idx[..k].iter().rev() {
            acc = g.subspace_bracket(&parts[i].1, &acc);
        }
        let eigenvalues: Vec<Rational> = idx.iter().map(|&i| parts[i].0.clone()).collect();
        let target: Rational = eigenvalues.iter().sum();
        let holds = match parts.iter().find(|(a, _)| a == &target) {
            Some((_, space)) => space.contains(&acc)?,
            None => acc.is_zero(),
        };
        tuples.push(GradingTuple { eigenvalues, target, bracket_dim: acc.dim(), holds });
        let mut pos = k + 1;
        loop {
            if pos == 0 {
                return Ok(GradingReport {
                    decomposition: GradingDecomposition { operator: p.clone(), order: k, parts },
                    tuples,
                });
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < parts.len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::tests::h3;
    use crate::linalg::rat;

    fn diag(v: &[i64]) -> Matrix {
        Matrix::diagonal(&v.iter().map(|&x| rat(x)).collect::<Vec<_>>())
    }

    #[test]
    fn heisenberg_grading() {
        let h = h3();
        let s = LeibnizSolver::new(&h);
        let r = grading_check(&s, &diag(&[1, 1, 2]), 1).unwrap();
        assert!(r.holds());
        let t = r.tuples.iter().find(|t| t.eigenvalues == vec![rat(1), rat(1)]).unwrap();
        assert_eq!((t.target.clone(), t.bracket_dim), (rat(2), 1));
        assert_eq!(r.decomposition.part(&rat(1)).unwrap().dim(), 2);
        let r = grading_check(&s, &Matrix::identity(3), 2).unwrap();
        assert!(r.holds());
        assert_eq!(r.tuples.len(), 1);
        assert!(matches!(grading_check(&s, &diag(&[1, 1, 5]), 1), Err(Error::NotADerivation { order: 1 })));
    }
}
