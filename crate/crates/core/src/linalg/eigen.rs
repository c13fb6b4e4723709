use super::matrix::Matrix;
use super::poly::rational_roots;
use super::rational::Rational;
use super::subspace::Subspace;
use crate::error::{Error, Result};

/// Generalized eigenspaces `ker((A − α·I)^m_α)` for every rational eigenvalue α,
/// sorted by eigenvalue.
///
/// Fails with [`Error::SpectrumNotRational`] when the characteristic polynomial
/// does not split over ℚ.
pub fn generalized_eigenspaces(a: &Matrix) -> Result<Vec<(Rational, Subspace)>> {
    let p = a.char_poly()?;
    let n = a.rows();
    if n == 0 {
        return Ok(Vec::new());
    }
    let roots = rational_roots(&p)?;
    if !roots.splits() {
        return Err(Error::SpectrumNotRational { irrational_degree: roots.remainder_degree });
    }
    Ok(roots
        .roots
        .into_iter()
        .map(|(alpha, mult)| {
            let shifted = a.sub(&Matrix::scalar(n, alpha.clone()));
            let space = shifted.pow(mult as u32).nullspace();
            (alpha, space)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::rat;

    #[test]
    fn diagonal_operator() {
        let parts = generalized_eigenspaces(&Matrix::diagonal(&[rat(1), rat(1), rat(2)])).unwrap();
        let dims: Vec<(Rational, usize)> = parts.iter().map(|(a, s)| (a.clone(), s.dim())).collect();
        assert_eq!(dims, vec![(rat(1), 2), (rat(2), 1)]);
    }

    #[test]
    fn nilpotent_jordan_block() {
        let j = Matrix::from_rows(vec![vec![rat(0), rat(1)], vec![rat(0), rat(0)]]).unwrap();
        let parts = generalized_eigenspaces(&j).unwrap();
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[0].0, rat(0));
        assert!(parts[0].1.is_full());
    }

    #[test]
    fn rotation_is_rejected() {
        let r = Matrix::from_rows(vec![vec![rat(0), rat(-1)], vec![rat(1), rat(0)]]).unwrap();
        assert!(matches!(
            generalized_eigenspaces(&r),
            Err(Error::SpectrumNotRational { irrational_degree: 2 })
        ));
    }
}
