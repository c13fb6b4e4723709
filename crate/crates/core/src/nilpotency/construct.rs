use num_traits::Zero;

use crate::error::{Error, Result};
use crate::leibniz::LeibnizSolver;
use crate::liealg::LieAlgebra;
use crate::linalg::{rat, unit_vector, Echelon, Matrix, Rational, Subspace, Vector};

/// An invertible, diagonalizable Leibniz-derivation of order `⌈c/2⌉`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemisimpleLder {
    pub class: usize,
    pub order: usize,
    /// Standard basis indices spanning the complement of `γ_{q+1}`.
    pub complement: Vec<usize>,
    pub tail: Subspace,
    pub operator: Matrix,
}

/// For `g` nilpotent of class `c` and `q = ⌈c/2⌉`: the identity on a
/// coordinate complement of `γ_{q+1}` and `q + 1` times the identity on
/// `γ_{q+1}`.
pub fn construct_semisimple_lder(g: &LieAlgebra) -> Result<SemisimpleLder> {
    let class = g.nilpotency_class().ok_or(Error::NotNilpotent)?;
    let order = class.div_ceil(2);
    let n = g.dim();
    let tail = g.lower_central_series().term(order + 1).clone();
    let complement = tail.coordinate_complement();

    let mut columns: Vec<Vector> = complement.iter().map(|&i| unit_vector(n, i)).collect();
    columns.extend(tail.basis_vectors().map(<[Rational]>::to_vec));
    let mut weights = vec![rat(1); complement.len()];
    weights.extend(std::iter::repeat_n(rat(order as i64 + 1), tail.dim()));

    let change = Matrix::from_columns(n, &columns);
    let inverse =
        change.inverse()?.ok_or_else(|| Error::InternalInconsistency("adapted basis is singular".into()))?;
    let operator = change.mul(&Matrix::diagonal(&weights)).mul(&inverse);
    if !LeibnizSolver::new(g).is_leibniz_derivation(&operator, order)? {
        return Err(Error::InternalInconsistency("constructed operator fails the Leibniz identity".into()));
    }
    Ok(SemisimpleLder { class, order, complement, tail, operator })
}

/// A rank-one map in `LDer_k \ LDer_l`, sending `u` to a central `z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrictWitness {
    pub order: usize,
    pub excluded_order: usize,
    /// 0-based basis indices with `u = [e_{i_1}, …, e_{i_k}]`.
    pub tuple: Vec<usize>,
    pub u: Vector,
    pub z: Vector,
    pub operator: Matrix,
}

/// Builds `P_z` with `P_z(u) = z` and `P_z = 0` on a hyperplane containing
/// `γ_{k+1}` and the entries of `u`'s tuple. Tuples are searched in
/// lexicographic order.
pub fn construct_strict_witness(g: &LieAlgebra, k: usize, l: usize) -> Result<StrictWitness> {
    construct_strict_witness_with(&LeibnizSolver::new(g), k, l)
}

pub(crate) fn construct_strict_witness_with(
    solver: &LeibnizSolver<'_>,
    k: usize,
    l: usize,
) -> Result<StrictWitness> {
    let g = solver.algebra();
    let class = g.nilpotency_class().ok_or(Error::NotNilpotent)?;
    if l == 0 || k < 2 {
        return Err(Error::PreconditionViolated(format!(
            "orders must satisfy k ≥ 2 and l ≥ 1, got k = {k}, l = {l}"
        )));
    }
    if k > class {
        return Err(Error::PreconditionViolated(format!("k = {k} exceeds the nilpotency class {class}")));
    }
    if k % l != 1 % l {
        return Err(Error::PreconditionViolated(format!("k = {k} is not 1 mod l = {l}")));
    }
    let n = g.dim();
    let deeper = g.lower_central_series().term(k + 1).clone();
    let (tuple, u, kernel) = first_admissible_tuple(g, k, &deeper).ok_or_else(|| {
        Error::WitnessVerificationFailed(format!(
            "no basis tuple of length {k} gives a bracket outside γ_{} and its arguments",
            k + 1
        ))
    })?;
    let z = g
        .center()
        .basis_vectors()
        .next()
        .map(<[Rational]>::to_vec)
        .ok_or_else(|| Error::InternalInconsistency("nilpotent algebra with zero center".into()))?;

    // a functional vanishing on the hyperplane, normalized at u
    let functional = kernel.annihilator().basis().row(0).to_vec();
    let at_u: Rational = functional.iter().zip(&u).map(|(a, b)| a * b).sum();
    let functional: Vector = functional.iter().map(|f| f / &at_u).collect();
    let operator = Matrix::from_fn(n, n, |r, c| &z[r] * &functional[c]);

    let in_k = solver.is_leibniz_derivation(&operator, k)?;
    let in_l = solver.is_leibniz_derivation(&operator, l)?;
    if !in_k || in_l {
        return Err(Error::WitnessVerificationFailed(format!(
            "order-{k} membership {in_k}, order-{l} membership {in_l}"
        )));
    }
    Ok(StrictWitness { order: k, excluded_order: l, tuple, u, z, operator })
}

/// First tuple whose bracket `u` avoids `γ_{k+1} + span(arguments)`, together
/// with a hyperplane complementary to `u` containing that span.
fn first_admissible_tuple(
    g: &LieAlgebra,
    k: usize,
    deeper: &Subspace,
) -> Option<(Vec<usize>, Vector, Subspace)> {
    let n = g.dim();
    let mut idx = vec![0usize; k];
    loop {
        let xs: Vec<Vector> = idx.iter().map(|&i| unit_vector(n, i)).collect();
        let u = g.nested_bracket(&xs).expect("length ≥ 2");
        if !u.iter().all(Zero::is_zero) {
            let mut base = Echelon::new(n);
            for v in deeper.basis_vectors() {
                base.insert(v);
            }
            for x in &xs {
                base.insert(x);
            }
            let mut with_u = base.clone();
            if with_u.insert(&u) {
                for i in 0..n {
                    if with_u.insert(&unit_vector(n, i)) {
                        base.insert(&unit_vector(n, i));
                    }
                }
                return Some((idx, u, Subspace::from_echelon(base)));
            }
        }
        let mut pos = k;
        loop {
            if pos == 0 {
                return None;
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < n {
                break;
            }
            idx[pos] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::tests::{h3, sl2};

    fn n4() -> LieAlgebra {
        LieAlgebra::from_brackets("filiform_n4", 4, &[(0, 1, vec![(2, rat(1))]), (0, 2, vec![(3, rat(1))])])
            .unwrap()
    }

    fn diag(v: &[i64]) -> Matrix {
        Matrix::diagonal(&v.iter().map(|&x| rat(x)).collect::<Vec<_>>())
    }

    #[test]
    fn semisimple_examples() {
        let p = construct_semisimple_lder(&h3()).unwrap();
        assert_eq!((p.class, p.order), (2, 1));
        assert_eq!(p.operator, diag(&[1, 1, 2]));
        let p = construct_semisimple_lder(&n4()).unwrap();
        assert_eq!(p.order, 2);
        assert_eq!(p.operator, diag(&[1, 1, 1, 3]));
        let p = construct_semisimple_lder(&LieAlgebra::abelian(3)).unwrap();
        assert_eq!(p.order, 1);
        assert!(p.operator.is_identity());
        assert!(matches!(construct_semisimple_lder(&sl2()), Err(Error::NotNilpotent)));
    }

    #[test]
    fn witness_examples() {
        let w = construct_strict_witness(&h3(), 2, 1).unwrap();
        assert_eq!(w.u, unit_vector(3, 2));
        assert_eq!(w.z, unit_vector(3, 2));
        assert_eq!(w.tuple, vec![0, 1]);
        let w = construct_strict_witness(&n4(), 3, 2).unwrap();
        assert_eq!(w.u, unit_vector(4, 3));
        assert_eq!(w.z, unit_vector(4, 3));
        assert!(matches!(construct_strict_witness(&n4(), 4, 3), Err(Error::PreconditionViolated(_))));
        assert!(matches!(construct_strict_witness(&n4(), 3, 3), Err(Error::PreconditionViolated(_))));
    }

    #[test]
    fn witness_membership_through_solver() {
        let g = n4();
        let s = LeibnizSolver::new(&g);
        let w = construct_strict_witness(&g, 3, 2).unwrap();
        assert!(s.lder(3).unwrap().contains(&w.operator));
        assert!(!s.lder(2).unwrap().contains(&w.operator));
    }
}
