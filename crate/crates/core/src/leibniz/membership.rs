//! Direct membership tests that evaluate the defining identities tuple by
//! tuple, without assembling a linear system.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::liealg::LieAlgebra;
use crate::linalg::{is_zero_vector, unit_vector, Matrix, Vector};

use super::solver::TupleCap;

fn check_endo(g: &LieAlgebra, p: &Matrix) -> Result<()> {
    if p.rows() != g.dim() || p.cols() != g.dim() {
        return Err(Error::DimensionMismatch {
            expected: g.dim(),
            found: if p.rows() != g.dim() { p.rows() } else { p.cols() },
        });
    }
    Ok(())
}

type State = (Vector, Vector);

/// Walks every basis tuple of length `len` by prepending to suffixes. Each
/// suffix carries `(bracket, companion)`; `step(a, state)` prepends `e_a` and
/// `accept(state)` judges a full tuple. Suffixes whose state is entirely zero
/// stay zero and are skipped.
fn walk(
    n: usize,
    len: usize,
    base: impl Fn(usize) -> State,
    step: impl Fn(usize, &State) -> State,
    accept: impl Fn(&State) -> bool,
) -> bool {
    fn go(
        depth: usize,
        state: State,
        n: usize,
        step: &dyn Fn(usize, &State) -> State,
        accept: &dyn Fn(&State) -> bool,
    ) -> bool {
        if depth == 0 {
            return accept(&state);
        }
        if is_zero_vector(&state.0) && is_zero_vector(&state.1) {
            return true;
        }
        (0..n).all(|a| go(depth - 1, step(a, &state), n, step, accept))
    }
    (0..n).all(|i| go(len - 1, base(i), n, &step, &accept))
}

/// Whether `p` satisfies the order-`k` Leibniz identity on every basis tuple.
pub fn is_leibniz_derivation(g: &LieAlgebra, p: &Matrix, k: usize) -> Result<bool> {
    is_leibniz_derivation_capped(g, p, k, TupleCap::default())
}

pub(crate) fn is_leibniz_derivation_capped(
    g: &LieAlgebra,
    p: &Matrix,
    k: usize,
    cap: TupleCap,
) -> Result<bool> {
    if k == 0 {
        return Err(Error::InvalidOrder(k));
    }
    check_endo(g, p)?;
    let n = g.dim();
    cap.check(n, k + 1)?;
    let images: Vec<Vector> = (0..n).map(|a| p.column(a)).collect();
    Ok(walk(
        n,
        k + 1,
        |i| (unit_vector(n, i), images[i].clone()),
        |a, (x, rest)| {
            // [e_a, X] and [P e_a, X] + [e_a, R]
            let x_next = g.ad_basis(a).mul_vec(x);
            let mut r_next = g.ad_basis(a).mul_vec(rest);
            if !is_zero_vector(x) {
                for (r, v) in r_next.iter_mut().zip(g.ad_unchecked(&images[a]).mul_vec(x)) {
                    *r += v;
                }
            }
            (x_next, r_next)
        },
        |(x, rest)| &p.mul_vec(x) == rest,
    ))
}

/// Whether `a` is invertible and `A[x_1, …, x_{k+1}] = [A x_1, …, A x_{k+1}]`
/// on every basis tuple.
pub fn is_leibniz_automorphism(g: &LieAlgebra, a: &Matrix, k: usize) -> Result<bool> {
    is_leibniz_automorphism_capped(g, a, k, TupleCap::default())
}

pub(crate) fn is_leibniz_automorphism_capped(
    g: &LieAlgebra,
    a: &Matrix,
    k: usize,
    cap: TupleCap,
) -> Result<bool> {
    if k == 0 {
        return Err(Error::InvalidOrder(k));
    }
    check_endo(g, a)?;
    let n = g.dim();
    cap.check(n, k + 1)?;
    if a.det()?.is_zero() {
        return Ok(false);
    }
    let images: Vec<Vector> = (0..n).map(|i| a.column(i)).collect();
    let ad_images: Vec<Matrix> = images.iter().map(|y| g.ad_unchecked(y)).collect();
    Ok(walk(
        n,
        k + 1,
        |i| (unit_vector(n, i), images[i].clone()),
        |b, (x, y)| (g.ad_basis(b).mul_vec(x), ad_images[b].mul_vec(y)),
        |(x, y)| &a.mul_vec(x) == y,
    ))
}
