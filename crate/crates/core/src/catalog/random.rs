use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::liealg::LieAlgebra;
use crate::linalg::{rat, Matrix, Rational, Subspace};

/// Lie subalgebra of matrices generated by `gens`, as a subspace of `ℚ^(N·N)`.
fn generated_subalgebra(size: usize, gens: &[Matrix]) -> Subspace {
    let flat: Vec<&[Rational]> = gens.iter().map(Matrix::as_slice).collect();
    let mut span = Subspace::span(size * size, &flat);
    loop {
        let basis: Vec<Matrix> = span
            .basis_vectors()
            .map(|v| Matrix::from_row_major(size, size, v.to_vec()).expect("square"))
            .collect();
        let mut vectors: Vec<Vec<Rational>> = basis.iter().map(|m| m.as_slice().to_vec()).collect();
        for (i, x) in basis.iter().enumerate() {
            for y in &basis[i + 1..] {
                vectors.push(x.commutator(y).into_vec());
            }
        }
        let next = Subspace::span(size * size, &vectors);
        if next == span {
            return span;
        }
        span = next;
    }
}

fn matrix_algebra(name: &str, size: usize, span: &Subspace) -> LieAlgebra {
    let d = span.dim();
    let basis: Vec<Matrix> = span
        .basis_vectors()
        .map(|v| Matrix::from_row_major(size, size, v.to_vec()).expect("square"))
        .collect();
    let mut constants = vec![rat(0); d * d * d];
    for a in 0..d {
        for b in 0..d {
            let c = basis[a].commutator(&basis[b]);
            let coords = span.coordinates(c.as_slice()).expect("closed under commutators");
            for (k, v) in coords.into_iter().enumerate() {
                constants[(a * d + b) * d + k] = v;
            }
        }
    }
    LieAlgebra::from_tensor(name, d, constants).expect("positive dimension")
}

/// A nilpotent algebra of dimension at most `max_dim`: the Lie algebra
/// generated by random strictly upper-triangular integer matrices, divided by
/// random central lines until small enough.
pub fn random_nilpotent(seed: u64, max_dim: usize) -> LieAlgebra {
    assert!(max_dim >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let name = format!("random_nilpotent_{seed}");
    loop {
        let size = rng.gen_range(3..=5usize);
        let count = rng.gen_range(2..=3usize);
        let gens: Vec<Matrix> = (0..count)
            .map(|_| {
                Matrix::from_fn(size, size, |r, c| if c > r { rat(rng.gen_range(-2..=2)) } else { rat(0) })
            })
            .collect();
        let span = generated_subalgebra(size, &gens);
        if span.is_zero() {
            continue;
        }
        let mut g = matrix_algebra(&name, size, &span);
        while g.dim() > max_dim {
            let center = g.center();
            let mut z = vec![rat(0); g.dim()];
            for v in center.basis_vectors() {
                let c = rat(rng.gen_range(1..=3));
                for (zi, vi) in z.iter_mut().zip(v) {
                    *zi += &c * vi;
                }
            }
            let line = Subspace::span(g.dim(), &[z]);
            g = g.quotient(&line, name.clone()).expect("central lines are ideals");
        }
        return g;
    }
}
