use crate::linalg::{Echelon, Matrix, Subspace};

use super::LieAlgebra;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesKind {
    LowerCentral,
    Derived,
    UpperCentral,
    /// Derived sequence of a subspace inside the `(k+1)`-ary nested-bracket algebra.
    KDerived(usize),
}

/// Terms of a central or derived series, listed until the first repeat (the
/// repeated term is not duplicated).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesChain {
    pub kind: SeriesKind,
    pub terms: Vec<Subspace>,
}

impl SeriesChain {
    fn iterate(kind: SeriesKind, first: Subspace, mut next: impl FnMut(&Subspace) -> Subspace) -> Self {
        let mut terms = vec![first];
        loop {
            let last = terms.last().expect("nonempty");
            let t = next(last);
            if &t == last {
                break;
            }
            terms.push(t);
        }
        Self { kind, terms }
    }

    /// The stabilized final term.
    pub fn last(&self) -> &Subspace {
        self.terms.last().expect("series has at least one term")
    }

    pub fn reaches_zero(&self) -> bool {
        self.last().is_zero()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.terms.iter().map(Subspace::dim).collect()
    }

    /// 1-based term access matching `γ_1 = g`; terms past stabilization repeat
    /// the last one.
    pub fn term(&self, index: usize) -> &Subspace {
        assert!(index >= 1, "series terms are 1-based");
        self.terms.get(index - 1).unwrap_or_else(|| self.last())
    }
}

impl LieAlgebra {
    /// `γ_1 = g`, `γ_{k+1} = [g, γ_k]`.
    pub fn lower_central_series(&self) -> SeriesChain {
        let g = Subspace::full(self.dim());
        SeriesChain::iterate(SeriesKind::LowerCentral, g.clone(), |t| self.subspace_bracket(&g, t))
    }

    /// `D_1 = g`, `D_{k+1} = [D_k, D_k]`.
    pub fn derived_series(&self) -> SeriesChain {
        self.derived_series_of(&Subspace::full(self.dim()))
    }

    pub(crate) fn derived_series_of(&self, s: &Subspace) -> SeriesChain {
        SeriesChain::iterate(SeriesKind::Derived, s.clone(), |t| self.subspace_bracket(t, t))
    }

    /// `𝔷_0 = 0`, `𝔷_{k+1} = {x : [x, g] ⊆ 𝔷_k}`.
    pub fn upper_central_series(&self) -> SeriesChain {
        SeriesChain::iterate(SeriesKind::UpperCentral, Subspace::zero(self.dim()), |z| {
            self.central_preimage(z)
        })
    }

    fn central_preimage(&self, z: &Subspace) -> Subspace {
        let n = self.dim();
        // functionals vanishing on z; x qualifies iff every f·ad(e_j)·x = 0
        let annihilator = z.annihilator();
        let mut rows = Vec::new();
        for j in 0..n {
            for f in annihilator.basis_vectors() {
                let row = self.ad_basis(j).transpose().mul_vec(f);
                rows.push(row);
            }
        }
        if rows.is_empty() {
            return Subspace::full(n);
        }
        Matrix::from_rows(rows).expect("equal rows").nullspace()
    }

    pub fn center(&self) -> Subspace {
        self.central_preimage(&Subspace::zero(self.dim()))
    }

    /// Nilpotency class `c` (largest `k` with `γ_k ≠ 0`), or `None` when the
    /// lower central series stabilizes at a nonzero term.
    pub fn nilpotency_class(&self) -> Option<usize> {
        let lcs = self.lower_central_series();
        lcs.reaches_zero().then(|| lcs.terms.len() - 1)
    }

    /// Derived sequence of `s` in the `(k+1)`-ary algebra given by right-nested
    /// brackets: each term is spanned by nested brackets of `k+1` elements of the
    /// previous term.
    pub fn k_derived_series(&self, s: &Subspace, k: usize) -> SeriesChain {
        assert!(k >= 1, "order must be at least 1");
        SeriesChain::iterate(SeriesKind::KDerived(k), s.clone(), |t| self.nested_power(t, k + 1))
    }

    /// Span of `[t_1, …, t_len]` with every `t_i ∈ t`.
    fn nested_power(&self, t: &Subspace, len: usize) -> Subspace {
        let mut acc = t.clone();
        for _ in 1..len {
            acc = self.subspace_bracket(t, &acc);
        }
        acc
    }

    /// Span of all right-nested brackets of `len` basis vectors, enumerated
    /// tuple by tuple.
    pub fn nested_bracket_span(&self, len: usize) -> Subspace {
        assert!(len >= 1);
        let n = self.dim();
        let mut e = Echelon::new(n);
        let mut idx = vec![0usize; len];
        loop {
            let xs: Vec<_> = idx.iter().map(|&i| crate::linalg::unit_vector(n, i)).collect();
            let v = if len == 1 { xs[0].clone() } else { self.nested_bracket(&xs).expect("valid tuple") };
            e.insert(&v);
            // odometer
            let mut pos = len;
            loop {
                if pos == 0 {
                    return Subspace::from_echelon(e);
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
}
