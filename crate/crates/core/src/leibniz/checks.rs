use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};

use super::membership::{is_leibniz_automorphism_capped, is_leibniz_derivation_capped};
use super::solver::LeibnizSolver;
use super::DerivationSpace;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Inclusion {
    pub label: String,
    pub holds: bool,
}

/// Dimensions along `Inn ⊆ Der ⊆ LDer_k ⊆ gl` and the verdict of every link.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainReport {
    pub inner_dim: usize,
    pub der_dim: usize,
    /// `(k, dim LDer_k)` for `k = 2..=k_max`.
    pub lder_dims: Vec<(usize, usize)>,
    pub gl_dim: usize,
    pub inclusions: Vec<Inclusion>,
}

impl ChainReport {
    pub fn holds(&self) -> bool {
        self.inclusions.iter().all(|i| i.holds)
    }

    /// `(dim Inn, dim Der, dim LDer_2, …)`.
    pub fn dims(&self) -> Vec<usize> {
        let mut d = vec![self.inner_dim, self.der_dim];
        d.extend(self.lder_dims.iter().map(|&(_, dim)| dim));
        d
    }
}

/// A direct-sum splitting `g = s ⊕ a` into a semisimple and an abelian ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Summands {
    pub semisimple: Subspace,
    pub abelian: Subspace,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionReport {
    pub order: usize,
    pub lder_dim: usize,
    /// `dim Inn(s) + (dim a)²`.
    pub expected_dim: usize,
    pub equals_der: bool,
}

impl DecompositionReport {
    pub fn holds(&self) -> bool {
        self.lder_dim == self.expected_dim && self.equals_der
    }
}

/// Whether the commutator of every pair of basis elements stays in the space.
pub fn verify_bracket_closure(space: &DerivationSpace) -> bool {
    let basis = space.basis_matrices();
    basis
        .iter()
        .enumerate()
        .all(|(i, p)| basis[i + 1..].iter().all(|q| space.space.contains_vector(p.commutator(q).as_slice())))
}

fn contains(a: &Subspace, b: &Subspace) -> Result<bool> {
    a.contains(b)
}

impl LeibnizSolver<'_> {
    pub fn is_leibniz_derivation(&self, p: &Matrix, k: usize) -> Result<bool> {
        is_leibniz_derivation_capped(self.algebra(), p, k, self.cap())
    }

    pub fn is_leibniz_automorphism(&self, a: &Matrix, k: usize) -> Result<bool> {
        is_leibniz_automorphism_capped(self.algebra(), a, k, self.cap())
    }

    pub fn verify_chain(&self, k_max: usize) -> Result<ChainReport> {
        if k_max == 0 {
            return Err(Error::InvalidOrder(0));
        }
        let n = self.algebra().dim();
        let inner = self.inner();
        let der = self.der()?;
        let gl = Subspace::full(n * n);
        let mut inclusions =
            vec![Inclusion { label: "Inn ⊆ Der".into(), holds: contains(&der.space, &inner)? }];
        let mut lder_dims = Vec::new();
        for k in 2..=k_max {
            let lder = self.lder(k)?;
            lder_dims.push((k, lder.dim()));
            inclusions.push(Inclusion {
                label: format!("Der ⊆ LDer_{k}"),
                holds: contains(&lder.space, &der.space)?,
            });
            inclusions
                .push(Inclusion { label: format!("LDer_{k} ⊆ gl"), holds: contains(&gl, &lder.space)? });
        }
        if k_max == 1 {
            inclusions.push(Inclusion { label: "Der ⊆ gl".into(), holds: contains(&gl, &der.space)? });
        }
        Ok(ChainReport { inner_dim: inner.dim(), der_dim: der.dim(), lder_dims, gl_dim: n * n, inclusions })
    }

    /// `LDer_s ⊆ LDer_t` for `s | t`.
    pub fn verify_divisibility_inclusion(&self, s: usize, t: usize) -> Result<bool> {
        if s == 0 || t == 0 {
            return Err(Error::InvalidOrder(0));
        }
        if !t.is_multiple_of(s) {
            return Err(Error::DivisibilityViolated { s, t });
        }
        contains(&self.lder(t)?.space, &self.lder(s)?.space)
    }

    /// `LDer_k ∩ LDer_l ⊆ LDer_{k+l}`.
    pub fn verify_sum_inclusion(&self, k: usize, l: usize) -> Result<bool> {
        let both = self.lder(k)?.space.intersect(&self.lder(l)?.space)?;
        contains(&self.lder(k + l)?.space, &both)
    }

    /// `D·rad(g) ⊆ rad(g)` for every basis element `D` of `LDer_k`.
    pub fn radical_invariance_check(&self, k: usize) -> Result<bool> {
        let radical = self.algebra().radical()?;
        let space = self.lder(k)?;
        for d in space.basis_matrices() {
            if !radical.contains(&radical.image(&d))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// For `g = s ⊕ a`: `dim LDer_k = dim Inn(s) + (dim a)²` and `LDer_k = Der`.
    pub fn dimension_decomposition_check(
        &self,
        summands: Option<&Summands>,
        k: usize,
    ) -> Result<DecompositionReport> {
        let summands = summands.ok_or(Error::SummandsNotMarked)?;
        let g = self.algebra();
        let n = g.dim();
        let (s, a) = (&summands.semisimple, &summands.abelian);
        if s.ambient_dim() != n || a.ambient_dim() != n {
            return Err(Error::PreconditionViolated("summands live in the wrong space".into()));
        }
        if !g.is_ideal(s) || !g.is_ideal(a) {
            return Err(Error::PreconditionViolated("summands must be ideals".into()));
        }
        if s.dim() + a.dim() != n || !s.intersect(a)?.is_zero() {
            return Err(Error::PreconditionViolated("summands must form a direct sum".into()));
        }
        if !g.subspace_bracket(a, a).is_zero() {
            return Err(Error::PreconditionViolated("the second summand must be abelian".into()));
        }
        let inner_dim = if s.is_zero() {
            0
        } else {
            let sub = g.subalgebra(s, "semisimple summand")?;
            if !sub.structural_predicates()?.is_semisimple {
                return Err(Error::PreconditionViolated("the first summand must be semisimple".into()));
            }
            s.dim() - sub.center().dim()
        };
        let lder = self.lder(k)?;
        let der = self.der()?;
        Ok(DecompositionReport {
            order: k,
            lder_dim: lder.dim(),
            expected_dim: inner_dim + a.dim() * a.dim(),
            equals_der: lder.space == der.space,
        })
    }
}
