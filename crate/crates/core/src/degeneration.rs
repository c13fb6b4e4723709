//! One-parameter families of structure constants and the behaviour of
//! `dim LDer_k` in the limit `t → 0`.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::leibniz::{LeibnizSolver, TupleCap};
use crate::liealg::{Bracket, LieAlgebra};
use crate::linalg::{format_rational, parse_rational, rat, ratio, Rational, UniPoly};

/// Variable name used in family files.
pub const PARAMETER: &str = "t";

/// Structure constants that are polynomials in one parameter `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamLieAlgebra {
    name: String,
    dim: usize,
    // (i*n + j)*n + k, as for LieAlgebra
    constants: Vec<UniPoly>,
}

/// A basis triple whose Jacobiator is not identically zero in `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyJacobiFailure {
    pub triple: (usize, usize, usize),
    pub defect: Vec<UniPoly>,
}

impl ParamLieAlgebra {
    /// Brackets `[e_i, e_j] = Σ p·e_k` (0-based); `[e_j, e_i]` is filled in.
    pub fn from_brackets(name: impl Into<String>, dim: usize, brackets: &[Bracket<UniPoly>]) -> Result<Self> {
        if dim == 0 {
            return Err(Error::ValidationFailed("dimension must be at least 1".into()));
        }
        let mut constants = vec![UniPoly::zero(); dim * dim * dim];
        for (i, j, terms) in brackets {
            for (k, p) in terms {
                if *i >= dim || *j >= dim || *k >= dim {
                    return Err(Error::DimensionMismatch { expected: dim, found: (*i).max(*j).max(*k) + 1 });
                }
                let at = (i * dim + j) * dim + k;
                constants[at] = &constants[at] + p;
                if i != j {
                    let at = (j * dim + i) * dim + k;
                    constants[at] = &constants[at] - p;
                }
            }
        }
        Ok(Self { name: name.into(), dim, constants })
    }

    /// A family that does not depend on `t`.
    pub fn constant(g: &LieAlgebra) -> Self {
        Self {
            name: g.name().to_string(),
            dim: g.dim(),
            constants: g.constants().iter().cloned().map(UniPoly::constant).collect(),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &UniPoly {
        &self.constants[(i * self.dim + j) * self.dim + k]
    }

    /// Antisymmetry and the Jacobi identity as polynomial identities in `t`.
    pub fn polynomial_jacobi_failures(&self) -> Vec<PolyJacobiFailure> {
        let n = self.dim;
        let bracket = |i: usize, j: usize| -> Vec<UniPoly> {
            (0..n).map(|k| self.structure_constant(i, j, k).clone()).collect()
        };
        // [v, e_c] for v given in coordinates
        let bracket_with = |v: &[UniPoly], c: usize| -> Vec<UniPoly> {
            let mut out = vec![UniPoly::zero(); n];
            for (m, vm) in v.iter().enumerate() {
                if vm.is_zero() {
                    continue;
                }
                for (k, o) in out.iter_mut().enumerate() {
                    let s = self.structure_constant(m, c, k);
                    if !s.is_zero() {
                        *o = &*o + &(vm * s);
                    }
                }
            }
            out
        };
        let mut failures = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let t1 = bracket_with(&bracket(i, j), k);
                    let t2 = bracket_with(&bracket(j, k), i);
                    let t3 = bracket_with(&bracket(k, i), j);
                    let defect: Vec<UniPoly> = (0..n).map(|m| &(&t1[m] + &t2[m]) + &t3[m]).collect();
                    if defect.iter().any(|p| !p.is_zero()) {
                        failures.push(PolyJacobiFailure { triple: (i, j, k), defect });
                    }
                }
            }
        }
        failures
    }

    pub fn is_antisymmetric(&self) -> bool {
        let n = self.dim;
        (0..n).all(|i| {
            (0..n).all(|j| {
                (0..n)
                    .all(|k| (self.structure_constant(i, j, k) + self.structure_constant(j, i, k)).is_zero())
            })
        })
    }

    /// The fiber at `t = eps`, validated.
    pub fn evaluate(&self, eps: &Rational) -> Result<LieAlgebra> {
        let constants = self.constants.iter().map(|p| p.eval(eps)).collect();
        let name = format!("{}@t={}", self.name, format_rational(eps));
        let g = LieAlgebra::from_tensor(name, self.dim, constants)?;
        let report = g.validate();
        if !report.is_ok() {
            return Err(Error::ValidationFailed(report.summary()));
        }
        Ok(g)
    }
}

/// `evaluate_family(f, eps)`.
pub fn evaluate_family(f: &ParamLieAlgebra, eps: &Rational) -> Result<LieAlgebra> {
    f.evaluate(eps)
}

pub fn default_samples() -> Vec<Rational> {
    vec![rat(1), rat(2), ratio(1, 3)]
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonotonicityReport {
    pub order: usize,
    pub sample_dims: Vec<(Rational, usize)>,
    pub generic_dim: usize,
    pub limit_dim: usize,
    pub monotone: bool,
    pub strict: bool,
}

/// Compares `dim LDer_k` at the nonzero samples with the value at `t = 0`.
pub fn dimension_monotonicity_check(
    f: &ParamLieAlgebra,
    k: usize,
    samples: &[Rational],
    cap: TupleCap,
) -> Result<MonotonicityReport> {
    if samples.is_empty() {
        return Err(Error::InvalidSamples("at least one sample is required".into()));
    }
    if samples.iter().any(Zero::is_zero) {
        return Err(Error::InvalidSamples("samples must be nonzero".into()));
    }
    let dim_at = |eps: &Rational| -> Result<usize> {
        let g = f.evaluate(eps)?;
        Ok(LeibnizSolver::new(&g).with_cap(cap).lder(k)?.dim())
    };
    let mut sample_dims = Vec::with_capacity(samples.len());
    for s in samples {
        sample_dims.push((s.clone(), dim_at(s)?));
    }
    let generic_dim = sample_dims[0].1;
    if sample_dims.iter().any(|(_, d)| *d != generic_dim) {
        return Err(Error::GenericDimUnstable {
            dims: sample_dims.iter().map(|(s, d)| (format_rational(s), *d)).collect(),
        });
    }
    let limit_dim = dim_at(&Rational::zero())?;
    Ok(MonotonicityReport {
        order: k,
        sample_dims,
        generic_dim,
        limit_dim,
        monotone: generic_dim <= limit_dim,
        strict: generic_dim < limit_dim,
    })
}

/// Parses a polynomial in `var` such as `"3/2*t^2 - t + 1"`.
pub fn parse_poly(input: &str, var: &str) -> Option<UniPoly> {
    let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return None;
    }
    let mut terms = Vec::new();
    let mut start = 0;
    let bytes = s.as_bytes();
    for (i, &b) in bytes.iter().enumerate() {
        if (b == b'+' || b == b'-') && i > 0 && !matches!(bytes[i - 1], b'^' | b'*' | b'/') {
            terms.push(&s[start..i]);
            start = i;
        }
    }
    terms.push(&s[start..]);
    let mut total = UniPoly::zero();
    for term in terms {
        let (negative, body) = match term.as_bytes().first()? {
            b'+' => (false, &term[1..]),
            b'-' => (true, &term[1..]),
            _ => (false, term),
        };
        if body.is_empty() {
            return None;
        }
        let (coeff, degree) = match body.find(var) {
            None => (parse_rational(body)?, 0),
            Some(at) => {
                let head = &body[..at];
                let tail = &body[at + var.len()..];
                let head = head.strip_suffix('*').unwrap_or(head);
                let coeff = if head.is_empty() {
                    Rational::one()
                } else if body[..at].ends_with('*') {
                    parse_rational(head)?
                } else {
                    return None;
                };
                let degree =
                    if tail.is_empty() { 1 } else { tail.strip_prefix('^')?.parse::<usize>().ok()? };
                (coeff, degree)
            }
        };
        let coeff = if negative { -coeff } else { coeff };
        total = &total + &UniPoly::monomial(coeff, degree);
    }
    Some(total)
}
