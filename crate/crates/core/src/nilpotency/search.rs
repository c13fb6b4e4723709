use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::leibniz::{DerivationSpace, LeibnizSolver};
use crate::linalg::{rat, Matrix, Rational, Subspace};

use super::construct::construct_semisimple_lder;

/// Bound on the absolute value of sampled integer coefficients.
pub const COEFFICIENT_BOUND: i64 = 1 << 16;

pub const DEFAULT_TRIALS: usize = 20;

/// How an invertible element was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Source {
    Identity,
    BasisElement(usize),
    RandomTrial(usize),
    /// The diagonalizable operator of order `⌈c/2⌉`.
    Construction,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvertibleLder {
    pub order: usize,
    pub operator: Matrix,
    pub det: Rational,
    pub source: Source,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InvertibleSearch {
    Found(InvertibleLder),
    NotFound { order: usize, trials: usize, seed: u64 },
}

impl InvertibleSearch {
    pub fn found(&self) -> Option<&InvertibleLder> {
        match self {
            InvertibleSearch::Found(f) => Some(f),
            InvertibleSearch::NotFound { .. } => None,
        }
    }
}

/// Looks for `P` in `space` with `det P ≠ 0`: the identity when the space is
/// all of `gl`, then each basis element, then `trials` random integer
/// combinations drawn from a generator seeded with `seed + order`.
pub fn find_invertible_element(space: &DerivationSpace, trials: usize, seed: u64) -> InvertibleSearch {
    let found = |operator: Matrix, det: Rational, source| {
        InvertibleSearch::Found(InvertibleLder { order: space.order, operator, det, source })
    };
    if space.is_full() {
        return found(Matrix::identity(space.n), rat(1), Source::Identity);
    }
    let basis = space.basis_matrices();
    for (i, p) in basis.iter().enumerate() {
        let det = p.det().expect("square");
        if !det.is_zero() {
            return found(p.clone(), det, Source::BasisElement(i));
        }
    }
    if !basis.is_empty() {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(space.order as u64));
        for trial in 0..trials {
            let mut p = Matrix::zeros(space.n, space.n);
            for b in &basis {
                let c = rng.gen_range(-COEFFICIENT_BOUND..=COEFFICIENT_BOUND);
                if c != 0 {
                    p = p.add(&b.scale(&rat(c)));
                }
            }
            let det = p.det().expect("square");
            if !det.is_zero() {
                return found(p, det, Source::RandomTrial(trial));
            }
        }
    }
    InvertibleSearch::NotFound { order: space.order, trials, seed }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Nilpotent,
    NotNilpotent,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Evidence {
    InvertibleLder(InvertibleLder),
    LcsVanishing { class: usize, dims: Vec<usize> },
    LcsStabilizedNonzero { stable: Subspace },
    NoInvertibleFound { max_order: usize, trials: usize, seed: u64 },
}

impl Evidence {
    pub fn kind(&self) -> &'static str {
        match self {
            Evidence::InvertibleLder(_) => "InvertibleLDer",
            Evidence::LcsVanishing { .. } => "LcsVanishing",
            Evidence::LcsStabilizedNonzero { .. } => "LcsStabilizedNonzero",
            Evidence::NoInvertibleFound { .. } => "NoInvertibleFound",
        }
    }
}

/// Parameters of the randomized part of the search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchParams {
    pub trials: usize,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NilpotencyCertificate {
    pub algebra: String,
    pub verdict: Verdict,
    pub evidence: Evidence,
    /// `None` for evidence drawn from the lower central series.
    pub search: Option<SearchParams>,
}

impl NilpotencyCertificate {
    pub fn is_nilpotent(&self) -> bool {
        self.verdict == Verdict::Nilpotent
    }
}

/// Searches orders `1..=n` for an invertible Leibniz-derivation.
pub fn nilpotency_by_main_theorem(
    solver: &LeibnizSolver<'_>,
    trials: usize,
    seed: u64,
) -> Result<NilpotencyCertificate> {
    let g = solver.algebra();
    let n = g.dim();
    for k in 1..=n {
        let space = solver.lder(k)?;
        if let InvertibleSearch::Found(f) = find_invertible_element(&space, trials, seed) {
            return Ok(NilpotencyCertificate {
                algebra: g.name().to_string(),
                verdict: Verdict::Nilpotent,
                evidence: Evidence::InvertibleLder(f),
                search: Some(SearchParams { trials, seed }),
            });
        }
    }
    Ok(NilpotencyCertificate {
        algebra: g.name().to_string(),
        verdict: Verdict::NotNilpotent,
        evidence: Evidence::NoInvertibleFound { max_order: n, trials, seed },
        search: Some(SearchParams { trials, seed }),
    })
}

/// Verdict from the lower central series alone.
pub fn nilpotency_by_lcs(g: &crate::LieAlgebra) -> NilpotencyCertificate {
    let lcs = g.lower_central_series();
    let (verdict, evidence) = if lcs.reaches_zero() {
        let class = lcs.terms.len() - 1;
        (Verdict::Nilpotent, Evidence::LcsVanishing { class, dims: lcs.dims() })
    } else {
        (Verdict::NotNilpotent, Evidence::LcsStabilizedNonzero { stable: lcs.last().clone() })
    };
    NilpotencyCertificate { algebra: g.name().to_string(), verdict, evidence, search: None }
}

/// Smallest order `k ≤ c` at which an invertible element is found; the
/// diagonalizable operator of order `⌈c/2⌉` backs up the search there.
pub fn minimal_invertible_order(
    solver: &LeibnizSolver<'_>,
    trials: usize,
    seed: u64,
) -> Result<InvertibleLder> {
    let g = solver.algebra();
    let class = g.nilpotency_class().ok_or(Error::NotNilpotent)?;
    let q = class.div_ceil(2);
    for k in 1..=class {
        let space = solver.lder(k)?;
        if let InvertibleSearch::Found(f) = find_invertible_element(&space, trials, seed) {
            return Ok(f);
        }
        if k == q {
            let p = construct_semisimple_lder(g)?;
            let det = p.operator.det()?;
            return Ok(InvertibleLder { order: q, operator: p.operator, det, source: Source::Construction });
        }
    }
    Err(Error::InternalInconsistency("no invertible element up to the class".into()))
}

/// Smallest `k ≤ n` with `LDer_k = gl(g)`.
pub fn class_via_lder(solver: &LeibnizSolver<'_>) -> Result<usize> {
    let n = solver.algebra().dim();
    for k in 1..=n {
        if solver.lder(k)?.is_full() {
            return Ok(k);
        }
    }
    Err(Error::NotNilpotent)
}
