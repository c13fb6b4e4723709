//! Span-compressed assembly of the order-`k` systems.
//!
//! For a suffix `(x_j, …, x_{k+1})` of a basis tuple, the pair `(X, M)` holds
//! the suffix bracket `X = [x_j, …, x_{k+1}]` and the linear map
//! `M : P ↦ Σ_{i ≥ j} [x_j, …, P x_i, …, x_{k+1}]` as an `n × n²` matrix.
//! Prepending `e_a` acts linearly on the pair, so the span of all pairs of a
//! given suffix length is generated by stepping a basis of the previous span.
//! The equations `P·X = M(P)` for every tuple are then spanned by those of a
//! basis of the longest level, which keeps the eliminated system small even
//! when `n^(k+1)` is large.

use std::cell::RefCell;
use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::liealg::LieAlgebra;
use crate::linalg::{Echelon, Rational, Subspace, Vector};

use super::star::StarSystem;
use super::{inner_derivations, DerivationSpace};

/// Default bound on the number of basis tuples a system may range over.
pub const DEFAULT_TUPLE_CAP: u128 = 1 << 21;

/// Guard on `n^len`, the number of basis tuples of a given length.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TupleCap(pub u128);

impl Default for TupleCap {
    fn default() -> Self {
        TupleCap(DEFAULT_TUPLE_CAP)
    }
}

impl TupleCap {
    pub fn check(&self, n: usize, len: usize) -> Result<()> {
        let tuples = u32::try_from(len).ok().and_then(|e| (n as u128).checked_pow(e)).unwrap_or(u128::MAX);
        if tuples > self.0 {
            Err(Error::CapExceeded { tuples, cap: self.0 })
        } else {
            Ok(())
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Rule {
    /// `M` collects `[…, P x_i, …]` with `P` applied to single arguments.
    Leibniz,
    /// `M` collects `[x_j, …, x_{i-1}, f([x_i, …])]`.
    Star,
}

/// Spans of `(X, M)` pairs by suffix length, grown on demand.
#[derive(Debug)]
struct Ladder {
    rule: Rule,
    // levels[L] spans the pairs of suffixes of length L + 1
    levels: Vec<Vec<Vector>>,
}

impl Ladder {
    fn new(g: &LieAlgebra, rule: Rule) -> Self {
        let n = g.dim();
        let base = (0..n)
            .map(|i| {
                let mut v = vec![Rational::zero(); n + n * n * n];
                v[i] = Rational::one();
                for r in 0..n {
                    v[n + r * n * n + r * n + i] = Rational::one();
                }
                v
            })
            .collect();
        Self { rule, levels: vec![base] }
    }

    fn level(&mut self, g: &LieAlgebra, level: usize) -> &[Vector] {
        while self.levels.len() <= level {
            let next = self.step(g, self.levels.last().expect("base level"));
            self.levels.push(next);
        }
        &self.levels[level]
    }

    fn step(&self, g: &LieAlgebra, pairs: &[Vector]) -> Vec<Vector> {
        let n = g.dim();
        let width = n + n * n * n;
        let mut span = Echelon::new(width);
        for a in 0..n {
            let ad = g.ad_basis(a);
            let entries: Vec<(usize, usize, &Rational)> = (0..n)
                .flat_map(|r| (0..n).map(move |s| (r, s)))
                .filter_map(|(r, s)| {
                    let x = &ad[(r, s)];
                    (!x.is_zero()).then_some((r, s, x))
                })
                .collect();
            for pair in pairs {
                let next = self.step_pair(g, a, &entries, pair);
                if next.iter().any(|x| !x.is_zero()) {
                    span.insert(&next);
                }
            }
        }
        span.into_rows()
    }

    fn step_pair(
        &self,
        g: &LieAlgebra,
        a: usize,
        ad_a: &[(usize, usize, &Rational)],
        pair: &[Rational],
    ) -> Vector {
        let n = g.dim();
        let nn = n * n;
        let (x, m) = pair.split_at(n);
        let mut out = vec![Rational::zero(); n + n * nn];
        let (x_out, m_out) = out.split_at_mut(n);
        for &(r, s, c) in ad_a {
            if !x[s].is_zero() {
                x_out[r] += c * &x[s];
            }
            let src = &m[s * nn..(s + 1) * nn];
            let dst = &mut m_out[r * nn..(r + 1) * nn];
            for (d, v) in dst.iter_mut().zip(src) {
                if !v.is_zero() {
                    *d += c * v;
                }
            }
        }
        match self.rule {
            Rule::Leibniz => {
                // − [P e_a, X] = − ad(X)·(P e_a), where (P e_a)[s] = p[s·n + a]
                if x.iter().any(|v| !v.is_zero()) {
                    let ad_x = g.ad_unchecked(x);
                    for r in 0..n {
                        for s in 0..n {
                            let v = &ad_x[(r, s)];
                            if !v.is_zero() {
                                m_out[r * nn + s * n + a] -= v;
                            }
                        }
                    }
                }
            }
            Rule::Star => {
                // + f(X') where X' = [e_a, X]
                for r in 0..n {
                    for c in 0..n {
                        if !x_out[c].is_zero() {
                            let v = x_out[c].clone();
                            m_out[r * nn + r * n + c] += v;
                        }
                    }
                }
            }
        }
        out
    }
}

/// Solver for the derivation-type systems of one algebra, caching the pair
/// spans and the solved spaces across orders.
#[derive(Debug)]
pub struct LeibnizSolver<'g> {
    algebra: &'g LieAlgebra,
    cap: TupleCap,
    leibniz: RefCell<Ladder>,
    star: RefCell<Ladder>,
    spaces: RefCell<BTreeMap<usize, DerivationSpace>>,
}

impl<'g> LeibnizSolver<'g> {
    pub fn new(algebra: &'g LieAlgebra) -> Self {
        Self {
            algebra,
            cap: TupleCap::default(),
            leibniz: RefCell::new(Ladder::new(algebra, Rule::Leibniz)),
            star: RefCell::new(Ladder::new(algebra, Rule::Star)),
            spaces: RefCell::new(BTreeMap::new()),
        }
    }

    pub fn with_cap(mut self, cap: TupleCap) -> Self {
        self.cap = cap;
        self
    }

    pub fn algebra(&self) -> &'g LieAlgebra {
        self.algebra
    }

    pub fn cap(&self) -> TupleCap {
        self.cap
    }

    fn n(&self) -> usize {
        self.algebra.dim()
    }

    /// `LDer_k(g)`: the solution space over all basis `(k+1)`-tuples.
    pub fn lder(&self, k: usize) -> Result<DerivationSpace> {
        if k == 0 {
            return Err(Error::InvalidOrder(k));
        }
        if let Some(s) = self.spaces.borrow().get(&k) {
            return Ok(s.clone());
        }
        let n = self.n();
        self.cap.check(n, k + 1)?;
        let space = {
            let mut ladder = self.leibniz.borrow_mut();
            let pairs = ladder.level(self.algebra, k);
            solve(n, pairs, |x, m, r, row| {
                for c in 0..n {
                    row[r * n + c] += &x[c];
                }
                for (q, v) in m.iter().enumerate() {
                    row[q] -= v;
                }
            })
        };
        let result = DerivationSpace { algebra: self.algebra.name().to_string(), n, order: k, space };
        self.spaces.borrow_mut().insert(k, result.clone());
        Ok(result)
    }

    /// `Der(g) = LDer_1(g)`.
    pub fn der(&self) -> Result<DerivationSpace> {
        self.lder(1)
    }

    pub fn inner(&self) -> Subspace {
        inner_derivations(self.algebra)
    }

    /// Endomorphisms `f` with
    /// `m·f([x_1, …, x_k]) + Σ_{i=2}^{k} [x_1, …, x_{i-1}, f([x_i, …, x_k])] = 0`.
    pub fn star_identity_space(&self, m: &Rational, k: usize) -> Result<StarSystem> {
        if k < 2 {
            return Err(Error::InvalidOrder(k));
        }
        if m.is_zero() || (m.is_integer() && m < &Rational::zero()) {
            return Err(Error::InvalidM(m.clone()));
        }
        let n = self.n();
        self.cap.check(n, k)?;
        let scale = m - Rational::one();
        let mut ladder = self.star.borrow_mut();
        let pairs = ladder.level(self.algebra, k - 1);
        let space = solve(n, pairs, |w, mm, r, row| {
            if !scale.is_zero() {
                for c in 0..n {
                    if !w[c].is_zero() {
                        row[r * n + c] += &scale * &w[c];
                    }
                }
            }
            for (q, v) in mm.iter().enumerate() {
                row[q] += v;
            }
        });
        Ok(StarSystem { m: m.clone(), k, n, space })
    }
}

/// Nullspace of the equations contributed by each pair, one per output row
/// `r`; `fill(X, M_r, r, row)` writes the coefficients of vec(P) into `row`.
fn solve(
    n: usize,
    pairs: &[Vector],
    mut fill: impl FnMut(&[Rational], &[Rational], usize, &mut [Rational]),
) -> Subspace {
    let nn = n * n;
    let mut system = Echelon::new(nn);
    'pairs: for pair in pairs {
        let (x, m) = pair.split_at(n);
        for r in 0..n {
            let mut row = vec![Rational::zero(); nn];
            fill(x, &m[r * nn..(r + 1) * nn], r, &mut row);
            system.insert(&row);
            if system.is_full() {
                break 'pairs;
            }
        }
    }
    Subspace::from_echelon(system).annihilator()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::leibniz::oracle;
    use crate::liealg::tests::{h3, sl2};
    use crate::linalg::rat;

    fn n4() -> LieAlgebra {
        LieAlgebra::from_brackets("filiform_n4", 4, &[(0, 1, vec![(2, rat(1))]), (0, 2, vec![(3, rat(1))])])
            .unwrap()
    }

    #[test]
    fn heisenberg_dims() {
        let h = h3();
        let s = LeibnizSolver::new(&h);
        assert_eq!(s.lder(1).unwrap().dim(), 6);
        assert_eq!(s.lder(2).unwrap().dim(), 9);
        assert_eq!(s.lder(3).unwrap().dim(), 9);
        assert!(matches!(s.lder(0), Err(Error::InvalidOrder(0))));
    }

    #[test]
    fn sl2_all_inner() {
        let g = sl2();
        let s = LeibnizSolver::new(&g);
        for k in 1..=3 {
            assert_eq!(s.lder(k).unwrap().space, s.inner());
        }
    }

    #[test]
    fn agrees_with_dense_oracle() {
        for g in [h3(), sl2(), n4(), LieAlgebra::abelian(2)] {
            let s = LeibnizSolver::new(&g);
            for k in 1..=3 {
                assert_eq!(s.lder(k).unwrap().space, oracle::lder(&g, k), "{} k={k}", g.name());
            }
        }
    }

    #[test]
    fn filiform_full_at_class() {
        let g = n4();
        let s = LeibnizSolver::new(&g);
        assert!(!s.lder(2).unwrap().is_full());
        assert_eq!(s.lder(3).unwrap().dim(), 16);
    }

    #[test]
    fn cap_is_enforced() {
        let g = h3();
        let s = LeibnizSolver::new(&g).with_cap(TupleCap(26));
        assert!(matches!(s.lder(2), Err(Error::CapExceeded { tuples: 27, cap: 26 })));
        assert!(s.lder(1).is_ok());
    }
}
