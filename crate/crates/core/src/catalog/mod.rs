//! Built-in algebras, file formats and invariant tables.

pub mod io;
mod random;
mod table;

use crate::degeneration::ParamLieAlgebra;
use crate::error::{Error, Result};
use crate::leibniz::Summands;
use crate::liealg::{Bracket, LieAlgebra};
use crate::linalg::{rat, unit_vector, Subspace, UniPoly};

pub use random::random_nilpotent;
pub use table::{invariant_table, row_to_json, rows_to_csv, rows_to_json_lines, TableRow};

/// Recorded invariants of a catalog entry, checked against recomputation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Expected {
    /// `Some(None)` records "not nilpotent".
    pub class: Option<Option<usize>>,
    pub inner_dim: Option<usize>,
    /// `(k, dim LDer_k)`.
    pub lder_dims: Vec<(usize, usize)>,
    pub radical_dim: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub algebra: LieAlgebra,
    /// Names of the structural predicates that hold.
    pub tags: Vec<&'static str>,
    pub expected: Expected,
    pub summands: Option<Summands>,
}

/// Names listed by the catalog, in display order.
pub fn names() -> Vec<String> {
    let mut v: Vec<String> = (1..=6).map(|n| format!("abelian_{n}")).collect();
    v.extend(
        [
            "heisenberg_3",
            "heisenberg_5",
            "filiform_n4",
            "sl2",
            "gl2",
            "aff1",
            "sl2_plus_abelian_1",
            "sl2_plus_abelian_2",
            "sl2_sl2",
            "dixmier_lister_8",
        ]
        .map(String::from),
    );
    v
}

/// Every listed entry.
pub fn all() -> Vec<CatalogEntry> {
    names().iter().map(|n| builtin(n).expect("listed name")).collect()
}

/// `[e_i, e_j] = c·e_k` with 1-based indices.
fn b(i: usize, j: usize, k: usize, c: i64) -> Bracket {
    (i - 1, j - 1, vec![(k - 1, rat(c))])
}

fn algebra(name: &str, dim: usize, brackets: &[Bracket]) -> LieAlgebra {
    LieAlgebra::from_brackets(name, dim, brackets).expect("valid built-in table")
}

fn span_of(n: usize, indices: impl IntoIterator<Item = usize>) -> Subspace {
    let vs: Vec<_> = indices.into_iter().map(|i| unit_vector(n, i)).collect();
    Subspace::span(n, &vs)
}

const NILPOTENT: &[&str] = &["nilpotent", "solvable"];

fn sl2() -> LieAlgebra {
    // basis (h, e, f)
    algebra("sl2", 3, &[b(1, 2, 2, 2), b(1, 3, 3, -2), b(2, 3, 1, 1)])
}

pub fn builtin(name: &str) -> Result<CatalogEntry> {
    let unknown = || Error::UnknownName(name.to_string());
    let entry = match name {
        "heisenberg_3" => CatalogEntry {
            algebra: algebra(name, 3, &[b(1, 2, 3, 1)]),
            tags: NILPOTENT.to_vec(),
            expected: Expected {
                class: Some(Some(2)),
                inner_dim: Some(2),
                lder_dims: vec![(1, 6), (2, 9)],
                radical_dim: Some(3),
            },
            summands: None,
        },
        "heisenberg_5" => CatalogEntry {
            algebra: algebra(name, 5, &[b(1, 2, 5, 1), b(3, 4, 5, 1)]),
            tags: NILPOTENT.to_vec(),
            expected: Expected {
                class: Some(Some(2)),
                inner_dim: Some(4),
                lder_dims: vec![(2, 25)],
                radical_dim: Some(5),
            },
            summands: None,
        },
        "filiform_n4" => CatalogEntry {
            algebra: algebra(name, 4, &[b(1, 2, 3, 1), b(1, 3, 4, 1)]),
            tags: NILPOTENT.to_vec(),
            expected: Expected {
                class: Some(Some(3)),
                inner_dim: Some(3),
                lder_dims: vec![(3, 16)],
                radical_dim: Some(4),
            },
            summands: None,
        },
        "sl2" => CatalogEntry {
            algebra: sl2(),
            tags: vec!["perfect", "semisimple", "reductive", "centerless"],
            expected: Expected {
                class: Some(None),
                inner_dim: Some(3),
                lder_dims: (1..=5).map(|k| (k, 3)).collect(),
                radical_dim: Some(0),
            },
            summands: Some(Summands { semisimple: Subspace::full(3), abelian: Subspace::zero(3) }),
        },
        "gl2" => {
            // basis E11, E12, E21, E22
            let g = algebra(
                name,
                4,
                &[
                    b(1, 2, 2, 1),
                    b(1, 3, 3, -1),
                    (1, 2, vec![(0, rat(1)), (3, rat(-1))]),
                    b(2, 4, 2, 1),
                    b(3, 4, 3, -1),
                ],
            );
            let traceless = vec![rat(1), rat(0), rat(0), rat(-1)];
            let identity = vec![rat(1), rat(0), rat(0), rat(1)];
            CatalogEntry {
                algebra: g,
                tags: vec!["reductive"],
                expected: Expected {
                    class: Some(None),
                    inner_dim: Some(3),
                    lder_dims: (1..=4).map(|k| (k, 4)).collect(),
                    radical_dim: Some(1),
                },
                summands: Some(Summands {
                    semisimple: Subspace::span(4, &[traceless, unit_vector(4, 1), unit_vector(4, 2)]),
                    abelian: Subspace::span(4, &[identity]),
                }),
            }
        }
        "aff1" => CatalogEntry {
            algebra: algebra(name, 2, &[b(1, 2, 2, 1)]),
            tags: vec!["solvable", "centerless"],
            expected: Expected {
                class: Some(None),
                inner_dim: Some(2),
                lder_dims: vec![],
                radical_dim: Some(2),
            },
            summands: None,
        },
        "sl2_sl2" => {
            let g = sl2().direct_sum(&sl2(), name);
            CatalogEntry {
                algebra: g,
                tags: vec!["perfect", "semisimple", "reductive", "centerless"],
                expected: Expected {
                    class: Some(None),
                    inner_dim: Some(6),
                    lder_dims: (1..=3).map(|k| (k, 6)).collect(),
                    radical_dim: Some(0),
                },
                summands: Some(Summands { semisimple: Subspace::full(6), abelian: Subspace::zero(6) }),
            }
        }
        "dixmier_lister_8" => CatalogEntry {
            algebra: algebra(
                name,
                8,
                &[
                    b(1, 2, 5, 1),
                    b(1, 3, 6, 1),
                    b(1, 4, 7, 1),
                    b(1, 5, 8, -1),
                    b(2, 3, 8, 1),
                    b(2, 4, 6, 1),
                    b(2, 6, 7, -1),
                    b(3, 4, 5, -1),
                    b(3, 5, 7, -1),
                    b(4, 6, 8, -1),
                ],
            ),
            tags: NILPOTENT.to_vec(),
            expected: Expected {
                class: Some(Some(3)),
                inner_dim: None,
                lder_dims: vec![(1, 12), (2, 28), (3, 64)],
                radical_dim: Some(8),
            },
            summands: None,
        },
        _ => {
            if let Some(n) = name.strip_prefix("abelian_") {
                let n: usize = n.parse().ok().filter(|n| (1..=6).contains(n)).ok_or_else(unknown)?;
                CatalogEntry {
                    algebra: LieAlgebra::abelian(n),
                    tags: vec!["abelian", "nilpotent", "solvable", "reductive"],
                    expected: Expected {
                        class: Some(Some(1)),
                        inner_dim: Some(0),
                        lder_dims: vec![(1, n * n), (2, n * n)],
                        radical_dim: Some(n),
                    },
                    summands: Some(Summands { semisimple: Subspace::zero(n), abelian: Subspace::full(n) }),
                }
            } else if let Some(m) = name.strip_prefix("sl2_plus_abelian_") {
                let m: usize = m.parse().ok().filter(|m| (1..=5).contains(m)).ok_or_else(unknown)?;
                let n = 3 + m;
                CatalogEntry {
                    algebra: sl2().direct_sum(&LieAlgebra::abelian(m), name),
                    tags: vec!["reductive"],
                    expected: Expected {
                        class: Some(None),
                        inner_dim: Some(3),
                        lder_dims: vec![(2, 3 + m * m)],
                        radical_dim: Some(m),
                    },
                    summands: Some(Summands { semisimple: span_of(n, 0..3), abelian: span_of(n, 3..n) }),
                }
            } else {
                return Err(unknown());
            }
        }
    };
    Ok(entry)
}

/// Names of the built-in parametric families.
pub fn family_names() -> Vec<String> {
    vec!["heisenberg_contraction".to_string()]
}

/// `[e_1, e_2] = t·e_3`: the Heisenberg algebra for `t ≠ 0`, abelian at `t = 0`.
pub fn builtin_family(name: &str) -> Result<ParamLieAlgebra> {
    match name {
        "heisenberg_contraction" => {
            let t = UniPoly::monomial(rat(1), 1);
            ParamLieAlgebra::from_brackets(name, 3, &[(0, 1, vec![(2, t)])])
        }
        _ => Err(Error::UnknownName(name.to_string())),
    }
}

impl CatalogEntry {
    pub fn name(&self) -> &str {
        self.algebra.name()
    }
}
