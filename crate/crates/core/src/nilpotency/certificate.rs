//! Certificate files and their independent re-verification.
//!
//! ```json
//! {"algebra": {...}, "verdict": "Nilpotent", "evidence_kind": "InvertibleLDer",
//!  "order": 1, "matrix": [["1", "0"], ["0", "1"]], "det": "1",
//!  "source": "identity", "seed": 0, "trials": 20}
//! ```
//!
//! `algebra` is either an algebra object or the name of a built-in entry.

use num_traits::Zero;
use serde_json::{json, Map, Value};

use crate::catalog::{self, io::algebra_from_json, io::algebra_to_json};
use crate::error::{Error, Result};
use crate::leibniz::{is_leibniz_derivation, LeibnizSolver, TupleCap};
use crate::liealg::LieAlgebra;
use crate::linalg::{format_rational, parse_rational, Matrix, Rational, Subspace};

use super::construct::construct_semisimple_lder;
use super::search::{
    find_invertible_element, Evidence, InvertibleLder, InvertibleSearch, NilpotencyCertificate, SearchParams,
    Source, Verdict,
};

fn source_label(s: Source) -> String {
    match s {
        Source::Identity => "identity".into(),
        Source::BasisElement(i) => format!("basis:{i}"),
        Source::RandomTrial(t) => format!("trial:{t}"),
        Source::Construction => "construction".into(),
    }
}

fn parse_source(s: &str) -> Option<Source> {
    match s {
        "identity" => Some(Source::Identity),
        "construction" => Some(Source::Construction),
        _ => {
            let (kind, index) = s.split_once(':')?;
            let index = index.parse().ok()?;
            match kind {
                "basis" => Some(Source::BasisElement(index)),
                "trial" => Some(Source::RandomTrial(index)),
                _ => None,
            }
        }
    }
}

fn vectors_json<'a>(rows: impl Iterator<Item = &'a [Rational]>) -> Value {
    rows.map(|r| r.iter().map(format_rational).collect::<Vec<_>>()).collect::<Vec<_>>().into()
}

pub fn certificate_to_json(cert: &NilpotencyCertificate, g: &LieAlgebra) -> Value {
    let verdict = match cert.verdict {
        Verdict::Nilpotent => "Nilpotent",
        Verdict::NotNilpotent => "NotNilpotent",
    };
    let mut m = Map::new();
    m.insert("algebra".into(), algebra_to_json(g));
    m.insert("verdict".into(), verdict.into());
    m.insert("evidence_kind".into(), cert.evidence.kind().into());
    let (order, matrix, det, source) = match &cert.evidence {
        Evidence::InvertibleLder(f) => (
            Value::from(f.order),
            vectors_json(f.operator.row_vectors()),
            Value::from(format_rational(&f.det)),
            Value::from(source_label(f.source)),
        ),
        Evidence::NoInvertibleFound { max_order, .. } => {
            (Value::from(*max_order), Value::Null, Value::Null, Value::Null)
        }
        _ => (Value::Null, Value::Null, Value::Null, Value::Null),
    };
    m.insert("order".into(), order);
    m.insert("matrix".into(), matrix);
    m.insert("det".into(), det);
    m.insert("source".into(), source);
    m.insert("seed".into(), cert.search.map_or(Value::Null, |s| s.seed.into()));
    m.insert("trials".into(), cert.search.map_or(Value::Null, |s| s.trials.into()));
    match &cert.evidence {
        Evidence::LcsVanishing { class, dims } => {
            m.insert("class".into(), (*class).into());
            m.insert("series_dims".into(), json!(dims));
        }
        Evidence::LcsStabilizedNonzero { stable } => {
            m.insert("stable_basis".into(), vectors_json(stable.basis_vectors()));
        }
        _ => {}
    }
    Value::Object(m)
}

fn field<'a>(obj: &'a Map<String, Value>, key: &str) -> Result<&'a Value> {
    obj.get(key).ok_or_else(|| Error::parse_field(key, "missing"))
}

fn usize_field(obj: &Map<String, Value>, key: &str) -> Result<usize> {
    field(obj, key)?
        .as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| Error::parse_field(key, "expected a non-negative integer"))
}

fn rational_field(obj: &Map<String, Value>, key: &str) -> Result<Rational> {
    field(obj, key)?
        .as_str()
        .and_then(parse_rational)
        .ok_or_else(|| Error::parse_field(key, "expected a \"p/q\" string"))
}

fn rows_field(obj: &Map<String, Value>, key: &str, width: usize) -> Result<Vec<Vec<Rational>>> {
    let bad = |msg: &str| Error::parse_field(key, msg);
    field(obj, key)?
        .as_array()
        .ok_or_else(|| bad("expected an array of rows"))?
        .iter()
        .map(|row| {
            let row = row.as_array().ok_or_else(|| bad("expected an array of rows"))?;
            if row.len() != width {
                return Err(bad(&format!("expected rows of length {width}")));
            }
            row.iter()
                .map(|x| x.as_str().and_then(parse_rational).ok_or_else(|| bad("malformed entry")))
                .collect()
        })
        .collect()
}

fn search_params(obj: &Map<String, Value>) -> Result<Option<SearchParams>> {
    match (obj.get("trials"), obj.get("seed")) {
        (None | Some(Value::Null), None | Some(Value::Null)) => Ok(None),
        _ => Ok(Some(SearchParams {
            trials: usize_field(obj, "trials")?,
            seed: field(obj, "seed")?
                .as_u64()
                .ok_or_else(|| Error::parse_field("seed", "expected a non-negative integer"))?,
        })),
    }
}

/// Parses a certificate file into the algebra it concerns and its claims.
pub fn certificate_from_json(value: &Value) -> Result<(LieAlgebra, NilpotencyCertificate)> {
    let obj = value.as_object().ok_or_else(|| Error::parse_field("<root>", "expected a JSON object"))?;
    let g = match field(obj, "algebra")? {
        Value::String(name) => catalog::builtin(name)?.algebra,
        other => algebra_from_json(other)?,
    };
    let n = g.dim();
    let verdict = match field(obj, "verdict")?.as_str() {
        Some("Nilpotent") => Verdict::Nilpotent,
        Some("NotNilpotent") => Verdict::NotNilpotent,
        _ => return Err(Error::parse_field("verdict", "expected Nilpotent or NotNilpotent")),
    };
    let search = search_params(obj)?;
    let kind = field(obj, "evidence_kind")?.as_str().unwrap_or_default();
    let evidence = match kind {
        "InvertibleLDer" => {
            let rows = rows_field(obj, "matrix", n)?;
            if rows.len() != n {
                return Err(Error::parse_field("matrix", format!("expected {n} rows")));
            }
            let source = field(obj, "source")?
                .as_str()
                .and_then(parse_source)
                .ok_or_else(|| Error::parse_field("source", "unknown source"))?;
            Evidence::InvertibleLder(InvertibleLder {
                order: usize_field(obj, "order")?,
                operator: Matrix::from_rows(rows)?,
                det: rational_field(obj, "det")?,
                source,
            })
        }
        "LcsVanishing" => {
            let dims = field(obj, "series_dims")?
                .as_array()
                .and_then(|a| a.iter().map(|d| d.as_u64().map(|d| d as usize)).collect())
                .ok_or_else(|| Error::parse_field("series_dims", "expected an array of integers"))?;
            Evidence::LcsVanishing { class: usize_field(obj, "class")?, dims }
        }
        "LcsStabilizedNonzero" => {
            Evidence::LcsStabilizedNonzero { stable: Subspace::span(n, &rows_field(obj, "stable_basis", n)?) }
        }
        "NoInvertibleFound" => {
            let s = search.ok_or_else(|| Error::parse_field("trials", "missing"))?;
            Evidence::NoInvertibleFound {
                max_order: usize_field(obj, "order")?,
                trials: s.trials,
                seed: s.seed,
            }
        }
        other => return Err(Error::parse_field("evidence_kind", format!("unknown kind `{other}`"))),
    };
    if matches!(evidence, Evidence::InvertibleLder(_)) && search.is_none() {
        return Err(Error::parse_field("trials", "missing"));
    }
    let cert = NilpotencyCertificate { algebra: g.name().to_string(), verdict, evidence, search };
    Ok((g, cert))
}

/// Named checks performed on a certificate; it is accepted when all pass.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub algebra: String,
    pub evidence_kind: &'static str,
    pub checks: Vec<(String, bool)>,
}

impl VerificationReport {
    pub fn holds(&self) -> bool {
        self.checks.iter().all(|(_, ok)| *ok)
    }
}

/// Re-checks every claim of a certificate from scratch. Malformed files are
/// errors; false claims yield a report that does not hold.
pub fn verify_certificate(value: &Value, cap: TupleCap) -> Result<VerificationReport> {
    let (g, cert) = certificate_from_json(value)?;
    let mut checks = Vec::new();
    let mut check = |name: &str, ok: bool| checks.push((name.to_string(), ok));
    let lcs = g.lower_central_series();
    match &cert.evidence {
        Evidence::InvertibleLder(f) => {
            check("verdict is Nilpotent", cert.verdict == Verdict::Nilpotent);
            let derivation = f.order >= 1 && is_leibniz_derivation(&g, &f.operator, f.order)?;
            check("matrix satisfies the Leibniz identity at the recorded order", derivation);
            let det = f.operator.det()?;
            check("recorded determinant equals the recomputed one", det == f.det);
            check("determinant is nonzero", !det.is_zero());
            let reproduced = if !derivation {
                false
            } else if f.source == Source::Construction {
                let p = construct_semisimple_lder(&g)?;
                p.order == f.order && p.operator == f.operator
            } else {
                let s = cert.search.expect("parsed with search parameters");
                let space = LeibnizSolver::new(&g).with_cap(cap).lder(f.order)?;
                matches!(
                    find_invertible_element(&space, s.trials, s.seed),
                    InvertibleSearch::Found(ref r) if r.operator == f.operator && r.source == f.source
                )
            };
            check("search reproduces the recorded matrix", reproduced);
        }
        Evidence::LcsVanishing { class, dims } => {
            check("verdict is Nilpotent", cert.verdict == Verdict::Nilpotent);
            let vanishes = lcs.reaches_zero() && lcs.terms.len() == class + 1;
            check("lower central series vanishes exactly after the recorded class", vanishes);
            check("recorded series dimensions match", lcs.dims() == *dims);
        }
        Evidence::LcsStabilizedNonzero { stable } => {
            check("verdict is NotNilpotent", cert.verdict == Verdict::NotNilpotent);
            check("stable term is nonzero", !stable.is_zero());
            let full = Subspace::full(g.dim());
            check(
                "stable term equals its bracket with the algebra",
                g.subspace_bracket(&full, stable) == *stable,
            );
            check("stable term is the limit of the lower central series", lcs.last() == stable);
        }
        Evidence::NoInvertibleFound { max_order, trials, seed } => {
            check("verdict is NotNilpotent", cert.verdict == Verdict::NotNilpotent);
            check("orders up to the dimension were tried", *max_order >= g.dim());
            let solver = LeibnizSolver::new(&g).with_cap(cap);
            let mut none = true;
            for k in 1..=*max_order {
                if find_invertible_element(&solver.lder(k)?, *trials, *seed).found().is_some() {
                    none = false;
                    break;
                }
            }
            check("search reproduces no invertible element", none);
            check("lower central series does not vanish", !lcs.reaches_zero());
        }
    }
    Ok(VerificationReport { algebra: cert.algebra, evidence_kind: cert.evidence.kind(), checks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::tests::{h3, sl2};
    use crate::nilpotency::{minimal_invertible_order, nilpotency_by_lcs, nilpotency_by_main_theorem};

    fn emitted(g: &LieAlgebra) -> Vec<Value> {
        let s = LeibnizSolver::new(g);
        let mut v = vec![
            certificate_to_json(&nilpotency_by_main_theorem(&s, 20, 0).unwrap(), g),
            certificate_to_json(&nilpotency_by_lcs(g), g),
        ];
        if let Ok(f) = minimal_invertible_order(&s, 20, 0) {
            let cert = NilpotencyCertificate {
                algebra: g.name().into(),
                verdict: Verdict::Nilpotent,
                evidence: Evidence::InvertibleLder(f),
                search: Some(SearchParams { trials: 20, seed: 0 }),
            };
            v.push(certificate_to_json(&cert, g));
        }
        v
    }

    #[test]
    fn emitted_certificates_verify() {
        for g in [h3(), sl2(), LieAlgebra::abelian(2)] {
            for c in emitted(&g) {
                let r = verify_certificate(&c, TupleCap::default()).unwrap();
                assert!(r.holds(), "{}: {r:?}", g.name());
            }
        }
    }

    #[test]
    fn perturbed_entries_are_rejected() {
        let g = h3();
        for c in emitted(&g).into_iter().filter(|c| !c["matrix"].is_null()) {
            for r in 0..3 {
                for col in 0..3 {
                    let mut bad = c.clone();
                    let entry = parse_rational(bad["matrix"][r][col].as_str().unwrap()).unwrap();
                    bad["matrix"][r][col] =
                        format_rational(&(entry + Rational::from_integer(1.into()))).into();
                    assert!(!verify_certificate(&bad, TupleCap::default()).unwrap().holds());
                }
            }
        }
    }

    #[test]
    fn false_claims_fail() {
        let g = sl2();
        let mut c =
            certificate_to_json(&nilpotency_by_main_theorem(&LeibnizSolver::new(&g), 20, 0).unwrap(), &g);
        c["verdict"] = "Nilpotent".into();
        assert!(!verify_certificate(&c, TupleCap::default()).unwrap().holds());
        let h = h3();
        let mut c = certificate_to_json(&nilpotency_by_lcs(&h), &h);
        c["class"] = 3.into();
        assert!(!verify_certificate(&c, TupleCap::default()).unwrap().holds());
    }

    #[test]
    fn builtin_names_and_malformed_files() {
        let h = h3();
        let mut c = certificate_to_json(&nilpotency_by_lcs(&h), &h);
        c["algebra"] = "heisenberg_3".into();
        assert!(verify_certificate(&c, TupleCap::default()).unwrap().holds());
        c["evidence_kind"] = "Hunch".into();
        assert!(matches!(verify_certificate(&c, TupleCap::default()), Err(Error::Parse { .. })));
        c["algebra"] = "no_such_algebra".into();
        assert!(matches!(verify_certificate(&c, TupleCap::default()), Err(Error::UnknownName(_))));
    }
}
