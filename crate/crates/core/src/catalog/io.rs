//! JSON files for algebras and parametric families.
//!
//! ```json
//! {"name": "heisenberg_3", "dim": 3, "brackets": [{"i": 1, "j": 2, "c": {"3": "1"}}]}
//! ```
//!
//! Indices are 1-based, only pairs `i < j` are listed and omitted pairs are
//! zero. Coefficients are `"p/q"` strings; in family files they may be
//! polynomials in `t`.

use std::collections::BTreeSet;
use std::path::Path;

use num_traits::Zero;
use serde_json::{json, Map, Value};

use crate::degeneration::{parse_poly, ParamLieAlgebra, PARAMETER};
use crate::error::{Error, Result};
use crate::liealg::{Bracket, LieAlgebra};
use crate::linalg::{format_rational, parse_rational, Matrix, Rational, UniPoly};

/// Contents of an algebra or family file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Loaded {
    Algebra(LieAlgebra),
    Family(ParamLieAlgebra),
}

struct RawFile<T> {
    name: String,
    dim: usize,
    brackets: Vec<Bracket<T>>,
}

fn field_err(field: impl Into<String>, message: impl Into<String>) -> Error {
    Error::parse_field(field, message)
}

fn read_raw<T>(value: &Value, coeff: impl Fn(&Value) -> Option<T>) -> Result<RawFile<T>> {
    let obj = value.as_object().ok_or_else(|| field_err("<root>", "expected a JSON object"))?;
    let name = obj
        .get("name")
        .and_then(Value::as_str)
        .ok_or_else(|| field_err("name", "expected a string"))?
        .to_string();
    let dim = obj
        .get("dim")
        .and_then(Value::as_u64)
        .filter(|&d| d >= 1)
        .ok_or_else(|| field_err("dim", "expected a positive integer"))? as usize;
    let entries = match obj.get("brackets") {
        None => &[][..],
        Some(Value::Array(a)) => &a[..],
        Some(_) => return Err(field_err("brackets", "expected an array")),
    };
    let mut seen = BTreeSet::new();
    let mut brackets = Vec::with_capacity(entries.len());
    for (at, entry) in entries.iter().enumerate() {
        let path = format!("brackets[{at}]");
        let index = |key: &str| -> Result<usize> {
            entry
                .get(key)
                .and_then(Value::as_u64)
                .filter(|&x| x >= 1 && x as usize <= dim)
                .map(|x| x as usize - 1)
                .ok_or_else(|| field_err(format!("{path}.{key}"), format!("expected an index in 1..={dim}")))
        };
        let (i, j) = (index("i")?, index("j")?);
        if i > j {
            return Err(field_err(&path, "only pairs with i ≤ j may be listed"));
        }
        if !seen.insert((i, j)) {
            return Err(field_err(&path, format!("pair ({}, {}) listed twice", i + 1, j + 1)));
        }
        let c = entry
            .get("c")
            .and_then(Value::as_object)
            .ok_or_else(|| field_err(format!("{path}.c"), "expected an object"))?;
        let mut terms = Vec::with_capacity(c.len());
        for (key, v) in c {
            let k = key.parse::<usize>().ok().filter(|&k| k >= 1 && k <= dim).ok_or_else(|| {
                field_err(format!("{path}.c"), format!("key `{key}` is not an index in 1..={dim}"))
            })?;
            let value =
                coeff(v).ok_or_else(|| field_err(format!("{path}.c.{key}"), "malformed coefficient"))?;
            terms.push((k - 1, value));
        }
        brackets.push((i, j, terms));
    }
    Ok(RawFile { name, dim, brackets })
}

fn rational_coeff(v: &Value) -> Option<Rational> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) => n.as_i64().map(|x| Rational::from_integer(x.into())),
        _ => None,
    }
}

fn poly_coeff(v: &Value) -> Option<UniPoly> {
    match v {
        Value::String(s) => parse_poly(s, PARAMETER),
        other => rational_coeff(other).map(UniPoly::constant),
    }
}

/// Builds an algebra from its JSON value without checking the identities.
pub fn algebra_from_json_unchecked(value: &Value) -> Result<LieAlgebra> {
    let raw = read_raw(value, rational_coeff)?;
    LieAlgebra::from_brackets(raw.name, raw.dim, &raw.brackets)
}

/// Builds and validates an algebra from its JSON value.
pub fn algebra_from_json(value: &Value) -> Result<LieAlgebra> {
    let g = algebra_from_json_unchecked(value)?;
    let report = g.validate();
    if !report.is_ok() {
        return Err(Error::ValidationFailed(report.summary()));
    }
    Ok(g)
}

/// Builds a family and checks its identities as polynomials in `t`.
pub fn family_from_json(value: &Value) -> Result<ParamLieAlgebra> {
    let raw = read_raw(value, poly_coeff)?;
    let f = ParamLieAlgebra::from_brackets(raw.name, raw.dim, &raw.brackets)?;
    if !f.is_antisymmetric() {
        return Err(Error::ValidationFailed("antisymmetry fails".into()));
    }
    if let Some(bad) = f.polynomial_jacobi_failures().first() {
        let (i, j, k) = bad.triple;
        return Err(Error::ValidationFailed(format!(
            "Jacobi identity fails on ({}, {}, {})",
            i + 1,
            j + 1,
            k + 1
        )));
    }
    Ok(f)
}

pub fn parse_algebra(text: &str) -> Result<LieAlgebra> {
    algebra_from_json(&serde_json::from_str(text)?)
}

pub fn parse_family(text: &str) -> Result<ParamLieAlgebra> {
    family_from_json(&serde_json::from_str(text)?)
}

/// An algebra file, or a family file when some coefficient mentions `t`.
pub fn parse_any(text: &str) -> Result<Loaded> {
    let value: Value = serde_json::from_str(text)?;
    let mentions_parameter = value
        .get("brackets")
        .and_then(Value::as_array)
        .into_iter()
        .flatten()
        .filter_map(|b| b.get("c").and_then(Value::as_object))
        .flat_map(|c| c.values())
        .any(|v| v.as_str().is_some_and(|s| s.contains(PARAMETER)));
    if mentions_parameter {
        family_from_json(&value).map(Loaded::Family)
    } else {
        algebra_from_json(&value).map(Loaded::Algebra)
    }
}

pub fn load(path: impl AsRef<Path>) -> Result<Loaded> {
    parse_any(&std::fs::read_to_string(path)?)
}

pub fn load_algebra(path: impl AsRef<Path>) -> Result<LieAlgebra> {
    parse_algebra(&std::fs::read_to_string(path)?)
}

pub fn load_family(path: impl AsRef<Path>) -> Result<ParamLieAlgebra> {
    parse_family(&std::fs::read_to_string(path)?)
}

/// An `n × n` operator given as rows of coefficients, either bare or under
/// a `"matrix"` key.
pub fn parse_operator(text: &str, n: usize) -> Result<Matrix> {
    let value: Value = serde_json::from_str(text)?;
    let (rows, path) = match &value {
        Value::Object(obj) => (obj.get("matrix"), "matrix"),
        other => (Some(other), "<root>"),
    };
    let rows = rows.and_then(Value::as_array).ok_or_else(|| field_err(path, "expected an array of rows"))?;
    if rows.len() != n {
        return Err(field_err(path, format!("expected {n} rows")));
    }
    let mut out = Vec::with_capacity(n);
    for (r, row) in rows.iter().enumerate() {
        let row = row
            .as_array()
            .filter(|row| row.len() == n)
            .ok_or_else(|| field_err(format!("{path}[{r}]"), format!("expected {n} entries")))?;
        let row = row
            .iter()
            .enumerate()
            .map(|(c, x)| {
                rational_coeff(x).ok_or_else(|| field_err(format!("{path}[{r}][{c}]"), "malformed entry"))
            })
            .collect::<Result<Vec<_>>>()?;
        out.push(row);
    }
    Matrix::from_rows(out)
}

fn brackets_json<T>(
    n: usize,
    coeff: impl Fn(usize, usize, usize) -> T,
    is_zero: impl Fn(&T) -> bool,
    render: impl Fn(&T) -> String,
) -> Vec<Value> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut c = Map::new();
            for k in 0..n {
                let v = coeff(i, j, k);
                if !is_zero(&v) {
                    c.insert((k + 1).to_string(), Value::String(render(&v)));
                }
            }
            if !c.is_empty() {
                out.push(json!({"i": i + 1, "j": j + 1, "c": c}));
            }
        }
    }
    out
}

pub fn algebra_to_json(g: &LieAlgebra) -> Value {
    let brackets = brackets_json(
        g.dim(),
        |i, j, k| g.structure_constant(i, j, k).clone(),
        Zero::is_zero,
        format_rational,
    );
    json!({"name": g.name(), "dim": g.dim(), "brackets": brackets})
}

pub fn family_to_json(f: &ParamLieAlgebra) -> Value {
    let brackets = brackets_json(
        f.dim(),
        |i, j, k| f.structure_constant(i, j, k).clone(),
        UniPoly::is_zero,
        |p| p.display_in(PARAMETER),
    );
    json!({"name": f.name(), "dim": f.dim(), "brackets": brackets})
}

pub fn algebra_to_string(g: &LieAlgebra) -> String {
    serde_json::to_string_pretty(&algebra_to_json(g)).expect("serializable") + "\n"
}

pub fn save_algebra(path: impl AsRef<Path>, g: &LieAlgebra) -> Result<()> {
    std::fs::write(path, algebra_to_string(g))?;
    Ok(())
}

pub fn save_family(path: impl AsRef<Path>, f: &ParamLieAlgebra) -> Result<()> {
    let text = serde_json::to_string_pretty(&family_to_json(f)).expect("serializable") + "\n";
    std::fs::write(path, text)?;
    Ok(())
}
