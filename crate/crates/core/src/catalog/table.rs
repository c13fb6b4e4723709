use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::leibniz::{LeibnizSolver, TupleCap};
use crate::nilpotency::minimal_invertible_order;

use super::CatalogEntry;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub name: String,
    pub n: usize,
    /// `None` when the algebra is not nilpotent.
    pub class: Option<usize>,
    pub inner_dim: usize,
    pub der_dim: usize,
    /// `(k, dim LDer_k)` for `k = 2..=k_max`.
    pub lder_dims: Vec<(usize, usize)>,
    pub min_invertible_order: Option<usize>,
}

fn mismatch(name: &str, field: &str, recorded: impl ToString, computed: impl ToString) -> Error {
    Error::ExpectedMismatch {
        name: name.to_string(),
        field: field.to_string(),
        recorded: recorded.to_string(),
        computed: computed.to_string(),
    }
}

fn show_class(c: Option<usize>) -> String {
    c.map_or_else(|| "NotNilpotent".to_string(), |c| c.to_string())
}

/// One row per entry; recorded invariants must agree with the recomputed ones.
pub fn invariant_table(
    entries: &[CatalogEntry],
    k_max: usize,
    trials: usize,
    seed: u64,
    cap: TupleCap,
) -> Result<Vec<TableRow>> {
    entries
        .iter()
        .map(|e| {
            let g = &e.algebra;
            let solver = LeibnizSolver::new(g).with_cap(cap);
            let class = g.nilpotency_class();
            let inner_dim = solver.inner().dim();
            let der_dim = solver.der()?.dim();
            let mut lder_dims = Vec::new();
            for k in 2..=k_max {
                lder_dims.push((k, solver.lder(k)?.dim()));
            }
            let min_invertible_order = match class {
                Some(_) => Some(minimal_invertible_order(&solver, trials, seed)?.order),
                None => None,
            };
            let row = TableRow {
                name: e.name().to_string(),
                n: g.dim(),
                class,
                inner_dim,
                der_dim,
                lder_dims,
                min_invertible_order,
            };
            check_expected(e, &row, &solver)?;
            Ok(row)
        })
        .collect()
}

fn check_expected(e: &CatalogEntry, row: &TableRow, solver: &LeibnizSolver<'_>) -> Result<()> {
    let x = &e.expected;
    let name = e.name();
    if let Some(c) = x.class {
        if c != row.class {
            return Err(mismatch(name, "class", show_class(c), show_class(row.class)));
        }
    }
    if let Some(d) = x.inner_dim {
        if d != row.inner_dim {
            return Err(mismatch(name, "dim_inn", d, row.inner_dim));
        }
    }
    for &(k, d) in &x.lder_dims {
        let computed = if k == 1 {
            Some(row.der_dim)
        } else {
            row.lder_dims.iter().find(|(j, _)| *j == k).map(|&(_, d)| d)
        };
        if let Some(c) = computed {
            if c != d {
                return Err(mismatch(name, &format!("dim_lder_{k}"), d, c));
            }
        }
    }
    if let Some(d) = x.radical_dim {
        let r = solver.algebra().radical()?.dim();
        if d != r {
            return Err(mismatch(name, "dim_radical", d, r));
        }
    }
    Ok(())
}

fn header(k_max: usize) -> Vec<String> {
    let mut h: Vec<String> = ["name", "n", "class", "dim_inn", "dim_der"].map(String::from).to_vec();
    h.extend((2..=k_max).map(|k| format!("dim_lder_{k}")));
    h.push("min_invertible_order".into());
    h
}

/// RFC 4180 CSV with `-` for missing values.
pub fn rows_to_csv(rows: &[TableRow], k_max: usize) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header(k_max))?;
    for r in rows {
        let mut rec = vec![
            r.name.clone(),
            r.n.to_string(),
            show_class(r.class),
            r.inner_dim.to_string(),
            r.der_dim.to_string(),
        ];
        rec.extend(r.lder_dims.iter().map(|(_, d)| d.to_string()));
        rec.push(r.min_invertible_order.map_or_else(|| "-".to_string(), |m| m.to_string()));
        w.write_record(rec)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("utf-8 fields"))
}

pub fn row_to_json(r: &TableRow) -> Value {
    let mut m = Map::new();
    m.insert("name".into(), r.name.clone().into());
    m.insert("n".into(), r.n.into());
    m.insert("class".into(), r.class.map_or(Value::Null, Value::from));
    m.insert("dim_inn".into(), r.inner_dim.into());
    m.insert("dim_der".into(), r.der_dim.into());
    for (k, d) in &r.lder_dims {
        m.insert(format!("dim_lder_{k}"), (*d).into());
    }
    m.insert("min_invertible_order".into(), r.min_invertible_order.map_or(Value::Null, Value::from));
    Value::Object(m)
}

/// One JSON object per line, `null` for missing values.
pub fn rows_to_json_lines(rows: &[TableRow]) -> String {
    rows.iter().map(|r| row_to_json(r).to_string() + "\n").collect()
}
