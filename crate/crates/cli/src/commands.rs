use std::fmt::Write as _;

use lieder_core::catalog::{self, io::algebra_to_json};
use lieder_core::degeneration::{default_samples, dimension_monotonicity_check};
use lieder_core::leibniz::{LeibnizSolver, TupleCap};
use lieder_core::linalg::{format_rational, Matrix, Rational, Subspace};
use lieder_core::nilpotency::{
    certificate_to_json, construct_semisimple_lder, construct_strict_witness, find_invertible_element,
    grading_check, nilpotency_by_main_theorem, verify_certificate, Evidence, InvertibleSearch, Source,
};
use lieder_core::{Error, LieAlgebra, Result};
use serde_json::{json, Value};

use crate::args::{CatalogAction, Command, SearchArgs};
use crate::input;

/// What a command prints, and whether the property it checks holds.
pub struct Outcome {
    pub ok: bool,
    pub text: String,
    pub json: Value,
    /// Print the elements of a JSON array one per line.
    pub json_lines: bool,
}

impl Outcome {
    fn new(ok: bool, text: String, json: Value) -> Self {
        Outcome { ok, text, json, json_lines: false }
    }

    fn ok(text: String, json: Value) -> Self {
        Self::new(true, text, json)
    }
}

fn matrix_json(m: &Matrix) -> Value {
    json!(m.to_strings())
}

fn vector_json(v: &[Rational]) -> Value {
    json!(v.iter().map(format_rational).collect::<Vec<_>>())
}

fn basis_json(s: &Subspace) -> Value {
    json!(s.basis_vectors().map(|v| v.iter().map(format_rational).collect::<Vec<_>>()).collect::<Vec<_>>())
}

fn show_vector(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(format_rational).collect();
    format!("({})", parts.join(", "))
}

fn source_label(s: Source) -> String {
    match s {
        Source::Identity => "identity".into(),
        Source::BasisElement(i) => format!("basis:{i}"),
        Source::RandomTrial(t) => format!("trial:{t}"),
        Source::Construction => "construction".into(),
    }
}

fn require_trials(s: &SearchArgs) -> Result<()> {
    if s.trials == 0 {
        return Err(Error::PreconditionViolated("--trials must be at least 1".into()));
    }
    Ok(())
}

pub fn run(command: &Command, cap: TupleCap) -> Result<Outcome> {
    match command {
        Command::Check { file } => check(file),
        Command::Info { file } => info(&input::algebra(file)?),
        Command::Lder { file, order, basis } => lder(&input::algebra(file)?, *order, *basis, cap),
        Command::Chain { file, max_order } => chain(&input::algebra(file)?, *max_order, cap),
        Command::Invertible { file, order, search } => {
            invertible(&input::algebra(file)?, *order, search, cap)
        }
        Command::Nilpotent { file, search } => nilpotent(&input::algebra(file)?, search, cap),
        Command::ConstructP { file } => construct_p(&input::algebra(file)?),
        Command::Witness { file, k, l } => witness(&input::algebra(file)?, *k, *l),
        Command::Grading { file, op, order } => grading(&input::algebra(file)?, op, *order, cap),
        Command::Star { file, m, k } => star(&input::algebra(file)?, m, *k, cap),
        Command::Radinv { file, order } => radinv(&input::algebra(file)?, *order, cap),
        Command::Degenerate { family, order, samples } => degenerate(family, *order, samples, cap),
        Command::Catalog { action } => catalog_cmd(action.as_ref(), cap),
        Command::Verify { certfile } => verify(certfile, cap),
    }
}

fn check(file: &str) -> Result<Outcome> {
    let g = input::unchecked_algebra(file)?;
    let r = g.validate();
    let anti: Vec<[usize; 2]> = r.antisymmetry_failures.iter().map(|&(i, j)| [i + 1, j + 1]).collect();
    let jacobi: Vec<[usize; 3]> =
        r.failing_triples.iter().map(|f| [f.triple.0 + 1, f.triple.1 + 1, f.triple.2 + 1]).collect();
    let text = if r.is_ok() {
        format!("{}: valid Lie algebra of dimension {}\n", g.name(), g.dim())
    } else {
        format!("{}: {}\n", g.name(), r.summary())
    };
    Ok(Outcome::new(
        r.is_ok(),
        text,
        json!({
            "algebra": g.name(),
            "dim": g.dim(),
            "valid": r.is_ok(),
            "antisymmetry_failures": anti,
            "jacobi_failures": jacobi,
        }),
    ))
}

fn info(g: &LieAlgebra) -> Result<Outcome> {
    let lcs = g.lower_central_series().dims();
    let derived = g.derived_series().dims();
    let upper = g.upper_central_series().dims();
    let center = g.center().dim();
    let radical = g.radical()?.dim();
    let tags = g.structural_predicates()?.tags();
    let class = g.nilpotency_class();
    let mut text = String::new();
    writeln!(text, "algebra: {}", g.name()).unwrap();
    writeln!(text, "dim: {}", g.dim()).unwrap();
    writeln!(text, "class: {}", class.map_or("not nilpotent".to_string(), |c| c.to_string())).unwrap();
    writeln!(text, "lower central series dims: {lcs:?}").unwrap();
    writeln!(text, "derived series dims: {derived:?}").unwrap();
    writeln!(text, "upper central series dims: {upper:?}").unwrap();
    writeln!(text, "center dim: {center}").unwrap();
    writeln!(text, "radical dim: {radical}").unwrap();
    writeln!(text, "tags: {}", tags.join(", ")).unwrap();
    Ok(Outcome::ok(
        text,
        json!({
            "algebra": g.name(),
            "dim": g.dim(),
            "class": class,
            "lcs_dims": lcs,
            "derived_dims": derived,
            "upper_central_dims": upper,
            "center_dim": center,
            "radical_dim": radical,
            "tags": tags,
        }),
    ))
}

fn lder(g: &LieAlgebra, order: usize, basis: bool, cap: TupleCap) -> Result<Outcome> {
    let space = LeibnizSolver::new(g).with_cap(cap).lder(order)?;
    let mut text = format!("dim LDer_{}({}) = {}\n", order, g.name(), space.dim());
    if basis {
        for (i, p) in space.basis_matrices().iter().enumerate() {
            write!(text, "basis element {}:\n{p}", i + 1).unwrap();
        }
    }
    Ok(Outcome::ok(text, space.to_json()))
}

fn chain(g: &LieAlgebra, max_order: usize, cap: TupleCap) -> Result<Outcome> {
    let r = LeibnizSolver::new(g).with_cap(cap).verify_chain(max_order)?;
    let mut text = format!("Inn: {}\nDer: {}\n", r.inner_dim, r.der_dim);
    for (k, d) in &r.lder_dims {
        writeln!(text, "LDer_{k}: {d}").unwrap();
    }
    writeln!(text, "gl: {}", r.gl_dim).unwrap();
    for i in &r.inclusions {
        writeln!(text, "{}: {}", i.label, if i.holds { "holds" } else { "FAILS" }).unwrap();
    }
    let lder: serde_json::Map<String, Value> =
        r.lder_dims.iter().map(|(k, d)| (k.to_string(), json!(d))).collect();
    let inclusions: Vec<Value> =
        r.inclusions.iter().map(|i| json!({"label": i.label, "holds": i.holds})).collect();
    Ok(Outcome::new(
        r.holds(),
        text,
        json!({
            "algebra": g.name(),
            "max_order": max_order,
            "inner_dim": r.inner_dim,
            "der_dim": r.der_dim,
            "lder_dims": lder,
            "gl_dim": r.gl_dim,
            "inclusions": inclusions,
            "holds": r.holds(),
        }),
    ))
}

fn invertible(g: &LieAlgebra, order: usize, search: &SearchArgs, cap: TupleCap) -> Result<Outcome> {
    require_trials(search)?;
    let seed = search.seed.resolve();
    let space = LeibnizSolver::new(g).with_cap(cap).lder(order)?;
    let result = find_invertible_element(&space, search.trials, seed);
    Ok(match result {
        InvertibleSearch::Found(f) => Outcome {
            ok: true,
            text: format!(
                "invertible element of LDer_{order} found ({}), det = {}, seed = {seed}\n{}",
                source_label(f.source),
                format_rational(&f.det),
                f.operator
            ),
            json_lines: false,
            json: json!({
                "algebra": g.name(),
                "order": order,
                "found": true,
                "matrix": matrix_json(&f.operator),
                "det": format_rational(&f.det),
                "source": source_label(f.source),
                "trials": search.trials,
                "seed": seed,
            }),
        },
        InvertibleSearch::NotFound { .. } => Outcome {
            ok: false,
            text: format!(
                "no invertible element of LDer_{order} found in {} trials, seed = {seed}\n",
                search.trials
            ),
            json_lines: false,
            json: json!({
                "algebra": g.name(),
                "order": order,
                "found": false,
                "matrix": null,
                "det": null,
                "source": null,
                "trials": search.trials,
                "seed": seed,
            }),
        },
    })
}

fn nilpotent(g: &LieAlgebra, search: &SearchArgs, cap: TupleCap) -> Result<Outcome> {
    require_trials(search)?;
    let seed = search.seed.resolve();
    let cert = nilpotency_by_main_theorem(&LeibnizSolver::new(g).with_cap(cap), search.trials, seed)?;
    let mut text = format!("{}: {:?}\n", g.name(), cert.verdict);
    match &cert.evidence {
        Evidence::InvertibleLder(f) => {
            write!(
                text,
                "invertible Leibniz-derivation of order {} ({}), det = {}\n{}",
                f.order,
                source_label(f.source),
                format_rational(&f.det),
                f.operator
            )
            .unwrap();
        }
        Evidence::NoInvertibleFound { max_order, trials, .. } => {
            writeln!(text, "no invertible element found at orders 1..={max_order} ({trials} trials each)")
                .unwrap();
        }
        _ => {}
    }
    writeln!(text, "seed: {seed}").unwrap();
    Ok(Outcome::new(cert.is_nilpotent(), text, certificate_to_json(&cert, g)))
}

fn construct_p(g: &LieAlgebra) -> Result<Outcome> {
    let p = construct_semisimple_lder(g)?;
    let det = p.operator.det()?;
    let text =
        format!("class {}, order {}, det = {}\n{}", p.class, p.order, format_rational(&det), p.operator);
    Ok(Outcome::ok(
        text,
        json!({
            "algebra": g.name(),
            "class": p.class,
            "order": p.order,
            "complement": p.complement.iter().map(|i| i + 1).collect::<Vec<_>>(),
            "tail_dim": p.tail.dim(),
            "det": format_rational(&det),
            "matrix": matrix_json(&p.operator),
        }),
    ))
}

fn witness(g: &LieAlgebra, k: usize, l: usize) -> Result<Outcome> {
    let w = construct_strict_witness(g, k, l)?;
    let tuple: Vec<usize> = w.tuple.iter().map(|i| i + 1).collect();
    let text = format!(
        "tuple {tuple:?}, u = {}, z = {}\nin LDer_{k}, not in LDer_{l}\n{}",
        show_vector(&w.u),
        show_vector(&w.z),
        w.operator
    );
    Ok(Outcome::ok(
        text,
        json!({
            "algebra": g.name(),
            "order": w.order,
            "excluded_order": w.excluded_order,
            "tuple": tuple,
            "u": vector_json(&w.u),
            "z": vector_json(&w.z),
            "matrix": matrix_json(&w.operator),
        }),
    ))
}

fn grading(g: &LieAlgebra, op: &str, order: usize, cap: TupleCap) -> Result<Outcome> {
    let text = input::read_text(op)?.ok_or_else(|| {
        Error::Io(std::io::Error::new(std::io::ErrorKind::NotFound, format!("no such file `{op}`")))
    })?;
    let p = catalog::io::parse_operator(&text, g.dim())?;
    let r = grading_check(&LeibnizSolver::new(g).with_cap(cap), &p, order)?;
    let mut out = String::new();
    for (a, s) in &r.decomposition.parts {
        writeln!(out, "eigenvalue {}: dim {}", format_rational(a), s.dim()).unwrap();
    }
    let failures: Vec<_> = r.tuples.iter().filter(|t| !t.holds).collect();
    writeln!(out, "{} eigenvalue tuples, {} failing", r.tuples.len(), failures.len()).unwrap();
    let parts: Vec<Value> = r
        .decomposition
        .parts
        .iter()
        .map(|(a, s)| json!({"eigenvalue": format_rational(a), "dim": s.dim(), "basis": basis_json(s)}))
        .collect();
    let tuples: Vec<Value> = r
        .tuples
        .iter()
        .map(|t| {
            json!({
                "eigenvalues": t.eigenvalues.iter().map(format_rational).collect::<Vec<_>>(),
                "target": format_rational(&t.target),
                "bracket_dim": t.bracket_dim,
                "holds": t.holds,
            })
        })
        .collect();
    Ok(Outcome::new(
        r.holds(),
        out,
        json!({
            "algebra": g.name(),
            "order": order,
            "holds": r.holds(),
            "parts": parts,
            "tuples": tuples,
        }),
    ))
}

fn star(g: &LieAlgebra, m: &Rational, k: usize, cap: TupleCap) -> Result<Outcome> {
    let s = LeibnizSolver::new(g).with_cap(cap).star_identity_space(m, k)?;
    let text = format!("dim of solutions with m = {}, k = {k}: {}\n", format_rational(m), s.dim());
    let basis: Vec<Value> = s.basis_matrices().iter().map(matrix_json).collect();
    Ok(Outcome::ok(
        text,
        json!({"algebra": g.name(), "m": format_rational(m), "k": k, "dim": s.dim(), "basis": basis}),
    ))
}

fn radinv(g: &LieAlgebra, order: usize, cap: TupleCap) -> Result<Outcome> {
    let holds = LeibnizSolver::new(g).with_cap(cap).radical_invariance_check(order)?;
    let radical = g.radical()?.dim();
    let text = format!(
        "radical of dim {radical} is {}invariant under LDer_{order}\n",
        if holds { "" } else { "NOT " }
    );
    Ok(Outcome::new(
        holds,
        text,
        json!({"algebra": g.name(), "order": order, "radical_dim": radical, "holds": holds}),
    ))
}

fn degenerate(family: &str, order: usize, samples: &[Rational], cap: TupleCap) -> Result<Outcome> {
    let f = input::family(family)?;
    let samples = if samples.is_empty() { default_samples() } else { samples.to_vec() };
    let r = dimension_monotonicity_check(&f, order, &samples, cap)?;
    let mut text = String::new();
    for (t, d) in &r.sample_dims {
        writeln!(text, "t = {}: dim LDer_{order} = {d}", format_rational(t)).unwrap();
    }
    writeln!(
        text,
        "t = 0: dim LDer_{order} = {}\ngeneric {} -> limit {}: {}",
        r.limit_dim,
        r.generic_dim,
        r.limit_dim,
        match (r.monotone, r.strict) {
            (true, true) => "strictly increasing",
            (true, false) => "equal",
            _ => "NOT monotone",
        }
    )
    .unwrap();
    let sample_json: Vec<Value> =
        r.sample_dims.iter().map(|(t, d)| json!({"t": format_rational(t), "dim": d})).collect();
    Ok(Outcome::new(
        r.monotone,
        text,
        json!({
            "family": f.name(),
            "order": order,
            "samples": sample_json,
            "generic_dim": r.generic_dim,
            "limit_dim": r.limit_dim,
            "monotone": r.monotone,
            "strict": r.strict,
        }),
    ))
}

fn catalog_cmd(action: Option<&CatalogAction>, cap: TupleCap) -> Result<Outcome> {
    match action {
        None | Some(CatalogAction::List) => {
            let entries = catalog::all();
            let mut text = String::new();
            for e in &entries {
                writeln!(text, "{:<20} dim {:<2} {}", e.name(), e.algebra.dim(), e.tags.join(", ")).unwrap();
            }
            for name in catalog::family_names() {
                writeln!(text, "{name:<20} family in t").unwrap();
            }
            let list: Vec<Value> = entries
                .iter()
                .map(|e| json!({"name": e.name(), "dim": e.algebra.dim(), "tags": e.tags}))
                .collect();
            Ok(Outcome::ok(text, json!({"algebras": list, "families": catalog::family_names()})))
        }
        Some(CatalogAction::Show { name }) => {
            let e = catalog::builtin(name)?;
            let doc = algebra_to_json(&e.algebra);
            let text = serde_json::to_string_pretty(&doc).expect("serializable") + "\n";
            let mut j = doc;
            j["tags"] = json!(e.tags);
            j["class"] = json!(e.algebra.nilpotency_class());
            Ok(Outcome::ok(text, j))
        }
        Some(CatalogAction::Table { max_order, search }) => {
            require_trials(search)?;
            let seed = search.seed.resolve();
            let rows = catalog::invariant_table(&catalog::all(), *max_order, search.trials, seed, cap)?;
            let text = catalog::rows_to_csv(&rows, *max_order)?;
            Ok(Outcome {
                json_lines: true,
                ..Outcome::ok(text, Value::Array(rows.iter().map(catalog::row_to_json).collect()))
            })
        }
    }
}

fn verify(certfile: &str, cap: TupleCap) -> Result<Outcome> {
    let value = input::json(certfile)?;
    let r = verify_certificate(&value, cap)?;
    let mut text =
        format!("{} ({}): {}\n", r.algebra, r.evidence_kind, if r.holds() { "VERIFIED" } else { "REJECTED" });
    for (name, ok) in &r.checks {
        writeln!(text, "  [{}] {name}", if *ok { "ok" } else { "FAIL" }).unwrap();
    }
    let checks: Vec<Value> = r.checks.iter().map(|(c, ok)| json!({"check": c, "holds": ok})).collect();
    Ok(Outcome::new(
        r.holds(),
        text,
        json!({
            "algebra": r.algebra,
            "evidence_kind": r.evidence_kind,
            "holds": r.holds(),
            "checks": checks,
        }),
    ))
}
