//! The acceptance suite: one PASS/FAIL line per criterion.

use std::process::{Command, ExitCode};
use std::time::Instant;

use lieder_core::catalog::{self, CatalogEntry};
use lieder_core::degeneration::dimension_monotonicity_check;
use lieder_core::leibniz::{verify_bracket_closure, LeibnizSolver, TupleCap};
use lieder_core::linalg::{rat, ratio, Matrix, UniPoly};
use lieder_core::nilpotency::{
    certificate_to_json, class_via_lder, construct_semisimple_lder, construct_strict_witness, grading_check,
    minimal_invertible_order, nilpotency_by_main_theorem, Verdict,
};
use lieder_core::{Error, LieAlgebra};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn err(e: Error) -> String {
    e.to_string()
}

fn entry(name: &str) -> CatalogEntry {
    catalog::builtin(name).expect("built-in entry")
}

fn nilpotent_entries() -> Vec<CatalogEntry> {
    catalog::all().into_iter().filter(|e| e.algebra.nilpotency_class().is_some()).collect()
}

fn chain_and_closure() -> Outcome {
    for e in catalog::all() {
        let s = LeibnizSolver::new(&e.algebra);
        let r = s.verify_chain(6).map_err(err)?;
        ensure!(r.holds(), "{}: chain fails: {:?}", e.name(), r.inclusions);
        for k in 1..=6 {
            let space = s.lder(k).map_err(err)?;
            ensure!(verify_bracket_closure(&space), "{}: LDer_{k} is not closed", e.name());
        }
    }
    Ok(())
}

fn divisibility() -> Outcome {
    for e in catalog::all() {
        let s = LeibnizSolver::new(&e.algebra);
        for (a, b) in [(1, 2), (1, 3), (2, 4), (2, 6), (3, 6)] {
            ensure!(s.verify_divisibility_inclusion(a, b).map_err(err)?, "{}: LDer_{a} ⊄ LDer_{b}", e.name());
        }
        ensure!(s.verify_sum_inclusion(2, 3).map_err(err)?, "{}: LDer_2 ∩ LDer_3 ⊄ LDer_5", e.name());
    }
    Ok(())
}

fn class_characterization() -> Outcome {
    for e in nilpotent_entries() {
        let via_lder = class_via_lder(&LeibnizSolver::new(&e.algebra)).map_err(err)?;
        ensure!(
            Some(via_lder) == e.algebra.nilpotency_class(),
            "{}: {via_lder} disagrees with the series",
            e.name()
        );
    }
    for (name, class) in [("heisenberg_3", 2), ("filiform_n4", 3), ("abelian_3", 1), ("heisenberg_5", 2)] {
        let got = class_via_lder(&LeibnizSolver::new(&entry(name).algebra)).map_err(err)?;
        ensure!(got == class, "{name}: class {got}, expected {class}");
    }
    Ok(())
}

fn diagonal(entries: &[i64]) -> Matrix {
    Matrix::diagonal(&entries.iter().map(|&x| rat(x)).collect::<Vec<_>>())
}

fn semisimple_construction() -> Outcome {
    for e in nilpotent_entries() {
        let p = construct_semisimple_lder(&e.algebra).map_err(err)?;
        let space = LeibnizSolver::new(&e.algebra).lder(p.order).map_err(err)?;
        ensure!(space.contains(&p.operator), "{}: operator not in LDer_{}", e.name(), p.order);
        ensure!(p.operator.det().map_err(err)? != rat(0), "{}: singular operator", e.name());
    }
    let h = construct_semisimple_lder(&entry("heisenberg_3").algebra).map_err(err)?;
    ensure!(h.order == 1 && h.operator == diagonal(&[1, 1, 2]), "h3: q = {}, P =\n{}", h.order, h.operator);
    let n = construct_semisimple_lder(&entry("filiform_n4").algebra).map_err(err)?;
    ensure!(
        n.order == 2 && n.operator == diagonal(&[1, 1, 1, 3]),
        "n4: q = {}, P =\n{}",
        n.order,
        n.operator
    );
    Ok(())
}

fn verify_with_binary(g: &LieAlgebra, cert: &serde_json::Value) -> Outcome {
    let file = tempfile::NamedTempFile::new().map_err(|e| e.to_string())?;
    std::fs::write(file.path(), cert.to_string()).map_err(|e| e.to_string())?;
    let out = Command::new(env!("CARGO_BIN_EXE_lieder"))
        .arg("verify")
        .arg(file.path())
        .output()
        .map_err(|e| e.to_string())?;
    ensure!(
        out.status.code() == Some(0),
        "{}: verify exited with {:?}: {}",
        g.name(),
        out.status.code(),
        String::from_utf8_lossy(&out.stdout)
    );
    Ok(())
}

fn dual_oracle() -> Outcome {
    let mut algebras: Vec<LieAlgebra> = catalog::all().into_iter().map(|e| e.algebra).collect();
    algebras.extend((0..50).map(|seed| catalog::random_nilpotent(seed, 5)));
    for g in &algebras {
        let cert = nilpotency_by_main_theorem(&LeibnizSolver::new(g), 20, 0).map_err(err)?;
        let by_series = g.nilpotency_class().is_some();
        ensure!(cert.is_nilpotent() == by_series, "{}: oracles disagree", g.name());
        if cert.is_nilpotent() {
            verify_with_binary(g, &certificate_to_json(&cert, g))?;
        }
    }
    for name in ["sl2", "gl2", "aff1"] {
        let g = entry(name).algebra;
        let cert = nilpotency_by_main_theorem(&LeibnizSolver::new(&g), 20, 0).map_err(err)?;
        ensure!(cert.verdict == Verdict::NotNilpotent, "{name} reported nilpotent");
    }
    Ok(())
}

fn reductive_collapse() -> Outcome {
    let sl2 = entry("sl2").algebra;
    let s = LeibnizSolver::new(&sl2);
    for k in 1..=5 {
        let d = s.lder(k).map_err(err)?.dim();
        ensure!(d == 3, "dim LDer_{k}(sl2) = {d}");
    }
    let gl2 = entry("gl2").algebra;
    let s = LeibnizSolver::new(&gl2);
    let der = s.der().map_err(err)?;
    for k in 1..=4 {
        let l = s.lder(k).map_err(err)?;
        ensure!(
            l.dim() == 4 && l.space == der.space,
            "LDer_{k}(gl2) has dim {} or differs from Der",
            l.dim()
        );
    }
    let double = entry("sl2_sl2").algebra;
    let s = LeibnizSolver::new(&double);
    let der = s.der().map_err(err)?.dim();
    for k in 1..=3 {
        let d = s.lder(k).map_err(err)?.dim();
        ensure!(d == der, "dim LDer_{k}(sl2⊕sl2) = {d}, dim Der = {der}");
    }
    Ok(())
}

fn star_identity() -> Outcome {
    let sl2 = entry("sl2").algebra;
    let ab = LieAlgebra::abelian(3);
    for m in [rat(1), rat(2), ratio(1, 2)] {
        for k in [2, 3] {
            let d = LeibnizSolver::new(&sl2).star_identity_space(&m, k).map_err(err)?.dim();
            ensure!(d == 0, "sl2, m = {m}, k = {k}: dim {d}");
            let d = LeibnizSolver::new(&ab).star_identity_space(&m, k).map_err(err)?.dim();
            ensure!(d == 9, "abelian, m = {m}, k = {k}: dim {d}");
        }
    }
    Ok(())
}

fn radical_invariance() -> Outcome {
    for name in ["gl2", "aff1", "sl2_plus_abelian_2"] {
        let g = entry(name).algebra;
        let s = LeibnizSolver::new(&g);
        for k in 1..=3 {
            ensure!(
                s.radical_invariance_check(k).map_err(err)?,
                "{name}: radical not invariant at order {k}"
            );
        }
    }
    Ok(())
}

fn grading() -> Outcome {
    for e in nilpotent_entries() {
        let p = construct_semisimple_lder(&e.algebra).map_err(err)?;
        let r = grading_check(&LeibnizSolver::new(&e.algebra), &p.operator, p.order).map_err(err)?;
        ensure!(r.holds(), "{}: grading fails", e.name());
    }
    let h = entry("heisenberg_3").algebra;
    let broken = grading_check(&LeibnizSolver::new(&h), &diagonal(&[1, 1, 5]), 1);
    ensure!(matches!(broken, Err(Error::NotADerivation { order: 1 })), "diag(1,1,5) gave {broken:?}");
    Ok(())
}

fn degeneration() -> Outcome {
    let f = catalog::builtin_family("heisenberg_contraction").map_err(err)?;
    let samples = [rat(1), rat(2), ratio(1, 3)];
    let r1 = dimension_monotonicity_check(&f, 1, &samples, TupleCap::default()).map_err(err)?;
    ensure!((r1.generic_dim, r1.limit_dim, r1.monotone, r1.strict) == (6, 9, true, true), "k = 1: {r1:?}");
    let r2 = dimension_monotonicity_check(&f, 2, &samples, TupleCap::default()).map_err(err)?;
    ensure!((r2.generic_dim, r2.limit_dim, r2.monotone, r2.strict) == (9, 9, true, false), "k = 2: {r2:?}");
    Ok(())
}

fn strict_witness() -> Outcome {
    for (name, k, l) in [("heisenberg_3", 2, 1), ("filiform_n4", 3, 2)] {
        let g = entry(name).algebra;
        let w = construct_strict_witness(&g, k, l).map_err(err)?;
        let s = LeibnizSolver::new(&g);
        ensure!(s.lder(k).map_err(err)?.contains(&w.operator), "{name}: witness not in LDer_{k}");
        ensure!(!s.lder(l).map_err(err)?.contains(&w.operator), "{name}: witness in LDer_{l}");
    }
    Ok(())
}

fn characteristically_nilpotent() -> Outcome {
    let g = entry("dixmier_lister_8").algebra;
    ensure!(g.validate().is_ok(), "table fails validation: {}", g.validate().summary());
    let class = g.nilpotency_class().ok_or("series does not vanish")?;
    let s = LeibnizSolver::new(&g);
    let cert = nilpotency_by_main_theorem(&s, 20, 0).map_err(err)?;
    ensure!(cert.is_nilpotent(), "the invertible-element search says not nilpotent");
    let min = minimal_invertible_order(&s, 20, 0).map_err(err)?.order;
    ensure!(min >= 2 && min <= class.div_ceil(2), "minimal invertible order {min}, class {class}");
    let basis = s.der().map_err(err)?.basis_matrices();
    let nilpotent_poly = UniPoly::monomial(rat(1), 8);
    let mut rng = StdRng::seed_from_u64(0);
    for sample in 0..100 {
        let mut d = Matrix::zeros(8, 8);
        for b in &basis {
            d = d.add(&b.scale(&rat(rng.gen_range(-1000..=1000))));
        }
        ensure!(d.char_poly().map_err(err)? == nilpotent_poly, "sample {sample} is not nilpotent");
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("chain and commutator closure, k ≤ 6", chain_and_closure),
        ("divisibility and sum inclusions", divisibility),
        ("class from full LDer_k", class_characterization),
        ("diagonalizable invertible element of order ⌈c/2⌉", semisimple_construction),
        ("nilpotency oracles agree, certificates verify", dual_oracle),
        ("semisimple and reductive collapse", reductive_collapse),
        ("star identity spaces", star_identity),
        ("radical invariance", radical_invariance),
        ("eigenspace grading", grading),
        ("degeneration monotonicity", degeneration),
        ("strict witnesses", strict_witness),
        ("characteristically nilpotent entry", characteristically_nilpotent),
    ];
    let mut failed = 0;
    for (i, (title, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("PASS criterion {:>2}: {title} ({secs:.2}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {:>2}: {title} ({secs:.2}s): {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
