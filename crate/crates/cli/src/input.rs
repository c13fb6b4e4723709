use std::io::Read;
use std::path::Path;

use lieder_core::catalog::{self, io};
use lieder_core::degeneration::ParamLieAlgebra;
use lieder_core::leibniz::TupleCap;
use lieder_core::{Error, LieAlgebra, Result};

pub const CAP_VAR: &str = "LIEDER_TUPLE_CAP";

/// Contents of `arg` when it names stdin or an existing file.
pub fn read_text(arg: &str) -> Result<Option<String>> {
    if arg == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        return Ok(Some(s));
    }
    if Path::new(arg).exists() {
        return Ok(Some(std::fs::read_to_string(arg)?));
    }
    Ok(None)
}

fn missing(arg: &str) -> Error {
    if arg.ends_with(".json") || arg.contains(std::path::MAIN_SEPARATOR) {
        Error::Io(std::io::Error::new(std::io::ErrorKind::NotFound, format!("no such file `{arg}`")))
    } else {
        Error::UnknownName(arg.to_string())
    }
}

pub fn algebra(arg: &str) -> Result<LieAlgebra> {
    match read_text(arg)? {
        Some(text) => io::parse_algebra(&text),
        None => catalog::builtin(arg).map(|e| e.algebra).map_err(|_| missing(arg)),
    }
}

/// Like [`algebra`] but without rejecting tables that break the identities.
pub fn unchecked_algebra(arg: &str) -> Result<LieAlgebra> {
    match read_text(arg)? {
        Some(text) => io::algebra_from_json_unchecked(&serde_json::from_str(&text)?),
        None => catalog::builtin(arg).map(|e| e.algebra).map_err(|_| missing(arg)),
    }
}

pub fn family(arg: &str) -> Result<ParamLieAlgebra> {
    match read_text(arg)? {
        Some(text) => Ok(match io::parse_any(&text)? {
            io::Loaded::Family(f) => f,
            io::Loaded::Algebra(g) => ParamLieAlgebra::constant(&g),
        }),
        None => catalog::builtin_family(arg)
            .or_else(|_| catalog::builtin(arg).map(|e| ParamLieAlgebra::constant(&e.algebra)))
            .map_err(|_| missing(arg)),
    }
}

pub fn json(arg: &str) -> Result<serde_json::Value> {
    let text = read_text(arg)?.ok_or_else(|| missing(arg))?;
    Ok(serde_json::from_str(&text)?)
}

pub fn tuple_cap() -> Result<TupleCap> {
    match std::env::var(CAP_VAR) {
        Err(_) => Ok(TupleCap::default()),
        Ok(v) => v.trim().parse().map(TupleCap).map_err(|_| Error::Parse {
            line: None,
            field: Some(CAP_VAR.into()),
            message: format!("expected a positive integer, got `{v}`"),
        }),
    }
}
