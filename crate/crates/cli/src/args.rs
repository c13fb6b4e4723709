use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use lieder_core::linalg::{parse_rational, Rational};

#[derive(Debug, Parser)]
#[command(
    name = "lieder",
    version,
    about = "Leibniz-derivation algebras of finite-dimensional Lie algebras over Q",
    after_help = "FILE is a JSON algebra file, `-` for stdin, or the name of a built-in algebra.\n\
                  LIEDER_TUPLE_CAP overrides the tuple-count cap of the solver.\n\
                  Exit codes: 0 ok, 1 property failed, 2 input error, 3 cap exceeded."
)]
pub struct Cli {
    /// Emit JSON instead of text
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check antisymmetry and the Jacobi identity
    Check { file: String },
    /// Series dimensions, center, radical and structural tags
    Info { file: String },
    /// The space of Leibniz-derivations of order K
    Lder {
        file: String,
        #[arg(long)]
        order: usize,
        /// Print the basis matrices
        #[arg(long)]
        basis: bool,
    },
    /// Inner derivations ⊆ derivations ⊆ LDer_2 ⊆ … ⊆ gl
    Chain {
        file: String,
        #[arg(long)]
        max_order: usize,
    },
    /// Search LDer_K for an invertible element
    Invertible {
        file: String,
        #[arg(long)]
        order: usize,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Decide nilpotency by searching for an invertible Leibniz-derivation
    Nilpotent {
        file: String,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// The diagonalizable invertible Leibniz-derivation of order ⌈c/2⌉
    ConstructP { file: String },
    /// A map in LDer_K but not in LDer_L
    Witness {
        file: String,
        #[arg(short)]
        k: usize,
        #[arg(short)]
        l: usize,
    },
    /// Eigenspace grading of an operator of order K
    Grading {
        file: String,
        /// Operator file: rows of "p/q" strings
        #[arg(long)]
        op: String,
        #[arg(long)]
        order: usize,
    },
    /// Solutions of the star identity with parameter M at arity K
    Star {
        file: String,
        #[arg(short, allow_hyphen_values = true, value_parser = rational_arg)]
        m: Rational,
        #[arg(short)]
        k: usize,
    },
    /// Whether every Leibniz-derivation of order K preserves the radical
    Radinv {
        file: String,
        #[arg(long)]
        order: usize,
    },
    /// Compare dim LDer_K at sampled t with its value at t = 0
    Degenerate {
        /// Family file with coefficients in t, `-`, or a built-in family
        family: String,
        #[arg(long)]
        order: usize,
        /// Comma-separated nonzero rationals
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, value_parser = rational_arg)]
        samples: Vec<Rational>,
    },
    /// Built-in algebras and their invariants
    Catalog {
        #[command(subcommand)]
        action: Option<CatalogAction>,
    },
    /// Re-check a certificate written by `nilpotent --json`
    Verify { certfile: String },
}

#[derive(Debug, Subcommand)]
pub enum CatalogAction {
    List,
    Show {
        name: String,
    },
    /// Invariant table of every entry (CSV, or JSON with --json)
    Table {
        #[arg(long, default_value_t = 3)]
        max_order: usize,
        #[command(flatten)]
        search: SearchArgs,
    },
}

#[derive(Clone, Copy, Debug, Args)]
pub struct SearchArgs {
    /// Random combinations tried per order
    #[arg(long, default_value_t = lieder_core::nilpotency::DEFAULT_TRIALS)]
    pub trials: usize,
    /// Integer seed, or `random`
    #[arg(long, default_value = "0")]
    pub seed: Seed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Seed {
    Fixed(u64),
    Random,
}

impl Seed {
    pub fn resolve(self) -> u64 {
        match self {
            Seed::Fixed(s) => s,
            Seed::Random => rand::random(),
        }
    }
}

impl FromStr for Seed {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s == "random" {
            return Ok(Seed::Random);
        }
        s.parse()
            .map(Seed::Fixed)
            .map_err(|_| format!("expected a non-negative integer or `random`, got `{s}`"))
    }
}

fn rational_arg(s: &str) -> Result<Rational, String> {
    parse_rational(s).ok_or_else(|| format!("expected a rational such as 3 or -1/2, got `{s}`"))
}
