use thiserror::Error;

use crate::linalg::Rational;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NonSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("the zero polynomial has no finite root set")]
    ZeroPolynomial,
    #[error("characteristic polynomial does not split over Q ({irrational_degree} degrees without rational roots)")]
    SpectrumNotRational { irrational_degree: usize },
    #[error("rational root search exceeds the candidate budget")]
    RootSearchInfeasible,
    #[error("a nested bracket needs at least two arguments, got {0}")]
    BracketTooShort(usize),
    #[error("the algebra is not nilpotent")]
    NotNilpotent,
    #[error("tuple count {tuples} exceeds the cap {cap}; raise the cap or lower the order")]
    CapExceeded { tuples: u128, cap: u128 },
    #[error("order must be at least 1, got {0}")]
    InvalidOrder(usize),
    #[error("divisibility inclusion needs s | t, got s = {s}, t = {t}")]
    DivisibilityViolated { s: usize, t: usize },
    #[error("m = {0} must be nonzero and not a negative integer")]
    InvalidM(Rational),
    #[error("direct-sum summands are not marked for this algebra")]
    SummandsNotMarked,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("witness verification failed: {0}")]
    WitnessVerificationFailed(String),
    #[error("operator is not a Leibniz-derivation of order {order}")]
    NotADerivation { order: usize },
    #[error("validation failed: {0}")]
    ValidationFailed(String),
    #[error("sampled fibers have different dimensions {dims:?}; choose other samples")]
    GenericDimUnstable { dims: Vec<(String, usize)> },
    #[error("invalid samples: {0}")]
    InvalidSamples(String),
    #[error("subspace is not {0}")]
    NotClosed(&'static str),
    #[error("unknown catalog entry `{0}`")]
    UnknownName(String),
    #[error("parse error{}: {message}", location(.line, .field))]
    Parse { line: Option<usize>, field: Option<String>, message: String },
    #[error("recorded invariant `{field}` of `{name}` is {recorded}, recomputed {computed}")]
    ExpectedMismatch { name: String, field: String, recorded: String, computed: String },
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn location(line: &Option<usize>, field: &Option<String>) -> String {
    match (line, field) {
        (Some(l), Some(f)) => format!(" at line {l}, field `{f}`"),
        (Some(l), None) => format!(" at line {l}"),
        (None, Some(f)) => format!(" in field `{f}`"),
        (None, None) => String::new(),
    }
}

impl Error {
    pub(crate) fn parse_field(field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse { line: None, field: Some(field.into()), message: message.into() }
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse { line: Some(e.line()), field: None, message: e.to_string() }
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Io(std::io::Error::other(e))
    }
}
