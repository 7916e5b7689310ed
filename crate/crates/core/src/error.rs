use thiserror::Error;

/// Errors raised by the algebraic core.
///
/// Every variant names the violated precondition so that callers (and the
/// command-line front end) can report it verbatim.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parameter alphabet mismatch")]
    AlphabetMismatch,
    #[error("duplicate parameter symbol `{0}`")]
    DuplicateSymbol(String),
    #[error("unknown parameter symbol `{0}`")]
    UnknownSymbol(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("inexact division, residue {0}")]
    InexactDivision(String),
    #[error("symbol `{0}` occurs with a negative exponent but its image is not a unit")]
    NonUnitImage(String),
    #[error("not a unit: {0}")]
    NotUnit(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unsupported root system: {0}")]
    UnsupportedRootSystem(String),
    #[error("unsupported lattice: {0}")]
    UnsupportedLattice(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("exponent {0} does not lie in the required orbit")]
    OrbitMismatch(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("invalid json: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;
