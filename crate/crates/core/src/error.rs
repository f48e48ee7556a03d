use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed field descriptor `{0}` (expected `q` or `fp:<prime>`)")]
    MalformedField(String),
    #[error("modulus {0} is not a prime below 2^31")]
    NonPrimeModulus(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse scalar `{0}`")]
    BadScalar(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("field mismatch: {0}")]
    FieldMismatch(String),
    #[error("matrix is singular")]
    Singular,
    #[error("operator does not solve the Hopf equation")]
    NotHopfSolution,
    #[error("operator is not a commutative solution")]
    NotCommutative,
    #[error("candidate space of {candidates} matrices exceeds the cap {cap}")]
    CapExceeded { candidates: u128, cap: u128 },
    #[error("bialgebra has no antipode")]
    MissingAntipode,
    #[error("module structure is incompatible with the grading: {0}")]
    IncompatibleGrading(String),
    #[error("quotient is not known to be finite dimensional: {0}")]
    NotFinite(String),
    #[error("rewriting system is not complete")]
    IncompleteSystem,
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
