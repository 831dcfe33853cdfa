use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid conductor {0}")]
    InvalidConductor(u32),
    #[error("conductor mismatch: {0} vs {1}")]
    ConductorMismatch(u32, u32),
    #[error("division by zero")]
    ZeroDivisor,
    #[error("conductor {from} does not divide {to}")]
    InvalidEmbedding { from: u32, to: u32 },
    #[error("element is not in the subfield of conductor {0}")]
    NotInSubfield(u32),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("construction error: {0}")]
    Construction(String),
    #[error("conductor {conductor} is not divisible by {needed}")]
    ConductorTooSmall { conductor: u32, needed: u64 },
    #[error("matrix is singular")]
    Singular,
    #[error("order exceeds cap {0}")]
    OrderCapExceeded(usize),
    #[error("not a matrix-realized algebra")]
    NotRealized,
    #[error("incompatible variant: {0}")]
    IncompatibleVariant(String),
    #[error("missing tag structure: {0}")]
    MissingTags(String),
    #[error("invalid quasi-grading: [{0}, {1}] leaves block {2}")]
    InvalidQuasiGrading(usize, usize, usize),
    #[error("not a subalgebra: {0}")]
    NotSubalgebra(String),
    #[error("space mismatch")]
    SpaceMismatch,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("not invariant: {0}")]
    NotInvariant(String),
    #[error("not an eigenvector: {0}")]
    NotEigenvector(String),
    #[error("degenerate bilinear form")]
    DegenerateForm,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
