use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("malformed relation: {0}")]
    MalformedRelation(String),
    #[error("ideal not detected nilpotent within length cap {0}")]
    NonAdmissible(usize),
    #[error("quiver is not directed: arrow {0} violates the vertex order")]
    NotDirected(String),
    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),
    #[error("endomorphism algebra does not split over the rationals")]
    NonSplit,
    #[error("projective resolution did not terminate within cap {0}")]
    ResolutionCapExceeded(usize),
    #[error("flag criteria disagree: {0}")]
    StratificationInvalid(String),
    #[error("algebra is not standardly stratified for the given order")]
    NotStratified,
    #[error("tilting sweep exceeded {0} rounds")]
    NonTerminating(usize),
    #[error("module is not projective")]
    QNotProjective,
    #[error("module is not projective-injective")]
    NotProjectiveInjective,
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("double centraliser property does not hold")]
    DoubleCentraliserMissing,
    #[error("unknown zoo entry {0:?}")]
    UnknownEntry(String),
    #[error("modules live over different algebras")]
    AlgebraMismatch,
    #[error("unknown label {0:?}")]
    UnknownLabel(String),
    #[error("invalid order: {0}")]
    InvalidOrder(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("mismatch in {field}: expected {expected}, got {actual}")]
    Mismatch {
        field: String,
        expected: String,
        actual: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
