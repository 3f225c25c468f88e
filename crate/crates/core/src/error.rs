use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported rank {0} (at most 4 is supported)")]
    UnsupportedRank(usize),
    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("tail cones differ")]
    TailMismatch,
    #[error("cone has no extremal rays")]
    NoRays,
    #[error("cone is not strongly convex")]
    NotStronglyConvex,
    #[error("not a face of the cone")]
    NotAFace,
    #[error("inconsistent fan supports")]
    InconsistentSupport,
    #[error("degree {0} lies outside the dual cone")]
    OutsideDualCone(String),
    #[error("field mismatch")]
    FieldMismatch,
    #[error("invalid field characteristic {0}")]
    InvalidField(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid point: {0}")]
    InvalidPoint(String),
    #[error("pole outside the located support: {0}")]
    UnlocatablePole(String),
    #[error("operation requires a projective curve")]
    NotProjective,
    #[error("improper polyhedral divisor: {0}")]
    Improper(String),
    #[error("normalization failed: {0}")]
    Normalization(String),
    #[error("invalid LFIHD specification: {0}")]
    InvalidSpec(String),
    #[error("exponential series did not terminate below order {0}")]
    SeriesNotFinite(usize),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("oracle mismatch: {0}")]
    OracleMismatch(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
