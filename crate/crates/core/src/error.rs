use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("polynomials belong to different rings")]
    RingMismatch,
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("parse error at offset {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("unknown variable `{name}` at offset {position}")]
    UnknownVariable { name: String, position: usize },
    #[error("generator {index} is not homogeneous")]
    NonHomogeneous { index: usize },
    #[error("generator {index} is zero or constant")]
    ConstantGenerator { index: usize },
    #[error("truncation degree {truncation} is below generator degree {needed}")]
    TruncationTooSmall { truncation: u32, needed: u32 },
    #[error("degree {degree} exceeds truncation degree {truncation}")]
    DegreeExceedsTruncation { degree: u32, truncation: u32 },
    #[error("invalid truncation bounds: {0}")]
    InvalidBounds(String),
    #[error("no lift exists at level {level}, degree {degree}")]
    LiftInconsistent { level: usize, degree: u32 },
    #[error("not a complete intersection: {0}")]
    NotCompleteIntersection(String),
    #[error("generator {index} has a linear term")]
    LinearTerm { index: usize },
    #[error("generating set is not minimal: generator {index} is redundant")]
    NotMinimal { index: usize },
    #[error("unsupported Lie type: {0}")]
    Unsupported(String),
    #[error("invalid minimal model parameters (p, q) = ({p}, {q})")]
    InvalidMinimalModel { p: u64, q: u64 },
    #[error("span has dimension {found}, expected {expected}")]
    SpanDimension { found: usize, expected: usize },
    #[error("internal inconsistency: {0}")]
    Internal(String),
    #[error("document error: {0}")]
    Document(String),
}

pub type Result<T> = std::result::Result<T, Error>;
