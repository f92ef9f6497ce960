use std::path::PathBuf;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("malformed diagram: {0}")]
    Structure(String),

    #[error("degree {degree} too large (limit {limit})")]
    DegreeTooLarge { degree: usize, limit: usize },

    #[error("degree mismatch: expected {expected}, got {actual}")]
    DegreeMismatch { expected: usize, actual: usize },

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("framed/unframed mismatch")]
    FramingMismatch,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("degree-0 part must be {expected}")]
    DegreeZero { expected: &'static str },

    #[error("element is not group-like up to degree {0}")]
    NotGroupLike(usize),

    #[error("pinned basis at degree {degree} is degenerate: {detail}")]
    DegenerateBasis { degree: usize, detail: String },

    #[error("internal consistency failure: {0}")]
    Consistency(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("cache error at {path}: {detail}")]
    Cache { path: PathBuf, detail: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
