use crate::rewrite::CompletionFailure;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("element belongs to `{found}`, expected `{expected}`")]
    OwnerMismatch { expected: String, found: String },
    #[error("`{0}` is infinite-dimensional")]
    InfiniteDimensional(String),
    #[error("rewriting system for `{algebra}` is only certified to degree {have}, need {need}")]
    CertificateInsufficient { algebra: String, need: usize, have: usize },
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("unknown identifier `{0}`")]
    UnknownId(String),
    #[error("completion failed for `{algebra}`: {failure}")]
    Completion { algebra: String, failure: CompletionFailure },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("subspace is not stable under the action")]
    NotStable,
    #[error("{0}")]
    Invalid(String),
    #[error("parse error at {line}:{col}: {message}")]
    Parse { line: usize, col: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
