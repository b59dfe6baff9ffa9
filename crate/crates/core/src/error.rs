use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty word")]
    EmptyWord,
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("resource bound exceeded for {what}: bound is {bound}")]
    Resource { what: String, bound: usize },
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("type error: cannot combine {0} with {1}")]
    Type(String, String),
    #[error("singular matrix: {0}")]
    Singular(String),
    #[error("constant term is not a unit")]
    NotUnit,
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("internal check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn bound(what: &str, bound: usize) -> Error {
    Error::Resource { what: what.to_string(), bound }
}

pub(crate) fn parse_err(pos: usize, msg: impl Into<String>) -> Error {
    Error::Parse { pos, msg: msg.into() }
}
