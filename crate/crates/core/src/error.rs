use thiserror::Error;

/// Errors surfaced by every operation in this crate.
///
/// The variants map onto the CLI exit-code taxonomy: `InvalidInput` and
/// `Malformed` are caller mistakes (exit 2), `Certificate` is a structurally
/// well-formed but invalid certificate (exit 1), `Invariant` means an internal
/// construction stage could not establish a fact it relies on and names that
/// stage so the failure is diagnosable.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("certificate error: {0}")]
    Certificate(String),

    #[error("malformed document: {0}")]
    Malformed(String),

    #[error("invariant violated at stage `{stage}`: {detail}")]
    Invariant { stage: String, detail: String },
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub fn invariant(stage: &str, detail: impl Into<String>) -> Self {
        Error::Invariant {
            stage: stage.to_string(),
            detail: detail.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
