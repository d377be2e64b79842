use thiserror::Error;

/// Errors raised anywhere in the polar-curve pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("invalid input: {0}")]
    Input(String),

    #[error("resource cap exceeded in {stage}: {detail}")]
    ResourceCap { stage: String, detail: String },

    #[error("genericity failure: {0}")]
    Genericity(String),

    #[error("system does not have finitely many solutions")]
    NotFinite,

    #[error("not supported: {0}")]
    NotSupported(String),

    #[error("internal consistency error: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn cap(stage: &str, detail: impl Into<String>) -> Self {
        Error::ResourceCap { stage: stage.to_string(), detail: detail.into() }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
