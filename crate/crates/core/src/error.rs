use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("unknown function `{name}`; valid options: {valid}")]
    UnknownFunction { name: String, valid: String },
    #[error("function `{name}` expects {expected} dimensions, got {got}")]
    Dimension {
        name: String,
        expected: String,
        got: usize,
    },
    #[error("objective produced no finite value")]
    NonFiniteObjective,
    #[error("failed to parse instance data: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
