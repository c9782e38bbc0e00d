use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("requested {requested} digits exceeds the digit cap of {cap}")]
    DigitCap { requested: usize, cap: usize },

    #[error("empty sequence")]
    EmptySequence,

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid decimal string {0:?}")]
    Decimal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
