use thiserror::Error;

use crate::format::ParseError;
use crate::semiring::SemiringId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed {semiring} scalar `{token}`")]
    MalformedScalar { token: String, semiring: SemiringId },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),

    #[error("operation `{op}` is not supported over {semiring}")]
    Unsupported {
        op: &'static str,
        semiring: SemiringId,
    },

    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    pub(crate) fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }
}
