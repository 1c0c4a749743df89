use thiserror::Error;

/// Errors raised by the library. Each variant maps onto one CLI exit code.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown space preset `{0}`")]
    UnknownPreset(String),

    #[error("unsupported space: {0}")]
    UnsupportedSpace(String),

    #[error("resource guard exceeded for {what}: requested {requested}, limit {limit} (raise with FATDIAG_GUARD_SCALE)")]
    ResourceGuard {
        what: &'static str,
        requested: u128,
        limit: u128,
    },

    #[error("oracle mismatch in {check}: formula {formula}, oracle {oracle}")]
    OracleMismatch {
        check: String,
        formula: String,
        oracle: String,
    },

    /// A quantity that must be an exact integer was not. Always a bug.
    #[error("internal consistency failure: {0}")]
    InternalConsistency(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn unsupported(msg: impl Into<String>) -> Self {
        Error::UnsupportedSpace(msg.into())
    }

    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidInput(_) | Error::Parse(_) | Error::UnknownPreset(_) => 1,
            Error::UnsupportedSpace(_) => 2,
            Error::OracleMismatch { .. } | Error::InternalConsistency(_) => 3,
            Error::ResourceGuard { .. } => 4,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
