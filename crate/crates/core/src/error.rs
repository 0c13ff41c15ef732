use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("{what} exceeds the configured cap of {cap}")]
    CapExceeded { what: String, cap: u64 },

    #[error("division by zero in GF({0})")]
    DivisionByZero(u64),

    #[error("operands belong to different fields")]
    FieldMismatch,

    #[error("subgroup of order {0} is not normal")]
    NotNormal(usize),

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// Two independent computations that must agree did not.
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),

    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("malformed json: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub fn cap(what: impl Into<String>, cap: u64) -> Self {
        Error::CapExceeded { what: what.into(), cap }
    }

    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::CapExceeded { .. } => 3,
            Error::Inconsistent(_) => 2,
            _ => 1,
        }
    }
}
