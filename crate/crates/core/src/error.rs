use num_bigint::BigInt;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed input: bad JSON, wrong dimensions, non-canonical ordering.
    #[error("schema violation: {0}")]
    Schema(String),
    /// A mathematical precondition of the requested operation does not hold.
    #[error("precondition failed: {clause}")]
    Precondition { clause: String },
    /// A bounded search ran out of room before finding what it needed.
    #[error("search exhausted: {0}")]
    Exhausted(String),
    #[error("unfactorable at desk scale: {value} has a prime factor above the bound {bound}")]
    FactorBound { value: BigInt, bound: u64 },
}

impl Error {
    pub fn schema(msg: impl Into<String>) -> Self {
        Error::Schema(msg.into())
    }

    pub fn precondition(clause: impl Into<String>) -> Self {
        Error::Precondition {
            clause: clause.into(),
        }
    }

    pub fn exhausted(msg: impl Into<String>) -> Self {
        Error::Exhausted(msg.into())
    }

    /// Process exit code used by the command line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Schema(_) => 2,
            Error::Precondition { .. } => 3,
            Error::Exhausted(_) | Error::FactorBound { .. } => 4,
        }
    }
}
