use thiserror::Error;

/// Errors raised anywhere in the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("value is infinite and has no standard part")]
    InfiniteValue,
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("numeric literal at position {position} is not a dyadic rational: {literal}")]
    NonDyadicNumber { position: usize, literal: String },
    #[error("game is not a number")]
    NotANumber,
    #[error("exhaustive search exceeded budget of {budget} positions")]
    SearchBudgetExceeded { budget: usize },
    #[error("bound endpoint {0} is not a dyadic rational")]
    NonDyadicBound(String),
    #[error("simplex exceeded pivot budget of {0}")]
    PivotBudgetExceeded(usize),
    #[error("no probability vector satisfies every bet")]
    IncoherentBets,
    #[error("invalid bet: {0}")]
    InvalidBet(String),
    #[error("multiplier search exceeded budget {budget}")]
    MultiplierBudgetExceeded { budget: u64 },
    #[error("schema error in `{field}`: {message}")]
    Schema { field: String, message: String },
    #[error("dimension mismatch: {0}")]
    Shape(String),
    #[error("certificate failed verification: {0}")]
    Verification(String),
}

impl Error {
    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: message.into(),
        }
    }

    pub(crate) fn schema(field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Schema {
            field: field.into(),
            message: message.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
