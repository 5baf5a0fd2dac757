use thiserror::Error;

/// Errors surfaced by every fallible operation in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("arithmetic overflow in exact integer computation")]
    Overflow,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("divisor is not monic")]
    NonMonicDivisor,
    #[error("cyclotomic polynomial of order {0} is not flat")]
    NotFlat(usize),
    #[error("subset search dimension {dimension} exceeds the bound {bound}")]
    SubsetBoundExceeded { dimension: usize, bound: usize },
    #[error("structural error: {0}")]
    Structural(String),
    #[error("instance too large: {0}")]
    InstanceTooLarge(String),
    #[error("need at least two exponents, got {0}")]
    TooFewExponents(usize),
    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
