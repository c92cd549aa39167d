use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero polynomial")]
    DivisionByZero,

    #[error("vanishing denominator: factor {factor} of {denominator} vanishes at q = {at}")]
    VanishingDenominator {
        factor: String,
        denominator: String,
        at: String,
    },

    #[error("unknown letter {0} for this space")]
    UnknownLetter(u32),

    #[error("expected a homogeneous element of degree {expected}, found degree {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("element is not homogeneous")]
    NotHomogeneous,

    #[error("finite carrier required for dual")]
    InfiniteCarrier,

    #[error("admissibility requires i1 ≥ 2")]
    NotAdmissible,

    #[error("letter map does not intertwine the braidings: {0}")]
    NotIntertwining(String),

    #[error("operator undefined on {0}")]
    OperatorUndefined(String),

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
