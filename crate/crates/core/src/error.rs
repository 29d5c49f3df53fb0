use thiserror::Error;

/// Errors raised by the exact-arithmetic and verification layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("rational function has a pole at q = {point}")]
    Pole { point: String },

    #[error("malformed input at {location}: {message}")]
    Malformed { location: String, message: String },

    #[error("{what} must be non-negative, got {value}")]
    Negative { what: &'static str, value: i64 },

    #[error("vanishing Pochhammer symbol in a series denominator at k = {k}")]
    VanishingPochhammer { k: usize },

    #[error("degenerate recurrence: b({n}) = 0")]
    Degenerate { n: usize },

    #[error("moment sequence is not quasi-definite at depth {depth}")]
    NotQuasiDefinite { depth: usize },

    #[error("sequence too short: need index {needed}, have {available} values")]
    InsufficientLength { needed: usize, available: usize },

    #[error("functional {functional} cannot be paired with family {family}")]
    PairingMismatch { functional: String, family: String },

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("coefficient index {index} is beyond the stored prefix of length {len}")]
    PrefixExhausted { index: usize, len: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
