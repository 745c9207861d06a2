use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("value {0} is outside the unit interval [0, 1]")]
    OutOfUnitRange(f64),

    #[error("generator value {0} must be a non-negative number")]
    InvalidGeneratorValue(f64),

    #[error("{0} has no additive generator (not Archimedean)")]
    NotArchimedean(String),

    #[error("invalid ordinal-sum segments: {0}")]
    InvalidSegments(String),

    #[error("Frank parameter must be non-negative, got {0}")]
    NegativeParameter(f64),

    #[error("parameter is not a number")]
    NotANumber,

    #[error("tolerance must be positive and finite, got {0}")]
    InvalidTolerance(f64),

    #[error("invalid range [{lo}, {hi}]: {reason}")]
    InvalidRange {
        lo: f64,
        hi: f64,
        reason: &'static str,
    },

    #[error("invalid solver options: {0}")]
    InvalidOptions(&'static str),
}
