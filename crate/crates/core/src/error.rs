use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("non-finite value in {0}")]
    NonFinite(&'static str),

    #[error("series centers differ ({left} vs {right})")]
    CenterMismatch { left: f64, right: f64 },

    #[error("cannot differentiate: no derivative information left (valid order 0)")]
    DerivativeExhausted,

    #[error("derivative budget exhausted at step k = {step}: valid order {valid_order}, need at least 2")]
    SpectrumBudget { step: usize, valid_order: usize },

    #[error("invalid problem: {0}")]
    InvalidProblem(String),

    #[error("Laplace image exponent must be at least 1, got {0}")]
    LaplaceExponent(usize),

    #[error("x = {x} lies past the wave front x = c·t = {front}; exact error undefined there")]
    PastWaveFront { x: f64, front: f64 },

    #[error("{0}")]
    InvalidArgument(String),
}
