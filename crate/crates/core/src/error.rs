use thiserror::Error;

/// Errors raised anywhere in the engine.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("p must be odd and at least 3 (got {0})")]
    InvalidOrder(i64),
    #[error("representation parameter r must be nonzero")]
    ZeroParameter,
    #[error("scalars belong to different field contexts")]
    ContextMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("unsupported divisor: {0}")]
    UnsupportedDivisor(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("negative exponent on non-invertible generator `{0}`")]
    NegativeExponent(String),
    #[error("window escape: action leaves the window, needs {0}")]
    WindowEscape(String),
    #[error("element outside the integrable sector: {0}")]
    OutsideSector(String),
    #[error("index out of range: {0}")]
    OutOfRange(String),
    #[error("light-cone boundary unsupported (z+ * z- = 0)")]
    LightCone,
    #[error("strip condition violated: Re(nu - mu + s/p) = {0} is outside (-1, 1)")]
    StripCondition(f64),
    #[error("precision {requested:e} unreachable, achieved bound {achieved:e}")]
    Precision { requested: f64, achieved: f64 },
    #[error("finite-difference step unusable: {0}")]
    FiniteDifference(String),
    #[error("zero pairing denominator for indices {0}")]
    ZeroDenominator(String),
    #[error("usage: {0}")]
    Usage(String),
    #[error("io: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
