use thiserror::Error;

/// Errors raised by the series engine, the identity harness and the
/// numerical checks.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("expected {expected} coefficients for order {order}, got {got}")]
    LengthMismatch {
        order: usize,
        expected: usize,
        got: usize,
    },

    #[error("series with constant term {0} is not invertible over the integers")]
    NotInvertible(String),

    #[error("coefficient index {index} is beyond the truncation order {order}")]
    OutOfRange { index: usize, order: usize },

    #[error("evaluation point {0} is outside the open interval (0, 1)")]
    EvalDomain(f64),

    #[error("invalid index {index} for {kind}")]
    InvalidIndex { kind: &'static str, index: usize },

    #[error("order {order} is below the required {required} for t = {t}")]
    InsufficientOrder { t: f64, order: usize, required: usize },

    #[error("parameter out of range: {0}")]
    Precondition(String),

    #[error("imaginary residual {residual:e} of A_{k}({n}) exceeds tolerance")]
    NumericalIntegrity { k: u64, n: u64, residual: f64 },

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
}

pub type Result<T> = std::result::Result<T, Error>;
