use thiserror::Error;

/// Errors raised by the exact-arithmetic kernels.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Two divisor classes (or a class and a surface) disagree on the number
    /// of exceptional curves.
    #[error("dimension mismatch: lattice rank {expected} vs {found}")]
    DimensionMismatch { expected: usize, found: usize },

    /// An operation was called outside the range where its formula is stated.
    #[error("{op}: {message}")]
    Domain { op: &'static str, message: String },

    /// `D·(D+K)` was odd, so the arithmetic genus would be a half-integer.
    #[error("odd adjunction numerator {numerator}: genus is not an integer")]
    Parity { numerator: i64 },

    #[error("integer overflow in {0}")]
    Overflow(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(op: &'static str, message: impl Into<String>) -> Self {
        Error::Domain { op, message: message.into() }
    }
}
