use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix order must be at least 3, got {0}")]
    OrderTooSmall(usize),
    #[error("band value `{0}` must be nonzero")]
    ZeroBand(&'static str),
    #[error("argument `{0}` is not finite")]
    NotFinite(&'static str),
    #[error("operation requires {expected} order, got n = {n}")]
    WrongParity { expected: &'static str, n: usize },
    #[error("index ({i}, {j}) out of range for order {n}")]
    IndexOutOfRange { i: usize, j: usize, n: usize },
    #[error("closed-form entry formulas need r >= 1")]
    ZeroExponent,
    #[error("order mismatch: {lhs} vs {rhs}")]
    OrderMismatch { lhs: usize, rhs: usize },
    #[error("tolerance must be positive, got {0}")]
    BadTolerance(f64),
    #[error("result overflowed double precision (n = {n}, r = {r})")]
    Overflow { n: usize, r: u64 },
}
