use thiserror::Error;

use crate::Natural;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Fibonacci numbers are only defined for `n >= 1`.
    #[error("fib({0}) is undefined: index must be at least 1")]
    Domain(i64),

    #[error("table too large: {requested} cells requested, limit is {limit}")]
    TableTooLarge { requested: u128, limit: usize },

    /// A subtraction in an identity would have gone negative. On valid
    /// inputs this only happens if an upstream value is wrong.
    #[error("identity underflow at k={k}, n={n}: {subtrahend} > {minuend}")]
    IdentityUnderflow {
        k: i64,
        n: i64,
        minuend: Natural,
        subtrahend: Natural,
    },

    #[error("ground set too large to enumerate: n={n}, limit is {limit}")]
    GroundSetTooLarge { n: u64, limit: u64 },

    #[error("invalid cell limit {value:?} in {var}")]
    InvalidLimit { var: &'static str, value: String },
}
