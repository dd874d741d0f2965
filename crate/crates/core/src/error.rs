use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alphabet size {n} is outside the supported range {min}..={max}")]
    AlphabetSize { n: usize, min: usize, max: usize },

    #[error("symbol {symbol} at offset {offset} is outside the alphabet 1..={n}")]
    SymbolOutOfRange { offset: usize, symbol: usize, n: usize },

    #[error("not a permutation of 1..={n}: symbol {symbol} repeated at offset {offset}")]
    NotAPermutation { n: usize, offset: usize, symbol: usize },

    #[error("exponent j_{index} = {value} must satisfy 0 <= j_{index} < {index}")]
    ExponentOutOfRange { index: usize, value: usize },

    #[error("expected {expected} exponents for n = {n}, got {got}")]
    ExponentCount { n: usize, expected: usize, got: usize },

    #[error("rank {rank} is out of range for n = {n} (must be below {limit})")]
    RankOutOfRange { n: usize, rank: String, limit: String },

    #[error("range {start}..{end} is out of bounds for a string of length {len}")]
    RangeOutOfBounds { start: usize, end: usize, len: usize },

    #[error("{0}")]
    InvalidArgument(String),

    #[error("malformed input at offset {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("exact search supports 2 <= n <= {max}; n = {n} is beyond exhaustive reach")]
    SearchLimit { n: usize, max: usize },

    #[error("search budget of {budget} nodes exhausted before the search completed")]
    BudgetExhausted { budget: u64 },
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
