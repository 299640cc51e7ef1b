use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alphabet size must be at least 1")]
    EmptyAlphabet,

    #[error("string length must be at least 1")]
    EmptyString,

    #[error("symbol {symbol} is outside the alphabet 1..={k}")]
    InvalidSymbol { symbol: u32, k: u32 },

    #[error("expected a string of length {expected}, got length {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("weight bound {w} is outside the admissible range [{min}, {max}]")]
    WeightOutOfRange { w: i64, min: i64, max: i64 },

    #[error("string weight {weight} violates the bound {bound}")]
    WeightViolation { weight: u64, bound: String },

    #[error("rank {rank} is outside [1, {len}]")]
    RankOutOfRange { rank: String, len: String },

    #[error("{0} is not a necklace")]
    NotNecklace(String),

    #[error("{0} is not the prefix of any necklace of length {1}")]
    NotNecklacePrefix(String, usize),

    #[error("{0} is the last necklace and has no successor")]
    LastNecklace(String),

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("string {0} is not a window of the cycle")]
    NotAWindow(String),

    #[error("invalid set: {0}")]
    InvalidSet(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("count overflowed the chosen integer type")]
    Overflow,
}
