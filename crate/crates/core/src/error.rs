use thiserror::Error;

/// Errors raised by constructors and operations that have preconditions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("part {index} is zero; partitions have positive parts")]
    NonPositivePart { index: usize },

    #[error("parts are not weakly decreasing at index {index} ({prev} < {next})")]
    NotWeaklyDecreasing { index: usize, prev: u32, next: u32 },

    #[error("crank is undefined for the empty partition")]
    EmptyCrank,

    #[error("invalid Durfee rectangle symbol: {0}")]
    InvalidSymbol(String),

    #[error("invalid strongly unimodal sequence: {0}")]
    InvalidSequence(String),

    #[error("truncation orders differ ({left} vs {right})")]
    OrderMismatch { left: usize, right: usize },

    #[error("q-Pochhammer base exponent {0} is not allowed here")]
    InvalidPochhammer(i64),

    #[error("block {block} is not valid for {family}")]
    InvalidBlock { family: String, block: u8 },

    #[error("{map}: input {input} is outside the domain ({reason})")]
    OutsideDomain { map: String, input: String, reason: String },

    #[error("{map}: weight {n} is below the threshold {min}")]
    BelowThreshold { map: String, n: u64, min: u64 },

    #[error("{map}: {detail}")]
    Selector { map: String, detail: String },
}

pub type Result<T> = std::result::Result<T, Error>;
