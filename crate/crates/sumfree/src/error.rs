use std::io;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("bit stream exhausted at position {position}")]
    StreamExhausted { position: u64 },

    #[error("horizon must be at least 1")]
    EmptyHorizon,

    #[error("value {value} does not fit below the machine-sized horizon cap")]
    HorizonOverflow { value: String },

    #[error("elements not strictly increasing at index {index}")]
    NotAscending { index: usize },

    #[error("not sum-free: {lhs} + {rhs} = {sum} is an element")]
    NotSumFree {
        lhs: String,
        rhs: String,
        sum: String,
    },

    #[error("need {needed} entries of {what}, have {available}")]
    InsufficientData {
        what: &'static str,
        needed: u64,
        available: u64,
    },

    #[error("first consumed bit is 0; gaps are undefined without a leading element")]
    UnframedPrefix,

    #[error("fast-growth hypothesis fails at index {index}")]
    FastGrowthViolated { index: usize },

    #[error("digit {digit} is not below base {base}")]
    DigitOutOfRange { digit: u32, base: u32 },

    #[error("base {base} is not supported (need {min}..={max})")]
    BaseOutOfRange { base: u32, min: u32, max: u32 },

    #[error("{value} has more than {m} binary digits")]
    ComplementTooWide { value: String, m: u64 },

    #[error("weights do not dominate their prefix sums at index {index}")]
    NotDominated { index: usize },

    #[error("substitution needs l3 >= 3, got {l3}")]
    ZeroImageTooShort { l3: u64 },

    #[error("suffix word must have a nonzero value")]
    ZeroSuffix,

    #[error("rank of an empty vector list is undefined")]
    EmptyMatrix,

    #[error("vector {index} has length {actual}, expected {expected}")]
    RaggedMatrix {
        index: usize,
        expected: usize,
        actual: usize,
    },

    #[error("unusable character {found:?} in bit word")]
    BadBitChar { found: char },

    #[error("line {line}: {text:?} is not an unsigned integer")]
    BadSequenceLine { line: usize, text: String },

    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Io(#[from] io::Error),
}
