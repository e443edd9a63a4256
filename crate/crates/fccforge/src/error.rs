use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong across the toolkit.
///
/// Precondition violations (bad parameters, mismatched fields, size caps)
/// are reported through this enum rather than panics so the CLI can map
/// them uniformly onto its usage exit code.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("multiplicative inverse of zero is undefined")]
    ZeroInverse,

    #[error("symbol {symbol} out of range for a field of order {order}")]
    SymbolOutOfRange { symbol: u32, order: u32 },

    #[error("operands belong to different fields")]
    FieldMismatch,

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("set distance requires two nonempty sets of words")]
    EmptySet,

    #[error("a code must contain at least one codeword")]
    EmptyCode,

    #[error("codeword list contains duplicates")]
    DuplicateWords,

    #[error("generator rows are linearly dependent")]
    RankDeficient,

    #[error("operation needs at least two codewords")]
    TooFewCodewords,

    #[error("operation requires a linear code (generator matrix available)")]
    NotLinear,

    #[error("code does not meet the Singleton bound with equality")]
    NotMds,

    #[error("word is not a codeword of this code")]
    NotInCode,

    #[error("puncturing coordinate {0} merges codewords")]
    PunctureMerges(usize),

    #[error("alpha {alpha} is below the minimum distance {dmin}")]
    AlphaBelowMinimum { alpha: usize, dmin: usize },

    #[error("function distance {df} is not strict: it must exceed the minimum distance {dmin}")]
    StrictnessViolated { df: usize, dmin: usize },

    #[error("size limit exceeded: {0}")]
    SizeLimit(String),

    #[error("{0}")]
    BadParameter(String),

    #[error("invalid document: {0}")]
    InvalidDocument(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
}
