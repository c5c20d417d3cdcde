use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("shape mismatch: expected ({expected_alpha},{expected_beta}), got ({got_alpha},{got_beta})")]
    ShapeMismatch {
        expected_alpha: usize,
        expected_beta: usize,
        got_alpha: usize,
        got_beta: usize,
    },

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("enumeration budget exceeded: |code| = 2^{log2_size} > budget {budget}")]
    BudgetExceeded { log2_size: u32, budget: u64 },

    #[error("empty generator list with unspecified length")]
    EmptySpan,

    #[error("invalid pairing: {0}")]
    InvalidPairing(String),

    #[error("invalid certificate: pairing is not an automorphism of the code")]
    InvalidCertificate,

    #[error("Gray image is not linear; conversion is not applicable")]
    GrayImageNonlinear,

    #[error("code length {0} exceeds the 64-coordinate search limit")]
    TooLong(usize),

    #[error("inconsistent weight enumerator: coefficients sum to {sum}, expected {size}")]
    InconsistentEnumerator { sum: u64, size: u64 },

    #[error("repetition code length must be odd, got {0}")]
    EvenLength(usize),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
