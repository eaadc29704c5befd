use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("k must be at least 3, got {0}")]
    InvalidK(usize),

    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("dual generator index {index} out of range 1..={k}")]
    IndexOutOfRange { index: usize, k: usize },

    #[error("word is not positive")]
    NotPositive,

    #[error("word contains a Garside element as a consecutive product")]
    ContainsGarside,

    #[error("invalid canonical factor: {0}")]
    InvalidFactor(String),

    #[error("invalid normal form: {0}")]
    InvalidNormalForm(String),

    #[error("invalid boundary point: {0}")]
    InvalidPoint(String),

    #[error("prefix too short: need {needed} runs, have {available}")]
    PrefixTooShort { needed: usize, available: usize },

    #[error("series denominator has non-unit constant term")]
    NonUnitConstant,

    #[error("cayley ball budget exceeded: more than {0} elements")]
    BudgetExceeded(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
