use thiserror::Error;

use crate::alphabet::Letter;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),

    #[error("duplicate symbol `{0}` in alphabet")]
    DuplicateSymbol(String),

    #[error("alphabet error: {0}")]
    Alphabet(String),

    #[error("letter #{} is not ranked by the order", .0.index())]
    LetterOutsideOrder(Letter),

    #[error("factor length {k} exceeds word length {len}")]
    Length { k: usize, len: usize },

    #[error("invalid directive word: {0}")]
    InvalidDirective(String),

    #[error("directive word is already strict; nothing to decompose")]
    NothingToDecompose,

    #[error("invalid skew specification: {0}")]
    Spec(String),

    #[error("word is not in skew form: {0}")]
    NotSkewForm(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// An engine invariant was violated. Always a bug.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
