use thiserror::Error;

use crate::word::Word;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("letter {letter} needs degree at least {}, got {degree}", letter + 1)]
    DegreeTooSmall { letter: u32, degree: usize },

    #[error("letters must be positive, found 0")]
    ZeroLetter,

    #[error("invalid permutation {0:?}: must contain each of 1..n exactly once")]
    InvalidPermutation(Vec<u32>),

    #[error("word {0} is not reduced")]
    NotReduced(Word),

    #[error("word {0} is not a natural basic word")]
    NotNaturalBasic(Word),

    #[error("enumeration exceeded the limit of {limit} words")]
    EnumerationLimit { limit: usize },

    #[error("internal consistency check failed: {0}")]
    Consistency(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("cannot parse {token:?}: {reason}")]
    Parse { token: String, reason: &'static str },
}

pub type Result<T> = std::result::Result<T, Error>;
