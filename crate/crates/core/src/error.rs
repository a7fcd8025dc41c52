use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("rank must be a positive integer")]
    InvalidRank,

    #[error("partition has {rows} rows, more than the allowed {max}")]
    TooManyRows { rows: usize, max: usize },

    #[error("letter {letter} is outside the alphabet range 1..={max}")]
    LetterOutOfRange { letter: String, max: u32 },

    #[error("expected an alphabet-{expected} value, got alphabet-{got}")]
    AlphabetMismatch { expected: &'static str, got: &'static str },

    #[error("coordinate vector has length {got}, expected {expected}")]
    WrongLength { got: usize, expected: usize },

    #[error("weight {0} is not dominant")]
    NotDominant(String),

    #[error("negative coefficient in a weight required to be dominant")]
    NegativeCoefficient,

    #[error("inner shape is not contained in the outer shape")]
    InnerNotContained,

    #[error("filling is not semistandard: {0}")]
    NotSemistandard(String),

    #[error("restricted word is not dominant")]
    RestrictedWordNotDominant,

    #[error("column [{0}] is outside the admissible templates")]
    InadmissibleColumn(String),

    #[error("no non-negative integer solution for the column counts: {0}")]
    InfeasibleSystem(String),

    #[error("size guard exceeded: {0}")]
    SizeGuard(String),

    #[error("multiset is not a non-negative combination of irreducible characters: {0}")]
    NotACharacter(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("integer overflow in dimension computation")]
    Overflow,

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
