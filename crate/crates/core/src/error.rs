use thiserror::Error;

use crate::rootsys::Family;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rank {rank} for type {family}")]
    InvalidRank { family: Family, rank: usize },
    #[error("type {0} is not supported by this operation")]
    UnsupportedFamily(Family),
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("letter {letter} out of range 1..={rank}")]
    LetterOutOfRange { letter: usize, rank: usize },
    #[error("index {index} out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("word is not reduced")]
    NotReduced,
    #[error("word is not a reduced word for the longest element")]
    NotLongestWord,
    #[error("weight is not dominant")]
    NonDominant,
    #[error("not an integral weight")]
    NonIntegral,
    #[error("point lies outside the polytope")]
    OutsidePolytope,
    #[error("dimension {dim} exceeds cap {cap}")]
    CapExceeded { dim: u128, cap: u128 },
    #[error("scan of {points} points exceeds budget {budget}")]
    BudgetExceeded { points: u128, budget: u128 },
    #[error("negative multiplicity while stripping at {0}")]
    NegativeMultiplicity(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
