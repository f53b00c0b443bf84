use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid Cartan type {0}{1}")]
    InvalidCartanType(String, usize),

    #[error("simple root index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("weight has {got} coordinates, expected {expected}")]
    RankMismatch { expected: usize, got: usize },

    #[error("weight {0:?} is not dominant integral")]
    NotDominant(Vec<i64>),

    #[error("word {0:?} is not reduced")]
    NotReduced(Vec<usize>),

    #[error("Weyl group order exceeds the cap of {0} elements")]
    GroupTooLarge(usize),

    #[error("path generation exceeded the cap of {0} expansions")]
    PathCapExceeded(usize),

    #[error("no maximal lift exists below the bound (path not in the restricted set)")]
    NoLift,

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
