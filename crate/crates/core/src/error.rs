use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime in [2, 65521]")]
    InvalidPrime(u64),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("subspace is not contained in the given ambient subspace")]
    NotContained,

    #[error("invalid parameters: {0}")]
    InvalidParameter(String),

    #[error("group of order {0} is not a p-group")]
    NotPGroup(usize),

    #[error("algebra is not split over GF({0})")]
    NotSplit(u32),

    #[error("algebra is not symmetric (or no symmetrizing form was found)")]
    NotSymmetric,

    #[error("ideal is not proper")]
    NotProper,

    #[error("derivation does not preserve the ideal")]
    NotPreserved,

    #[error("inconclusive: {0}")]
    Inconclusive(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}
