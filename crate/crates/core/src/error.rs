use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("rank must be positive, got {0}")]
    InvalidRank(usize),
    #[error("rank {0} exceeds the enumeration bound {1}")]
    RankTooLarge(usize, usize),
    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("weight {0} is not integral dominant")]
    NotDominant(String),
    #[error("weight {0} is not integral")]
    NotIntegral(String),
    #[error("weight {0} lies in a singular block")]
    Singular(String),
    #[error("support is not closed under raising: {0} is missing")]
    SupportNotClosed(String),
    #[error("decomposition failed: {0}")]
    Decomposition(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
