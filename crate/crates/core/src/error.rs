use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rank {rank} for family {family}")]
    InvalidRank { family: String, rank: usize },

    #[error("unknown Lie type `{0}`")]
    UnknownType(String),

    #[error("coordinate length mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("weight {0} is not dominant integral")]
    NotDominantIntegral(String),

    #[error("dimension {dim} exceeds cap {cap}")]
    CapExceeded { dim: u128, cap: u128 },

    #[error("{op} is not available for type {lie_type}")]
    Unsupported { op: &'static str, lie_type: String },

    #[error("{weight} is not a weight of V({highest})")]
    NotAWeight { weight: String, highest: String },

    #[error("{0} is not a minuscule weight")]
    NotMinuscule(String),

    #[error("V({0}) is not multiplicity free")]
    NotMultiplicityFree(String),

    #[error("{0} cannot be reached from the available fundamental representations")]
    Unreachable(String),

    #[error("predicted eigenvalue {0} is repeated; projectors are undefined")]
    RepeatedEigenvalue(String),

    #[error("search space of {size} candidates exceeds cap {cap}")]
    SearchSpace { size: u128, cap: u128 },

    #[error("list lengths differ: {0} vs {1}")]
    LengthMismatch(usize, usize),

    #[error("representations belong to different types: {0} vs {1}")]
    TypeMismatch(String, String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
