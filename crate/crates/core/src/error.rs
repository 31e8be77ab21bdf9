use std::io;
use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("extension degree {0} outside 1..=20")]
    DegreeOutOfRange(u32),
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("cannot factor the zero polynomial")]
    FactorZero,
    #[error("polynomial of degree {degree} exceeds action weight {weight}")]
    WeightExceeded { degree: usize, weight: usize },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("unsupported general linear group size n = {0}")]
    UnsupportedGroup(usize),
    #[error("ideal is not homogeneous")]
    NotHomogeneous,
    #[error("hyperelliptic model with q = 0")]
    ZeroQ,
    #[error("unsupported genus {0}")]
    UnsupportedGenus(u32),
    #[error("point is not singular on the curve")]
    NotSingular,
    #[error("point counts violate the Weil bound: {0}")]
    WeilBound(String),
    #[error("non-integral L-polynomial coefficient at index {0}")]
    NonIntegral(usize),
    #[error("partition refers to a_{0}, only a_1..a_{1} are available")]
    PartitionTooLong(usize, usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("checkpoint {path} is corrupt: {reason}")]
    CorruptCheckpoint { path: PathBuf, reason: String },
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
