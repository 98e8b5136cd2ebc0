use thiserror::Error;

use crate::rational::Rational;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("row lengths must be non-increasing, got {0:?}")]
    NonMonotone(Vec<u32>),
    #[error("diagram depth {depth} exceeds rank {rank}")]
    DepthExceedsRank { depth: usize, rank: usize },
    #[error("rank must be at least {min}, got {rank}")]
    RankTooSmall { rank: usize, min: usize },
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("evaluation point has repeated entries")]
    RepeatedPoint,
    #[error("branch label {q:?} is not admissible for diagram {diagram}")]
    InvalidBranchLabel { q: Vec<u32>, diagram: String },
    #[error("matrix is not traceless")]
    NonzeroTrace,
    #[error("no flat-model fiber for diagram {0}")]
    UnsupportedFiber(String),
    #[error("divergence needs symmetric degree at least 1")]
    ZeroDegree,
    #[error("section mismatch: {0}")]
    SectionMismatch(String),
    #[error("weight {delta} is resonant (vanishing factor {denominator})")]
    ResonantWeight { delta: Rational, denominator: String },
    #[error("equivariance system is inconsistent")]
    Inconsistent,
    #[error("parse error: {0}")]
    Parse(String),
}
