use thiserror::Error;

#[derive(Debug, Error)]
pub enum MpaError {
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("duplicate abscissa {0} in interpolation data")]
    DuplicateAbscissa(i64),
    #[error("basis mismatch: expected {expected}, got {got}")]
    BasisMismatch { expected: &'static str, got: &'static str },
    #[error("lambda mismatch between operands")]
    LambdaMismatch,
    #[error("k mismatch between operands")]
    KMismatch,
    #[error("diagram weight does not sum to lambda on the {side} side")]
    WeightMismatch { side: &'static str },
    #[error("rank {rank} exceeds n = {n}")]
    RankExceedsN { rank: usize, n: usize },
    #[error("requested matrix dimension {dim} exceeds the configured cap {cap}")]
    ResourceLimit { dim: usize, cap: usize },
    #[error("no pair of weak compositions realizes the target diagram")]
    UnrealizableTarget,
}
