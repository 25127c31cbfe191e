use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("angle must be finite, got {0}")]
    NonFiniteAngle(f64),
    #[error("box size must be positive and finite, got {0}")]
    NonPositiveSize(f64),
    #[error("ball radius must be non-negative, got {0}")]
    NegativeRadius(f64),
    #[error("hyperplane normal must be nonzero")]
    ZeroNormal,
    #[error("operation requires a nonempty point set")]
    EmptySet,
    #[error("neighbor count m must be at least 1")]
    ZeroNeighbors,
    #[error("insert requires a tree in incremental mode")]
    NotIncremental,
    #[error("horizon must be positive and finite, got {0}")]
    NonPositiveHorizon(f64),
    #[error("oracle resolution must be at least {min}, got {got}")]
    ResolutionTooLow { min: usize, got: usize },
    #[error("tree text format, line {line}: {msg}")]
    Parse { line: usize, msg: String },
}
