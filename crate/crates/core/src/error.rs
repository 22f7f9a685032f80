use thiserror::Error;

/// Errors surfaced by the public operations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("element is not invertible (smallest singular value {min_sv:.3e})")]
    NotInvertible { min_sv: f64 },
    #[error("element is not unitary (defect {defect:.3e})")]
    NotUnitary { defect: f64 },
    #[error("index {index} out of range 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("invalid set expression: {0}")]
    InvalidSet(String),
    #[error("empty set: {0}")]
    EmptySet(String),
    #[error("degenerate semi-norm: weights vanish under the state")]
    DegenerateSeminorm,
    #[error("invalid parameter: {0}")]
    InvalidParam(String),
    #[error("set is precompact at the working horizon (tail estimate {estimate:.3e}); \
             a separated witness does not exist")]
    Precompact { estimate: f64 },
    #[error("witness search failed: {0}")]
    WitnessSearch(String),
    #[error("instance file error: {0}")]
    Instance(String),
}

pub type Result<T> = std::result::Result<T, Error>;
