use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("axis {axis} out of range for dimension {n}")]
    AxisOutOfRange { axis: usize, n: usize },
    #[error("division by zero")]
    DivisionByZero,
    #[error("inconsistent linear system")]
    InconsistentSystem,
    #[error("expected a homogeneous symbol of degree {expected}, found degrees {found:?}")]
    NotHomogeneous { expected: usize, found: Vec<usize> },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("value depends on the weight parameter where a constant was required")]
    LambdaDependent,
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn precondition<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Precondition(msg.into()))
}
