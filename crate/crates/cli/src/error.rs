use thiserror::Error;

use coordring::Error as CoreError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliError {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable {0:?}")]
    UnknownVariable(String),
    #[error("index out of bounds in {var:?} for SL{n}")]
    IndexOutOfBounds { var: String, n: usize },
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Io(String),
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("internal failure: {0}")]
    Internal(String),
}

impl CliError {
    pub fn syntax(pos: usize, msg: impl Into<String>) -> Self {
        CliError::Syntax { pos, msg: msg.into() }
    }

    /// 2 for anything caused by the input, 3 for broken invariants.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Internal(_)
            | CliError::Core(
                CoreError::NotGaussDecomposable(_)
                | CoreError::TwistUndefined
                | CoreError::NotInFundamentalOrbit(_)
                | CoreError::UnassignedVariable(_),
            ) => 3,
            _ => 2,
        }
    }
}
