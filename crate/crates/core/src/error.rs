use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// An algebraic identity that must hold by construction failed; this
    /// signals a transcription bug, not a user error.
    #[error("consistency check `{check}` failed: residual {residual:.3e} exceeds {tolerance:.1e}")]
    Inconsistent {
        check: &'static str,
        residual: f64,
        tolerance: f64,
    },

    #[error("relaxation stability violated: {0}")]
    Unstable(String),

    #[error("CFL violation: dt={dt:.3e} exceeds limit {limit:.3e}")]
    CflViolation { dt: f64, limit: f64 },

    #[error("observer failed: {0}")]
    Observer(String),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
