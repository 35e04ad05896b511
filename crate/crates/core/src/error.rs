//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum GsdError {
    /// Input violated a documented precondition.
    #[error("validation: {0}")]
    Validation(String),

    /// A covariance matrix is too ill-conditioned to invert.
    #[error("near-singular covariance for the Gaussian at {mu:?} (condition number {cond:.3e})")]
    SingularCovariance { mu: [f64; 3], cond: f64 },

    /// A denoiser produced non-finite values.
    #[error("non-finite denoiser output at timestep {timestep}")]
    NonFinitePrediction { timestep: usize },

    /// A least-squares depth alignment could not be solved.
    #[error("degenerate depth alignment: {0}")]
    DegenerateDepth(String),

    /// Training aborted by the divergence guard.
    #[error("training diverged at iteration {iteration}: psnr {psnr:.2} dB fell more than {drop:.2} dB below the running max {max:.2} dB")]
    Diverged {
        iteration: usize,
        psnr: f64,
        max: f64,
        drop: f64,
    },

    /// External model exchange failed or timed out.
    #[error("external model exchange: {0}")]
    External(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, GsdError>;

impl GsdError {
    pub fn validation(msg: impl Into<String>) -> Self {
        GsdError::Validation(msg.into())
    }

    /// Process exit code the CLI maps this error to.
    pub fn exit_code(&self) -> i32 {
        match self {
            GsdError::Diverged { .. } => 3,
            _ => 2,
        }
    }
}
