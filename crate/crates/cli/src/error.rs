use achebyshev::Error as CoreError;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("{0}")]
    Core(#[from] CoreError),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// 2 invalid input, 3 degree cap, 4 non-Pisot, 5 non-convergence.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Invalid(_) => 2,
            CliError::Io(_) => 1,
            CliError::Core(e) => match e {
                CoreError::DegreeCap { .. } => 3,
                CoreError::NotPisot(_) => 4,
                CoreError::NoConvergence { .. } => 5,
                _ => 2,
            },
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
