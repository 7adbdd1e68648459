use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad command line or unreadable/malformed input file (exit 2).
    #[error("{0}")]
    Parse(String),

    /// Parameter outside a domain, violated constraint (exit 1).
    #[error(transparent)]
    Kernel(#[from] shifted_bezier::Error),

    /// Invalid sampling range (exit 1).
    #[error("{0}")]
    Range(String),

    #[error("cannot write output: {0}")]
    Output(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Kernel(_) | CliError::Range(_) | CliError::Output(_) => 1,
        }
    }
}
