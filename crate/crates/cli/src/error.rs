use std::fmt;

/// Failure classes of the command line, each with its own exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    /// Bad flags or mathematically inadmissible input. Exit 2.
    Input(String),
    /// Something that should not happen did. Exit 1.
    Internal(String),
    /// Certificate could not be read or decoded. Exit 3.
    Malformed(String),
    /// Certificate decoded but a check failed. Exit 4.
    Verification(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Internal(_) => 1,
            CliError::Input(_) => 2,
            CliError::Malformed(_) => 3,
            CliError::Verification(_) => 4,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(m) => write!(f, "input error: {m}"),
            CliError::Internal(m) => write!(f, "internal error: {m}"),
            CliError::Malformed(m) => write!(f, "malformed certificate: {m}"),
            CliError::Verification(m) => write!(f, "verification failed: {m}"),
        }
    }
}

impl std::error::Error for CliError {}

pub type CliResult<T> = Result<T, CliError>;

pub(crate) fn input(e: impl fmt::Display) -> CliError {
    CliError::Input(e.to_string())
}
