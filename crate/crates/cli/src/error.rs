use thiserror::Error;

pub const EX_USAGE: u8 = 64;
pub const EX_DATAERR: u8 = 65;
pub const EX_NOINPUT: u8 = 66;
pub const EX_SOFTWARE: u8 = 70;
pub const EX_CANTCREAT: u8 = 73;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    /// Malformed input or a violated construction precondition.
    #[error("{0}")]
    Data(String),
    #[error("cannot read {path}: {source}")]
    Read { path: String, source: std::io::Error },
    #[error("cannot write {path}: {source}")]
    Write { path: String, source: std::io::Error },
    #[error("{0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => EX_USAGE,
            CliError::Data(_) => EX_DATAERR,
            CliError::Read { .. } => EX_NOINPUT,
            CliError::Write { .. } => EX_CANTCREAT,
            CliError::Internal(_) => EX_SOFTWARE,
        }
    }

    pub fn data(e: impl std::fmt::Display) -> CliError {
        CliError::Data(e.to_string())
    }
}
