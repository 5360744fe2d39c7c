//! CLI-level errors with process exit codes: 1 for wrong results (oracle
//! mismatches, internal exactness failures), 2 for everything the user can
//! fix (bad usage, unreadable files, malformed input, size guards).

use std::fmt;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io(String),
    Core(witcount_core::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "{msg}"),
            CliError::Io(msg) => write!(f, "{msg}"),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl From<witcount_core::Error> for CliError {
    fn from(e: witcount_core::Error) -> Self {
        CliError::Core(e)
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) if e.is_internal() => 1,
            _ => 2,
        }
    }
}
