use thiserror::Error;

/// Errors raised by parsing, validation, size guards, and internal exactness
/// checks. `Internal` signals a bug in the counting pipeline itself and is
/// mapped to a distinct process exit code by callers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed input text. Lines are 1-based and refer to the raw file,
    /// including blank and comment lines.
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },

    /// The same vector appeared twice in an instance file and deduplication
    /// was not requested.
    #[error("line {line}: duplicate vector {bits}")]
    DuplicateVector { line: usize, bits: String },

    /// The requested dimension exceeds the configured cap. The cap protects
    /// against accidental 2^d allocations, not against valid large runs.
    #[error("dimension d={d} exceeds the cap of {cap}")]
    DimensionCap { d: usize, cap: usize },

    /// Programmatic construction with inconsistent data (vector out of range,
    /// malformed edge, repeated element, ...).
    #[error("invalid input: {reason}")]
    Invalid { reason: String },

    /// A reference oracle refused an input that exceeds its size guard.
    /// Oracles are for cross-checking, not production workloads.
    #[error("{oracle} oracle refused input: {reason}")]
    SizeGuard { oracle: &'static str, reason: String },

    /// An exactness invariant failed (non-zero remainder in a division that
    /// must be exact, or a negative count). This always indicates a bug.
    #[error("internal error in {context}: {detail}")]
    Internal { context: &'static str, detail: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal { .. })
    }
}
