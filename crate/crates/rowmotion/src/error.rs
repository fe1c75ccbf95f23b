//! Error type shared across the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Chain dimensions were empty, zero, or otherwise unusable.
    #[error("invalid dimensions: {0}")]
    InvalidDimensions(String),

    /// A poset document failed structural validation.
    #[error("schema violation: {message}{}", offenders_suffix(.offenders))]
    Schema {
        message: String,
        /// Ids of the offending elements, when known.
        offenders: Vec<String>,
    },

    /// An argument violated a precondition.
    #[error("validation error: {0}")]
    Validation(String),

    #[error("element index {index} out of range (poset has {count} elements)")]
    IndexOutOfRange { index: usize, count: usize },

    /// A state-space enumeration would exceed the configured cap.
    #[error("capacity exceeded: more than {cap} states")]
    CapacityExceeded { cap: u64 },

    /// An exact integer accumulation left the 64-bit range.
    #[error("integer overflow while {0}")]
    Overflow(String),

    /// A tableau is not in the image of the ideal-to-tableau map.
    #[error("not in image: {0}")]
    NotInImage(String),

    /// An internal consistency check failed; this signals a bug.
    #[error("internal error: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

fn offenders_suffix(offenders: &[String]) -> String {
    if offenders.is_empty() {
        String::new()
    } else {
        format!(" (elements: {})", offenders.join(", "))
    }
}

impl Error {
    /// Process exit code for the CLI: 2 validation, 3 capacity, 4 verification/internal.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidDimensions(_)
            | Error::Schema { .. }
            | Error::Validation(_)
            | Error::IndexOutOfRange { .. }
            | Error::NotInImage(_)
            | Error::Io(_)
            | Error::Json(_) => 2,
            Error::CapacityExceeded { .. } | Error::Overflow(_) => 3,
            Error::Internal(_) => 4,
        }
    }
}
