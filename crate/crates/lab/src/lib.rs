//! Command-line front end for `quandle-core`: name resolution for built-in
//! quandles and cocycles, JSON formats, threaded enumeration and the
//! reproduction table.

pub mod json;
pub mod names;
pub mod parallel;
pub mod reproduce;

use quandle_core::cohomology::CohomologyError;
use quandle_core::knots::KnotError;
use quandle_core::quandle::QuandleError;
use quandle_core::surfaces::SurfaceError;

#[derive(Debug, thiserror::Error)]
pub enum LabError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Validation(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
}

impl LabError {
    /// 1 for usage errors, 2 for inputs that fail validation.
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Usage(_) | Self::Io { .. } => 1,
            Self::Validation(_) | Self::Json(_) => 2,
        }
    }
}

macro_rules! validation_from {
    ($($t:ty),*) => {$(
        impl From<$t> for LabError {
            fn from(e: $t) -> Self {
                Self::Validation(e.to_string())
            }
        }
    )*};
}

validation_from!(QuandleError, CohomologyError, SurfaceError);

impl From<KnotError> for LabError {
    fn from(e: KnotError) -> Self {
        match e {
            KnotError::Parse(_) | KnotError::LetterOutOfRange { .. } | KnotError::NoStrands => Self::Usage(e.to_string()),
            _ => Self::Validation(e.to_string()),
        }
    }
}

pub fn read_file(path: &str) -> Result<String, LabError> {
    std::fs::read_to_string(path).map_err(|source| LabError::Io {
        path: path.to_string(),
        source,
    })
}
