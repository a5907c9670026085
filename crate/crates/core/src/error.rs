use thiserror::Error;

/// Errors produced by graph construction, parsing, and the exact/numeric kernels.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// `cell` contains vertices with differing neighbor counts into `target`
    /// (1-based cell indices).
    #[error("partition is not equitable: vertices of cell {cell} have differing neighbor counts into cell {target}")]
    NotEquitable { cell: usize, target: usize },

    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },

    #[error("numeric failure: {0}")]
    Numeric(String),

    /// The requested check does not apply to this input (e.g. repeated
    /// eigenvalues where distinct ones are required).
    #[error("not applicable: {0}")]
    NotApplicable(String),
}

impl Error {
    pub fn parse(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            location: location.into(),
            message: message.into(),
        }
    }

    pub fn parse_at_byte(offset: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            location: format!("byte {offset}"),
            message: message.into(),
        }
    }

    pub fn parse_at_line(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            location: format!("line {line}"),
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
