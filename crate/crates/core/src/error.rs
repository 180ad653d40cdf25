use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("coordinate {value} out of range for Z_{modulus}")]
    CoordinateRange { value: i64, modulus: u64 },

    #[error("degenerate lattice: generator rows are linearly dependent")]
    DegenerateLattice,

    #[error("{what} would need {requested} items, cap is {cap}")]
    CapExceeded {
        what: String,
        requested: String,
        cap: u64,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// The input violates a structural property a construction relies on.
    #[error("structural violation: {0}")]
    Structural(String),

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("index {index} outside supplied sequence range [{start}, {end})")]
    SequenceRange { index: i64, start: i64, end: i64 },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn cap(what: impl Into<String>, requested: impl ToString, cap: u64) -> Self {
        Error::CapExceeded {
            what: what.into(),
            requested: requested.to_string(),
            cap,
        }
    }

    pub(crate) fn dim(msg: impl Into<String>) -> Self {
        Error::Dimension(msg.into())
    }

    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

/// Resource caps shared by every enumerator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest number of points any single enumeration may touch.
    pub max_points: u64,
}

impl Limits {
    pub const DEFAULT_MAX_POINTS: u64 = 10_000_000;

    pub fn new(max_points: u64) -> Self {
        Limits { max_points }
    }

    pub(crate) fn check(&self, what: &str, requested: u64) -> Result<()> {
        if requested > self.max_points {
            Err(Error::cap(what, requested, self.max_points))
        } else {
            Ok(())
        }
    }
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_points: Self::DEFAULT_MAX_POINTS,
        }
    }
}
