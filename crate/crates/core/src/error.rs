use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("group element does not belong to this presentation: {0}")]
    PresentationMismatch(String),

    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),

    #[error("row {row} has {found} entries, expected {expected}")]
    RaggedRow {
        row: usize,
        expected: usize,
        found: usize,
    },

    #[error("ring `{ring}` is not flagged {flag}")]
    MissingRingProperty { ring: String, flag: &'static str },

    #[error("ring `{0}` has no canonical class data")]
    MissingCanonicalClass(String),

    #[error("inconsistent Betti data: {0}")]
    InconsistentBetti(String),

    #[error("rank mismatch for class `{label}`: expected {expected}, got {found}")]
    RankMismatch {
        label: String,
        expected: u64,
        found: u64,
    },

    #[error("class `{0}` is not declared maximal Cohen-Macaulay")]
    NotDeclaredMcm(String),

    #[error("data inconsistency: {0}")]
    DataInconsistency(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("unknown catalog entry `{name}`; available: {}", available.join(", "))]
    UnknownEntry {
        name: String,
        available: Vec<String>,
    },

    #[error("parse error{}: {message}", line.map(|l| format!(" at line {l}")).unwrap_or_default())]
    Parse { line: Option<usize>, message: String },

    #[error("i/o error on {path}: {message}")]
    Io { path: String, message: String },
}

impl Error {
    pub(crate) fn parse(message: impl Into<String>) -> Self {
        Error::Parse {
            line: None,
            message: message.into(),
        }
    }

    pub(crate) fn dim(expected: usize, found: usize) -> Self {
        Error::DimensionMismatch { expected, found }
    }
}
