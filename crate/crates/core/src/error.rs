use thiserror::Error;

/// Crate-wide error type. Variants are grouped by the failure class the CLI
/// maps to exit codes: configuration/usage, data/format, and numeric aborts.
#[derive(Debug, Error)]
pub enum UqrError {
    #[error("shape error in {op}: {detail}")]
    Shape { op: &'static str, detail: String },

    #[error("domain error in {op}: value {value} at flat index {index}")]
    Domain {
        op: &'static str,
        index: usize,
        value: f64,
    },

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("non-finite {what} at parameter '{name}'")]
    NonFiniteGradient { what: &'static str, name: String },

    #[error("non-finite loss at iteration {iteration}")]
    NumericAbort { iteration: u64 },

    #[error("config error in field '{field}': {detail}")]
    Config { field: String, detail: String },

    #[error("recipe error: {0}")]
    Recipe(String),

    #[error("unsupported grid size: {0} (extent must be a power of two)")]
    UnsupportedSize(usize),

    #[error("format error at byte {offset}: {detail}")]
    Format { offset: u64, detail: String },

    #[error("protocol error: {0}")]
    Protocol(String),

    #[error("empty mask: statistics need at least one selected pixel")]
    EmptyMask,

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, UqrError>;
