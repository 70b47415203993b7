use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is not symmetric: entry ({i},{j}) differs from ({j},{i})")]
    NotSymmetric { i: usize, j: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("invalid front projection: {0}")]
    InvalidFront(String),

    #[error("component index {index} out of range for a diagram with {len} components")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("invalid diagram field `{field}`: {message}")]
    Validation { field: String, message: String },

    #[error("malformed diagram: {0}")]
    Json(#[from] serde_json::Error),

    #[error("the diagram has no components")]
    EmptyDiagram,

    #[error("argument out of domain: {0}")]
    Domain(String),
}

pub type Result<T> = std::result::Result<T, Error>;
