use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{value} is not a unit modulo {modulus}")]
    NotUnit { value: String, modulus: u64 },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parameters outside the table domain: {0}")]
    TableDomain(String),

    #[error("no generator registered for {0}")]
    NoGenerator(String),

    #[error("size guard: {0}")]
    SizeGuard(String),

    #[error("too many atomic divisors: more than {cap} after processing element {stage}")]
    TooMany { cap: usize, stage: usize },

    #[error("malformed input at line {line}: {message}")]
    Input { line: usize, message: String },

    #[error("invalid data file {path}: {message}")]
    Data { path: String, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
