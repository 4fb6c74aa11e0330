use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("arity mismatch: {0} vs {1}")]
    ArityMismatch(usize, usize),
    #[error("matrix shape mismatch: {0}")]
    Shape(String),
    #[error("omega degree {0} exceeds the cap of 2")]
    OmegaDegree(usize),
    #[error("{what} of order {n} exceeds the limit {limit}")]
    TooLarge { what: &'static str, n: usize, limit: usize },
    #[error("order must be at least 1")]
    EmptyOrder,
    #[error("invalid ASM: {0}")]
    InvalidAsm(String),
    #[error("invalid DPP: {0}")]
    InvalidDpp(String),
    #[error("invalid six-vertex configuration: {0}")]
    InvalidConfig(String),
    #[error("invalid path family: {0}")]
    InvalidPaths(String),
    #[error("invalid diagram sequence: {0}")]
    InvalidTableau(String),
    #[error("degenerate parameter: {0}")]
    Degenerate(String),
    #[error("division is not exact")]
    NotExact,
    #[error("division by zero")]
    DivisionByZero,
    #[error("value out of range: {0}")]
    OutOfRange(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
