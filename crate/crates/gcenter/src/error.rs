use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("validation failed: {0}")]
    Validation(String),
    #[error("field does not split: {0} (increase the cyclotomic order)")]
    NonSplit(String),
    #[error("algebra is not semisimple: {0}")]
    NonSemisimple(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("not an idempotent")]
    NotIdempotent,
    #[error("grade mismatch: {0}")]
    Grade(String),
    #[error("non-invertible dimension: {0}")]
    SingularDimension(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// Process exit status used by the command line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse(_) => 2,
            Error::Validation(_) | Error::Grade(_) | Error::SingularDimension(_) => 3,
            Error::NonSplit(_) => 4,
            _ => 5,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
