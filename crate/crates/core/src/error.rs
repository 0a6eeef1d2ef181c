use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("denominator vanishes at a = {0}")]
    PoleAtAlpha(String),
    #[error("matrix is not homogeneous")]
    MixedParityMatrix,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("generation diverged: reached {got} while expecting {expected}")]
    GenerationDiverged { got: String, expected: String },
    #[error("grading element is not diagonalizable with integer eigenvalues: {0}")]
    NotDiagonalizable(String),
    #[error("grading has depth greater than one: eigenvalue {0}")]
    DepthExceeded(i64),
    #[error("unknown case: {0}")]
    UnknownCase(String),
    #[error("missing component g_{0}: raise the degree cutoff")]
    MissingComponent(i32),
    #[error("torus does not act diagonally: {0}")]
    NonDiagonalizableAction(String),
    #[error("kernel chain not stable below the cutoff: {0}")]
    CutoffTooLow(String),
    #[error("golden mismatch for {case}: {diff}")]
    GoldenMismatch { case: String, diff: String },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
