use thiserror::Error;

#[derive(Debug, Error)]
pub enum PolysumError {
    #[error("empty input: {0}")]
    EmptyInput(&'static str),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("invalid rational {0:?}")]
    InvalidRational(String),
    #[error("origin is not strictly interior: facet {normal} <= {offset} is not strict at 0")]
    OriginNotInterior { normal: String, offset: String },
    #[error("polytope is not full-dimensional (dim {dim} in R^{ambient})")]
    NotFullDimensional { dim: usize, ambient: usize },
    #[error("face {0} is not contained in face {1}")]
    NotContained(usize, usize),
    #[error("face index {0} out of range")]
    FaceOutOfRange(usize),
    #[error("trivial face has no dual face")]
    TrivialFace,
    #[error("face {0} has an inexact decomposition")]
    InexactFace(usize),
    #[error("index out of range: {0}")]
    OutOfRange(String),
    #[error("invalid poset: {0}")]
    InvalidPoset(String),
    #[error("polytope is not perfectly centered: {0}")]
    NotPerfectlyCentered(String),
    #[error("general position not reached after {attempts} attempts: {diagnostics}")]
    PerturbationExhausted { attempts: usize, diagnostics: String },
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = PolysumError> = std::result::Result<T, E>;
