use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("generator universes differ")]
    UniverseMismatch,
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("invalid generator: {0}")]
    InvalidGenerator(String),
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("differential of `{generator}` has degree {found:?}, expected {expected}")]
    DifferentialDegree {
        generator: String,
        expected: u32,
        found: Option<u32>,
    },
    #[error("d∘d does not vanish on `{0}`")]
    DSquaredNonzero(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("not a cocycle")]
    NotCocycle,
    #[error("inadmissible input: {0}")]
    Inadmissible(String),
    #[error("certificate failed: {0}")]
    Certificate(String),
    #[error("outside the hypotheses of the classification: {0}")]
    Hypothesis(String),
    #[error("verification mismatch: {0}")]
    Verification(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}
