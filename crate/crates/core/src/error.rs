use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),
    #[error("invalid group or groupoid table: {0}")]
    InvalidTable(String),
    #[error("invalid extension: {0}")]
    InvalidExtension(String),
    #[error("action mismatch: {0}")]
    ActionMismatch(String),
    #[error("hom space is not unital: {0}")]
    NonUnital(String),
    #[error("quasibase fails verification: {0}")]
    Quasibase(String),
    #[error("coaction invariant fails: {0}")]
    Coaction(String),
    #[error("not an ideal or coideal: {0}")]
    Ideal(String),
    #[error("Galois map is not bijective")]
    NotBijective,
    #[error("freeness rank is not an integer: dim H = {0}, dim K = {1}")]
    Rank(usize, usize),
    #[error("input error: {0}")]
    Input(String),
    #[error("unknown registry name `{0}`")]
    UnknownName(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
