use cotlab_algmod::AlgmodError;
use cotlab_linalg::LinalgError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum EncatError {
    #[error(transparent)]
    Algmod(#[from] AlgmodError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("unknown object `{0}`")]
    UnknownObject(String),
    #[error("shape error: {0}")]
    Shape(String),
    #[error("invalid category: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, EncatError>;
