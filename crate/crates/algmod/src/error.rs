use cotlab_linalg::LinalgError;
use thiserror::Error;

/// Errors raised by algebra and module constructions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgmodError {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("modules live over different algebras")]
    AlgebraMismatch,
    #[error("invalid algebra data: {0}")]
    InvalidAlgebra(String),
    #[error("invalid module data: {0}")]
    InvalidModule(String),
    #[error("matrix is not a module homomorphism: {0}")]
    NotHomomorphism(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("sequence is not short exact: {0}")]
    NotExact(String),
    #[error("end terms do not match the extension space: {0}")]
    EndTermMismatch(String),
    #[error("unsupported degree {0}")]
    Degree(usize),
}

pub type Result<T> = std::result::Result<T, AlgmodError>;
