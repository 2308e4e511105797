use cotlab_algmod::AlgmodError;
use cotlab_encat::EncatError;
use cotlab_linalg::LinalgError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FunctorError {
    #[error(transparent)]
    Algmod(#[from] AlgmodError),
    #[error(transparent)]
    Encat(#[from] EncatError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("invalid functor: {0}")]
    InvalidFunctor(String),
    #[error("not natural: {0}")]
    NotNatural(String),
    #[error("functors live on different categories")]
    CategoryMismatch,
    #[error("algebra mismatch: {0}")]
    AlgebraMismatch(String),
    #[error("the category does not satisfy the zero-trace condition: {0}")]
    ZeroTrace(String),
    #[error("adjunction argument mismatch: {0}")]
    Adjunction(String),
}

pub type Result<T> = std::result::Result<T, FunctorError>;
