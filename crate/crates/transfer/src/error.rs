use cotlab_algmod::AlgmodError;
use cotlab_functorcat::FunctorError;
use cotlab_linalg::LinalgError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum TransferError {
    #[error(transparent)]
    Functor(#[from] FunctorError),
    #[error(transparent)]
    Algmod(#[from] AlgmodError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    /// A hypothesis of the requested construction fails for this input.
    #[error("statement inapplicable: {0}")]
    Inapplicable(String),
}

pub type Result<T> = std::result::Result<T, TransferError>;
