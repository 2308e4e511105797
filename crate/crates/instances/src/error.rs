use cotlab_algmod::AlgmodError;
use cotlab_encat::EncatError;
use cotlab_functorcat::FunctorError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum InstanceError {
    #[error(transparent)]
    Algmod(#[from] AlgmodError),
    #[error(transparent)]
    Encat(#[from] EncatError),
    #[error(transparent)]
    Functor(#[from] FunctorError),
    #[error("invalid instance parameters: {0}")]
    InvalidParameters(String),
    /// The constructed category fails validation.
    #[error("instance fails validation: {0}")]
    Validation(String),
    #[error("enumeration bound exceeded: {0}")]
    BoundExceeded(String),
    #[error("no valid instance after {0} attempts")]
    RetryCapExceeded(usize),
}

pub type Result<T> = std::result::Result<T, InstanceError>;
