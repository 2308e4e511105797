//! Extension groups of functors, computed on the module side.

use std::sync::Arc;

use cotlab_algmod::{ext, ExtSpace};

use crate::bridge::functor_to_module;
use crate::error::{FunctorError, Result};
use crate::functor::AddFunctor;

/// `Ext^n(X, Y)` in the functor category, `n ≥ 1`.
pub fn functor_ext(x: &Arc<AddFunctor>, y: &Arc<AddFunctor>, degree: usize) -> Result<ExtSpace> {
    if !Arc::ptr_eq(x.ctx(), y.ctx()) && x.ctx().category() != y.ctx().category() {
        return Err(FunctorError::CategoryMismatch);
    }
    Ok(ext(&functor_to_module(x), &functor_to_module(y), degree)?)
}

/// `dim Ext^n(X, Y)`.
pub fn functor_ext_dim(x: &Arc<AddFunctor>, y: &Arc<AddFunctor>, degree: usize) -> Result<usize> {
    Ok(functor_ext(x, y, degree)?.dim())
}
