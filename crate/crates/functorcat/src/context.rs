//! Shared data of a functor category: the source category, its
//! endomorphism algebras, the category algebra and the product of the
//! endomorphism algebras.

use std::sync::{Arc, OnceLock};

use cotlab_algmod::{Algebra, AlgebraMorphism, Bimodule};
use cotlab_encat::{validate_category, zero_trace_failures, CategoryAlgebra, EnrichedCategory};
use cotlab_linalg::FpMatrix;

use crate::error::{FunctorError, Result};

/// The category of additive functors from a finite linear category to
/// vector spaces, with cached auxiliary algebras.
#[derive(Debug)]
pub struct FunctorCategory {
    cat: Arc<EnrichedCategory>,
    endo: Vec<Arc<Algebra>>,
    lambda: OnceLock<CategoryAlgebra>,
    product: OnceLock<Arc<Algebra>>,
    projection: OnceLock<AlgebraMorphism>,
    homs: Vec<Vec<OnceLock<Bimodule>>>,
}

impl FunctorCategory {
    /// Wraps a category, rejecting it if the category axioms fail.
    pub fn new(cat: Arc<EnrichedCategory>) -> Result<Arc<Self>> {
        let report = validate_category(&cat, false);
        if !report.is_category() {
            return Err(FunctorError::InvalidFunctor(format!("invalid category: {}", report.describe(&cat).join("; "))));
        }
        let n = cat.object_count();
        let endo = (0..n).map(|a| cat.endo_algebra(a)).collect();
        let homs = (0..n).map(|_| (0..n).map(|_| OnceLock::new()).collect()).collect();
        Ok(Arc::new(FunctorCategory {
            cat,
            endo,
            lambda: OnceLock::new(),
            product: OnceLock::new(),
            projection: OnceLock::new(),
            homs,
        }))
    }

    pub fn category(&self) -> &Arc<EnrichedCategory> {
        &self.cat
    }
    pub fn prime(&self) -> u32 {
        self.cat.prime()
    }
    pub fn object_count(&self) -> usize {
        self.cat.object_count()
    }
    pub fn object_name(&self, a: usize) -> &str {
        &self.cat.objects()[a]
    }
    pub fn object_index(&self, name: &str) -> Result<usize> {
        Ok(self.cat.object_index(name)?)
    }

    /// `R_A`.
    pub fn endo(&self, a: usize) -> &Arc<Algebra> {
        &self.endo[a]
    }

    /// `Hom(A, B)` as an `(R_B, R_A)`-bimodule.
    pub fn hom(&self, a: usize, b: usize) -> &Bimodule {
        self.homs[a][b].get_or_init(|| self.cat.hom_bimodule(a, b))
    }

    /// The category algebra.
    pub fn lambda(&self) -> &CategoryAlgebra {
        self.lambda.get_or_init(|| CategoryAlgebra::new(&self.cat))
    }

    /// `P = Π_A R_A` with concatenated bases in object order.
    pub fn product(&self) -> &Arc<Algebra> {
        self.product.get_or_init(|| {
            let parts: Vec<&Algebra> = self.endo.iter().map(|a| a.as_ref()).collect();
            Arc::new(Algebra::product(&parts).expect("endomorphism algebras share the prime"))
        })
    }

    /// Offset of `R_A` inside the basis of `P`.
    pub fn product_offset(&self, a: usize) -> usize {
        self.endo[..a].iter().map(|e| e.dim()).sum()
    }

    /// Fails unless every composite `B → A → B` with `A != B` vanishes.
    pub fn require_zero_trace(&self) -> Result<()> {
        let bad = zero_trace_failures(&self.cat);
        if let Some(&(a, b)) = bad.first() {
            return Err(FunctorError::ZeroTrace(format!(
                "{} → {} → {} is not zero",
                self.object_name(b),
                self.object_name(a),
                self.object_name(b)
            )));
        }
        Ok(())
    }

    /// The algebra map `Λ -> P` keeping endomorphisms and killing every
    /// morphism between distinct objects (multiplicative under zero trace).
    pub fn projection_to_product(&self) -> Result<&AlgebraMorphism> {
        if let Some(m) = self.projection.get() {
            return Ok(m);
        }
        self.require_zero_trace()?;
        let lam = self.lambda();
        let prod = self.product().clone();
        let mut m = FpMatrix::zeros(self.prime(), prod.dim(), lam.dim());
        for a in 0..self.object_count() {
            for k in 0..self.cat.hom_dim(a, a) {
                m.set(self.product_offset(a) + k, lam.index(a, a, k), 1);
            }
        }
        let f = AlgebraMorphism::new(lam.algebra.clone(), prod, m)?;
        Ok(self.projection.get_or_init(|| f))
    }
}
