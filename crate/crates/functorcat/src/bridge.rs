//! The equivalence between functors and modules over the category algebra.
//!
//! A functor `X` becomes the module `⊕_A X(A)` (blocks in object order) on
//! which basis morphism `k` of `Hom(A, B)` acts by `X(b_k)` from block `A`
//! to block `B`. Conversely a module `M` gives `X(A) = e_A M` for the
//! identity idempotents `e_A`.

use std::sync::Arc;

use cotlab_algmod::{same_algebra, LeftModule, ModuleMap};
use cotlab_linalg::{row_reduce, solve_in_span, FpMatrix};

use crate::context::FunctorCategory;
use crate::error::{FunctorError, Result};
use crate::functor::{AddFunctor, NatTrans};

/// A functor together with the module it corresponds to and the
/// identification of each `X(A)` with a summand of the module.
#[derive(Clone, Debug)]
pub struct Bridged {
    pub functor: Arc<AddFunctor>,
    pub module: Arc<LeftModule>,
    /// `X(A) -> M`, one per object.
    pub embeddings: Vec<FpMatrix>,
    /// `M -> X(A)`, one per object; `Σ_A ι_A π_A = id`.
    pub projections: Vec<FpMatrix>,
}

impl Bridged {
    /// The module of a functor, in block coordinates.
    pub fn from_functor(x: &Arc<AddFunctor>) -> Self {
        let ctx = x.ctx();
        let lam = ctx.lambda();
        let cat = ctx.category();
        let p = ctx.prime();
        let n = ctx.object_count();
        let total = x.total_dim();
        let mut offs = Vec::with_capacity(n);
        let mut o = 0;
        for a in 0..n {
            offs.push(o);
            o += x.dim(a);
        }
        let mut action = vec![FpMatrix::zeros(p, total, total); lam.dim()];
        for a in 0..n {
            for b in 0..n {
                for k in 0..cat.hom_dim(a, b) {
                    action[lam.index(a, b, k)].set_block(offs[b], offs[a], x.act(a, b, k));
                }
            }
        }
        let module = Arc::new(LeftModule::from_parts(lam.algebra.clone(), total, action));
        let embeddings: Vec<FpMatrix> = (0..n)
            .map(|a| {
                let mut e = FpMatrix::zeros(p, total, x.dim(a));
                e.set_block(offs[a], 0, &FpMatrix::identity(p, x.dim(a)));
                e
            })
            .collect();
        let projections = embeddings.iter().map(|e| e.transpose()).collect();
        Bridged { functor: x.clone(), module, embeddings, projections }
    }

    /// The functor of a module over the category algebra.
    pub fn from_module(ctx: &Arc<FunctorCategory>, m: &Arc<LeftModule>) -> Result<Self> {
        let lam = ctx.lambda();
        if !same_algebra(m.alg(), &lam.algebra) {
            return Err(FunctorError::AlgebraMismatch("module is not over the category algebra".into()));
        }
        let cat = ctx.category();
        let n = ctx.object_count();
        let mut embeddings = Vec::with_capacity(n);
        let mut projections = Vec::with_capacity(n);
        for a in 0..n {
            let e = m.act(&lam.idempotent(cat, a));
            let piv = row_reduce(&e).pivots;
            let w = e.select_cols(&piv);
            projections.push(solve_in_span(&w, &e));
            embeddings.push(w);
        }
        let dims: Vec<usize> = embeddings.iter().map(|w| w.cols()).collect();
        let act = (0..n)
            .map(|a| {
                (0..n)
                    .map(|b| {
                        (0..cat.hom_dim(a, b))
                            .map(|k| projections[b].mul(m.action(lam.index(a, b, k))).mul(&embeddings[a]))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let functor = Arc::new(AddFunctor::from_parts(ctx.clone(), dims, act));
        Ok(Bridged { functor, module: m.clone(), embeddings, projections })
    }

    /// The module map of a natural transformation between bridged functors.
    pub fn map_to_module(alpha: &NatTrans, src: &Bridged, dst: &Bridged) -> ModuleMap {
        let p = src.module.prime();
        let mut m = FpMatrix::zeros(p, dst.module.dim(), src.module.dim());
        for (a, c) in alpha.components.iter().enumerate() {
            m = m.add(&dst.embeddings[a].mul(c).mul(&src.projections[a]));
        }
        ModuleMap::from_parts(src.module.clone(), dst.module.clone(), m)
    }

    /// The natural transformation of a module map between bridged modules.
    pub fn map_to_nat(f: &ModuleMap, src: &Bridged, dst: &Bridged) -> NatTrans {
        let components = (0..src.embeddings.len())
            .map(|a| dst.projections[a].mul(&f.matrix).mul(&src.embeddings[a]))
            .collect();
        NatTrans::from_parts(src.functor.clone(), dst.functor.clone(), components)
    }
}

/// The module over the category algebra corresponding to `X`.
pub fn functor_to_module(x: &Arc<AddFunctor>) -> Arc<LeftModule> {
    Bridged::from_functor(x).module
}

/// The functor corresponding to a module over the category algebra.
pub fn module_to_functor(ctx: &Arc<FunctorCategory>, m: &Arc<LeftModule>) -> Result<Arc<AddFunctor>> {
    Ok(Bridged::from_module(ctx, m)?.functor)
}
