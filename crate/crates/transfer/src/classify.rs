//! Projective / injective classification of functors by two independent
//! routes, zero detection through the reduced functors, and the
//! exactness tests for the sequences `coker φ -> X(A) -> c_A(X)` and
//! `k_A(X) -> X(A) -> ker μ`.

use std::sync::Arc;

use cotlab_algmod::{is_injective_split, is_projective_split, ModuleMap};
use cotlab_functorcat::{coker_phi, functor_to_module, ker_mu, reduced_c, reduced_k, AddFunctor};
use cotlab_linalg::rank;

use crate::classes::{perp_membership, ClassSelector, ObjectEvidence, PerpSelector, PerpVerdict};
use crate::error::{Result, TransferError};

/// Projective or injective.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Projective,
    Injective,
}

impl Side {
    pub fn name(self) -> &'static str {
        match self {
            Side::Projective => "projective",
            Side::Injective => "injective",
        }
    }
}

/// Both verdicts with the per-object evidence of the intrinsic route.
#[derive(Clone, Debug)]
pub struct Classification {
    pub side: Side,
    /// Projectivity (injectivity) of the corresponding module over the
    /// category algebra.
    pub direct: bool,
    /// Membership in `⊥s(∏ R_A-Mod)` (resp. `s(∏ R_A-Mod)^⊥`).
    pub characterization: bool,
    pub evidence: Vec<ObjectEvidence>,
}

impl Classification {
    pub fn agrees(&self) -> bool {
        self.direct == self.characterization
    }

    /// The first object at which the intrinsic conditions fail.
    pub fn witness(&self) -> Option<&ObjectEvidence> {
        self.evidence.iter().find(|e| !e.holds())
    }
}

/// Classifies `X` as projective or injective by both routes.
pub fn classify_functor(x: &Arc<AddFunctor>, side: Side) -> Result<Classification> {
    let n = x.ctx().object_count();
    let module = functor_to_module(x);
    let (ctx, lam) = (x.ctx(), x.ctx().lambda());
    let idempotents: Vec<Vec<u32>> = (0..n).map(|a| lam.idempotent(ctx.category(), a)).collect();
    let (direct, selector, class) = match side {
        Side::Projective => (is_projective_split(&module, &idempotents)?, PerpSelector::PerpS, ClassSelector::Projectives),
        Side::Injective => (is_injective_split(&module, &idempotents)?, PerpSelector::SPerp, ClassSelector::Injectives),
    };
    let classes = vec![class; n];
    match perp_membership(selector, x, &classes)? {
        PerpVerdict::Member { member, evidence } => Ok(Classification { side, direct, characterization: member, evidence }),
        PerpVerdict::Inapplicable(msg) => Err(TransferError::Inapplicable(msg)),
    }
}

/// Vanishing of `X`, of every `c_A(X)` and of every `k_A(X)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroDetection {
    pub is_zero: bool,
    pub c_vanishing: Vec<bool>,
    pub k_vanishing: Vec<bool>,
}

impl ZeroDetection {
    pub fn agrees(&self) -> bool {
        let c = self.c_vanishing.iter().all(|&v| v);
        let k = self.k_vanishing.iter().all(|&v| v);
        self.is_zero == c && self.is_zero == k
    }
}

pub fn zero_detect(x: &Arc<AddFunctor>) -> Result<ZeroDetection> {
    let n = x.ctx().object_count();
    let mut c_vanishing = Vec::with_capacity(n);
    let mut k_vanishing = Vec::with_capacity(n);
    for a in 0..n {
        c_vanishing.push(reduced_c(x, a)?.0.dim() == 0);
        k_vanishing.push(reduced_k(x, a)?.0.dim() == 0);
    }
    Ok(ZeroDetection { is_zero: x.is_zero(), c_vanishing, k_vanishing })
}

/// Whether `f` followed by `g` is a short exact sequence.
fn short_exact(f: &ModuleMap, g: &ModuleMap) -> bool {
    let mid = f.target.dim();
    g.matrix.mul(&f.matrix).is_zero()
        && rank(&f.matrix) == f.source.dim()
        && rank(&g.matrix) == g.target.dim()
        && rank(&f.matrix) + rank(&g.matrix) == mid
}

/// Whether `coker φ_{A,X} -> X(A) -> c_A(X)` is short exact.
pub fn is_c_flat_functor(x: &Arc<AddFunctor>, a: usize) -> Result<bool> {
    let (_, phi) = coker_phi(x, a)?;
    let (_, proj) = reduced_c(x, a)?;
    Ok(short_exact(&phi, &proj))
}

/// Whether `k_A(X) -> X(A) -> ker μ_{A,X}` is short exact.
pub fn is_k_coflat_functor(x: &Arc<AddFunctor>, a: usize) -> Result<bool> {
    let (_, incl) = reduced_k(x, a)?;
    let (_, psi) = ker_mu(x, a)?;
    Ok(short_exact(&incl, &psi))
}
