//! Flatness and coflatness along an adjoint pair, via derived functors.

use std::sync::Arc;

use cotlab_algmod::{generator_presentation, syzygy_chain, LeftModule, ModuleMap};
use cotlab_functorcat::AdjunctionHandle;
use cotlab_linalg::FpMatrix;

use crate::error::{Result, TransferError};

/// `dim L_k q(C)` for `k ≥ 1`, computed as `ker q(K_k -> F_{k-1})` on the
/// syzygy chain of `C`.
pub fn left_derived_dim(h: &AdjunctionHandle, c: &Arc<LeftModule>, k: usize) -> Result<usize> {
    if k == 0 {
        return Err(TransferError::Inapplicable("derived functors are indexed from 1".into()));
    }
    let chain = syzygy_chain(c, k, true);
    let last = chain.last().expect("chain of positive length");
    let q_incl = h.q_map(&last.inclusion)?;
    Ok(q_incl.matrix.cols() - q_incl.rank())
}

/// Whether `C` is `q`-flat: `L_1 q(C) = 0`.
pub fn is_flat_for(h: &AdjunctionHandle, c: &Arc<LeftModule>) -> Result<bool> {
    Ok(left_derived_dim(h, c, 1)? == 0)
}

/// An injective copresentation `D ↪ I ↠ D'`, obtained by dualising a
/// projective presentation of the dual module.
pub fn injective_copresentation(d: &Arc<LeftModule>) -> (ModuleMap, ModuleMap) {
    let alg = d.alg().clone();
    let dual = Arc::new(d.dual_opposite());
    let pres = generator_presentation(&dual);
    let relift = |m: &LeftModule| Arc::new(LeftModule::from_parts(alg.clone(), m.dim(), transpose_all(m.actions())));
    let inj_mod = relift(&pres.free);
    let cok_mod = relift(&pres.kernel);
    let inj = ModuleMap::from_parts(d.clone(), inj_mod.clone(), pres.cover.matrix.transpose());
    let surj = ModuleMap::from_parts(inj_mod, cok_mod, pres.inclusion.matrix.transpose());
    (inj, surj)
}

fn transpose_all(ms: &[FpMatrix]) -> Vec<FpMatrix> {
    ms.iter().map(|m| m.transpose()).collect()
}

/// `dim R^k t(D)` for `k ≥ 1`, computed as `coker t(I_{k-1} -> D_k)` on
/// an injective cosyzygy chain of `D`.
pub fn right_derived_dim(h: &AdjunctionHandle, d: &Arc<LeftModule>, k: usize) -> Result<usize> {
    if k == 0 {
        return Err(TransferError::Inapplicable("derived functors are indexed from 1".into()));
    }
    let mut cur = d.clone();
    let mut last = None;
    for _ in 0..k {
        let (inj, surj) = injective_copresentation(&cur);
        cur = surj.target.clone();
        last = Some((inj, surj));
    }
    let (_, surj) = last.expect("chain of positive length");
    let t_surj = h.t_map(&surj)?;
    Ok(t_surj.matrix.rows() - t_surj.rank())
}

/// Whether `D` is `t`-coflat: `R^1 t(D) = 0`.
pub fn is_coflat_for(h: &AdjunctionHandle, d: &Arc<LeftModule>) -> Result<bool> {
    Ok(right_derived_dim(h, d, 1)? == 0)
}
