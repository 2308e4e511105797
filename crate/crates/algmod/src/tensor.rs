//! Tensor products over an algebra.

use std::sync::Arc;

use cotlab_linalg::{quotient_space, FpMatrix, SubspaceBasis};

use crate::algebra::same_algebra;
use crate::error::{AlgmodError, Result};
use crate::module::{Bimodule, LeftModule, ModuleMap, RightModule};

/// `M ⊗_A N` as a quotient of `M ⊗ N` (coordinates `i * dim N + j`).
#[derive(Clone, Debug)]
pub struct TensorSpace {
    pub dim: usize,
    /// `M ⊗ N -> M ⊗_A N`.
    pub projection: FpMatrix,
    /// A linear section of the projection.
    pub section: FpMatrix,
    pub left_dim: usize,
    pub right_dim: usize,
}

impl TensorSpace {
    /// Class of the pure tensor `x ⊗ y`.
    pub fn pure(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        let p = self.projection.prime();
        let mut v = vec![0u32; self.left_dim * self.right_dim];
        for (i, &a) in x.iter().enumerate() {
            for (j, &b) in y.iter().enumerate() {
                v[i * self.right_dim + j] = cotlab_linalg::field::mul(p, a, b);
            }
        }
        self.projection.apply(&v)
    }
}

/// Tensor product of a right module with a left module over the same algebra.
pub fn tensor_product(m: &RightModule, n: &LeftModule) -> Result<TensorSpace> {
    if !same_algebra(m.alg(), n.alg()) {
        return Err(AlgmodError::AlgebraMismatch);
    }
    let p = m.prime();
    let (dm, dn) = (m.dim(), n.dim());
    let id_m = FpMatrix::identity(p, dm);
    let id_n = FpMatrix::identity(p, dn);
    let mut rels = Vec::new();
    for &g in &m.alg().generators().gens {
        // (m·g) ⊗ n - m ⊗ (g·n)
        let r = m.action(g).kron(&id_n).sub(&id_m.kron(n.action(g)));
        for c in 0..r.cols() {
            rels.push(r.col(c));
        }
    }
    let span = SubspaceBasis::span(p, dm * dn, &rels);
    let (projection, section) = quotient_space(dm * dn, &span)?;
    Ok(TensorSpace { dim: projection.rows(), projection, section, left_dim: dm, right_dim: dn })
}

/// The induced linear map `f ⊗ g` between tensor spaces, given the linear
/// maps on each factor.
pub fn tensor_map(src: &TensorSpace, dst: &TensorSpace, f: &FpMatrix, g: &FpMatrix) -> FpMatrix {
    dst.projection.mul(&f.kron(g)).mul(&src.section)
}

/// `M ⊗_A N -> M ⊗_A N'` induced by a module map `g: N -> N'`.
pub fn tensor_with_map(m: &RightModule, g: &ModuleMap) -> Result<(TensorSpace, TensorSpace, FpMatrix)> {
    let src = tensor_product(m, &g.source)?;
    let dst = tensor_product(m, &g.target)?;
    let id = FpMatrix::identity(m.prime(), m.dim());
    let mat = tensor_map(&src, &dst, &id, &g.matrix);
    Ok((src, dst, mat))
}

/// `B ⊗_R N` as a left `S`-module for an `(S, R)`-bimodule `B` and a left
/// `R`-module `N`.
pub fn tensor_bimodule(b: &Bimodule, n: &LeftModule) -> Result<(LeftModule, TensorSpace)> {
    let ts = tensor_product(&b.as_right(), n)?;
    let p = n.prime();
    let id = FpMatrix::identity(p, n.dim());
    let s = b.left_alg();
    let action = (0..s.dim()).map(|i| tensor_map(&ts, &ts, b.left_action(i), &id)).collect();
    Ok((LeftModule::from_parts(s.clone(), ts.dim, action), ts))
}

/// `B ⊗_R g` for a map `g` of left `R`-modules, as a map of left `S`-modules.
pub fn tensor_bimodule_map(b: &Bimodule, g: &ModuleMap) -> Result<ModuleMap> {
    let (src, ts) = tensor_bimodule(b, &g.source)?;
    let (dst, td) = tensor_bimodule(b, &g.target)?;
    let id = FpMatrix::identity(g.source.prime(), b.dim());
    let mat = tensor_map(&ts, &td, &id, &g.matrix);
    Ok(ModuleMap::from_parts(Arc::new(src), Arc::new(dst), mat))
}
