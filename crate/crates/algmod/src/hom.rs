//! Spaces of module homomorphisms.

use std::sync::Arc;

use cotlab_linalg::{kernel_basis, row_reduce, solve_linear, FpMatrix};

use crate::algebra::{same_algebra, Algebra};
use crate::error::{AlgmodError, Result};
use crate::module::{Bimodule, LeftModule, ModuleMap};

/// A basis of `Hom_A(M, N)` with a coordinate map.
///
/// A map `f` is flattened row-major (`f[r][c]` at index `r * dim M + c`).
#[derive(Clone, Debug)]
pub struct HomSpace {
    pub source: Arc<LeftModule>,
    pub target: Arc<LeftModule>,
    /// Basis maps, each `dim N x dim M`.
    pub basis: Vec<FpMatrix>,
    /// Matrix with the flattened basis maps as columns (for coordinates).
    flat: FpMatrix,
}

impl HomSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of a homomorphism in the basis; `None` if `f` is not a
    /// homomorphism (not in the span).
    pub fn coordinates(&self, f: &FpMatrix) -> Option<Vec<u32>> {
        let p = self.source.prime();
        if f.shape() != (self.target.dim(), self.source.dim()) {
            return None;
        }
        if self.basis.is_empty() {
            return if f.is_zero() { Some(Vec::new()) } else { None };
        }
        let b = FpMatrix::column(p, &f.flatten());
        solve_linear(&self.flat, &b).ok().flatten().map(|x| x.col(0))
    }

    /// The map with the given coordinates.
    pub fn element(&self, coords: &[u32]) -> FpMatrix {
        let p = self.source.prime();
        let mut out = FpMatrix::zeros(p, self.target.dim(), self.source.dim());
        for (b, &c) in self.basis.iter().zip(coords) {
            if c != 0 {
                out.add_scaled(b, c);
            }
        }
        out
    }

    pub fn basis_maps(&self) -> Vec<ModuleMap> {
        self.basis
            .iter()
            .map(|m| ModuleMap::from_parts(self.source.clone(), self.target.clone(), m.clone()))
            .collect()
    }
}

/// The linear system whose solutions are the homomorphisms `M -> N`.
fn hom_equations(m: &LeftModule, n: &LeftModule) -> FpMatrix {
    let p = m.prime();
    let (dm, dn) = (m.dim(), n.dim());
    let gens = &m.alg().generators().gens;
    let id_m = FpMatrix::identity(p, dm);
    let id_n = FpMatrix::identity(p, dn);
    let blocks: Vec<FpMatrix> = gens
        .iter()
        .map(|&g| {
            // vec(ρ_N f) - vec(f ρ_M) in row-major flattening.
            n.action(g).kron(&id_m).sub(&id_n.kron(&m.action(g).transpose()))
        })
        .collect();
    if blocks.is_empty() {
        return FpMatrix::zeros(p, 0, dm * dn);
    }
    let refs: Vec<&FpMatrix> = blocks.iter().collect();
    FpMatrix::vstack(&refs)
}

/// `Hom_A(M, N)` with a basis of maps.
pub fn hom_space(m: &Arc<LeftModule>, n: &Arc<LeftModule>) -> Result<HomSpace> {
    if !same_algebra(m.alg(), n.alg()) {
        return Err(AlgmodError::AlgebraMismatch);
    }
    let p = m.prime();
    let (dm, dn) = (m.dim(), n.dim());
    let sys = hom_equations(m, n);
    let ker = kernel_basis(&sys);
    let basis: Vec<FpMatrix> = ker.vectors().iter().map(|v| FpMatrix::unflatten(p, dn, dm, v)).collect();
    let flat = ker.as_columns();
    Ok(HomSpace { source: m.clone(), target: n.clone(), basis, flat })
}

/// `dim Hom_A(M, N)` without materialising the basis.
pub fn hom_dim(m: &LeftModule, n: &LeftModule) -> Result<usize> {
    if !same_algebra(m.alg(), n.alg()) {
        return Err(AlgmodError::AlgebraMismatch);
    }
    let sys = hom_equations(m, n);
    Ok(m.dim() * n.dim() - row_reduce(&sys).rank)
}

/// `Hom_R(B, N)` as a left `S`-module, for an `(R, S)`-bimodule `B` and a
/// left `R`-module `N`, with `(s·φ)(b) = φ(b s)`.
pub fn hom_bimodule(b: &Bimodule, n: &Arc<LeftModule>) -> Result<(LeftModule, HomSpace)> {
    let bl = Arc::new(b.as_left());
    let hs = hom_space(&bl, n)?;
    let s: &Arc<Algebra> = b.right_alg();
    let p = n.prime();
    let d = hs.dim();
    let action = (0..s.dim())
        .map(|i| {
            let cols: Vec<Vec<u32>> = hs
                .basis
                .iter()
                .map(|phi| hs.coordinates(&phi.mul(b.right_action(i))).expect("s·φ is a homomorphism"))
                .collect();
            FpMatrix::from_columns(p, d, &cols)
        })
        .collect();
    Ok((LeftModule::from_parts(s.clone(), d, action), hs))
}

/// `Hom_R(B, g)`: post-composition with `g`, as a map of left `S`-modules.
pub fn hom_bimodule_map(b: &Bimodule, g: &ModuleMap) -> Result<ModuleMap> {
    let (src, hs) = hom_bimodule(b, &g.source)?;
    let (dst, ht) = hom_bimodule(b, &g.target)?;
    let p = g.source.prime();
    let cols: Vec<Vec<u32>> = hs
        .basis
        .iter()
        .map(|phi| ht.coordinates(&g.matrix.mul(phi)).expect("g∘φ is a homomorphism"))
        .collect();
    let mat = FpMatrix::from_columns(p, ht.dim(), &cols);
    Ok(ModuleMap::from_parts(Arc::new(src), Arc::new(dst), mat))
}
