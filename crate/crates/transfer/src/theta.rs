//! The transfer maps `Θ: Ext^n(q C, D) -> Ext^n(C, t D)` and
//! `Ω: Ext^n(C, t D) -> Ext^n(q C, D)` of an adjoint pair `q ⊣ t`.
//!
//! In degree 1 both are computed on extensions: `Θ` applies `t` to an
//! extension of `q C` by `D` and pulls back along the unit `η_C`; `Ω`
//! applies `q` to an extension of `C` by `t D` and pushes out along the
//! counit `ξ_D`. In higher degrees they are computed by comparison maps
//! between the syzygy chains.

use std::sync::Arc;

use cotlab_algmod::{ext, ext_class_of, ext_to_ses, free_map_matrix, ExtSpace, LeftModule, ModuleMap, ShortExactSequence};
use cotlab_functorcat::AdjunctionHandle;
use cotlab_linalg::{solve_linear, FpMatrix};

use crate::error::{Result, TransferError};

/// A transfer map with its source and target Ext spaces; the matrix maps
/// class coordinates of the source to those of the target.
#[derive(Clone, Debug)]
pub struct TransferMap {
    pub degree: usize,
    pub source: ExtSpace,
    pub target: ExtSpace,
    pub matrix: FpMatrix,
}

impl TransferMap {
    pub fn is_injective(&self) -> bool {
        cotlab_linalg::is_injective(&self.matrix)
    }
    pub fn is_surjective(&self) -> bool {
        cotlab_linalg::is_surjective(&self.matrix)
    }
    pub fn is_isomorphism(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }
    pub fn rank(&self) -> usize {
        cotlab_linalg::rank(&self.matrix)
    }
}

fn unit_class(d: usize, i: usize) -> Vec<u32> {
    let mut v = vec![0; d];
    v[i] = 1;
    v
}

fn solve(a: &FpMatrix, b: &FpMatrix, what: &str) -> Result<FpMatrix> {
    solve_linear(a, b)?.ok_or_else(|| TransferError::Inapplicable(format!("{what} does not lift")))
}

fn apply_ses(ses: &ShortExactSequence, f: impl Fn(&ModuleMap) -> cotlab_functorcat::Result<ModuleMap>, what: &str) -> Result<ShortExactSequence> {
    let inj = f(&ses.inj)?;
    let surj = f(&ses.surj)?;
    ShortExactSequence::new(inj, surj)
        .map_err(|e| TransferError::Inapplicable(format!("{what} does not preserve the extension ({e})")))
}

/// `Θ^n_{C,D}`. Degree 1 needs `t` to keep each extension exact (checked
/// per extension); higher degrees need `t` exact.
pub fn theta_map(h: &AdjunctionHandle, degree: usize, c: &Arc<LeftModule>, d: &Arc<LeftModule>) -> Result<TransferMap> {
    if degree == 1 {
        theta_by_extensions(h, c, d)
    } else {
        theta_by_comparison(h, degree, c, d)
    }
}

/// `Ω^n_{C,D}`. Degree 1 needs `q` to keep each extension exact; higher
/// degrees need `q` exact on the syzygy chain of `C`.
pub fn omega_map(h: &AdjunctionHandle, degree: usize, c: &Arc<LeftModule>, d: &Arc<LeftModule>) -> Result<TransferMap> {
    if degree == 1 {
        omega_by_extensions(h, c, d)
    } else {
        omega_by_comparison(h, degree, c, d)
    }
}

/// Degree-1 `Θ` on extensions: `E ↦ t(E) η_C`.
pub fn theta_by_extensions(h: &AdjunctionHandle, c: &Arc<LeftModule>, d: &Arc<LeftModule>) -> Result<TransferMap> {
    let qc = h.q_obj(c)?;
    let td = h.t_obj(d)?;
    let source = ext(&qc, d, 1)?;
    let target = ext(c, &td, 1)?;
    let eta = h.unit(c)?;
    let mut cols = Vec::with_capacity(source.dim());
    for i in 0..source.dim() {
        let e = ext_to_ses(&source, &unit_class(source.dim(), i))?;
        let te = apply_ses(&e, |f| h.t_map(f), "t")?;
        let pulled = te.pullback(&eta)?;
        cols.push(ext_class_of(&target, &pulled)?);
    }
    let matrix = FpMatrix::from_columns(c.prime(), target.dim(), &cols);
    Ok(TransferMap { degree: 1, source, target, matrix })
}

/// Degree-1 `Ω` on extensions: `E ↦ ξ_D q(E)`.
pub fn omega_by_extensions(h: &AdjunctionHandle, c: &Arc<LeftModule>, d: &Arc<LeftModule>) -> Result<TransferMap> {
    let qc = h.q_obj(c)?;
    let td = h.t_obj(d)?;
    let source = ext(c, &td, 1)?;
    let target = ext(&qc, d, 1)?;
    let xi = h.counit(d)?;
    let mut cols = Vec::with_capacity(source.dim());
    for i in 0..source.dim() {
        let e = ext_to_ses(&source, &unit_class(source.dim(), i))?;
        let qe = apply_ses(&e, |f| h.q_map(f), "q")?;
        let pushed = qe.pushout(&xi)?;
        cols.push(ext_class_of(&target, &pushed)?);
    }
    let matrix = FpMatrix::from_columns(c.prime(), target.dim(), &cols);
    Ok(TransferMap { degree: 1, source, target, matrix })
}

/// `Θ^n` through a chain map from the syzygy chain of `C` to `t` of the
/// syzygy chain of `q C`, lifting the unit.
pub fn theta_by_comparison(h: &AdjunctionHandle, degree: usize, c: &Arc<LeftModule>, d: &Arc<LeftModule>) -> Result<TransferMap> {
    if degree == 0 {
        return Err(TransferError::Inapplicable("degree must be at least 1".into()));
    }
    if !h.t_exact()? {
        return Err(TransferError::Inapplicable(format!(
            "t is not exact for {:?}, so Θ^{degree} is not defined by the comparison route",
            h.tag()
        )));
    }
    let qc = h.q_obj(c)?;
    let td = h.t_obj(d)?;
    let source = ext(&qc, d, degree)?;
    let target = ext(c, &td, degree)?;
    // φ_j: K^C_j -> t(K^{qC}_j), starting from the unit.
    let mut phi = h.unit(c)?.matrix;
    for (pc, pq) in target.chain.iter().zip(&source.chain) {
        let t_cover = h.t_map(&pq.cover)?;
        let images: Vec<Vec<u32>> = pc
            .generators
            .iter()
            .map(|g| {
                let v = FpMatrix::column(c.prime(), &phi.apply(g));
                Ok(solve(&t_cover.matrix, &v, "the unit")?.col(0))
            })
            .collect::<Result<_>>()?;
        let psi = free_map_matrix(&t_cover.source, &images);
        let t_incl = h.t_map(&pq.inclusion)?;
        phi = solve(&t_incl.matrix, &psi.mul(&pc.inclusion.matrix), "the comparison map")?;
    }
    let mut cols = Vec::with_capacity(source.dim());
    for z in &source.cocycle_basis {
        let tz = h.t_map(z)?;
        cols.push(target.coordinates(&tz.matrix.mul(&phi))?);
    }
    let matrix = FpMatrix::from_columns(c.prime(), target.dim(), &cols);
    Ok(TransferMap { degree, source, target, matrix })
}

/// `Ω^n` through a chain map from the syzygy chain of `q C` to `q` of the
/// syzygy chain of `C`, lifting the identity of `q C`.
pub fn omega_by_comparison(h: &AdjunctionHandle, degree: usize, c: &Arc<LeftModule>, d: &Arc<LeftModule>) -> Result<TransferMap> {
    if degree == 0 {
        return Err(TransferError::Inapplicable("degree must be at least 1".into()));
    }
    let qc = h.q_obj(c)?;
    let td = h.t_obj(d)?;
    let source = ext(c, &td, degree)?;
    let target = ext(&qc, d, degree)?;
    let mut chi = FpMatrix::identity(c.prime(), qc.dim());
    for (j, (pc, pq)) in source.chain.iter().zip(&target.chain).enumerate() {
        let q_cover = h.q_map(&pc.cover)?;
        let images: Vec<Vec<u32>> = pq
            .generators
            .iter()
            .map(|g| {
                let v = FpMatrix::column(c.prime(), &chi.apply(g));
                Ok(solve(&q_cover.matrix, &v, "the identity of q(C)")?.col(0))
            })
            .collect::<Result<_>>()?;
        let psi = free_map_matrix(&q_cover.source, &images);
        let q_incl = h.q_map(&pc.inclusion)?;
        if !q_incl.is_injective() {
            return Err(TransferError::Inapplicable(format!(
                "q does not preserve the syzygy sequence of C in step {} (L_{}q(C) ≠ 0)",
                j + 1,
                j + 1
            )));
        }
        chi = solve(&q_incl.matrix, &psi.mul(&pq.inclusion.matrix), "the comparison map")?;
    }
    let xi = h.counit(d)?;
    let mut cols = Vec::with_capacity(source.dim());
    for w in &source.cocycle_basis {
        let qw = h.q_map(w)?;
        cols.push(target.coordinates(&xi.matrix.mul(&qw.matrix).mul(&chi))?);
    }
    let matrix = FpMatrix::from_columns(c.prime(), target.dim(), &cols);
    Ok(TransferMap { degree, source, target, matrix })
}
