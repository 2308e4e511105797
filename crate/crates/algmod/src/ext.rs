//! Ext via syzygies, extension classes, Tor₁ and projectivity tests.

use std::sync::Arc;

use cotlab_linalg::{kernel_basis, quotient_space, solve_linear, FpMatrix, RowEchelon, SubspaceBasis};

use crate::algebra::Algebra;
use crate::error::{AlgmodError, Result};
use crate::hom::{hom_space, HomSpace};
use crate::module::{LeftModule, ModuleMap, RightModule};
use crate::resolution::{check_same, free_map_matrix, syzygy_chain, Presentation};
use crate::ses::{has_section, ShortExactSequence};
use crate::tensor::{tensor_map, tensor_product};

/// `Ext^n(M, N)` as `Hom(K_n, N)` modulo maps extending over `F_{n-1}`,
/// where `K_n` is the `n`-th syzygy of `M`.
#[derive(Clone, Debug)]
pub struct ExtSpace {
    pub degree: usize,
    pub source: Arc<LeftModule>,
    pub target: Arc<LeftModule>,
    /// Presentations of `K_0 = M, K_1, ..., K_{n-1}`.
    pub chain: Vec<Presentation>,
    /// `Hom(K_n, N)`.
    pub hom: HomSpace,
    /// Hom coordinates -> class coordinates.
    projection: FpMatrix,
    /// Class coordinates -> Hom coordinates (representatives).
    section: FpMatrix,
    /// Cocycle representatives `K_n -> N`, one per basis class.
    pub cocycle_basis: Vec<ModuleMap>,
}

impl ExtSpace {
    pub fn dim(&self) -> usize {
        self.cocycle_basis.len()
    }

    /// The `n`-th syzygy `K_n`.
    pub fn syzygy(&self) -> &Arc<LeftModule> {
        self.chain.last().map_or(&self.source, |p| &p.kernel)
    }

    /// Class coordinates of a cocycle `K_n -> N`.
    pub fn coordinates(&self, cocycle: &FpMatrix) -> Result<Vec<u32>> {
        let h = self
            .hom
            .coordinates(cocycle)
            .ok_or_else(|| AlgmodError::NotHomomorphism("cocycle is not a module map from the syzygy".into()))?;
        Ok(self.projection.apply(&h))
    }

    /// A representative cocycle for the class with the given coordinates.
    pub fn cocycle(&self, class: &[u32]) -> FpMatrix {
        self.hom.element(&self.section.apply(class))
    }

    /// Whether a cocycle extends over the free module (represents zero).
    pub fn is_coboundary(&self, cocycle: &FpMatrix) -> Result<bool> {
        Ok(self.coordinates(cocycle)?.iter().all(|&c| c == 0))
    }
}

/// `Ext^n(M, N)` using greedy generator presentations.
pub fn ext(m: &Arc<LeftModule>, n: &Arc<LeftModule>, degree: usize) -> Result<ExtSpace> {
    ext_with(m, n, degree, true)
}

/// `Ext^n(M, N)` computed from the basis-vector presentations, which give
/// the same dimension and an independent cross-check.
pub fn ext_from_basis_presentation(m: &Arc<LeftModule>, n: &Arc<LeftModule>, degree: usize) -> Result<ExtSpace> {
    ext_with(m, n, degree, false)
}

fn ext_with(m: &Arc<LeftModule>, n: &Arc<LeftModule>, degree: usize, minimal: bool) -> Result<ExtSpace> {
    check_same(m, n)?;
    let p = m.prime();
    let chain = syzygy_chain(m, degree, minimal);
    let k = chain.last().map_or_else(|| m.clone(), |pr| pr.kernel.clone());
    let hom = hom_space(&k, n)?;
    // Image of Hom(F_{n-1}, N) under restriction to K_n.
    let mut image_cols: Vec<Vec<u32>> = Vec::new();
    if let Some(last) = chain.last() {
        for i in 0..last.rank {
            for t in 0..n.dim() {
                let mut images = vec![vec![0u32; n.dim()]; last.rank];
                images[i][t] = 1;
                let phi = free_map_matrix(n, &images);
                let restricted = phi.mul(&last.inclusion.matrix);
                image_cols.push(hom.coordinates(&restricted).expect("restriction of a module map"));
            }
        }
    }
    let image = SubspaceBasis::span(p, hom.dim(), &image_cols);
    let (projection, section) = quotient_space(hom.dim(), &image)?;
    let cocycle_basis = (0..projection.rows())
        .map(|c| ModuleMap::from_parts(k.clone(), n.clone(), hom.element(&section.col(c))))
        .collect();
    Ok(ExtSpace { degree, source: m.clone(), target: n.clone(), chain, hom, projection, section, cocycle_basis })
}

pub fn ext_dim(m: &Arc<LeftModule>, n: &Arc<LeftModule>, degree: usize) -> Result<usize> {
    Ok(ext(m, n, degree)?.dim())
}

fn require_degree_one(e: &ExtSpace) -> Result<&Presentation> {
    if e.degree != 1 {
        return Err(AlgmodError::Degree(e.degree));
    }
    Ok(&e.chain[0])
}

/// The extension `0 -> N -> E -> M -> 0` of a degree-1 class: the pushout of
/// `K -> F -> M` along a representative cocycle `K -> N`.
pub fn ext_to_ses(e: &ExtSpace, class: &[u32]) -> Result<ShortExactSequence> {
    let pres = require_degree_one(e)?;
    if class.len() != e.dim() {
        return Err(AlgmodError::Shape(format!("class has {} coordinates, Ext has dim {}", class.len(), e.dim())));
    }
    let z = ModuleMap::from_parts(pres.kernel.clone(), e.target.clone(), e.cocycle(class));
    let base = ShortExactSequence::from_parts(pres.inclusion.clone(), pres.cover.clone());
    base.pushout(&z)
}

/// Coordinates of the class of a degree-1 extension with end terms `N`
/// and `M` matching the Ext space.
pub fn ext_class_of(e: &ExtSpace, ses: &ShortExactSequence) -> Result<Vec<u32>> {
    let pres = require_degree_one(e)?;
    if **ses.right() != *e.source || **ses.left() != *e.target {
        return Err(AlgmodError::EndTermMismatch("extension end terms differ from the Ext space".into()));
    }
    // Lift the presentation generators through the surjection.
    let p = e.source.prime();
    let b = FpMatrix::from_columns(p, e.source.dim(), &pres.generators);
    let lifts = solve_linear(&ses.surj.matrix, &b)?.ok_or_else(|| AlgmodError::NotExact("surjection".into()))?;
    let lift_cols: Vec<Vec<u32>> = (0..lifts.cols()).map(|c| lifts.col(c)).collect();
    let lift = free_map_matrix(ses.middle(), &lift_cols);
    let on_k = lift.mul(&pres.inclusion.matrix);
    let z = solve_linear(&ses.inj.matrix, &on_k)?
        .ok_or_else(|| AlgmodError::NotExact("lift of the syzygy leaves the left term".into()))?;
    e.coordinates(&z)
}

/// Projective iff some presentation splits.
pub fn is_projective(m: &Arc<LeftModule>) -> Result<bool> {
    if m.is_zero() {
        return Ok(true);
    }
    let pres = crate::resolution::generator_presentation(m);
    has_section(&pres.cover)
}

/// Injective iff the dual is projective over the opposite algebra.
pub fn is_injective(m: &Arc<LeftModule>) -> Result<bool> {
    is_projective(&Arc::new(m.dual_opposite()))
}

/// Projectivity through the cover `⊕ A e_{i_k} -> M` by summands of the
/// regular module, for a complete set of orthogonal idempotents `e_i` given
/// in the basis of `A`. Generators are picked inside the `e_i M`, so the cover
/// (and the section search) is far smaller than a free cover when the
/// idempotents split `A` finely.
pub fn is_projective_split(m: &Arc<LeftModule>, idempotents: &[Vec<u32>]) -> Result<bool> {
    let alg = m.alg();
    check_idempotents(alg, idempotents)?;
    if m.is_zero() {
        return Ok(true);
    }
    let p = m.prime();
    let regular = Arc::new(LeftModule::regular(alg.clone()));
    let basis: Vec<Vec<u32>> = (0..alg.dim()).map(|i| alg.basis_vector(i)).collect();
    let mut reached = RowEchelon::new(p, m.dim());
    let mut parts = Vec::new();
    let mut columns: Vec<Vec<u32>> = Vec::new();
    'outer: for e in idempotents {
        let em = m.act(e);
        for c in 0..em.cols() {
            if reached.rank() == m.dim() {
                break 'outer;
            }
            let v = em.col(c);
            if reached.contains(&v) {
                continue;
            }
            for action in m.actions() {
                reached.push_row(&action.apply(&v));
            }
            // `A e` inside the regular module, and its image under `a e ↦ a v`.
            let span = SubspaceBasis::span(p, alg.dim(), &basis.iter().map(|b| alg.mul(b, e)).collect::<Vec<_>>());
            let cols = span.as_columns();
            let (ae, _) = regular.submodule(&cols)?;
            for k in 0..cols.cols() {
                columns.push(m.act(&cols.col(k)).apply(&v));
            }
            parts.push(ae);
        }
    }
    let refs: Vec<&LeftModule> = parts.iter().map(|a| a.as_ref()).collect();
    let cover = Arc::new(LeftModule::direct_sum(alg.clone(), &refs)?);
    let matrix = FpMatrix::from_columns(p, m.dim(), &columns);
    has_section(&ModuleMap::from_parts(cover, m.clone(), matrix))
}

/// Injectivity via the dual over the opposite algebra, which shares the
/// basis and hence the idempotent coordinates.
pub fn is_injective_split(m: &Arc<LeftModule>, idempotents: &[Vec<u32>]) -> Result<bool> {
    is_projective_split(&Arc::new(m.dual_opposite()), idempotents)
}

fn check_idempotents(alg: &Algebra, idempotents: &[Vec<u32>]) -> Result<()> {
    let p = alg.prime();
    let mut sum = vec![0u32; alg.dim()];
    for (i, e) in idempotents.iter().enumerate() {
        if e.len() != alg.dim() {
            return Err(AlgmodError::Shape("idempotent has the wrong length".into()));
        }
        for (j, f) in idempotents.iter().enumerate() {
            let ef = alg.mul(e, f);
            let expected = if i == j { e.clone() } else { vec![0; alg.dim()] };
            if ef != expected {
                return Err(AlgmodError::InvalidAlgebra("idempotents are not orthogonal".into()));
            }
        }
        for (s, x) in sum.iter_mut().zip(e) {
            *s = (*s + x) % p;
        }
    }
    if sum != alg.unit() {
        return Err(AlgmodError::InvalidAlgebra("idempotents do not sum to the unit".into()));
    }
    Ok(())
}

/// `Tor_n(M, N)` for a right module `M` and left module `N`, computed as the
/// kernel of `M ⊗ K_n -> M ⊗ F_{n-1}` on syzygies of `N`.
pub fn tor_dim(m: &RightModule, n: &Arc<LeftModule>, degree: usize) -> Result<usize> {
    if degree == 0 {
        return Ok(tensor_product(m, n)?.dim);
    }
    let chain = syzygy_chain(n, degree, true);
    let last = chain.last().expect("degree >= 1");
    let tk = tensor_product(m, &last.kernel)?;
    let tf = tensor_product(m, &last.free)?;
    let id = FpMatrix::identity(m.prime(), m.dim());
    let map = tensor_map(&tk, &tf, &id, &last.inclusion.matrix);
    Ok(kernel_basis(&map).dim())
}

/// `Tor_1(M, N)`.
pub fn tor1_dim(m: &RightModule, n: &Arc<LeftModule>) -> Result<usize> {
    tor_dim(m, n, 1)
}

/// The map `Ext^n(M, N) -> Ext^n(M', N)` induced by `f: M' -> M`.
///
/// `src` is the Ext space of `(M, N)` and `dst` that of `(M', N)`; the map
/// is lifted along the two syzygy chains and precomposed with cocycles.
pub fn ext_map_first(f: &ModuleMap, src: &ExtSpace, dst: &ExtSpace) -> Result<FpMatrix> {
    if src.degree != dst.degree || *f.target != *src.source || *f.source != *dst.source || *src.target != *dst.target {
        return Err(AlgmodError::EndTermMismatch("induced Ext map between mismatched spaces".into()));
    }
    let mut on_syzygy = f.clone();
    for (pd, ps) in dst.chain.iter().zip(&src.chain) {
        let (_, on_k) = pd.lift_map(ps, &on_syzygy)?;
        on_syzygy = on_k;
    }
    let cols: Vec<Vec<u32>> =
        src.cocycle_basis.iter().map(|z| dst.coordinates(&z.matrix.mul(&on_syzygy.matrix))).collect::<Result<_>>()?;
    Ok(FpMatrix::from_columns(f.source.prime(), dst.dim(), &cols))
}

/// The map `Ext^n(M, N) -> Ext^n(M, N')` induced by `g: N -> N'`; both
/// spaces must share the syzygy chain of `M`.
pub fn ext_map_second(g: &ModuleMap, src: &ExtSpace, dst: &ExtSpace) -> Result<FpMatrix> {
    if src.degree != dst.degree || *g.source != *src.target || *g.target != *dst.target || *src.source != *dst.source {
        return Err(AlgmodError::EndTermMismatch("induced Ext map between mismatched spaces".into()));
    }
    if src.syzygy().dim() != dst.syzygy().dim() || **src.syzygy() != **dst.syzygy() {
        return Err(AlgmodError::EndTermMismatch("Ext spaces use different syzygies".into()));
    }
    let cols: Vec<Vec<u32>> =
        src.cocycle_basis.iter().map(|z| dst.coordinates(&g.matrix.mul(&z.matrix))).collect::<Result<_>>()?;
    Ok(FpMatrix::from_columns(g.source.prime(), dst.dim(), &cols))
}
