//! Short exact sequences, base change and splitting.

use std::sync::Arc;

use cotlab_linalg::{solve_linear, FpMatrix};

use crate::error::{AlgmodError, Result};
use crate::hom::hom_space;
use crate::module::{LeftModule, ModuleMap};

/// `0 -> left -> middle -> right -> 0`.
#[derive(Clone, Debug)]
pub struct ShortExactSequence {
    pub inj: ModuleMap,
    pub surj: ModuleMap,
}

impl ShortExactSequence {
    /// Validates injectivity, surjectivity and exactness in the middle.
    pub fn new(inj: ModuleMap, surj: ModuleMap) -> Result<Self> {
        if inj.target.dim() != surj.source.dim() || *inj.target != *surj.source {
            return Err(AlgmodError::Shape("maps do not share the middle term".into()));
        }
        if !inj.is_injective() {
            return Err(AlgmodError::NotExact("left map is not injective".into()));
        }
        if !surj.is_surjective() {
            return Err(AlgmodError::NotExact("right map is not surjective".into()));
        }
        if !surj.matrix.mul(&inj.matrix).is_zero() || inj.source.dim() + surj.target.dim() != inj.target.dim() {
            return Err(AlgmodError::NotExact("image of the left map is not the kernel of the right map".into()));
        }
        Ok(ShortExactSequence { inj, surj })
    }

    /// Wraps parts the caller has already validated.
    pub fn from_parts(inj: ModuleMap, surj: ModuleMap) -> Self {
        ShortExactSequence { inj, surj }
    }

    /// `0 -> A -> A ⊕ C -> C -> 0`.
    pub fn split(a: &Arc<LeftModule>, c: &Arc<LeftModule>) -> Result<Self> {
        let p = a.prime();
        let mid = Arc::new(LeftModule::direct_sum(a.alg().clone(), &[a, c])?);
        let (da, dc) = (a.dim(), c.dim());
        let inj = FpMatrix::vstack(&[&FpMatrix::identity(p, da), &FpMatrix::zeros(p, dc, da)]);
        let surj = FpMatrix::hstack(&[&FpMatrix::zeros(p, dc, da), &FpMatrix::identity(p, dc)]);
        Ok(ShortExactSequence {
            inj: ModuleMap::from_parts(a.clone(), mid.clone(), inj),
            surj: ModuleMap::from_parts(mid, c.clone(), surj),
        })
    }

    pub fn left(&self) -> &Arc<LeftModule> {
        &self.inj.source
    }
    pub fn middle(&self) -> &Arc<LeftModule> {
        &self.inj.target
    }
    pub fn right(&self) -> &Arc<LeftModule> {
        &self.surj.target
    }

    /// Pullback along `g: C' -> C`: the fibre product `{(e, c') : σ e = g c'}`.
    pub fn pullback(&self, g: &ModuleMap) -> Result<ShortExactSequence> {
        if *g.target != **self.right() {
            return Err(AlgmodError::EndTermMismatch("pullback map must end at the right term".into()));
        }
        let p = g.source.prime();
        let (de, dc2) = (self.middle().dim(), g.source.dim());
        let sum = Arc::new(LeftModule::direct_sum(g.source.alg().clone(), &[self.middle(), &g.source])?);
        let diff = ModuleMap::from_parts(sum, self.right().clone(), FpMatrix::hstack(&[&self.surj.matrix, &g.matrix.neg()]));
        let (fib, incl) = diff.kernel();
        let da = self.left().dim();
        let j_in_sum = FpMatrix::vstack(&[&self.inj.matrix, &FpMatrix::zeros(p, dc2, da)]);
        let j = solve_linear(&incl.matrix, &j_in_sum)?.expect("left term maps into the fibre product");
        let second = FpMatrix::hstack(&[&FpMatrix::zeros(p, dc2, de), &FpMatrix::identity(p, dc2)]).mul(&incl.matrix);
        Ok(ShortExactSequence {
            inj: ModuleMap::from_parts(self.left().clone(), fib.clone(), j),
            surj: ModuleMap::from_parts(fib, g.source.clone(), second),
        })
    }

    /// Pushout along `h: A -> A'`: the cofibre `(A' ⊕ E) / {(h a, -j a)}`.
    pub fn pushout(&self, h: &ModuleMap) -> Result<ShortExactSequence> {
        if *h.source != **self.left() {
            return Err(AlgmodError::EndTermMismatch("pushout map must start at the left term".into()));
        }
        let p = h.source.prime();
        let (da2, de) = (h.target.dim(), self.middle().dim());
        let sum = Arc::new(LeftModule::direct_sum(h.target.alg().clone(), &[&h.target, self.middle()])?);
        let rel = ModuleMap::from_parts(self.left().clone(), sum, FpMatrix::vstack(&[&h.matrix, &self.inj.matrix.neg()]));
        let (cof, proj, sec) = rel.cokernel();
        let first = proj.matrix.mul(&FpMatrix::vstack(&[&FpMatrix::identity(p, da2), &FpMatrix::zeros(p, de, da2)]));
        let induced = FpMatrix::hstack(&[&FpMatrix::zeros(p, self.right().dim(), da2), &self.surj.matrix]).mul(&sec);
        Ok(ShortExactSequence {
            inj: ModuleMap::from_parts(h.target.clone(), cof.clone(), first),
            surj: ModuleMap::from_parts(cof, self.right().clone(), induced),
        })
    }
}

/// Whether the surjection of a short exact sequence admits a module-map
/// section.
pub fn is_split_exact(e: &ShortExactSequence) -> Result<bool> {
    has_section(&e.surj)
}

/// Whether a surjective module map has a module-map section.
pub fn has_section(surj: &ModuleMap) -> Result<bool> {
    let p = surj.source.prime();
    let dr = surj.target.dim();
    if dr == 0 {
        return Ok(true);
    }
    let hs = hom_space(&surj.target, &surj.source)?;
    if hs.basis.is_empty() {
        return Ok(false);
    }
    let cols: Vec<Vec<u32>> = hs.basis.iter().map(|phi| surj.matrix.mul(phi).flatten()).collect();
    let a = FpMatrix::from_columns(p, dr * dr, &cols);
    let id = FpMatrix::column(p, &FpMatrix::identity(p, dr).flatten());
    Ok(solve_linear(&a, &id)?.is_some())
}
