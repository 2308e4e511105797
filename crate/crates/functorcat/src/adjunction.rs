//! Adjoint pairs `q ⊣ t` between module categories, with explicit units,
//! counits and hom-transposes.
//!
//! Functor categories enter through their modules over the category
//! algebra `Λ`; `P = ∏_A R_A` is the product of the endomorphism algebras.

use std::sync::Arc;

use cotlab_algmod::{
    hom_space, is_projective, same_algebra, tensor_bimodule, tensor_bimodule_map, Algebra, AlgebraMorphism, Bimodule,
    HomSpace, LeftModule, ModuleMap,
};
use cotlab_linalg::{solve_in_span, solve_linear, FpMatrix};

use crate::bridge::Bridged;
use crate::context::FunctorCategory;
use crate::error::{FunctorError, Result};
use crate::functor::block_diag_rect;
use crate::induced::{induced_p, induced_p_map, induced_q, induced_q_map, p_counit, p_unit, q_counit, q_unit};
use crate::reduced::{reduced_c_total, reduced_k_total};

/// Which adjoint pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AdjunctionTag {
    /// `q_A ⊣ ev_A`: `R_A`-Mod → `Λ`-Mod.
    QEv(usize),
    /// `ev_A ⊣ p_A`: `Λ`-Mod → `R_A`-Mod.
    EvP(usize),
    /// `c ⊣ s`: `Λ`-Mod → `P`-Mod.
    CS,
    /// `s ⊣ k`: `P`-Mod → `Λ`-Mod.
    SK,
    /// `S ⊗_R - ⊣ restriction` for an algebra map `R → S`.
    RingMor(AlgebraMorphism),
}

/// An adjoint pair `q: C → D`, `t: D → C` with unit `η: id ⇒ tq` and
/// counit `ξ: qt ⇒ id`.
#[derive(Clone, Debug)]
pub struct AdjunctionHandle {
    tag: AdjunctionTag,
    ctx: Option<Arc<FunctorCategory>>,
    left: Arc<Algebra>,
    right: Arc<Algebra>,
    bimodule: Option<Bimodule>,
}

/// The bijection `Hom_D(q c, d) -> Hom_C(c, t d)`, `f ↦ t(f) ∘ η_c`, in
/// the bases of the two hom spaces.
#[derive(Clone, Debug)]
pub struct Transpose {
    pub source: HomSpace,
    pub target: HomSpace,
    pub matrix: FpMatrix,
}

impl Transpose {
    pub fn is_bijection(&self) -> bool {
        self.source.dim() == self.target.dim() && cotlab_linalg::is_invertible(&self.matrix)
    }
}

fn stack_cols(p: u32, rows: usize, blocks: &[FpMatrix]) -> FpMatrix {
    if blocks.is_empty() {
        FpMatrix::zeros(p, rows, 0)
    } else {
        FpMatrix::hstack(&blocks.iter().collect::<Vec<_>>())
    }
}

fn stack_rows(p: u32, cols: usize, blocks: &[FpMatrix]) -> FpMatrix {
    if blocks.is_empty() {
        FpMatrix::zeros(p, 0, cols)
    } else {
        FpMatrix::vstack(&blocks.iter().collect::<Vec<_>>())
    }
}

fn right_inverse(m: &FpMatrix) -> FpMatrix {
    solve_linear(m, &FpMatrix::identity(m.prime(), m.rows()))
        .expect("shapes agree")
        .expect("surjective maps have right inverses")
}

impl AdjunctionHandle {
    pub fn q_ev(ctx: &Arc<FunctorCategory>, a: usize) -> Result<Self> {
        Self::check_object(ctx, a)?;
        Ok(Self::with_ctx(AdjunctionTag::QEv(a), ctx, ctx.endo(a).clone(), ctx.lambda().algebra.clone()))
    }

    pub fn ev_p(ctx: &Arc<FunctorCategory>, a: usize) -> Result<Self> {
        Self::check_object(ctx, a)?;
        Ok(Self::with_ctx(AdjunctionTag::EvP(a), ctx, ctx.lambda().algebra.clone(), ctx.endo(a).clone()))
    }

    /// Requires the zero-trace condition (so that `Λ → P` is an algebra map).
    pub fn c_s(ctx: &Arc<FunctorCategory>) -> Result<Self> {
        ctx.projection_to_product()?;
        Ok(Self::with_ctx(AdjunctionTag::CS, ctx, ctx.lambda().algebra.clone(), ctx.product().clone()))
    }

    /// Requires the zero-trace condition.
    pub fn s_k(ctx: &Arc<FunctorCategory>) -> Result<Self> {
        ctx.projection_to_product()?;
        Ok(Self::with_ctx(AdjunctionTag::SK, ctx, ctx.product().clone(), ctx.lambda().algebra.clone()))
    }

    /// Extension and restriction of scalars along `f: R → S`.
    pub fn ring_mor(f: &AlgebraMorphism) -> Self {
        let s = f.target.clone();
        let r = f.source.clone();
        let left = (0..s.dim()).map(|i| s.left_mult(i).clone()).collect();
        let right = (0..r.dim())
            .map(|i| {
                let v = f.matrix.col(i);
                let mut m = FpMatrix::zeros(s.prime(), s.dim(), s.dim());
                for (j, &c) in v.iter().enumerate() {
                    if c != 0 {
                        m.add_scaled(&s.right_mult(j), c);
                    }
                }
                m
            })
            .collect();
        let bimodule = Bimodule::from_parts(s.clone(), r.clone(), s.dim(), left, right);
        AdjunctionHandle { tag: AdjunctionTag::RingMor(f.clone()), ctx: None, left: r, right: s, bimodule: Some(bimodule) }
    }

    fn with_ctx(tag: AdjunctionTag, ctx: &Arc<FunctorCategory>, left: Arc<Algebra>, right: Arc<Algebra>) -> Self {
        AdjunctionHandle { tag, ctx: Some(ctx.clone()), left, right, bimodule: None }
    }

    fn check_object(ctx: &FunctorCategory, a: usize) -> Result<()> {
        if a >= ctx.object_count() {
            return Err(FunctorError::Adjunction(format!("no object with index {a}")));
        }
        Ok(())
    }

    pub fn tag(&self) -> &AdjunctionTag {
        &self.tag
    }

    /// The algebra of the source category `C` of `q`.
    pub fn left_algebra(&self) -> &Arc<Algebra> {
        &self.left
    }

    /// The algebra of the target category `D` of `q`.
    pub fn right_algebra(&self) -> &Arc<Algebra> {
        &self.right
    }

    fn ctx(&self) -> &Arc<FunctorCategory> {
        self.ctx.as_ref().expect("handle built from a functor category")
    }

    fn expect_left(&self, m: &LeftModule) -> Result<()> {
        if !same_algebra(m.alg(), &self.left) {
            return Err(FunctorError::Adjunction("argument is not over the source algebra of q".into()));
        }
        Ok(())
    }

    fn expect_right(&self, m: &LeftModule) -> Result<()> {
        if !same_algebra(m.alg(), &self.right) {
            return Err(FunctorError::Adjunction("argument is not over the source algebra of t".into()));
        }
        Ok(())
    }

    fn bridged(&self, m: &Arc<LeftModule>) -> Result<Bridged> {
        Bridged::from_module(self.ctx(), m)
    }

    /// Block-diagonal levelwise matrix of a module map between bridged
    /// modules, in the coordinates `⊕_A X(A)`.
    fn levelwise(&self, f: &ModuleMap, src: &Bridged, dst: &Bridged) -> FpMatrix {
        let alpha = Bridged::map_to_nat(f, src, dst);
        block_diag_rect(f.matrix.prime(), &alpha.components.iter().collect::<Vec<_>>())
    }

    fn stacked_projections(b: &Bridged) -> FpMatrix {
        stack_rows(b.module.prime(), b.module.dim(), &b.projections)
    }

    fn stacked_embeddings(b: &Bridged) -> FpMatrix {
        stack_cols(b.module.prime(), b.module.dim(), &b.embeddings)
    }

    /// `q(c)`.
    pub fn q_obj(&self, c: &Arc<LeftModule>) -> Result<Arc<LeftModule>> {
        self.expect_left(c)?;
        match &self.tag {
            AdjunctionTag::QEv(a) => Ok(Bridged::from_functor(&induced_q(self.ctx(), *a, c)?.functor).module),
            AdjunctionTag::EvP(a) => Ok(self.bridged(c)?.functor.eval(*a)),
            AdjunctionTag::CS => Ok(reduced_c_total(&self.bridged(c)?.functor)?.0),
            AdjunctionTag::SK => Ok(Arc::new(c.restrict(self.ctx().projection_to_product()?)?)),
            AdjunctionTag::RingMor(_) => {
                Ok(Arc::new(tensor_bimodule(self.bimodule.as_ref().expect("bimodule"), c)?.0))
            }
        }
    }

    /// `t(d)`.
    pub fn t_obj(&self, d: &Arc<LeftModule>) -> Result<Arc<LeftModule>> {
        self.expect_right(d)?;
        match &self.tag {
            AdjunctionTag::QEv(a) => Ok(self.bridged(d)?.functor.eval(*a)),
            AdjunctionTag::EvP(a) => Ok(Bridged::from_functor(&induced_p(self.ctx(), *a, d)?.functor).module),
            AdjunctionTag::CS => Ok(Arc::new(d.restrict(self.ctx().projection_to_product()?)?)),
            AdjunctionTag::SK => Ok(reduced_k_total(&self.bridged(d)?.functor)?.0),
            AdjunctionTag::RingMor(f) => Ok(Arc::new(d.restrict(f)?)),
        }
    }

    /// `q(g)` for a map `g` in `C`.
    pub fn q_map(&self, g: &ModuleMap) -> Result<ModuleMap> {
        self.expect_left(&g.source)?;
        match &self.tag {
            AdjunctionTag::QEv(a) => {
                let src = induced_q(self.ctx(), *a, &g.source)?;
                let dst = induced_q(self.ctx(), *a, &g.target)?;
                let alpha = induced_q_map(&src, &dst, g);
                Ok(Bridged::map_to_module(&alpha, &Bridged::from_functor(&src.functor), &Bridged::from_functor(&dst.functor)))
            }
            AdjunctionTag::EvP(a) => self.eval_map(*a, g),
            AdjunctionTag::CS => {
                let (src, dst) = (self.bridged(&g.source)?, self.bridged(&g.target)?);
                let (cs, ps) = reduced_c_total(&src.functor)?;
                let (cd, pd) = reduced_c_total(&dst.functor)?;
                let m = pd.mul(&self.levelwise(g, &src, &dst)).mul(&right_inverse(&ps));
                Ok(ModuleMap::from_parts(cs, cd, m))
            }
            AdjunctionTag::SK => Ok(ModuleMap::from_parts(self.q_obj(&g.source)?, self.q_obj(&g.target)?, g.matrix.clone())),
            AdjunctionTag::RingMor(_) => Ok(tensor_bimodule_map(self.bimodule.as_ref().expect("bimodule"), g)?),
        }
    }

    /// `t(f)` for a map `f` in `D`.
    pub fn t_map(&self, f: &ModuleMap) -> Result<ModuleMap> {
        self.expect_right(&f.source)?;
        match &self.tag {
            AdjunctionTag::QEv(a) => self.eval_map(*a, f),
            AdjunctionTag::EvP(a) => {
                let src = induced_p(self.ctx(), *a, &f.source)?;
                let dst = induced_p(self.ctx(), *a, &f.target)?;
                let alpha = induced_p_map(&src, &dst, f);
                Ok(Bridged::map_to_module(&alpha, &Bridged::from_functor(&src.functor), &Bridged::from_functor(&dst.functor)))
            }
            AdjunctionTag::CS | AdjunctionTag::RingMor(_) => {
                Ok(ModuleMap::from_parts(self.t_obj(&f.source)?, self.t_obj(&f.target)?, f.matrix.clone()))
            }
            AdjunctionTag::SK => {
                let (src, dst) = (self.bridged(&f.source)?, self.bridged(&f.target)?);
                let (ks, is) = reduced_k_total(&src.functor)?;
                let (kd, id) = reduced_k_total(&dst.functor)?;
                let m = solve_in_span(&id, &self.levelwise(f, &src, &dst).mul(&is));
                Ok(ModuleMap::from_parts(ks, kd, m))
            }
        }
    }

    fn eval_map(&self, a: usize, f: &ModuleMap) -> Result<ModuleMap> {
        let (src, dst) = (self.bridged(&f.source)?, self.bridged(&f.target)?);
        let alpha = Bridged::map_to_nat(f, &src, &dst);
        Ok(ModuleMap::from_parts(src.functor.eval(a), dst.functor.eval(a), alpha.components[a].clone()))
    }

    /// `η_c: c -> t q c`.
    pub fn unit(&self, c: &Arc<LeftModule>) -> Result<ModuleMap> {
        self.expect_left(c)?;
        match &self.tag {
            AdjunctionTag::QEv(a) => Ok(q_unit(&induced_q(self.ctx(), *a, c)?)),
            AdjunctionTag::EvP(a) => {
                let b = self.bridged(c)?;
                let p = induced_p(self.ctx(), *a, &b.functor.eval(*a))?;
                let eta = p_unit(&b.functor, &p);
                Ok(Bridged::map_to_module(&eta, &b, &Bridged::from_functor(&p.functor)))
            }
            AdjunctionTag::CS => {
                let b = self.bridged(c)?;
                let (_, proj) = reduced_c_total(&b.functor)?;
                let m = proj.mul(&Self::stacked_projections(&b));
                Ok(ModuleMap::from_parts(c.clone(), self.t_obj(&self.q_obj(c)?)?, m))
            }
            AdjunctionTag::SK => {
                let sc = self.q_obj(c)?;
                let b = self.bridged(&sc)?;
                let (kc, incl) = reduced_k_total(&b.functor)?;
                let m = solve_in_span(&incl, &Self::stacked_projections(&b));
                Ok(ModuleMap::from_parts(c.clone(), kc, m))
            }
            AdjunctionTag::RingMor(_) => {
                let (_, ts) = tensor_bimodule(self.bimodule.as_ref().expect("bimodule"), c)?;
                let p = c.prime();
                let one = FpMatrix::column(p, self.right.unit());
                let m = ts.projection.mul(&one.kron(&FpMatrix::identity(p, c.dim())));
                Ok(ModuleMap::from_parts(c.clone(), self.t_obj(&self.q_obj(c)?)?, m))
            }
        }
    }

    /// `ξ_d: q t d -> d`.
    pub fn counit(&self, d: &Arc<LeftModule>) -> Result<ModuleMap> {
        self.expect_right(d)?;
        match &self.tag {
            AdjunctionTag::QEv(a) => {
                let b = self.bridged(d)?;
                let q = induced_q(self.ctx(), *a, &b.functor.eval(*a))?;
                let xi = q_counit(&q, &b.functor);
                Ok(Bridged::map_to_module(&xi, &Bridged::from_functor(&q.functor), &b))
            }
            AdjunctionTag::EvP(a) => Ok(p_counit(&induced_p(self.ctx(), *a, d)?)),
            AdjunctionTag::CS => {
                let sd = self.t_obj(d)?;
                let b = self.bridged(&sd)?;
                let (csd, proj) = reduced_c_total(&b.functor)?;
                let m = Self::stacked_embeddings(&b).mul(&right_inverse(&proj));
                Ok(ModuleMap::from_parts(csd, d.clone(), m))
            }
            AdjunctionTag::SK => {
                let b = self.bridged(d)?;
                let (kd, incl) = reduced_k_total(&b.functor)?;
                let skd = Arc::new(kd.restrict(self.ctx().projection_to_product()?)?);
                Ok(ModuleMap::from_parts(skd, d.clone(), Self::stacked_embeddings(&b).mul(&incl)))
            }
            AdjunctionTag::RingMor(f) => {
                let rd = Arc::new(d.restrict(f)?);
                let (sd, ts) = tensor_bimodule(self.bimodule.as_ref().expect("bimodule"), &rd)?;
                let blocks: Vec<FpMatrix> = d.actions().to_vec();
                let m = stack_cols(d.prime(), d.dim(), &blocks).mul(&ts.section);
                Ok(ModuleMap::from_parts(Arc::new(sd), d.clone(), m))
            }
        }
    }

    /// Whether `q` is exact.
    pub fn q_exact(&self) -> Result<bool> {
        match &self.tag {
            AdjunctionTag::QEv(a) => {
                let ctx = self.ctx();
                for b in 0..ctx.object_count() {
                    if !is_projective(&Arc::new(ctx.hom(*a, b).as_right().to_left_opposite()))? {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            AdjunctionTag::EvP(_) | AdjunctionTag::SK => Ok(true),
            AdjunctionTag::CS => Ok(false),
            AdjunctionTag::RingMor(_) => {
                let b = self.bimodule.as_ref().expect("bimodule");
                Ok(is_projective(&Arc::new(b.as_right().to_left_opposite()))?)
            }
        }
    }

    /// Whether `t` is exact.
    pub fn t_exact(&self) -> Result<bool> {
        match &self.tag {
            AdjunctionTag::EvP(a) => {
                let ctx = self.ctx();
                for b in 0..ctx.object_count() {
                    if !is_projective(&Arc::new(ctx.hom(b, *a).as_left()))? {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            AdjunctionTag::QEv(_) | AdjunctionTag::CS | AdjunctionTag::RingMor(_) => Ok(true),
            AdjunctionTag::SK => Ok(false),
        }
    }

    /// The transpose bijection `Hom_D(q c, d) -> Hom_C(c, t d)`.
    pub fn transpose(&self, c: &Arc<LeftModule>, d: &Arc<LeftModule>) -> Result<Transpose> {
        let qc = self.q_obj(c)?;
        let td = self.t_obj(d)?;
        let source = hom_space(&qc, d)?;
        let target = hom_space(c, &td)?;
        let eta = self.unit(c)?;
        let p = c.prime();
        let cols: Vec<Vec<u32>> = source
            .basis_maps()
            .iter()
            .map(|f| {
                let tf = self.t_map(f)?;
                Ok(target.coordinates(&tf.matrix.mul(&eta.matrix)).expect("transposes are homomorphisms"))
            })
            .collect::<Result<_>>()?;
        let matrix = FpMatrix::from_columns(p, target.dim(), &cols);
        Ok(Transpose { source, target, matrix })
    }

    /// `ξ_{q c} ∘ q(η_c) = id_{q c}`.
    pub fn left_triangle_holds(&self, c: &Arc<LeftModule>) -> Result<bool> {
        let qc = self.q_obj(c)?;
        let q_eta = self.q_map(&self.unit(c)?)?;
        let xi = self.counit(&qc)?;
        Ok(xi.matrix.mul(&q_eta.matrix) == FpMatrix::identity(c.prime(), qc.dim()))
    }

    /// `t(ξ_d) ∘ η_{t d} = id_{t d}`.
    pub fn right_triangle_holds(&self, d: &Arc<LeftModule>) -> Result<bool> {
        let td = self.t_obj(d)?;
        let eta = self.unit(&td)?;
        let t_xi = self.t_map(&self.counit(d)?)?;
        Ok(t_xi.matrix.mul(&eta.matrix) == FpMatrix::identity(d.prime(), td.dim()))
    }
}
