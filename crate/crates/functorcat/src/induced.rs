//! The functors induced from a single object: `q_A = Hom(A, -) ⊗_{R_A} -`,
//! `p_A = Hom_{R_A}(Hom(-, A), -)` and the stalk `s_A`, with the units and
//! counits of `q_A ⊣ ev_A ⊣ p_A`.

use std::sync::Arc;

use cotlab_algmod::{hom_bimodule, same_algebra, tensor_bimodule, tensor_map, HomSpace, LeftModule, ModuleMap, TensorSpace};
use cotlab_linalg::FpMatrix;

use crate::context::FunctorCategory;
use crate::error::{FunctorError, Result};
use crate::functor::{AddFunctor, NatTrans};

fn check_module(ctx: &FunctorCategory, a: usize, m: &LeftModule) -> Result<()> {
    if a >= ctx.object_count() {
        return Err(FunctorError::InvalidFunctor(format!("no object with index {a}")));
    }
    if !same_algebra(m.alg(), ctx.endo(a)) {
        return Err(FunctorError::AlgebraMismatch(format!(
            "module is not over the endomorphism algebra of `{}`",
            ctx.object_name(a)
        )));
    }
    Ok(())
}

fn unit_vec(d: usize, i: usize) -> Vec<u32> {
    let mut v = vec![0; d];
    v[i] = 1;
    v
}

/// `q_A(M)` with the tensor presentations of its values.
#[derive(Clone, Debug)]
pub struct InducedQ {
    pub object: usize,
    pub module: Arc<LeftModule>,
    pub functor: Arc<AddFunctor>,
    /// `Hom(A, B) ⊗ M -> q_A(M)(B)` per object `B`.
    pub tensors: Vec<TensorSpace>,
}

/// `p_A(M)` with the hom-space presentations of its values.
#[derive(Clone, Debug)]
pub struct InducedP {
    pub object: usize,
    pub module: Arc<LeftModule>,
    pub functor: Arc<AddFunctor>,
    /// `Hom_{R_A}(Hom(B, A), M)` per object `B`.
    pub homs: Vec<HomSpace>,
}

/// `q_A(M)(B) = Hom(A, B) ⊗_{R_A} M`, acting by post-composition.
pub fn induced_q(ctx: &Arc<FunctorCategory>, a: usize, m: &Arc<LeftModule>) -> Result<InducedQ> {
    check_module(ctx, a, m)?;
    let cat = ctx.category();
    let n = ctx.object_count();
    let p = ctx.prime();
    let mut tensors = Vec::with_capacity(n);
    for b in 0..n {
        let (_, ts) = tensor_bimodule(ctx.hom(a, b), m)?;
        tensors.push(ts);
    }
    let id = FpMatrix::identity(p, m.dim());
    let dims = tensors.iter().map(|t| t.dim).collect();
    let act = (0..n)
        .map(|b| {
            (0..n)
                .map(|c| {
                    (0..cat.hom_dim(b, c))
                        .map(|h| {
                            let post = cat.post_compose(a, b, c, &unit_vec(cat.hom_dim(b, c), h));
                            tensor_map(&tensors[b], &tensors[c], &post, &id)
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    let functor = Arc::new(AddFunctor::from_parts(ctx.clone(), dims, act));
    Ok(InducedQ { object: a, module: m.clone(), functor, tensors })
}

/// `p_A(M)(B) = Hom_{R_A}(Hom(B, A), M)`, acting by pre-composition.
pub fn induced_p(ctx: &Arc<FunctorCategory>, a: usize, m: &Arc<LeftModule>) -> Result<InducedP> {
    check_module(ctx, a, m)?;
    let cat = ctx.category();
    let n = ctx.object_count();
    let p = ctx.prime();
    let mut homs = Vec::with_capacity(n);
    for b in 0..n {
        let (_, hs) = hom_bimodule(ctx.hom(b, a), m)?;
        homs.push(hs);
    }
    let dims = homs.iter().map(|h| h.dim()).collect();
    let act = (0..n)
        .map(|b| {
            (0..n)
                .map(|c| {
                    (0..cat.hom_dim(b, c))
                        .map(|h| {
                            // (X(h)φ)(l) = φ(l ∘ h) for l ∈ Hom(C, A).
                            let pre = cat.pre_compose(b, c, a, &unit_vec(cat.hom_dim(b, c), h));
                            let cols: Vec<Vec<u32>> = homs[b]
                                .basis
                                .iter()
                                .map(|phi| homs[c].coordinates(&phi.mul(&pre)).expect("precomposite is a homomorphism"))
                                .collect();
                            FpMatrix::from_columns(p, homs[c].dim(), &cols)
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    let functor = Arc::new(AddFunctor::from_parts(ctx.clone(), dims, act));
    Ok(InducedP { object: a, module: m.clone(), functor, homs })
}

/// The stalk `s_A(M)`: `M` at `A`, zero elsewhere. Requires every composite
/// `A → B → A` with `B ≠ A` to vanish.
pub fn stalk(ctx: &Arc<FunctorCategory>, a: usize, m: &Arc<LeftModule>) -> Result<Arc<AddFunctor>> {
    check_module(ctx, a, m)?;
    let cat = ctx.category();
    let n = ctx.object_count();
    let p = ctx.prime();
    let mut dims = vec![0; n];
    dims[a] = m.dim();
    let act = (0..n)
        .map(|b| {
            (0..n)
                .map(|c| {
                    if b == a && c == a {
                        m.actions().to_vec()
                    } else {
                        vec![FpMatrix::zeros(p, dims[c], dims[b]); cat.hom_dim(b, c)]
                    }
                })
                .collect()
        })
        .collect();
    AddFunctor::new(ctx.clone(), dims, act).map(Arc::new).map_err(|e| match e {
        FunctorError::InvalidFunctor(msg) => {
            FunctorError::ZeroTrace(format!("the stalk at `{}` is not a functor ({msg})", ctx.object_name(a)))
        }
        e => e,
    })
}

/// Which induced functor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum InducedKind {
    Q,
    P,
    S,
}

/// `q_A(M)`, `p_A(M)` or `s_A(M)`.
pub fn induced_functor(ctx: &Arc<FunctorCategory>, kind: InducedKind, a: usize, m: &Arc<LeftModule>) -> Result<Arc<AddFunctor>> {
    match kind {
        InducedKind::Q => Ok(induced_q(ctx, a, m)?.functor),
        InducedKind::P => Ok(induced_p(ctx, a, m)?.functor),
        InducedKind::S => stalk(ctx, a, m),
    }
}

/// `q_A(g): q_A(M) ⇒ q_A(M')`.
pub fn induced_q_map(src: &InducedQ, dst: &InducedQ, g: &ModuleMap) -> NatTrans {
    let p = g.matrix.prime();
    let components = src
        .tensors
        .iter()
        .zip(&dst.tensors)
        .map(|(s, d)| tensor_map(s, d, &FpMatrix::identity(p, s.left_dim), &g.matrix))
        .collect();
    NatTrans::from_parts(src.functor.clone(), dst.functor.clone(), components)
}

/// `p_A(g): p_A(M) ⇒ p_A(M')`.
pub fn induced_p_map(src: &InducedP, dst: &InducedP, g: &ModuleMap) -> NatTrans {
    let p = g.matrix.prime();
    let components = src
        .homs
        .iter()
        .zip(&dst.homs)
        .map(|(s, d)| {
            let cols: Vec<Vec<u32>> =
                s.basis.iter().map(|phi| d.coordinates(&g.matrix.mul(phi)).expect("g∘φ is a homomorphism")).collect();
            FpMatrix::from_columns(p, d.dim(), &cols)
        })
        .collect();
    NatTrans::from_parts(src.functor.clone(), dst.functor.clone(), components)
}

/// `s_A(g): s_A(M) ⇒ s_A(M')`.
pub fn stalk_map(src: &Arc<AddFunctor>, dst: &Arc<AddFunctor>, a: usize, g: &ModuleMap) -> NatTrans {
    let p = g.matrix.prime();
    let components = (0..src.dims().len())
        .map(|b| if b == a { g.matrix.clone() } else { FpMatrix::zeros(p, dst.dim(b), src.dim(b)) })
        .collect();
    NatTrans::from_parts(src.clone(), dst.clone(), components)
}

/// Unit `M -> q_A(M)(A)`, `m ↦ [id_A ⊗ m]`.
pub fn q_unit(q: &InducedQ) -> ModuleMap {
    let ctx = q.functor.ctx();
    let p = ctx.prime();
    let id_a = FpMatrix::column(p, ctx.category().identity(q.object));
    let ts = &q.tensors[q.object];
    let m = ts.projection.mul(&id_a.kron(&FpMatrix::identity(p, q.module.dim())));
    ModuleMap::from_parts(q.module.clone(), q.functor.eval(q.object), m)
}

/// The evaluation matrix `Hom(A, B) ⊗ Y(A) -> Y(B)`, `l ⊗ y ↦ Y(l) y`.
fn evaluation(y: &AddFunctor, a: usize, b: usize) -> FpMatrix {
    let blocks: Vec<&FpMatrix> = y.acts()[a][b].iter().collect();
    if blocks.is_empty() {
        return FpMatrix::zeros(y.prime(), y.dim(b), 0);
    }
    FpMatrix::hstack(&blocks)
}

/// Counit `q_A(Y(A)) ⇒ Y`, `[l ⊗ y] ↦ Y(l) y`. `q` must be induced from
/// `Y(A)`.
pub fn q_counit(q: &InducedQ, y: &Arc<AddFunctor>) -> NatTrans {
    let a = q.object;
    let components = q.tensors.iter().enumerate().map(|(b, ts)| evaluation(y, a, b).mul(&ts.section)).collect();
    NatTrans::from_parts(q.functor.clone(), y.clone(), components)
}

/// Unit `X ⇒ p_A(X(A))`, `x ↦ (h ↦ X(h) x)`. `p` must be induced from
/// `X(A)`.
pub fn p_unit(x: &Arc<AddFunctor>, p_a: &InducedP) -> NatTrans {
    let a = p_a.object;
    let p = x.prime();
    let components = p_a
        .homs
        .iter()
        .enumerate()
        .map(|(b, hs)| {
            let d = x.dim(b);
            let cols: Vec<Vec<u32>> = (0..d)
                .map(|i| {
                    let e = FpMatrix::column(p, &unit_vec(d, i));
                    let phi_cols: Vec<Vec<u32>> = x.acts()[b][a].iter().map(|h| h.mul(&e).col(0)).collect();
                    let phi = FpMatrix::from_columns(p, x.dim(a), &phi_cols);
                    hs.coordinates(&phi).expect("evaluation is a homomorphism")
                })
                .collect();
            FpMatrix::from_columns(p, hs.dim(), &cols)
        })
        .collect();
    NatTrans::from_parts(x.clone(), p_a.functor.clone(), components)
}

/// Counit `p_A(M)(A) -> M`, `φ ↦ φ(id_A)`.
pub fn p_counit(p_a: &InducedP) -> ModuleMap {
    let ctx = p_a.functor.ctx();
    let p = ctx.prime();
    let a = p_a.object;
    let id_a = ctx.category().identity(a);
    let hs = &p_a.homs[a];
    let cols: Vec<Vec<u32>> = hs.basis.iter().map(|phi| phi.apply(id_a)).collect();
    let m = FpMatrix::from_columns(p, p_a.module.dim(), &cols);
    ModuleMap::from_parts(p_a.functor.eval(a), p_a.module.clone(), m)
}
