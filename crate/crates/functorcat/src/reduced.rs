//! The reduced functors `c_A` and `k_A`, their relation presentations, and
//! the functors `K_{M,A}`, `C_{M,A}` cut out of `q_A(M)` and `p_A(M)` by the
//! stalk `s_A(M)`.
//!
//! Blocks indexed by objects `B ≠ A` follow the object order.

use std::sync::Arc;

use cotlab_algmod::{hom_bimodule, tensor_bimodule, HomSpace, LeftModule, ModuleMap, TensorSpace};
use cotlab_linalg::{kernel_basis, FpMatrix, SubspaceBasis};

use crate::context::FunctorCategory;
use crate::error::Result;
use crate::functor::{block_diag_rect, direct_sum, AddFunctor, NatTrans};
use crate::induced::{induced_p, induced_q, p_unit, q_counit, stalk};

fn vstack_or_empty(p: u32, cols: usize, blocks: &[FpMatrix]) -> FpMatrix {
    if blocks.is_empty() {
        FpMatrix::zeros(p, 0, cols)
    } else {
        FpMatrix::vstack(&blocks.iter().collect::<Vec<_>>())
    }
}

fn hstack_or_empty(p: u32, rows: usize, blocks: &[FpMatrix]) -> FpMatrix {
    if blocks.is_empty() {
        FpMatrix::zeros(p, rows, 0)
    } else {
        FpMatrix::hstack(&blocks.iter().collect::<Vec<_>>())
    }
}

/// Incoming images at `A`: the columns of every `X(s)`, `s: B → A`, `B ≠ A`.
fn incoming(x: &AddFunctor, a: usize) -> FpMatrix {
    let n = x.dims().len();
    let blocks: Vec<FpMatrix> =
        (0..n).filter(|&b| b != a).flat_map(|b| x.acts()[b][a].iter().cloned()).collect();
    hstack_or_empty(x.prime(), x.dim(a), &blocks)
}

/// Outgoing maps at `A`: every `X(l)`, `l: A → B`, `B ≠ A`, stacked.
fn outgoing(x: &AddFunctor, a: usize) -> FpMatrix {
    let n = x.dims().len();
    let blocks: Vec<FpMatrix> =
        (0..n).filter(|&b| b != a).flat_map(|b| x.acts()[a][b].iter().cloned()).collect();
    vstack_or_empty(x.prime(), x.dim(a), &blocks)
}

/// `c_A(X) = X(A) / Σ_{B≠A} im X(s)` with the quotient map from `X(A)`.
pub fn reduced_c(x: &AddFunctor, a: usize) -> Result<(Arc<LeftModule>, ModuleMap)> {
    x.ctx().require_zero_trace()?;
    let xa = x.eval(a);
    let (q, proj, _) = xa.quotient(&SubspaceBasis::column_span(&incoming(x, a)))?;
    Ok((q, proj))
}

/// `k_A(X) = ∩_{B≠A} ker X(l)` with the inclusion into `X(A)`.
pub fn reduced_k(x: &AddFunctor, a: usize) -> Result<(Arc<LeftModule>, ModuleMap)> {
    x.ctx().require_zero_trace()?;
    let xa = x.eval(a);
    let ker = kernel_basis(&outgoing(x, a));
    Ok(xa.submodule(&ker.as_columns())?)
}

/// Which reduced functor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ReducedKind {
    C,
    K,
}

/// `c_A(X)` with its quotient map, or `k_A(X)` with its inclusion.
pub fn reduced_at(kind: ReducedKind, x: &AddFunctor, a: usize) -> Result<(Arc<LeftModule>, ModuleMap)> {
    match kind {
        ReducedKind::C => reduced_c(x, a),
        ReducedKind::K => reduced_k(x, a),
    }
}

/// The relation data at an object `A`.
///
/// Incoming side: `D = ⊕_{B≠A} Hom(B, A) ⊗_{R_B} X(B)` with
/// `φ: D -> X(A)`, `[s ⊗ x] ↦ X(s) x`, and relation maps `h¹, h²` (from
/// triples `(g, f, x)` with `f: B → B'`, `g: B' → A`, giving `(g∘f) ⊗ x`
/// and `g ⊗ X(f) x`) and `ν` (from `(s, l, y)` with `s: B → A`,
/// `l: A → B`, giving `s ⊗ X(l) y`).
///
/// Outgoing side: `T = ⊕_{B≠A} Hom_{R_B}(Hom(A, B), X(B))` with
/// `ψ: X(A) -> T`, `x ↦ (l ↦ X(l) x)`, and equation maps `t¹, t²`
/// (`φ ↦ X(f) φ_B(l)` and `φ ↦ φ_{B'}(f∘l)`) and `τ` (`φ ↦ X(s) φ_B(l)`).
#[derive(Clone, Debug)]
pub struct RelationPresentation {
    pub object: usize,
    pub domain: Arc<LeftModule>,
    pub h1: FpMatrix,
    pub h2: FpMatrix,
    pub nu: FpMatrix,
    pub phi: FpMatrix,
    pub codomain: Arc<LeftModule>,
    pub t1: FpMatrix,
    pub t2: FpMatrix,
    pub tau: FpMatrix,
    pub psi: FpMatrix,
}

impl RelationPresentation {
    /// `[h¹ - h², ν]`, the full relation map into `D`.
    pub fn relations(&self) -> FpMatrix {
        FpMatrix::hstack(&[&self.h1.sub(&self.h2), &self.nu])
    }

    /// `[t¹ - t²; τ]`, the full equation map out of `T`.
    pub fn mu(&self) -> FpMatrix {
        FpMatrix::vstack(&[&self.t1.sub(&self.t2), &self.tau])
    }
}

/// Relation and equation data of `X` at `A`.
pub fn relation_presentation(x: &Arc<AddFunctor>, a: usize) -> Result<RelationPresentation> {
    let ctx: &Arc<FunctorCategory> = x.ctx();
    ctx.require_zero_trace()?;
    let cat = ctx.category();
    let p = ctx.prime();
    let n = ctx.object_count();
    let others: Vec<usize> = (0..n).filter(|&b| b != a).collect();
    let unit = |d: usize, i: usize| {
        let mut v = vec![0; d];
        v[i] = 1;
        v
    };

    // Incoming side.
    let mut dmods = Vec::new();
    let mut tensors: Vec<Option<TensorSpace>> = vec![None; n];
    let mut doff = vec![0; n];
    let mut off = 0;
    for &b in &others {
        let (m, ts) = tensor_bimodule(ctx.hom(b, a), &x.eval(b))?;
        doff[b] = off;
        off += ts.dim;
        dmods.push(m);
        tensors[b] = Some(ts);
    }
    let ddim = off;
    let domain = Arc::new(if dmods.is_empty() {
        LeftModule::zero(ctx.endo(a).clone())
    } else {
        LeftModule::direct_sum(ctx.endo(a).clone(), &dmods.iter().collect::<Vec<_>>())?
    });
    let class_of = |b: usize, s: &[u32], v: &[u32]| -> Vec<u32> {
        let mut out = vec![0; ddim];
        let ts = tensors[b].as_ref().expect("tensor block");
        for (i, c) in ts.pure(s, v).into_iter().enumerate() {
            out[doff[b] + i] = c;
        }
        out
    };
    let phi_blocks: Vec<FpMatrix> = others
        .iter()
        .map(|&b| {
            let ev = hstack_or_empty(p, x.dim(a), &x.acts()[b][a].to_vec());
            ev.mul(&tensors[b].as_ref().expect("tensor block").section)
        })
        .collect();
    let phi = hstack_or_empty(p, x.dim(a), &phi_blocks);
    let (mut h1, mut h2, mut nu) = (Vec::new(), Vec::new(), Vec::new());
    for &b in &others {
        for &b2 in others.iter().filter(|&&c| c != b) {
            for g in 0..cat.hom_dim(b2, a) {
                for f in 0..cat.hom_dim(b, b2) {
                    for j in 0..x.dim(b) {
                        let ex = unit(x.dim(b), j);
                        let gf = cat.compose_basis(b, b2, a, g, f).to_vec();
                        h1.push(class_of(b, &gf, &ex));
                        let xf = x.act(b, b2, f).col(j);
                        h2.push(class_of(b2, &unit(cat.hom_dim(b2, a), g), &xf));
                    }
                }
            }
        }
        for s in 0..cat.hom_dim(b, a) {
            for l in 0..cat.hom_dim(a, b) {
                for j in 0..x.dim(a) {
                    let xl = x.act(a, b, l).col(j);
                    nu.push(class_of(b, &unit(cat.hom_dim(b, a), s), &xl));
                }
            }
        }
    }

    // Outgoing side.
    let mut tmods = Vec::new();
    let mut homs: Vec<Option<HomSpace>> = vec![None; n];
    let mut toff = vec![0; n];
    let mut off = 0;
    for &b in &others {
        let (m, hs) = hom_bimodule(ctx.hom(a, b), &x.eval(b))?;
        toff[b] = off;
        off += hs.dim();
        tmods.push(m);
        homs[b] = Some(hs);
    }
    let tdim = off;
    let codomain = Arc::new(if tmods.is_empty() {
        LeftModule::zero(ctx.endo(a).clone())
    } else {
        LeftModule::direct_sum(ctx.endo(a).clone(), &tmods.iter().collect::<Vec<_>>())?
    });
    let hs_of = |b: usize| homs[b].as_ref().expect("hom block");
    // Rows of φ_B(l) as a function of the coordinates of T.
    let eval_at = |b: usize, l: &[u32]| -> FpMatrix {
        let hs = hs_of(b);
        let mut m = FpMatrix::zeros(p, x.dim(b), tdim);
        for (i, basis) in hs.basis.iter().enumerate() {
            let v = basis.apply(l);
            for (r, c) in v.into_iter().enumerate() {
                m.set(r, toff[b] + i, c);
            }
        }
        m
    };
    let (mut t1, mut t2, mut tau) = (Vec::new(), Vec::new(), Vec::new());
    for &b in &others {
        for &b2 in others.iter().filter(|&&c| c != b) {
            for f in 0..cat.hom_dim(b, b2) {
                for l in 0..cat.hom_dim(a, b) {
                    let el = unit(cat.hom_dim(a, b), l);
                    t1.push(x.act(b, b2, f).mul(&eval_at(b, &el)));
                    let fl = cat.compose(a, b, b2, &unit(cat.hom_dim(b, b2), f), &el);
                    t2.push(eval_at(b2, &fl));
                }
            }
        }
        for s in 0..cat.hom_dim(b, a) {
            for l in 0..cat.hom_dim(a, b) {
                tau.push(x.act(b, a, s).mul(&eval_at(b, &unit(cat.hom_dim(a, b), l))));
            }
        }
    }
    let psi_blocks: Vec<FpMatrix> = others
        .iter()
        .map(|&b| {
            let hs = hs_of(b);
            let cols: Vec<Vec<u32>> = (0..x.dim(a))
                .map(|j| {
                    let img: Vec<Vec<u32>> = x.acts()[a][b].iter().map(|m| m.col(j)).collect();
                    hs.coordinates(&FpMatrix::from_columns(p, x.dim(b), &img)).expect("evaluation is a homomorphism")
                })
                .collect();
            FpMatrix::from_columns(p, hs.dim(), &cols)
        })
        .collect();
    let psi = vstack_or_empty(p, x.dim(a), &psi_blocks);

    Ok(RelationPresentation {
        object: a,
        domain,
        h1: FpMatrix::from_columns(p, ddim, &h1),
        h2: FpMatrix::from_columns(p, ddim, &h2),
        nu: FpMatrix::from_columns(p, ddim, &nu),
        phi,
        codomain,
        t1: vstack_or_empty(p, tdim, &t1),
        t2: vstack_or_empty(p, tdim, &t2),
        tau: vstack_or_empty(p, tdim, &tau),
        psi,
    })
}

/// `coker(relations)` with the factor map to `X(A)` induced by `φ`.
pub fn coker_phi(x: &Arc<AddFunctor>, a: usize) -> Result<(Arc<LeftModule>, ModuleMap)> {
    let rp = relation_presentation(x, a)?;
    let (q, _proj, sec) = rp.domain.quotient(&SubspaceBasis::column_span(&rp.relations()))?;
    let m = rp.phi.mul(&sec);
    Ok((q.clone(), ModuleMap::from_parts(q, x.eval(a), m)))
}

/// `ker(μ)` with the factor map from `X(A)` induced by `ψ`.
pub fn ker_mu(x: &Arc<AddFunctor>, a: usize) -> Result<(Arc<LeftModule>, ModuleMap)> {
    let rp = relation_presentation(x, a)?;
    let ker = kernel_basis(&rp.mu()).as_columns();
    let (k, _incl) = rp.codomain.submodule(&ker)?;
    let m = cotlab_linalg::solve_in_span(&ker, &rp.psi);
    Ok((k.clone(), ModuleMap::from_parts(x.eval(a), k, m)))
}

/// A levelwise short exact sequence of functors.
#[derive(Clone, Debug)]
pub struct FunctorSes {
    pub inj: NatTrans,
    pub surj: NatTrans,
}

impl FunctorSes {
    pub fn is_levelwise_exact(&self) -> bool {
        self.inj.is_levelwise_injective()
            && self.surj.is_levelwise_surjective()
            && self.inj.components.iter().zip(&self.surj.components).all(|(i, s)| {
                s.mul(i).is_zero() && cotlab_linalg::rank(i) + cotlab_linalg::rank(s) == i.rows()
            })
    }
}

/// `K_{M,A} ↪ q_A(M) ↠ s_A(M)` and `s_A(M) ↪ p_A(M) ↠ C_{M,A}`.
#[derive(Clone, Debug)]
pub struct SeriesKC {
    pub k: Arc<AddFunctor>,
    pub c: Arc<AddFunctor>,
    pub q_sequence: FunctorSes,
    pub p_sequence: FunctorSes,
}

/// The functors `K_{M,A}` and `C_{M,A}` with their sequences.
pub fn series_kc(ctx: &Arc<FunctorCategory>, a: usize, m: &Arc<LeftModule>) -> Result<SeriesKC> {
    let s = stalk(ctx, a, m)?;
    let q = induced_q(ctx, a, m)?;
    let p = induced_p(ctx, a, m)?;
    let q_to_s = q_counit(&q, &s);
    let s_to_p = p_unit(&s, &p);
    let (k, k_incl) = q_to_s.kernel();
    let (c, c_proj) = s_to_p.cokernel();
    Ok(SeriesKC {
        k,
        c,
        q_sequence: FunctorSes { inj: k_incl, surj: q_to_s },
        p_sequence: FunctorSes { inj: s_to_p, surj: c_proj },
    })
}

/// `⊕_A q_A(X(A)) ⇒ X`, the sum of the counits; levelwise surjective.
pub fn generating_cover(x: &Arc<AddFunctor>) -> Result<NatTrans> {
    let ctx = x.ctx();
    let n = ctx.object_count();
    let mut parts = Vec::with_capacity(n);
    let mut maps = Vec::with_capacity(n);
    for a in 0..n {
        let q = induced_q(ctx, a, &x.eval(a))?;
        maps.push(q_counit(&q, x));
        parts.push(q.functor);
    }
    let sum = Arc::new(direct_sum(&parts.iter().map(|f| f.as_ref()).collect::<Vec<_>>())?);
    let components = (0..n)
        .map(|b| hstack_or_empty(x.prime(), x.dim(b), &maps.iter().map(|m| m.components[b].clone()).collect::<Vec<_>>()))
        .collect();
    Ok(NatTrans::from_parts(sum, x.clone(), components))
}

/// `X ⇒ ∏_A p_A(X(A))`, the product of the units; levelwise injective.
pub fn cogenerating_hull(x: &Arc<AddFunctor>) -> Result<NatTrans> {
    let ctx = x.ctx();
    let n = ctx.object_count();
    let mut parts = Vec::with_capacity(n);
    let mut maps = Vec::with_capacity(n);
    for a in 0..n {
        let p = induced_p(ctx, a, &x.eval(a))?;
        maps.push(p_unit(x, &p));
        parts.push(p.functor);
    }
    let prod = Arc::new(direct_sum(&parts.iter().map(|f| f.as_ref()).collect::<Vec<_>>())?);
    let components = (0..n)
        .map(|b| vstack_or_empty(x.prime(), x.dim(b), &maps.iter().map(|m| m.components[b].clone()).collect::<Vec<_>>()))
        .collect();
    Ok(NatTrans::from_parts(x.clone(), prod, components))
}

/// `c(X) = ⊕_A c_A(X)` as a module over `P = ∏_A R_A`, with the quotient
/// maps stacked into one matrix `⊕_A X(A) -> c(X)`.
pub fn reduced_c_total(x: &AddFunctor) -> Result<(Arc<LeftModule>, FpMatrix)> {
    let n = x.ctx().object_count();
    let mut mods = Vec::with_capacity(n);
    let mut maps = Vec::with_capacity(n);
    for a in 0..n {
        let (m, f) = reduced_c(x, a)?;
        mods.push(m);
        maps.push(f.matrix);
    }
    Ok((product_module(x.ctx(), &mods), block_diag_rect(x.prime(), &maps.iter().collect::<Vec<_>>())))
}

/// `k(X) = ⊕_A k_A(X)` as a module over `P`, with the inclusions stacked
/// into one matrix `k(X) -> ⊕_A X(A)`.
pub fn reduced_k_total(x: &AddFunctor) -> Result<(Arc<LeftModule>, FpMatrix)> {
    let n = x.ctx().object_count();
    let mut mods = Vec::with_capacity(n);
    let mut maps = Vec::with_capacity(n);
    for a in 0..n {
        let (m, f) = reduced_k(x, a)?;
        mods.push(m);
        maps.push(f.matrix);
    }
    Ok((product_module(x.ctx(), &mods), block_diag_rect(x.prime(), &maps.iter().collect::<Vec<_>>())))
}

/// `⊕_A M_A` as a module over `P = ∏_A R_A` for `R_A`-modules `M_A`.
pub fn product_module(ctx: &FunctorCategory, parts: &[Arc<LeftModule>]) -> Arc<LeftModule> {
    let p = ctx.prime();
    let prod = ctx.product();
    let total: usize = parts.iter().map(|m| m.dim()).sum();
    let mut action = vec![FpMatrix::zeros(p, total, total); prod.dim()];
    let mut off = 0;
    for (a, m) in parts.iter().enumerate() {
        for k in 0..m.alg().dim() {
            action[ctx.product_offset(a) + k].set_block(off, off, m.action(k));
        }
        off += m.dim();
    }
    Arc::new(LeftModule::from_parts(prod.clone(), total, action))
}

/// The `R_A`-module `e_A N` of a module over `P`, with its embedding and
/// projection.
pub fn product_component(ctx: &FunctorCategory, n: &LeftModule, a: usize) -> (Arc<LeftModule>, FpMatrix, FpMatrix) {
    let prod = ctx.product();
    let mut e = vec![0; prod.dim()];
    let off = ctx.product_offset(a);
    e[off..off + ctx.endo(a).dim()].copy_from_slice(ctx.category().identity(a));
    let idem = n.act(&e);
    let piv = cotlab_linalg::row_reduce(&idem).pivots;
    let w = idem.select_cols(&piv);
    let proj = cotlab_linalg::solve_in_span(&w, &idem);
    let action = (0..ctx.endo(a).dim()).map(|k| proj.mul(n.action(off + k)).mul(&w)).collect();
    (Arc::new(LeftModule::from_parts(ctx.endo(a).clone(), w.cols(), action)), w, proj)
}
