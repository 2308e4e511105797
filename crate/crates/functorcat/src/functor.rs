//! Additive functors, natural transformations and their spaces.

use std::collections::HashMap;
use std::sync::Arc;

use cotlab_algmod::LeftModule;
use cotlab_linalg::{kernel_basis, quotient_space, solve_in_span, solve_linear, FpMatrix, SubspaceBasis};

use crate::context::FunctorCategory;
use crate::error::{FunctorError, Result};

/// An additive functor `X`: a vector space `X(A)` per object and a matrix
/// `act[A][B][k] : X(A) -> X(B)` per basis morphism `k` of `Hom(A, B)`.
#[derive(Clone, Debug)]
pub struct AddFunctor {
    ctx: Arc<FunctorCategory>,
    dims: Vec<usize>,
    act: Vec<Vec<Vec<FpMatrix>>>,
}

impl PartialEq for AddFunctor {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.ctx, &other.ctx) || self.ctx.category() == other.ctx.category())
            && self.dims == other.dims
            && self.act == other.act
    }
}
impl Eq for AddFunctor {}

/// Outcome of [`validate_functor`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FunctorReport {
    pub shape_errors: Vec<String>,
    /// Objects whose identity does not act as the identity.
    pub identity_failures: Vec<usize>,
    /// Object triples `(A, B, C)` where `X(g) X(f) != X(g ∘ f)`.
    pub composition_failures: Vec<(usize, usize, usize)>,
}

impl FunctorReport {
    pub fn passed(&self) -> bool {
        self.shape_errors.is_empty() && self.identity_failures.is_empty() && self.composition_failures.is_empty()
    }
}

/// `Σ_k coeffs[k] mats[k]`.
pub(crate) fn combine(p: u32, rows: usize, cols: usize, mats: &[FpMatrix], coeffs: &[u32]) -> FpMatrix {
    let mut out = FpMatrix::zeros(p, rows, cols);
    for (m, &c) in mats.iter().zip(coeffs) {
        if c != 0 {
            out.add_scaled(m, c);
        }
    }
    out
}

/// Checks shapes, identities and composition on every basis pair.
pub fn validate_functor(ctx: &FunctorCategory, dims: &[usize], act: &[Vec<Vec<FpMatrix>>]) -> FunctorReport {
    let cat = ctx.category();
    let n = cat.object_count();
    let p = ctx.prime();
    let mut report = FunctorReport::default();
    if dims.len() != n || act.len() != n || act.iter().any(|r| r.len() != n) {
        report.shape_errors.push(format!("expected data for {n} objects"));
        return report;
    }
    for a in 0..n {
        for b in 0..n {
            if act[a][b].len() != cat.hom_dim(a, b) {
                report.shape_errors.push(format!(
                    "{} matrices for Hom({}, {}) of dim {}",
                    act[a][b].len(),
                    ctx.object_name(a),
                    ctx.object_name(b),
                    cat.hom_dim(a, b)
                ));
            } else if act[a][b].iter().any(|m| m.shape() != (dims[b], dims[a]) || m.prime() != p) {
                report.shape_errors.push(format!(
                    "maps {} → {} must be {}x{} over GF({p})",
                    ctx.object_name(a),
                    ctx.object_name(b),
                    dims[b],
                    dims[a]
                ));
            }
        }
    }
    if !report.shape_errors.is_empty() {
        return report;
    }
    for a in 0..n {
        if combine(p, dims[a], dims[a], &act[a][a], cat.identity(a)) != FpMatrix::identity(p, dims[a]) {
            report.identity_failures.push(a);
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let ok = (0..cat.hom_dim(b, c)).all(|g| {
                    (0..cat.hom_dim(a, b)).all(|f| {
                        act[b][c][g].mul(&act[a][b][f])
                            == combine(p, dims[c], dims[a], &act[a][c], cat.compose_basis(a, b, c, g, f))
                    })
                });
                if !ok {
                    report.composition_failures.push((a, b, c));
                }
            }
        }
    }
    report
}

impl AddFunctor {
    /// A functor from all structure matrices, validated.
    pub fn new(ctx: Arc<FunctorCategory>, dims: Vec<usize>, act: Vec<Vec<Vec<FpMatrix>>>) -> Result<Self> {
        let report = validate_functor(&ctx, &dims, &act);
        if !report.passed() {
            let mut msg = report.shape_errors.join("; ");
            for &a in &report.identity_failures {
                msg.push_str(&format!("identity of {} does not act as the identity; ", ctx.object_name(a)));
            }
            for &(a, b, c) in &report.composition_failures {
                msg.push_str(&format!(
                    "composition {}→{}→{} is not preserved; ",
                    ctx.object_name(a),
                    ctx.object_name(b),
                    ctx.object_name(c)
                ));
            }
            return Err(FunctorError::InvalidFunctor(msg.trim_end_matches("; ").to_string()));
        }
        Ok(AddFunctor { ctx, dims, act })
    }

    /// Wraps structure matrices the caller has already validated.
    pub fn from_parts(ctx: Arc<FunctorCategory>, dims: Vec<usize>, act: Vec<Vec<Vec<FpMatrix>>>) -> Self {
        debug_assert!(validate_functor(&ctx, &dims, &act).passed());
        AddFunctor { ctx, dims, act }
    }

    /// A functor from its values on the category's generating morphisms
    /// (in the order of `generators().gens`). Every basis morphism is a
    /// combination of words in the generators; the functor is valid iff
    /// `X(g) X(b) = X(g ∘ b)` for every generator `g` and basis morphism `b`.
    pub fn from_generator_matrices(ctx: Arc<FunctorCategory>, dims: Vec<usize>, gens: &[FpMatrix]) -> Result<Self> {
        let act = extend_generators(&ctx, &dims, gens)?;
        check_on_generators(&ctx, &dims, &act, gens)?;
        Ok(AddFunctor { ctx, dims, act })
    }

    /// The zero functor.
    pub fn zero(ctx: Arc<FunctorCategory>) -> Self {
        let n = ctx.object_count();
        let p = ctx.prime();
        let act = (0..n)
            .map(|a| (0..n).map(|b| vec![FpMatrix::zeros(p, 0, 0); ctx.category().hom_dim(a, b)]).collect())
            .collect();
        AddFunctor { ctx, dims: vec![0; n], act }
    }

    pub fn ctx(&self) -> &Arc<FunctorCategory> {
        &self.ctx
    }
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }
    pub fn dim(&self, a: usize) -> usize {
        self.dims[a]
    }
    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }
    pub fn is_zero(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }
    pub fn prime(&self) -> u32 {
        self.ctx.prime()
    }

    /// `X(b_k) : X(A) -> X(B)` for basis morphism `k` of `Hom(A, B)`.
    pub fn act(&self, a: usize, b: usize, k: usize) -> &FpMatrix {
        &self.act[a][b][k]
    }
    pub fn acts(&self) -> &[Vec<Vec<FpMatrix>>] {
        &self.act
    }

    /// `X(h)` for an arbitrary `h ∈ Hom(A, B)`.
    pub fn map_of(&self, a: usize, b: usize, h: &[u32]) -> FpMatrix {
        combine(self.prime(), self.dims[b], self.dims[a], &self.act[a][b], h)
    }

    /// Values on the category's generating morphisms.
    pub fn generator_matrices(&self) -> Vec<FpMatrix> {
        self.ctx
            .category()
            .generators()
            .gens
            .iter()
            .map(|(a, b, v)| self.map_of(*a, *b, v))
            .collect()
    }

    /// `X(A)` as a left `R_A`-module.
    pub fn eval(&self, a: usize) -> Arc<LeftModule> {
        Arc::new(LeftModule::from_parts(self.ctx.endo(a).clone(), self.dims[a], self.act[a][a].clone()))
    }
}

/// Builds `act[A][B][k]` from generator values via the word expressions.
fn extend_generators(ctx: &FunctorCategory, dims: &[usize], gens: &[FpMatrix]) -> Result<Vec<Vec<Vec<FpMatrix>>>> {
    let cat = ctx.category();
    let g = cat.generators();
    let p = ctx.prime();
    let n = cat.object_count();
    if dims.len() != n {
        return Err(FunctorError::InvalidFunctor(format!("expected {n} dimensions")));
    }
    if gens.len() != g.gens.len() {
        return Err(FunctorError::InvalidFunctor(format!(
            "expected {} generator matrices, got {}",
            g.gens.len(),
            gens.len()
        )));
    }
    for (i, ((s, t, _), m)) in g.gens.iter().zip(gens).enumerate() {
        if m.shape() != (dims[*t], dims[*s]) || m.prime() != p {
            return Err(FunctorError::InvalidFunctor(format!(
                "generator {i} ({} → {}) must be {}x{}",
                ctx.object_name(*s),
                ctx.object_name(*t),
                dims[*t],
                dims[*s]
            )));
        }
    }
    let mut act = vec![vec![Vec::new(); n]; n];
    for a in 0..n {
        // Word values from A, memoised by word.
        let mut memo: HashMap<&[usize], FpMatrix> = HashMap::new();
        for b in 0..n {
            let mut vals = Vec::with_capacity(g.words[a][b].len());
            for w in &g.words[a][b] {
                let m = word_value(a, w, gens, dims, p, &mut memo);
                vals.push(m);
            }
            act[a][b] = g.expr[a][b].iter().map(|e| combine(p, dims[b], dims[a], &vals, e)).collect();
        }
    }
    Ok(act)
}

fn word_value<'w>(
    a: usize,
    w: &'w [usize],
    gens: &[FpMatrix],
    dims: &[usize],
    p: u32,
    memo: &mut HashMap<&'w [usize], FpMatrix>,
) -> FpMatrix {
    if let Some(m) = memo.get(w) {
        return m.clone();
    }
    let m = match w.split_last() {
        None => FpMatrix::identity(p, dims[a]),
        Some((&last, prefix)) => {
            let pre = word_value(a, prefix, gens, dims, p, memo);
            gens[last].mul(&pre)
        }
    };
    memo.insert(w, m.clone());
    m
}

fn check_on_generators(ctx: &FunctorCategory, dims: &[usize], act: &[Vec<Vec<FpMatrix>>], gens: &[FpMatrix]) -> Result<()> {
    let cat = ctx.category();
    let p = ctx.prime();
    let n = cat.object_count();
    for a in 0..n {
        if combine(p, dims[a], dims[a], &act[a][a], cat.identity(a)) != FpMatrix::identity(p, dims[a]) {
            return Err(FunctorError::InvalidFunctor(format!("identity of {} is not preserved", ctx.object_name(a))));
        }
    }
    for (gi, (b, c, gv)) in cat.generators().gens.iter().enumerate() {
        for a in 0..n {
            for f in 0..cat.hom_dim(a, *b) {
                let mut e = vec![0; cat.hom_dim(a, *b)];
                e[f] = 1;
                let comp = cat.compose(a, *b, *c, gv, &e);
                if gens[gi].mul(&act[a][*b][f]) != combine(p, dims[*c], dims[a], &act[a][*c], &comp) {
                    return Err(FunctorError::InvalidFunctor(format!(
                        "composition {}→{}→{} is not preserved",
                        ctx.object_name(a),
                        ctx.object_name(*b),
                        ctx.object_name(*c)
                    )));
                }
            }
        }
    }
    Ok(())
}

/// Fast validity test for enumeration: whether generator values define a
/// functor.
pub fn generator_values_are_functorial(ctx: &Arc<FunctorCategory>, dims: &[usize], gens: &[FpMatrix]) -> bool {
    match extend_generators(ctx, dims, gens) {
        Ok(act) => check_on_generators(ctx, dims, &act, gens).is_ok(),
        Err(_) => false,
    }
}

/// Entries of `X(id) - id` and of `X(g) X(b) - X(g ∘ b)` for every
/// generator `g` and basis morphism `b`, where `X` is extended from the
/// generator values; zero exactly when the values are functorial. The
/// defect is polynomial in the generator values, and linear in parameters
/// that enter every word value at most once, such as the corner block of
/// an extension.
pub fn functoriality_defect(ctx: &Arc<FunctorCategory>, dims: &[usize], gens: &[FpMatrix]) -> Result<Vec<u32>> {
    let act = extend_generators(ctx, dims, gens)?;
    let cat = ctx.category();
    let p = ctx.prime();
    let n = cat.object_count();
    let mut out = Vec::new();
    for a in 0..n {
        let d = combine(p, dims[a], dims[a], &act[a][a], cat.identity(a)).sub(&FpMatrix::identity(p, dims[a]));
        out.extend_from_slice(d.data());
    }
    for (gi, (b, c, gv)) in cat.generators().gens.iter().enumerate() {
        for a in 0..n {
            for f in 0..cat.hom_dim(a, *b) {
                let mut e = vec![0; cat.hom_dim(a, *b)];
                e[f] = 1;
                let comp = cat.compose(a, *b, *c, gv, &e);
                let d = gens[gi].mul(&act[a][*b][f]).sub(&combine(p, dims[*c], dims[a], &act[a][*c], &comp));
                out.extend_from_slice(d.data());
            }
        }
    }
    Ok(out)
}

/// A natural transformation `α: X ⇒ Y` with one component per object.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NatTrans {
    pub source: Arc<AddFunctor>,
    pub target: Arc<AddFunctor>,
    pub components: Vec<FpMatrix>,
}

fn same_ctx(x: &AddFunctor, y: &AddFunctor) -> Result<()> {
    if Arc::ptr_eq(&x.ctx, &y.ctx) || x.ctx.category() == y.ctx.category() {
        Ok(())
    } else {
        Err(FunctorError::CategoryMismatch)
    }
}

impl NatTrans {
    /// Validates shapes and naturality on every basis morphism.
    pub fn new(source: Arc<AddFunctor>, target: Arc<AddFunctor>, components: Vec<FpMatrix>) -> Result<Self> {
        same_ctx(&source, &target)?;
        let cat = source.ctx.category();
        let n = cat.object_count();
        if components.len() != n {
            return Err(FunctorError::NotNatural(format!("expected {n} components")));
        }
        for a in 0..n {
            if components[a].shape() != (target.dims[a], source.dims[a]) {
                return Err(FunctorError::NotNatural(format!("component at {} has the wrong shape", source.ctx.object_name(a))));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for k in 0..cat.hom_dim(a, b) {
                    if target.act[a][b][k].mul(&components[a]) != components[b].mul(&source.act[a][b][k]) {
                        return Err(FunctorError::NotNatural(format!(
                            "square for a morphism {} → {} does not commute",
                            source.ctx.object_name(a),
                            source.ctx.object_name(b)
                        )));
                    }
                }
            }
        }
        Ok(NatTrans { source, target, components })
    }

    pub fn from_parts(source: Arc<AddFunctor>, target: Arc<AddFunctor>, components: Vec<FpMatrix>) -> Self {
        NatTrans { source, target, components }
    }

    pub fn identity(x: &Arc<AddFunctor>) -> Self {
        let p = x.prime();
        let components = x.dims.iter().map(|&d| FpMatrix::identity(p, d)).collect();
        NatTrans { source: x.clone(), target: x.clone(), components }
    }

    pub fn zero(x: &Arc<AddFunctor>, y: &Arc<AddFunctor>) -> Self {
        let p = x.prime();
        let components = x.dims.iter().zip(&y.dims).map(|(&dx, &dy)| FpMatrix::zeros(p, dy, dx)).collect();
        NatTrans { source: x.clone(), target: y.clone(), components }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &NatTrans) -> NatTrans {
        NatTrans {
            source: other.source.clone(),
            target: self.target.clone(),
            components: self.components.iter().zip(&other.components).map(|(a, b)| a.mul(b)).collect(),
        }
    }

    pub fn is_levelwise_injective(&self) -> bool {
        self.components.iter().all(cotlab_linalg::is_injective)
    }
    pub fn is_levelwise_surjective(&self) -> bool {
        self.components.iter().all(cotlab_linalg::is_surjective)
    }
    pub fn is_isomorphism(&self) -> bool {
        self.components.iter().all(cotlab_linalg::is_invertible)
    }

    /// Levelwise kernel with its inclusion.
    pub fn kernel(&self) -> (Arc<AddFunctor>, NatTrans) {
        let x = &self.source;
        let bases: Vec<FpMatrix> = self.components.iter().map(|c| kernel_basis(c).as_columns()).collect();
        let sub = Arc::new(subfunctor_on(x, &bases));
        (sub.clone(), NatTrans { source: sub, target: x.clone(), components: bases })
    }

    /// Levelwise cokernel with its projection.
    pub fn cokernel(&self) -> (Arc<AddFunctor>, NatTrans) {
        let y = &self.target;
        let spans: Vec<SubspaceBasis> = self.components.iter().map(SubspaceBasis::column_span).collect();
        let (q, proj) = quotient_functor(y, &spans);
        (q, proj)
    }
}

/// The subfunctor on the column spans of `bases` (closed under the action).
pub fn subfunctor_on(x: &AddFunctor, bases: &[FpMatrix]) -> AddFunctor {
    let n = x.ctx.object_count();
    let cat = x.ctx.category();
    let dims: Vec<usize> = bases.iter().map(|b| b.cols()).collect();
    let act = (0..n)
        .map(|a| {
            (0..n)
                .map(|b| (0..cat.hom_dim(a, b)).map(|k| solve_in_span(&bases[b], &x.act[a][b][k].mul(&bases[a]))).collect())
                .collect()
        })
        .collect();
    AddFunctor { ctx: x.ctx.clone(), dims, act }
}

/// The quotient functor by levelwise subspaces closed under the action.
pub fn quotient_functor(y: &Arc<AddFunctor>, spans: &[SubspaceBasis]) -> (Arc<AddFunctor>, NatTrans) {
    let n = y.ctx.object_count();
    let cat = y.ctx.category();
    let qs: Vec<(FpMatrix, FpMatrix)> =
        spans.iter().enumerate().map(|(a, s)| quotient_space(y.dims[a], s).expect("subspace of X(A)")).collect();
    let dims: Vec<usize> = qs.iter().map(|(p, _)| p.rows()).collect();
    let act = (0..n)
        .map(|a| {
            (0..n)
                .map(|b| (0..cat.hom_dim(a, b)).map(|k| qs[b].0.mul(&y.act[a][b][k]).mul(&qs[a].1)).collect())
                .collect()
        })
        .collect();
    let q = Arc::new(AddFunctor { ctx: y.ctx.clone(), dims, act });
    let proj = NatTrans { source: y.clone(), target: q.clone(), components: qs.into_iter().map(|(p, _)| p).collect() };
    (q, proj)
}

/// Direct sum of functors with concatenated coordinates.
pub fn direct_sum(parts: &[&AddFunctor]) -> Result<AddFunctor> {
    let first = parts.first().ok_or_else(|| FunctorError::InvalidFunctor("empty direct sum".into()))?;
    for x in parts {
        same_ctx(first, x)?;
    }
    let ctx = first.ctx.clone();
    let n = ctx.object_count();
    let p = ctx.prime();
    let cat = ctx.category();
    let dims: Vec<usize> = (0..n).map(|a| parts.iter().map(|x| x.dims[a]).sum()).collect();
    let act = (0..n)
        .map(|a| {
            (0..n)
                .map(|b| {
                    (0..cat.hom_dim(a, b))
                        .map(|k| {
                            let blocks: Vec<&FpMatrix> = parts.iter().map(|x| &x.act[a][b][k]).collect();
                            block_diag_rect(p, &blocks)
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    Ok(AddFunctor { ctx, dims, act })
}

/// Block diagonal of possibly rectangular blocks.
pub(crate) fn block_diag_rect(p: u32, blocks: &[&FpMatrix]) -> FpMatrix {
    let rows = blocks.iter().map(|b| b.rows()).sum();
    let cols = blocks.iter().map(|b| b.cols()).sum();
    let mut m = FpMatrix::zeros(p, rows, cols);
    let (mut r, mut c) = (0, 0);
    for b in blocks {
        m.set_block(r, c, b);
        r += b.rows();
        c += b.cols();
    }
    m
}

/// A basis of the natural transformations `X ⇒ Y`.
#[derive(Clone, Debug)]
pub struct NatSpace {
    pub source: Arc<AddFunctor>,
    pub target: Arc<AddFunctor>,
    pub basis: Vec<Vec<FpMatrix>>,
    offsets: Vec<usize>,
    flat: FpMatrix,
}

impl NatSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    fn flatten(&self, comps: &[FpMatrix]) -> Vec<u32> {
        comps.iter().flat_map(|c| c.flatten()).collect()
    }

    /// Coordinates of a natural transformation, `None` if not natural.
    pub fn coordinates(&self, comps: &[FpMatrix]) -> Option<Vec<u32>> {
        let v = self.flatten(comps);
        if self.basis.is_empty() {
            return if v.iter().all(|&x| x == 0) { Some(Vec::new()) } else { None };
        }
        let b = FpMatrix::column(self.source.prime(), &v);
        solve_linear(&self.flat, &b).ok().flatten().map(|x| x.col(0))
    }

    pub fn element(&self, coords: &[u32]) -> Vec<FpMatrix> {
        let p = self.source.prime();
        let n = self.source.ctx.object_count();
        let mut out: Vec<FpMatrix> =
            (0..n).map(|a| FpMatrix::zeros(p, self.target.dims[a], self.source.dims[a])).collect();
        for (b, &c) in self.basis.iter().zip(coords) {
            if c != 0 {
                for (o, m) in out.iter_mut().zip(b) {
                    o.add_scaled(m, c);
                }
            }
        }
        out
    }

    pub fn basis_maps(&self) -> Vec<NatTrans> {
        self.basis.iter().map(|c| NatTrans::from_parts(self.source.clone(), self.target.clone(), c.clone())).collect()
    }

    pub fn offsets(&self) -> &[usize] {
        &self.offsets
    }
}

/// `Nat(X, Y)` as the joint solution space of naturality on generators.
pub fn nat_space(x: &Arc<AddFunctor>, y: &Arc<AddFunctor>) -> Result<NatSpace> {
    same_ctx(x, y)?;
    let ctx = &x.ctx;
    let cat = ctx.category();
    let p = ctx.prime();
    let n = cat.object_count();
    let mut offsets = Vec::with_capacity(n + 1);
    let mut off = 0;
    for a in 0..n {
        offsets.push(off);
        off += x.dims[a] * y.dims[a];
    }
    offsets.push(off);
    let unknowns = off;
    let mut rows: Vec<FpMatrix> = Vec::new();
    for (a, b, gv) in &cat.generators().gens {
        let (a, b) = (*a, *b);
        let xg = x.map_of(a, b, gv);
        let yg = y.map_of(a, b, gv);
        // vec(Y(g) α_A) - vec(α_B X(g)), row-major.
        let left = yg.kron(&FpMatrix::identity(p, x.dims[a]));
        let right = FpMatrix::identity(p, y.dims[b]).kron(&xg.transpose());
        let mut eq = FpMatrix::zeros(p, y.dims[b] * x.dims[a], unknowns);
        eq.set_block(0, offsets[a], &left);
        let existing = eq.block(0, offsets[b], right.rows(), right.cols());
        eq.set_block(0, offsets[b], &existing.sub(&right));
        rows.push(eq);
    }
    let sys = if rows.is_empty() {
        FpMatrix::zeros(p, 0, unknowns)
    } else {
        FpMatrix::vstack(&rows.iter().collect::<Vec<_>>())
    };
    let ker = kernel_basis(&sys);
    let basis = ker
        .vectors()
        .iter()
        .map(|v| (0..n).map(|a| FpMatrix::unflatten(p, y.dims[a], x.dims[a], &v[offsets[a]..offsets[a + 1]])).collect())
        .collect();
    Ok(NatSpace { source: x.clone(), target: y.clone(), basis, offsets, flat: ker.as_columns() })
}
