//! Exhaustive enumeration of modules and functors up to isomorphism.
//!
//! Candidates are scanned exhaustively and grouped by rank invariants;
//! inside a group, isomorphism is decided by searching the Hom (Nat) space
//! for an invertible element.

use std::collections::HashMap;
use std::sync::Arc;

use cotlab_algmod::{hom_space, Algebra, LeftModule};
use cotlab_functorcat::{
    direct_sum, functoriality_defect, generator_values_are_functorial, nat_space, stalk, AddFunctor, FunctorCategory,
};
use cotlab_linalg::{is_invertible, kernel_basis, rank, FpMatrix, RowEchelon};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{InstanceError, Result};

/// Largest number of candidate structures scanned for one dimension.
pub const MAX_CANDIDATES: u64 = 1 << 22;

/// Largest span searched exhaustively for an invertible element.
const MAX_SPAN_SEARCH: u64 = 1 << 20;

/// Random combinations tried before the exhaustive span search.
const RANDOM_TRIES: usize = 48;

/// Every `rows x cols` matrix over GF(p), in a fixed order.
pub fn all_matrices(p: u32, rows: usize, cols: usize) -> Vec<FpMatrix> {
    let n = rows * cols;
    let total = (p as u64).pow(n as u32);
    (0..total)
        .map(|mut code| {
            let mut data = vec![0u32; n];
            for d in data.iter_mut() {
                *d = (code % p as u64) as u32;
                code /= p as u64;
            }
            FpMatrix::from_vec(p, rows, cols, data).expect("shape matches data")
        })
        .collect()
}

/// `[I_r 0; 0 0]` for every possible rank `r`.
fn rank_normal_forms(p: u32, rows: usize, cols: usize) -> Vec<FpMatrix> {
    (0..=rows.min(cols))
        .map(|r| {
            let mut m = FpMatrix::zeros(p, rows, cols);
            for i in 0..r {
                m.set(i, i, 1);
            }
            m
        })
        .collect()
}

/// `Σ coords[i] basis[i]`, componentwise.
fn span_element(p: u32, basis: &[Vec<FpMatrix>], shapes: &[(usize, usize)], coords: &[u32]) -> Vec<FpMatrix> {
    shapes
        .iter()
        .enumerate()
        .map(|(a, &(r, c))| {
            let mut m = FpMatrix::zeros(p, r, c);
            for (b, &k) in basis.iter().zip(coords) {
                if k != 0 {
                    m.add_scaled(&b[a], k);
                }
            }
            m
        })
        .collect()
}

/// Whether some element of the span of `basis` (each a tuple of component
/// matrices) satisfies `pred`: seeded random combinations first, then an
/// exhaustive scan, so the answer is exact.
fn span_search(
    p: u32,
    basis: &[Vec<FpMatrix>],
    shapes: &[(usize, usize)],
    pred: impl Fn(&[FpMatrix]) -> bool,
) -> Result<bool> {
    let k = basis.len();
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    if k > 0 {
        for _ in 0..RANDOM_TRIES {
            let coords: Vec<u32> = (0..k).map(|_| rng.gen_range(0..p)).collect();
            if pred(&span_element(p, basis, shapes, &coords)) {
                return Ok(true);
            }
        }
    }
    let total = (p as u64).checked_pow(k as u32).filter(|&t| t <= MAX_SPAN_SEARCH).ok_or_else(|| {
        InstanceError::BoundExceeded(format!("exhaustive search over a {k}-dimensional span"))
    })?;
    for mut code in 0..total {
        let coords: Vec<u32> = (0..k)
            .map(|_| {
                let c = (code % p as u64) as u32;
                code /= p as u64;
                c
            })
            .collect();
        if pred(&span_element(p, basis, shapes, &coords)) {
            return Ok(true);
        }
    }
    Ok(false)
}

fn square_shapes(dims: &[usize]) -> Vec<(usize, usize)> {
    dims.iter().map(|&d| (d, d)).collect()
}

fn is_nilpotent(m: &FpMatrix) -> bool {
    let mut power = m.clone();
    for _ in 1..m.rows() {
        power = power.mul(m);
    }
    power.is_zero()
}

/// Whether two modules over the same algebra are isomorphic.
pub fn modules_isomorphic(m: &Arc<LeftModule>, n: &Arc<LeftModule>) -> Result<bool> {
    if m.dim() != n.dim() {
        return Ok(false);
    }
    let hs = hom_space(m, n)?;
    let basis: Vec<Vec<FpMatrix>> = hs.basis.iter().map(|b| vec![b.clone()]).collect();
    span_search(m.prime(), &basis, &[(m.dim(), m.dim())], |c| c.iter().all(is_invertible))
}

/// Whether two functors on the same category are naturally isomorphic.
pub fn functors_isomorphic(x: &Arc<AddFunctor>, y: &Arc<AddFunctor>) -> Result<bool> {
    if x.dims() != y.dims() {
        return Ok(false);
    }
    let ns = nat_space(x, y)?;
    span_search(x.prime(), &ns.basis, &square_shapes(x.dims()), |c| c.iter().all(is_invertible))
}

/// Whether `X` is nonzero and indecomposable. By Fitting's lemma this
/// holds exactly when every endomorphism is nilpotent or invertible.
pub fn is_indecomposable(x: &Arc<AddFunctor>) -> Result<bool> {
    if x.dims().iter().all(|&d| d == 0) {
        return Ok(false);
    }
    let end = nat_space(x, x)?;
    let splits = |c: &[FpMatrix]| !c.iter().all(is_nilpotent) && !c.iter().all(is_invertible);
    Ok(!span_search(x.prime(), &end.basis, &square_shapes(x.dims()), splits)?)
}

/// Keeps the first candidate of every isomorphism class, grouping by `key`
/// first.
fn dedup_by<T, K: std::hash::Hash + Eq>(
    candidates: impl IntoIterator<Item = T>,
    key: impl Fn(&T) -> K,
    iso: impl Fn(&T, &T) -> Result<bool>,
) -> Result<Vec<T>> {
    let mut buckets: HashMap<K, Vec<usize>> = HashMap::new();
    let mut reps: Vec<T> = Vec::new();
    for c in candidates {
        let k = key(&c);
        let bucket = buckets.entry(k).or_default();
        let mut found = false;
        for &i in bucket.iter() {
            if iso(&reps[i], &c)? {
                found = true;
                break;
            }
        }
        if !found {
            bucket.push(reps.len());
            reps.push(c);
        }
    }
    Ok(reps)
}

fn module_key(m: &LeftModule) -> Vec<usize> {
    m.generator_matrices().iter().map(rank).collect()
}

/// The modules of dimension exactly `d` over `alg`, one per isomorphism
/// class (the zero module for `d = 0`).
pub fn modules_of_dim(alg: &Arc<Algebra>, d: usize) -> Result<Vec<Arc<LeftModule>>> {
    let p = alg.prime();
    let g = alg.generator_count();
    let per = (p as u64).checked_pow((d * d) as u32);
    let total = per.and_then(|m| m.checked_pow(g as u32)).filter(|&t| t <= MAX_CANDIDATES).ok_or_else(|| {
        InstanceError::BoundExceeded(format!("modules of dimension {d} over an algebra with {g} generators"))
    })?;
    let mats = all_matrices(p, d, d);
    let m = mats.len() as u64;
    let candidates = (0..total).filter_map(|mut code| {
        let gens: Vec<FpMatrix> = (0..g)
            .map(|_| {
                let i = (code % m) as usize;
                code /= m;
                mats[i].clone()
            })
            .collect();
        LeftModule::from_generator_matrices(alg.clone(), d, &gens).ok().map(Arc::new)
    });
    dedup_by(candidates, |m| module_key(m), modules_isomorphic)
}

/// The nonzero modules of dimension at most `max_dim` over `alg` up to
/// isomorphism, in order of dimension.
pub fn enumerate_modules(alg: &Arc<Algebra>, max_dim: usize) -> Result<Vec<Arc<LeftModule>>> {
    let mut out = Vec::new();
    for d in 1..=max_dim {
        out.extend(modules_of_dim(alg, d)?);
    }
    Ok(out)
}

/// Bounds for [`enumerate_functors_bounded`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FunctorBounds {
    /// Bound on every `dim X(A)`.
    pub per_object: usize,
    /// Optional bound on `Σ_A dim X(A)`.
    pub total: Option<usize>,
}

/// Every functor with `dim X(A) ≤ per_object_max`, one per natural
/// isomorphism class.
pub fn enumerate_functors(ctx: &Arc<FunctorCategory>, per_object_max: usize) -> Result<Vec<Arc<AddFunctor>>> {
    enumerate_functors_bounded(ctx, FunctorBounds { per_object: per_object_max, total: None })
}

/// Dimension vectors within the bounds, in lexicographic order.
fn dim_vectors(n: usize, bounds: FunctorBounds) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut dims = vec![0usize; n];
    loop {
        if bounds.total.map_or(true, |t| dims.iter().sum::<usize>() <= t) {
            out.push(dims.clone());
        }
        let mut k = n;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            dims[k] += 1;
            if dims[k] <= bounds.per_object {
                break;
            }
            dims[k] = 0;
        }
    }
}

/// Ranks of every structure map between distinct objects: an invariant of
/// the isomorphism class.
fn functor_key(x: &AddFunctor) -> Vec<usize> {
    let n = x.dims().len();
    let mut key = x.dims().to_vec();
    for a in 0..n {
        for b in 0..n {
            for m in &x.acts()[a][b] {
                key.push(rank(m));
            }
        }
    }
    key
}

/// Every functor within the bounds, one per natural isomorphism class, in
/// order of total dimension.
///
/// On zero-trace categories every morphism between distinct objects lies in
/// the radical, so the simple functors are the stalks of simple
/// endomorphism modules; every functor of total dimension `n` is then an
/// extension of a simple functor by one of smaller dimension, and the
/// classes are built level by level from Ext groups. Other categories are
/// scanned exhaustively by [`enumerate_functors_by_scan`].
pub fn enumerate_functors_bounded(ctx: &Arc<FunctorCategory>, bounds: FunctorBounds) -> Result<Vec<Arc<AddFunctor>>> {
    if ctx.require_zero_trace().is_ok() {
        enumerate_functors_by_extensions(ctx, bounds)
    } else {
        enumerate_functors_by_scan(ctx, bounds)
    }
}

fn within(dims: &[usize], bounds: FunctorBounds) -> bool {
    dims.iter().all(|&d| d <= bounds.per_object) && bounds.total.map_or(true, |t| dims.iter().sum::<usize>() <= t)
}

/// Simple modules over `alg`, up to isomorphism.
pub fn simple_modules(alg: &Arc<Algebra>) -> Result<Vec<Arc<LeftModule>>> {
    let p = alg.prime() as u64;
    let mut out = Vec::new();
    for d in 1..=alg.dim() {
        for m in modules_of_dim(alg, d)? {
            let simple = (1..p.pow(d as u32)).all(|mut code| {
                let v: Vec<u32> = (0..d)
                    .map(|_| {
                        let c = (code % p) as u32;
                        code /= p;
                        c
                    })
                    .collect();
                m.generated_submodule(&[v]).dim() == d
            });
            if simple {
                out.push(m);
            }
        }
    }
    Ok(out)
}

/// Level-by-level construction from extensions by simple functors; requires
/// zero trace.
///
/// Only indecomposables are discovered (as non-split extensions of a
/// simple functor by a functor of smaller dimension) and deduplicated;
/// by the Krull–Schmidt theorem the isomorphism classes are then exactly
/// the multisets of indecomposables.
pub fn enumerate_functors_by_extensions(
    ctx: &Arc<FunctorCategory>,
    bounds: FunctorBounds,
) -> Result<Vec<Arc<AddFunctor>>> {
    ctx.require_zero_trace()?;
    let n = ctx.object_count();
    let max_total = bounds.total.map_or(n * bounds.per_object, |t| t.min(n * bounds.per_object));
    let mut simples: Vec<(usize, Arc<LeftModule>)> = Vec::new();
    for a in 0..n {
        simples.extend(simple_modules(ctx.endo(a))?.into_iter().map(|t| (a, t)));
    }

    // Indecomposables found so far, in order of total dimension.
    let mut ind: Vec<Arc<AddFunctor>> = Vec::new();
    // levels[t]: the classes of total dimension t as non-decreasing index
    // lists into `ind`, with their direct sums.
    let mut levels: Vec<Vec<(Vec<usize>, Arc<AddFunctor>)>> =
        vec![vec![(Vec::new(), Arc::new(AddFunctor::zero(ctx.clone())))]];
    for total in 1..=max_total {
        let mut candidates = Vec::new();
        for (a, t) in &simples {
            if t.dim() > total {
                continue;
            }
            for (_, y) in &levels[total - t.dim()] {
                let mut dims = y.dims().to_vec();
                dims[*a] += t.dim();
                if !within(&dims, bounds) {
                    continue;
                }
                if y.dims().iter().all(|&d| d == 0) {
                    candidates.push(stalk(ctx, *a, t)?);
                    continue;
                }
                for x in nonsplit_one_point_extensions(ctx, y, *a, t)? {
                    if is_indecomposable(&x)? {
                        candidates.push(x);
                    }
                }
            }
        }
        ind.extend(dedup_by(candidates, |x| functor_key(x), functors_isomorphic)?);

        // Multisets whose largest index is i, extending smaller multisets.
        let mut level = Vec::new();
        for (i, x) in ind.iter().enumerate() {
            let d: usize = x.dims().iter().sum();
            if d > total {
                continue;
            }
            for (idx, rest) in &levels[total - d] {
                if idx.last().is_some_and(|&j| j > i) {
                    continue;
                }
                let dims: Vec<usize> = rest.dims().iter().zip(x.dims()).map(|(u, v)| u + v).collect();
                if !within(&dims, bounds) {
                    continue;
                }
                let sum = if idx.is_empty() { x.clone() } else { Arc::new(direct_sum(&[rest, x])?) };
                let mut idx = idx.clone();
                idx.push(i);
                level.push((idx, sum));
            }
        }
        level.sort_by(|u, v| u.0.cmp(&v.0));
        levels.push(level);
    }
    Ok(levels.into_iter().flatten().map(|(_, x)| x).collect())
}

/// `Σ_k coords[k] X(basis_k)` for a morphism `a → b` of `X`.
fn morphism_value(x: &AddFunctor, a: usize, b: usize, coords: &[u32]) -> FpMatrix {
    let mut m = FpMatrix::zeros(x.prime(), x.dim(b), x.dim(a));
    for (k, &c) in coords.iter().enumerate() {
        if c != 0 {
            m.add_scaled(x.act(a, b, k), c);
        }
    }
    m
}

/// The middle terms of the non-split extensions `0 → s_a(T) → X → Y → 0`,
/// one for every nonzero class in the Ext group up to scalars.
///
/// With `X(a) = T ⊕ Y(a)`, the extension data is one block `r_g` on every
/// generator `g` into `a` (`Y(source) → T`); functoriality is linear in
/// these blocks, and changing the splitting of `X(a)` by `φ: Y(a) → T`
/// moves `r_g` by `φ Y(g) - T(g) φ`.
fn nonsplit_one_point_extensions(
    ctx: &Arc<FunctorCategory>,
    y: &Arc<AddFunctor>,
    a: usize,
    t: &LeftModule,
) -> Result<Vec<Arc<AddFunctor>>> {
    let p = ctx.prime();
    let gens = &ctx.category().generators().gens;
    let dt = t.dim();
    let mut dims = y.dims().to_vec();
    dims[a] += dt;
    let ya = y.dim(a);

    // Parameter offsets of the blocks r_g.
    let mut offsets = Vec::with_capacity(gens.len());
    let mut params = 0;
    for (s, c, _) in gens {
        offsets.push(params);
        if *c == a {
            params += dt * y.dim(*s);
        }
    }
    let block = |r: &[u32], gi: usize| {
        let cols = y.dim(gens[gi].0);
        FpMatrix::from_vec(p, dt, cols, r[offsets[gi]..offsets[gi] + dt * cols].to_vec()).expect("block shape")
    };
    let values = |r: &[u32]| -> Vec<FpMatrix> {
        gens.iter()
            .enumerate()
            .map(|(gi, (s, c, coords))| {
                let yg = morphism_value(y, *s, *c, coords);
                match (*s == a, *c == a) {
                    (false, false) => yg,
                    (true, false) => FpMatrix::hstack(&[&FpMatrix::zeros(p, yg.rows(), dt), &yg]),
                    (false, true) => FpMatrix::vstack(&[&block(r, gi), &yg]),
                    (true, true) => FpMatrix::vstack(&[
                        &FpMatrix::hstack(&[&t.act(coords), &block(r, gi)]),
                        &FpMatrix::hstack(&[&FpMatrix::zeros(p, ya, dt), &yg]),
                    ]),
                }
            })
            .collect()
    };
    let unit = |len: usize, i: usize| {
        let mut v = vec![0u32; len];
        v[i] = 1;
        v
    };

    // Cocycles: the kernel of the (linear) functoriality defect.
    let defect_cols: Vec<Vec<u32>> =
        (0..params).map(|i| functoriality_defect(ctx, &dims, &values(&unit(params, i)))).collect::<std::result::Result<_, _>>()?;
    let rows = functoriality_defect(ctx, &dims, &values(&vec![0; params]))?.len();
    let cocycles = kernel_basis(&FpMatrix::from_columns(p, rows, &defect_cols)).vectors();

    // Coboundaries of every φ: Y(a) → T.
    let mut span = RowEchelon::new(p, params);
    for j in 0..dt * ya {
        let phi = FpMatrix::from_vec(p, dt, ya, unit(dt * ya, j)).expect("φ shape");
        let mut r = vec![0u32; params];
        for (gi, (s, c, coords)) in gens.iter().enumerate() {
            if *c != a {
                continue;
            }
            let mut d = phi.mul(&morphism_value(y, *s, *c, coords));
            if *s == a {
                d = d.sub(&t.act(coords).mul(&phi));
            }
            r[offsets[gi]..offsets[gi] + d.rows() * d.cols()].copy_from_slice(d.data());
        }
        span.push_row(&r);
    }
    let classes: Vec<Vec<u32>> = cocycles.into_iter().filter(|z| span.push_row(z)).collect();

    let k = classes.len();
    let count = (p as u64).checked_pow(k as u32).filter(|&c| c <= MAX_CANDIDATES).ok_or_else(|| {
        InstanceError::BoundExceeded(format!("an Ext group of dimension {k}"))
    })?;
    let mut out = Vec::with_capacity(count as usize);
    for code in 1..count {
        // Rescaling the subobject identifies proportional classes.
        let coeffs: Vec<u32> = (0..k).map(|i| ((code / (p as u64).pow(i as u32)) % p as u64) as u32).collect();
        if coeffs.iter().find(|&&c| c != 0) != Some(&1) {
            continue;
        }
        let mut r = vec![0u32; params];
        for (z, &c) in classes.iter().zip(&coeffs) {
            for (ri, zi) in r.iter_mut().zip(z) {
                *ri = (*ri + c * zi) % p;
            }
        }
        out.push(Arc::new(AddFunctor::from_generator_matrices(ctx.clone(), dims.clone(), &values(&r))?));
    }
    Ok(out)
}

/// Every functor within the bounds, one per natural isomorphism class,
/// by scanning generator values.
///
/// Every functor is isomorphic to one whose value at each object is a
/// chosen representative module; if some generator joins two distinct
/// objects with field endomorphism algebras, its value can moreover be
/// taken in rank normal form. Only such candidates are scanned.
pub fn enumerate_functors_by_scan(ctx: &Arc<FunctorCategory>, bounds: FunctorBounds) -> Result<Vec<Arc<AddFunctor>>> {
    let n = ctx.object_count();
    let p = ctx.prime();
    let cat = ctx.category();
    let gens = &cat.generators().gens;
    let is_field = |a: usize| ctx.endo(a).dim() == 1;
    let normal = gens.iter().position(|(s, t, _)| s != t && is_field(*s) && is_field(*t));

    // Representatives of each module dimension at every object.
    let cap = bounds.total.map_or(bounds.per_object, |t| t.min(bounds.per_object));
    let mut reps: Vec<Vec<Vec<Arc<LeftModule>>>> = Vec::with_capacity(n);
    for a in 0..n {
        reps.push((0..=cap).map(|d| modules_of_dim(ctx.endo(a), d)).collect::<Result<_>>()?);
    }

    let mut out = Vec::new();
    for dims in dim_vectors(n, bounds) {
        // Choices for every generator: fixed by the module at its object for
        // endomorphism generators, otherwise all matrices (or normal forms).
        let mut candidates = Vec::new();
        let module_choices: Vec<&Vec<Arc<LeftModule>>> = (0..n).map(|a| &reps[a][dims[a]]).collect();
        let mut midx = vec![0usize; n];
        let free: Vec<Vec<FpMatrix>> = gens
            .iter()
            .enumerate()
            .map(|(i, (s, t, _))| {
                if s == t {
                    Vec::new()
                } else if Some(i) == normal {
                    rank_normal_forms(p, dims[*t], dims[*s])
                } else {
                    all_matrices(p, dims[*t], dims[*s])
                }
            })
            .collect();
        let count: u64 = free.iter().filter(|c| !c.is_empty()).map(|c| c.len() as u64).product();
        if count > MAX_CANDIDATES {
            return Err(InstanceError::BoundExceeded(format!("{count} candidate functors of dimensions {dims:?}")));
        }
        loop {
            let modules: Vec<&Arc<LeftModule>> = (0..n).map(|a| &module_choices[a][midx[a]]).collect();
            let mut gidx = vec![0usize; gens.len()];
            loop {
                let vals: Vec<FpMatrix> = gens
                    .iter()
                    .enumerate()
                    .map(|(i, (s, t, coords))| if s == t { modules[*s].act(coords) } else { free[i][gidx[i]].clone() })
                    .collect();
                if generator_values_are_functorial(ctx, &dims, &vals) {
                    candidates.push(Arc::new(AddFunctor::from_generator_matrices(ctx.clone(), dims.clone(), &vals)?));
                }
                if !advance(&mut gidx, |i| if gens[i].0 == gens[i].1 { 1 } else { free[i].len() }) {
                    break;
                }
            }
            if !advance(&mut midx, |a| module_choices[a].len()) {
                break;
            }
        }
        out.extend(dedup_by(candidates, |x| functor_key(x), functors_isomorphic)?);
    }
    Ok(out)
}

/// Mixed-radix increment; returns false after the last tuple.
fn advance(idx: &mut [usize], radix: impl Fn(usize) -> usize) -> bool {
    for k in 0..idx.len() {
        idx[k] += 1;
        if idx[k] < radix(k) {
            return true;
        }
        idx[k] = 0;
    }
    false
}
