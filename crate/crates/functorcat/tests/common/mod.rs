//! Small categories and brute-force enumerations shared by the functorcat
//! test targets.
#![allow(dead_code)]

use std::sync::Arc;

use cotlab_algmod::{Algebra, LeftModule};
use cotlab_encat::EnrichedCategory;
use cotlab_functorcat::{generator_values_are_functorial, AddFunctor, FunctorCategory};
use cotlab_linalg::FpMatrix;

/// Categories whose Hom spaces are 0- or 1-dimensional and whose
/// composition multiplies basis scalars whenever the target is nonzero.
pub fn thin(p: u32, names: &[&str], nonzero: impl Fn(usize, usize) -> bool) -> EnrichedCategory {
    let n = names.len();
    let dims: Vec<Vec<usize>> =
        (0..n).map(|a| (0..n).map(|b| usize::from(a == b || nonzero(a, b))).collect()).collect();
    let ids = (0..n).map(|_| vec![1]).collect();
    let d2 = dims.clone();
    EnrichedCategory::new(p, names.iter().map(|s| s.to_string()).collect(), dims, ids, move |a, _, c, _, _| {
        vec![1; d2[a][c]]
    })
    .unwrap()
}

pub fn ctx(cat: EnrichedCategory) -> Arc<FunctorCategory> {
    FunctorCategory::new(Arc::new(cat)).unwrap()
}

/// `a → b` with one nonzero morphism.
pub fn triangular() -> Arc<FunctorCategory> {
    ctx(thin(2, &["a", "b"], |a, b| a == 0 && b == 1))
}

/// Objects `0..=n` with differentials `i → i-1` squaring to zero.
pub fn chain(n: usize) -> Arc<FunctorCategory> {
    let names: Vec<String> = (0..=n).map(|i| i.to_string()).collect();
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    ctx(thin(2, &refs, |a, b| b + 1 == a))
}

/// Objects `a, b, c` with `a → b → c` and a nonzero composite.
pub fn path3() -> Arc<FunctorCategory> {
    ctx(thin(2, &["a", "b", "c"], |a, b| a < b))
}

/// Objects `a, b` with `R_a = R_b = F2[x]/x^2` and `Hom(a, b) = F2[x]/x^2`
/// as a bimodule, `Hom(b, a) = 0`.
pub fn dual_numbers_arrow() -> Arc<FunctorCategory> {
    let names = vec!["a".to_string(), "b".to_string()];
    let dims = vec![vec![2, 2], vec![0, 2]];
    let ids = vec![vec![1, 0], vec![1, 0]];
    let cat = EnrichedCategory::new(2, names, dims, ids, |_, _, _, g, f| {
        // Every nonzero Hom is F2[x]/x^2 with x^i x^j = x^{i+j}.
        let mut v = vec![0; 2];
        if g + f < 2 {
            v[g + f] = 1;
        }
        v
    })
    .unwrap();
    ctx(cat)
}

/// Objects `a, b` with `R_a = F2[x]/x^2`, `R_b = F2`, `Hom(a, b) = F2`
/// with `x` acting as zero, `Hom(b, a) = 0`.
pub fn dual_numbers_to_field() -> Arc<FunctorCategory> {
    let names = vec!["a".to_string(), "b".to_string()];
    let dims = vec![vec![2, 1], vec![0, 1]];
    let ids = vec![vec![1, 0], vec![1]];
    let cat = EnrichedCategory::new(2, names, dims, ids, |a, b, c, g, f| match (a, b, c) {
        (0, 0, 0) => {
            let mut v = vec![0; 2];
            if g + f < 2 {
                v[g + f] = 1;
            }
            v
        }
        // Hom(a, b) ∘ R_a: the generator times 1 is the generator, times x is 0.
        (0, 0, 1) => vec![u32::from(f == 0)],
        _ => vec![1],
    })
    .unwrap();
    ctx(cat)
}

/// Objects `a, b` with `R_a = F2[x]/x^2`, `R_b = F2`, `Hom(b, a) = F2`
/// with `x` acting as zero, `Hom(a, b) = 0`.
pub fn dual_numbers_from_field() -> Arc<FunctorCategory> {
    let names = vec!["a".to_string(), "b".to_string()];
    let dims = vec![vec![2, 0], vec![1, 1]];
    let ids = vec![vec![1, 0], vec![1]];
    let cat = EnrichedCategory::new(2, names, dims, ids, |a, b, c, g, f| match (a, b, c) {
        (0, 0, 0) => {
            let mut v = vec![0; 2];
            if g + f < 2 {
                v[g + f] = 1;
            }
            v
        }
        // R_a ∘ Hom(b, a): 1 fixes the generator, x kills it.
        (1, 0, 0) => vec![u32::from(g == 0)],
        _ => vec![1],
    })
    .unwrap();
    ctx(cat)
}

/// The single-object category of an algebra.
pub fn one_object(alg: &Algebra) -> Arc<FunctorCategory> {
    ctx(EnrichedCategory::one_object("*", alg))
}

/// Every matrix of the given shape over GF(p).
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
            FpMatrix::from_vec(p, rows, cols, data).unwrap()
        })
        .collect()
}

/// Every functor with the given dimensions, built from all generator values.
pub fn functors_with_dims(ctx: &Arc<FunctorCategory>, dims: &[usize]) -> Vec<Arc<AddFunctor>> {
    let p = ctx.prime();
    let gens = &ctx.category().generators().gens;
    let choices: Vec<Vec<FpMatrix>> = gens.iter().map(|(a, b, _)| all_matrices(p, dims[*b], dims[*a])).collect();
    let mut out = Vec::new();
    let mut idx = vec![0usize; gens.len()];
    loop {
        let vals: Vec<FpMatrix> = idx.iter().zip(&choices).map(|(&i, c)| c[i].clone()).collect();
        if generator_values_are_functorial(ctx, dims, &vals) {
            out.push(Arc::new(AddFunctor::from_generator_matrices(ctx.clone(), dims.to_vec(), &vals).unwrap()));
        }
        let mut k = 0;
        loop {
            if k == idx.len() {
                return out;
            }
            idx[k] += 1;
            if idx[k] < choices[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

/// Every functor with all dimensions at most `max`.
pub fn functors_up_to(ctx: &Arc<FunctorCategory>, max: usize) -> Vec<Arc<AddFunctor>> {
    let n = ctx.object_count();
    let mut out = Vec::new();
    let mut dims = vec![0usize; n];
    loop {
        out.extend(functors_with_dims(ctx, &dims));
        let mut k = 0;
        loop {
            if k == n {
                return out;
            }
            dims[k] += 1;
            if dims[k] <= max {
                break;
            }
            dims[k] = 0;
            k += 1;
        }
    }
}

pub fn log_p(p: u32, mut n: u64) -> usize {
    let mut k = 0;
    while n > 1 {
        assert_eq!(n % p as u64, 0, "count is not a power of p");
        n /= p as u64;
        k += 1;
    }
    k
}

/// `dim Nat(X, Y)` by enumerating every tuple of linear components and
/// checking every naturality square on every basis morphism.
pub fn brute_nat_dim(x: &AddFunctor, y: &AddFunctor) -> usize {
    let ctx = x.ctx();
    let cat = ctx.category();
    let n = ctx.object_count();
    let p = ctx.prime();
    let choices: Vec<Vec<FpMatrix>> = (0..n).map(|a| all_matrices(p, y.dim(a), x.dim(a))).collect();
    let mut idx = vec![0usize; n];
    let mut count = 0u64;
    loop {
        let natural = (0..n).all(|a| {
            (0..n).all(|b| {
                (0..cat.hom_dim(a, b))
                    .all(|k| y.act(a, b, k).mul(&choices[a][idx[a]]) == choices[b][idx[b]].mul(x.act(a, b, k)))
            })
        });
        if natural {
            count += 1;
        }
        let mut k = 0;
        loop {
            if k == n {
                return log_p(p, count);
            }
            idx[k] += 1;
            if idx[k] < choices[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

/// `dim Hom_A(M, N)` by enumeration.
pub fn brute_hom_dim(m: &LeftModule, n: &LeftModule) -> usize {
    let p = m.prime();
    let count = all_matrices(p, n.dim(), m.dim())
        .into_iter()
        .filter(|f| (0..m.alg().dim()).all(|i| n.action(i).mul(f) == f.mul(m.action(i))))
        .count();
    log_p(p, count as u64)
}

/// Every module structure of dimension `d` over `alg`.
pub fn all_modules(alg: &Arc<Algebra>, d: usize) -> Vec<Arc<LeftModule>> {
    let p = alg.prime();
    let g = alg.generator_count();
    let mats = all_matrices(p, d, d);
    let m = mats.len() as u64;
    (0..m.pow(g as u32))
        .filter_map(|mut code| {
            let gens: Vec<FpMatrix> = (0..g)
                .map(|_| {
                    let i = (code % m) as usize;
                    code /= m;
                    mats[i].clone()
                })
                .collect();
            LeftModule::from_generator_matrices(alg.clone(), d, &gens).ok()
        })
        .map(Arc::new)
        .collect()
}

/// Rank over GF(p).
pub fn rank(m: &FpMatrix) -> usize {
    cotlab_linalg::rank(m)
}
