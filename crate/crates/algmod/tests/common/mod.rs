//! Brute-force helpers shared by the algmod test targets.
#![allow(dead_code)]

use std::collections::HashSet;
use std::sync::Arc;

use cotlab_algmod::{Algebra, LeftModule};
use cotlab_linalg::{kernel_basis, rank, FpMatrix};

pub fn arc(a: Algebra) -> Arc<Algebra> {
    Arc::new(a)
}

/// `GF(2)[x,y]/(x, y)^2` with basis `1, x, y`.
pub fn square_zero_two_loops() -> Algebra {
    Algebra::from_fn(2, 3, vec![1, 0, 0], |i, j| {
        let mut v = vec![0; 3];
        match (i, j) {
            (0, k) | (k, 0) => v[k] = 1,
            _ => {}
        }
        v
    })
    .unwrap()
}

/// Small GF(2) algebras of dimension at most 4.
pub fn small_algebras() -> Vec<(&'static str, Arc<Algebra>)> {
    let f2 = Algebra::field(2);
    let d2 = Algebra::truncated_polynomial(2, 2).unwrap();
    vec![
        ("F2", arc(f2.clone())),
        ("F2[x]/x^2", arc(d2.clone())),
        ("F2[x]/x^3", arc(Algebra::truncated_polynomial(2, 3).unwrap())),
        ("F2[x]/x^4", arc(Algebra::truncated_polynomial(2, 4).unwrap())),
        ("T2", arc(Algebra::upper_triangular(2))),
        ("F2xF2", arc(Algebra::product(&[&f2, &f2]).unwrap())),
        ("F2[x]/x^2 x F2", arc(Algebra::product(&[&d2, &f2]).unwrap())),
        ("F2[x,y]/m^2", arc(square_zero_two_loops())),
    ]
}

/// Every matrix of the given shape over GF(p), in lexicographic order.
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

/// Every tuple of generator matrices of the given size, as column-major
/// iteration over a single counter.
fn generator_tuples(p: u32, count: usize, d: usize) -> impl Iterator<Item = Vec<FpMatrix>> {
    let mats = all_matrices(p, d, d);
    let m = mats.len() as u64;
    let total = m.pow(count as u32);
    (0..total).map(move |mut code| {
        (0..count)
            .map(|_| {
                let i = (code % m) as usize;
                code /= m;
                mats[i].clone()
            })
            .collect()
    })
}

/// Every module structure of dimension `d` (not up to isomorphism).
pub fn all_module_structures(alg: &Arc<Algebra>, d: usize) -> Vec<Arc<LeftModule>> {
    let g = alg.generator_count();
    generator_tuples(alg.prime(), g, d)
        .filter_map(|gens| LeftModule::from_generator_matrices(alg.clone(), d, &gens).ok())
        .map(Arc::new)
        .collect()
}

/// Module structures of dimension `d`, one per distinct sorted tuple of
/// action ranks (a cheap invariant), to keep brute-force loops short.
pub fn sample_modules(alg: &Arc<Algebra>, d: usize, limit: usize) -> Vec<Arc<LeftModule>> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for m in all_module_structures(alg, d) {
        let sig: Vec<usize> = (0..alg.dim()).map(|i| rank(m.action(i))).collect();
        let hom_sig = brute_hom_dim(&m, &m);
        if seen.insert((sig, hom_sig)) {
            out.push(m);
            if out.len() == limit {
                break;
            }
        }
    }
    out
}

/// `dim Hom(M, N)` by enumerating all linear maps and keeping those that
/// commute with every basis element.
pub fn brute_hom_dim(m: &LeftModule, n: &LeftModule) -> usize {
    let p = m.prime();
    let count = all_matrices(p, n.dim(), m.dim())
        .into_iter()
        .filter(|f| (0..m.alg().dim()).all(|i| n.action(i).mul(f) == f.mul(m.action(i))))
        .count();
    log_p(p, count as u64)
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

/// `dim Ext^1(M, N)` as derivations modulo inner derivations: the number
/// of equivalence classes of module structures on `N ⊕ M` of the form
/// `[[ρ_N, δ], [0, ρ_M]]`, found by enumerating all `δ` on the generators.
pub fn baer_ext1_enumerated(m: &LeftModule, n: &LeftModule) -> usize {
    let alg = m.alg().clone();
    let p = alg.prime();
    let (dm, dn) = (m.dim(), n.dim());
    let gens = &alg.generators().gens;
    let deltas = all_matrices(p, dn, dm);
    let k = deltas.len() as u64;
    let total = k.pow(gens.len() as u32);
    let mut cocycles = 0u64;
    for mut code in 0..total {
        let mats: Vec<FpMatrix> = gens
            .iter()
            .map(|&g| {
                let d = &deltas[(code % k) as usize];
                code /= k;
                let mut e = FpMatrix::zeros(p, dn + dm, dn + dm);
                e.set_block(0, 0, n.action(g));
                e.set_block(0, dn, d);
                e.set_block(dn, dn, m.action(g));
                e
            })
            .collect();
        if LeftModule::from_generator_matrices(alg.clone(), dn + dm, &mats).is_ok() {
            cocycles += 1;
        }
    }
    let mut inner = HashSet::new();
    for h in deltas {
        let tuple: Vec<FpMatrix> = gens.iter().map(|&g| n.action(g).mul(&h).sub(&h.mul(m.action(g)))).collect();
        inner.insert(tuple);
    }
    log_p(p, cocycles) - log_p(p, inner.len() as u64)
}

/// `dim Ext^1(M, N)` as derivations modulo inner derivations, solved as a
/// linear system on all basis pairs.
pub fn derivation_ext1(m: &LeftModule, n: &LeftModule) -> usize {
    let alg = m.alg();
    let p = alg.prime();
    let (dm, dn, da) = (m.dim(), n.dim(), alg.dim());
    let block = dn * dm;
    let unknowns = da * block;
    // δ(b_i b_j) - ρ_N(b_i) δ(b_j) - δ(b_i) ρ_M(b_j) = 0 and δ(1) = 0.
    let mut rows: Vec<Vec<u32>> = Vec::new();
    let idx = |a: usize, r: usize, c: usize| a * block + r * dm + c;
    for i in 0..da {
        for j in 0..da {
            let prod = alg.product_basis(i, j);
            for r in 0..dn {
                for c in 0..dm {
                    let mut row = vec![0u32; unknowns];
                    for (k, &coef) in prod.iter().enumerate() {
                        row[idx(k, r, c)] = (row[idx(k, r, c)] + coef) % p;
                    }
                    for t in 0..dn {
                        let a = n.action(i).get(r, t);
                        row[idx(j, t, c)] = (row[idx(j, t, c)] + p - a) % p;
                    }
                    for t in 0..dm {
                        let a = m.action(j).get(t, c);
                        row[idx(i, r, t)] = (row[idx(i, r, t)] + p - a) % p;
                    }
                    rows.push(row);
                }
            }
        }
    }
    for r in 0..dn {
        for c in 0..dm {
            let mut row = vec![0u32; unknowns];
            for (k, &u) in alg.unit().iter().enumerate() {
                row[idx(k, r, c)] = u;
            }
            rows.push(row);
        }
    }
    let sys = FpMatrix::from_row_vecs(p, unknowns, &rows);
    let z = kernel_basis(&sys).dim();
    // Inner derivations δ_h(a) = ρ_N(a) h - h ρ_M(a), as a linear map of h.
    let mut inner = FpMatrix::zeros(p, unknowns, block);
    for r0 in 0..dn {
        for c0 in 0..dm {
            let mut h = FpMatrix::zeros(p, dn, dm);
            h.set(r0, c0, 1);
            for a in 0..da {
                let d = n.action(a).mul(&h).sub(&h.mul(m.action(a)));
                for r in 0..dn {
                    for c in 0..dm {
                        inner.set(idx(a, r, c), r0 * dm + c0, d.get(r, c));
                    }
                }
            }
        }
    }
    z - rank(&inner)
}

/// The simple module of `GF(p)[x]/(x^n)`: `x` acts by zero.
pub fn trivial_module(alg: &Arc<Algebra>) -> Arc<LeftModule> {
    let p = alg.prime();
    let gens = vec![FpMatrix::zeros(p, 1, 1); alg.generator_count()];
    Arc::new(LeftModule::from_generator_matrices(alg.clone(), 1, &gens).unwrap())
}
