//! Builders, enumeration and random instances against independent
//! brute-force oracles.

use std::collections::BTreeSet;
use std::sync::Arc;

use cotlab_algmod::{hom_dim, Algebra, AlgebraMorphism, Bimodule, LeftModule};
use cotlab_encat::{chain_diagnostic, validate_category, CategoryAlgebra, ChainDirection};
use cotlab_functorcat::{generator_values_are_functorial, AddFunctor, FunctorCategory, NatTrans};
use cotlab_instances::*;
use cotlab_linalg::{is_invertible, FpMatrix};
use proptest::prelude::*;

fn ctx(cat: cotlab_encat::EnrichedCategory) -> Arc<FunctorCategory> {
    FunctorCategory::new(Arc::new(cat)).unwrap()
}

fn dual_numbers() -> Arc<Algebra> {
    Arc::new(Algebra::truncated_polynomial(2, 2).unwrap())
}

/// Every invertible `d x d` matrix over GF(p).
fn general_linear(p: u32, d: usize) -> Vec<FpMatrix> {
    all_matrices(p, d, d).into_iter().filter(is_invertible).collect()
}

fn inverse(g: &FpMatrix) -> FpMatrix {
    general_linear(g.prime(), g.rows()).into_iter().find(|h| h.mul(g) == FpMatrix::identity(g.prime(), g.rows())).unwrap()
}

/// Orbit count of valid generator tuples under simultaneous conjugation.
fn module_orbit_count(alg: &Arc<Algebra>, d: usize) -> usize {
    let p = alg.prime();
    let g = alg.generator_count();
    let mats = all_matrices(p, d, d);
    let gl: Vec<(FpMatrix, FpMatrix)> = general_linear(p, d).into_iter().map(|h| (inverse(&h), h)).collect();
    let mut seen: BTreeSet<Vec<Vec<u32>>> = BTreeSet::new();
    let mut orbits = 0;
    let m = mats.len();
    for mut code in 0..m.pow(g as u32) {
        let gens: Vec<FpMatrix> = (0..g)
            .map(|_| {
                let i = code % m;
                code /= m;
                mats[i].clone()
            })
            .collect();
        if LeftModule::from_generator_matrices(alg.clone(), d, &gens).is_err() {
            continue;
        }
        let key = |gs: &[FpMatrix]| gs.iter().map(|x| x.data().to_vec()).collect::<Vec<_>>();
        if seen.contains(&key(&gens)) {
            continue;
        }
        orbits += 1;
        for (hi, h) in &gl {
            let conj: Vec<FpMatrix> = gens.iter().map(|x| h.mul(x).mul(hi)).collect();
            seen.insert(key(&conj));
        }
    }
    orbits
}

/// Orbit count of functorial generator tuples, with dimension vector
/// `dims`, under the action of `∏ GL(dims[a])` — valid for categories whose
/// every object has endomorphism algebra GF(p).
fn functor_orbit_count(ctx: &Arc<FunctorCategory>, dims: &[usize]) -> usize {
    let p = ctx.prime();
    let gens = &ctx.category().generators().gens;
    let choices: Vec<Vec<FpMatrix>> = gens.iter().map(|(s, t, _)| all_matrices(p, dims[*t], dims[*s])).collect();
    let gls: Vec<Vec<(FpMatrix, FpMatrix)>> =
        dims.iter().map(|&d| general_linear(p, d).into_iter().map(|h| (inverse(&h), h)).collect()).collect();
    let key = |vals: &[FpMatrix]| vals.iter().map(|x| x.data().to_vec()).collect::<Vec<_>>();
    let mut seen = BTreeSet::new();
    let mut orbits = 0;
    let mut idx = vec![0usize; gens.len()];
    loop {
        let vals: Vec<FpMatrix> = idx.iter().zip(&choices).map(|(&i, c)| c[i].clone()).collect();
        if generator_values_are_functorial(ctx, dims, &vals) && !seen.contains(&key(&vals)) {
            orbits += 1;
            let mut gi = vec![0usize; dims.len()];
            loop {
                let conj: Vec<FpMatrix> = gens
                    .iter()
                    .zip(&vals)
                    .map(|((s, t, _), v)| gls[*t][gi[*t]].1.mul(v).mul(&gls[*s][gi[*s]].0))
                    .collect();
                seen.insert(key(&conj));
                let mut k = 0;
                while k < gi.len() {
                    gi[k] += 1;
                    if gi[k] < gls[k].len() {
                        break;
                    }
                    gi[k] = 0;
                    k += 1;
                }
                if k == gi.len() {
                    break;
                }
            }
        }
        let mut k = 0;
        while k < idx.len() {
            idx[k] += 1;
            if idx[k] < choices[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
        if k == idx.len() {
            return orbits;
        }
    }
}

fn dim_vectors(n: usize, max: usize) -> Vec<Vec<usize>> {
    (0..(max + 1).pow(n as u32))
        .map(|mut c| {
            (0..n)
                .map(|_| {
                    let d = c % (max + 1);
                    c /= max + 1;
                    d
                })
                .collect()
        })
        .collect()
}

#[test]
fn chain_instances() {
    let cat = chain(2, 2).unwrap();
    assert_eq!(cat.object_count(), 3);
    assert_eq!(CategoryAlgebra::new(&cat).algebra.dim(), 5);
    assert!(validate_category(&cat, true).passed());
    for a in 0..3 {
        for b in 0..3 {
            assert_eq!(cat.hom_dim(a, b), usize::from(a == b || b + 1 == a));
        }
    }
    let long = chain(3, 4).unwrap();
    // Composites of two differentials land in a zero Hom.
    assert_eq!(long.hom_dim(2, 0), 0);
    assert_eq!(chain_diagnostic(&long, ChainDirection::Incoming).max_len, 1);
    assert!(chain(4, 2).is_err());
}

#[test]
fn morita_context_instances() {
    let f2 = Arc::new(Algebra::field(2));
    let n = Bimodule::from_parts(f2.clone(), f2.clone(), 1, vec![FpMatrix::identity(2, 1)], vec![FpMatrix::identity(2, 1)]);
    let m = Bimodule::from_parts(f2.clone(), f2.clone(), 0, vec![FpMatrix::identity(2, 0)], vec![FpMatrix::identity(2, 0)]);
    let cat = morita(&f2, &f2, &n, &m).unwrap();
    let lambda = CategoryAlgebra::new(&cat).algebra;
    // Upper-triangular 2x2 matrices: dimension 3, one-dimensional radical.
    assert_eq!(lambda.dim(), 3);
    let ut = Algebra::upper_triangular(2);
    assert_eq!(lambda.dim(), ut.dim());
    assert_eq!((cat.hom_dim(0, 1), cat.hom_dim(1, 0)), (1, 0));

    // T = F2[x]/x^2, S = F2, N = F2 with x acting as zero.
    let t = dual_numbers();
    let x_zero = FpMatrix::zeros(2, 1, 1);
    let n = Bimodule::new(f2.clone(), t.clone(), 1, vec![FpMatrix::identity(2, 1)], vec![FpMatrix::identity(2, 1), x_zero])
        .unwrap();
    let m = Bimodule::from_parts(t.clone(), f2.clone(), 0, vec![FpMatrix::zeros(2, 0, 0); 2], vec![FpMatrix::zeros(2, 0, 0)]);
    let cat = morita(&t, &f2, &n, &m).unwrap();
    assert_eq!(CategoryAlgebra::new(&cat).algebra.dim(), 4);
    // Mismatched sides are rejected.
    assert!(morita(&t, &f2, &m.clone(), &n.clone()).is_err());
}

#[test]
fn truncated_integer_instances() {
    let cat = fib(2, 6).unwrap();
    assert!(validate_category(&cat, true).passed());
    // Object i is the integer i + 1.
    let hom = |n: usize, m: usize| cat.hom_dim(n - 1, m - 1);
    assert_eq!(hom(4, 2), 1);
    assert_eq!(hom(2, 1), 1);
    assert_eq!(hom(4, 1), 0);
    assert_eq!(hom(1, 2), 0);
    for n in 1..=6 {
        for m in 1..=6 {
            assert_eq!(hom(n, m), usize::from(m <= n && n <= 2 * m), "Hom({n}, {m})");
        }
    }
    // 6 → 5 → 4 → 3 is a chain of composable non-identity morphisms with
    // nonzero codomains, and nothing longer exists.
    let diag = chain_diagnostic(&cat, ChainDirection::Incoming);
    assert_eq!(diag.max_len, 3);
    for k in 1..=8 {
        assert!(validate_category(&fib(3, k).unwrap(), true).passed());
    }
    assert!(fib(2, 0).is_err());
}

#[test]
fn ring_morphism_instances() {
    let r = dual_numbers();
    let s = Arc::new(Algebra::field(2));
    let f = AlgebraMorphism::new(r.clone(), s.clone(), FpMatrix::from_rows(2, &[&[1, 0]])).unwrap();
    let inst = match build_instance(&InstanceSpec::RingMor { morphism: f }).unwrap() {
        Instance::RingMor(i) => i,
        Instance::Category(_) => unreachable!(),
    };
    // Coinduction is right adjoint to restriction.
    let s_mods = enumerate_modules(&s, 2).unwrap();
    let r_mods = enumerate_modules(&r, 3).unwrap();
    for n in &s_mods {
        for m in &r_mods {
            let left = hom_dim(n, &inst.coinduce(m).unwrap()).unwrap();
            let right = hom_dim(&inst.restrict(n).unwrap(), m).unwrap();
            assert_eq!(left, right);
        }
    }
    // Hom_R(F2, R) is the socle of R.
    assert_eq!(inst.coinduce(&Arc::new(LeftModule::regular(r.clone()))).unwrap().dim(), 1);
}

#[test]
fn module_enumeration_matches_orbit_counts() {
    let f2 = Arc::new(Algebra::field(2));
    let dual = dual_numbers();
    let ut = Arc::new(Algebra::upper_triangular(2));
    assert_eq!(enumerate_modules(&dual, 1).unwrap().len(), 1);
    assert_eq!(enumerate_modules(&dual, 2).unwrap().len(), 3);
    assert_eq!(enumerate_modules(&f2, 2).unwrap().len(), 2);
    for alg in [&f2, &dual, &ut, &Arc::new(Algebra::truncated_polynomial(3, 2).unwrap())] {
        for d in 0..=3 {
            if alg.prime() == 3 && d == 3 {
                continue;
            }
            let reps = modules_of_dim(alg, d).unwrap();
            assert_eq!(reps.len(), module_orbit_count(alg, d), "dimension {d}");
            assert!(reps.iter().all(|m| m.dim() == d));
            for (i, a) in reps.iter().enumerate() {
                for b in &reps[i + 1..] {
                    assert!(!modules_isomorphic(a, b).unwrap());
                }
            }
        }
    }
    assert!(matches!(modules_of_dim(&ut, 6), Err(InstanceError::BoundExceeded(_))));
}

#[test]
fn functor_enumeration_matches_orbit_counts() {
    let triangular = ctx(morita(
        &Arc::new(Algebra::field(2)),
        &Arc::new(Algebra::field(2)),
        &Bimodule::from_parts(
            Arc::new(Algebra::field(2)),
            Arc::new(Algebra::field(2)),
            1,
            vec![FpMatrix::identity(2, 1)],
            vec![FpMatrix::identity(2, 1)],
        ),
        &Bimodule::from_parts(
            Arc::new(Algebra::field(2)),
            Arc::new(Algebra::field(2)),
            0,
            vec![FpMatrix::identity(2, 0)],
            vec![FpMatrix::identity(2, 0)],
        ),
    )
    .unwrap());
    assert_eq!(enumerate_functors(&triangular, 1).unwrap().len(), 5);
    assert_eq!(enumerate_functors(&ctx(chain(2, 1).unwrap()), 1).unwrap().len(), 5);
    for c in [&triangular, &ctx(chain(2, 3).unwrap()), &ctx(fib(2, 4).unwrap())] {
        let zero = enumerate_functors(c, 0).unwrap();
        assert_eq!(zero.len(), 1);
        assert_eq!(zero[0].dims().iter().sum::<usize>(), 0);
    }

    for (c, max) in [(ctx(chain(2, 2).unwrap()), 2), (triangular.clone(), 3), (ctx(fib(2, 4).unwrap()), 1), (ctx(chain(3, 2).unwrap()), 1)] {
        let found = enumerate_functors(&c, max).unwrap();
        let expected: usize = dim_vectors(c.object_count(), max).iter().map(|d| functor_orbit_count(&c, d)).sum();
        assert_eq!(found.len(), expected);
    }
}

#[test]
fn functor_enumeration_with_nontrivial_endomorphisms() {
    // One object: functors are modules.
    let dual = dual_numbers();
    let one = ctx(one_object(&dual).unwrap());
    assert_eq!(enumerate_functors(&one, 3).unwrap().len(), 1 + enumerate_modules(&dual, 3).unwrap().len());

    // Brute force: every functorial tuple, deduplicated by natural isomorphism.
    let t = dual_numbers();
    let f2 = Arc::new(Algebra::field(2));
    let n = Bimodule::new(f2.clone(), t.clone(), 1, vec![FpMatrix::identity(2, 1)], vec![FpMatrix::identity(2, 1), FpMatrix::zeros(2, 1, 1)])
        .unwrap();
    let m = Bimodule::from_parts(t.clone(), f2.clone(), 0, vec![FpMatrix::zeros(2, 0, 0); 2], vec![FpMatrix::zeros(2, 0, 0)]);
    let c = ctx(morita(&t, &f2, &n, &m).unwrap());
    let found = enumerate_functors(&c, 2).unwrap();
    let mut reps: Vec<Arc<AddFunctor>> = Vec::new();
    let gens = &c.category().generators().gens;
    for dims in dim_vectors(2, 2) {
        let choices: Vec<Vec<FpMatrix>> = gens.iter().map(|(s, t, _)| all_matrices(2, dims[*t], dims[*s])).collect();
        let mut idx = vec![0usize; gens.len()];
        'scan: loop {
            let vals: Vec<FpMatrix> = idx.iter().zip(&choices).map(|(&i, ch)| ch[i].clone()).collect();
            if generator_values_are_functorial(&c, &dims, &vals) {
                let x = Arc::new(AddFunctor::from_generator_matrices(c.clone(), dims.clone(), &vals).unwrap());
                if !reps.iter().any(|r| functors_isomorphic(r, &x).unwrap()) {
                    reps.push(x);
                }
            }
            for k in 0..idx.len() {
                idx[k] += 1;
                if idx[k] < choices[k].len() {
                    continue 'scan;
                }
                idx[k] = 0;
            }
            break;
        }
    }
    assert_eq!(found.len(), reps.len());
    for x in &found {
        assert_eq!(reps.iter().filter(|r| functors_isomorphic(r, x).unwrap()).count(), 1);
    }
}

/// Whether some natural endomorphism other than 0 and 1 is idempotent.
fn has_nontrivial_idempotent(x: &Arc<AddFunctor>) -> bool {
    let p = x.prime();
    let n = x.dims().len();
    let choices: Vec<Vec<FpMatrix>> = x
        .dims()
        .iter()
        .map(|&d| all_matrices(p, d, d).into_iter().filter(|e| e.mul(e) == *e).collect())
        .collect();
    let mut idx = vec![0usize; n];
    loop {
        let comps: Vec<FpMatrix> = idx.iter().zip(&choices).map(|(&i, c)| c[i].clone()).collect();
        let trivial = comps.iter().all(|e| e.is_zero())
            || comps.iter().zip(x.dims()).all(|(e, &d)| *e == FpMatrix::identity(p, d));
        if !trivial && NatTrans::new(x.clone(), x.clone(), comps).is_ok() {
            return true;
        }
        let mut k = 0;
        while k < n {
            idx[k] += 1;
            if idx[k] < choices[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
        if k == n {
            return false;
        }
    }
}

#[test]
fn indecomposability_matches_idempotent_oracle() {
    let dual = dual_numbers();
    let ctxs = [ctx(chain(2, 2).unwrap()), ctx(fib(2, 4).unwrap()), ctx(one_object(&dual).unwrap())];
    let mut seen = [0usize; 2];
    for c in &ctxs {
        for x in enumerate_functors_by_scan(c, FunctorBounds { per_object: 2, total: Some(4) }).unwrap() {
            if x.dims().iter().all(|&d| d == 0) {
                continue;
            }
            let ind = is_indecomposable(&x).unwrap();
            assert_eq!(ind, !has_nontrivial_idempotent(&x), "dims {:?}", x.dims());
            seen[usize::from(ind)] += 1;
        }
    }
    assert!(seen[0] > 20 && seen[1] > 10, "{seen:?}");
}

#[test]
fn extension_and_scan_routes_agree() {
    let t = dual_numbers();
    let f2 = Arc::new(Algebra::field(2));
    let n = Bimodule::new(f2.clone(), t.clone(), 1, vec![FpMatrix::identity(2, 1)], vec![FpMatrix::identity(2, 1), FpMatrix::zeros(2, 1, 1)])
        .unwrap();
    let m = Bimodule::from_parts(t.clone(), f2.clone(), 0, vec![FpMatrix::zeros(2, 0, 0); 2], vec![FpMatrix::zeros(2, 0, 0)]);
    let cases = [
        (ctx(chain(2, 3).unwrap()), FunctorBounds { per_object: 2, total: None }),
        (ctx(chain(3, 2).unwrap()), FunctorBounds { per_object: 2, total: Some(4) }),
        (ctx(fib(2, 6).unwrap()), FunctorBounds { per_object: 1, total: None }),
        (ctx(morita(&t, &f2, &n, &m).unwrap()), FunctorBounds { per_object: 3, total: Some(4) }),
        (ctx(one_object(&dual_numbers()).unwrap()), FunctorBounds { per_object: 4, total: None }),
    ];
    for (c, bounds) in &cases {
        let ext = enumerate_functors_by_extensions(c, *bounds).unwrap();
        let scan = enumerate_functors_by_scan(c, *bounds).unwrap();
        assert_eq!(ext.len(), scan.len());
        for x in &ext {
            let matches = scan.iter().filter(|y| functors_isomorphic(x, y).unwrap()).count();
            assert_eq!(matches, 1);
        }
    }
    // Two isomorphic objects: nonzero trace, so only the scan applies, and
    // functors are vector spaces.
    let names = vec!["a".to_string(), "b".to_string()];
    let iso = ctx(cotlab_encat::EnrichedCategory::new(2, names, vec![vec![1, 1], vec![1, 1]], vec![vec![1], vec![1]], |_, _, _, _, _| vec![1]).unwrap());
    let bounds = FunctorBounds { per_object: 2, total: None };
    assert!(enumerate_functors_by_extensions(&iso, bounds).is_err());
    let found = enumerate_functors_bounded(&iso, bounds).unwrap();
    assert_eq!(found.iter().map(|x| x.dims().to_vec()).collect::<Vec<_>>(), vec![vec![0, 0], vec![1, 1], vec![2, 2]]);
}

#[test]
fn total_dimension_bounds() {
    let c = ctx(chain(2, 3).unwrap());
    let all = enumerate_functors(&c, 2).unwrap();
    let bounded = enumerate_functors_bounded(&c, FunctorBounds { per_object: 2, total: Some(3) }).unwrap();
    let expected = all.iter().filter(|x| x.dims().iter().sum::<usize>() <= 3).count();
    assert_eq!(bounded.len(), expected);
}

#[test]
fn random_instances_are_reproducible() {
    let a = random_instance(0, SizeProfile::Tiny).unwrap();
    let b = random_instance(0, SizeProfile::Tiny).unwrap();
    assert_eq!(format!("{:?}", a.category()), format!("{:?}", b.category()));
    let acts = |r: &RandomInstance| r.functors.iter().map(|x| format!("{:?}", x.acts())).collect::<Vec<_>>();
    assert_eq!(acts(&a), acts(&b));
    assert_eq!("tiny".parse::<SizeProfile>().unwrap(), SizeProfile::Tiny);
    assert!("huge".parse::<SizeProfile>().is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]
    #[test]
    fn random_instances_respect_the_profile(seed in any::<u64>()) {
        let inst = random_instance(seed, SizeProfile::Tiny).unwrap();
        let cat = inst.category();
        prop_assert!(cat.object_count() <= 3);
        prop_assert!(validate_category(cat, true).passed());
        for a in 0..cat.object_count() {
            for b in 0..cat.object_count() {
                prop_assert!(cat.hom_dim(a, b) <= 2);
            }
        }
        prop_assert_eq!(inst.functors.len(), 3);
        for x in &inst.functors {
            prop_assert!(x.dims().iter().all(|&d| d <= 2));
        }
    }
}
