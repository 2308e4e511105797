//! Seeded random categories and functors, drawn by rejection sampling.
//!
//! Objects are placed in a random linear order and only morphisms going
//! forward in that order are nonzero, so every sampled category has zero
//! trace. Endomorphism algebras are `GF(p)` or `GF(p)[x]/(x²)`; each
//! forward Hom is a random bimodule and the composite of two forward
//! Homs a random bilinear map. A draw is kept only if it passes
//! `validate_category`; at most [`RETRY_CAP`] draws are made.

use std::str::FromStr;
use std::sync::Arc;

use cotlab_algmod::{Algebra, Bimodule, LeftModule};
use cotlab_encat::{validate_category, EnrichedCategory};
use cotlab_functorcat::{generator_values_are_functorial, AddFunctor, FunctorCategory};
use cotlab_linalg::FpMatrix;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{InstanceError, Result};

/// Draws made for one category, and for one functor, before giving up.
pub const RETRY_CAP: usize = 1000;

/// Size bounds on random instances.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SizeProfile {
    /// At most 3 objects, Homs of dimension ≤ 2, functor values ≤ 2.
    Tiny,
    /// At most 4 objects, Homs of dimension ≤ 2, functor values ≤ 3.
    Small,
}

impl SizeProfile {
    pub fn max_objects(self) -> usize {
        match self {
            SizeProfile::Tiny => 3,
            SizeProfile::Small => 4,
        }
    }
    pub fn max_hom_dim(self) -> usize {
        2
    }
    pub fn max_functor_dim(self) -> usize {
        match self {
            SizeProfile::Tiny => 2,
            SizeProfile::Small => 3,
        }
    }
    pub fn functor_count(self) -> usize {
        match self {
            SizeProfile::Tiny => 3,
            SizeProfile::Small => 4,
        }
    }
}

impl FromStr for SizeProfile {
    type Err = InstanceError;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "tiny" => Ok(SizeProfile::Tiny),
            "small" => Ok(SizeProfile::Small),
            other => Err(InstanceError::InvalidParameters(format!("unknown size profile {other:?}"))),
        }
    }
}

/// A sampled category together with functors on it.
#[derive(Clone, Debug)]
pub struct RandomInstance {
    pub ctx: Arc<FunctorCategory>,
    pub functors: Vec<Arc<AddFunctor>>,
}

impl RandomInstance {
    pub fn category(&self) -> &Arc<EnrichedCategory> {
        self.ctx.category()
    }
}

/// A random instance over GF(2), determined by `seed`.
pub fn random_instance(seed: u64, profile: SizeProfile) -> Result<RandomInstance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cat = (0..RETRY_CAP)
        .find_map(|_| draw_category(&mut rng, 2, profile))
        .ok_or(InstanceError::RetryCapExceeded(RETRY_CAP))?;
    let ctx = FunctorCategory::new(Arc::new(cat))?;
    let mut functors = Vec::with_capacity(profile.functor_count());
    for _ in 0..profile.functor_count() {
        let x = (0..RETRY_CAP)
            .find_map(|_| draw_functor(&mut rng, &ctx, profile.max_functor_dim()))
            .ok_or(InstanceError::RetryCapExceeded(RETRY_CAP))?;
        functors.push(Arc::new(x));
    }
    Ok(RandomInstance { ctx, functors })
}

fn random_matrix(rng: &mut ChaCha8Rng, p: u32, rows: usize, cols: usize) -> FpMatrix {
    let data = (0..rows * cols).map(|_| rng.gen_range(0..p)).collect();
    FpMatrix::from_vec(p, rows, cols, data).expect("shape matches data")
}

/// Full basis actions of an algebra on a `d`-dimensional space with random
/// generator matrices, or `None` if the relations fail.
fn random_actions(rng: &mut ChaCha8Rng, alg: &Arc<Algebra>, d: usize) -> Option<Vec<FpMatrix>> {
    let p = alg.prime();
    let gens: Vec<FpMatrix> = (0..alg.generator_count()).map(|_| random_matrix(rng, p, d, d)).collect();
    LeftModule::from_generator_matrices(alg.clone(), d, &gens).ok().map(|m| m.actions().to_vec())
}

/// One draw of a category; `None` if it fails validation.
fn draw_category(rng: &mut ChaCha8Rng, p: u32, profile: SizeProfile) -> Option<EnrichedCategory> {
    let n = rng.gen_range(1..=profile.max_objects());
    let algs: Vec<Arc<Algebra>> = (0..n)
        .map(|_| {
            if rng.gen_bool(0.5) {
                Arc::new(Algebra::field(p))
            } else {
                Arc::new(Algebra::truncated_polynomial(p, 2).expect("valid prime and degree"))
            }
        })
        .collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut rank_of = vec![0; n];
    for (i, &a) in order.iter().enumerate() {
        rank_of[a] = i;
    }

    // bims[a][b] = Hom(a, b) as an (R_b, R_a)-bimodule, for forward pairs.
    let mut bims: Vec<Vec<Option<Bimodule>>> = vec![vec![None; n]; n];
    let mut dims = vec![vec![0usize; n]; n];
    for a in 0..n {
        dims[a][a] = algs[a].dim();
        for b in 0..n {
            if rank_of[a] >= rank_of[b] {
                continue;
            }
            let d = rng.gen_range(0..=profile.max_hom_dim());
            let left = random_actions(rng, &algs[b], d)?;
            // Both algebras are commutative, so right actions are left actions.
            let right = random_actions(rng, &algs[a], d)?;
            bims[a][b] = Some(Bimodule::new(algs[b].clone(), algs[a].clone(), d, left, right).ok()?);
            dims[a][b] = d;
        }
    }

    // Composites Hom(b, c) x Hom(a, b) -> Hom(a, c) along forward triples.
    let mut tensors = vec![vec![vec![Vec::new(); n]; n]; n];
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if rank_of[a] < rank_of[b] && rank_of[b] < rank_of[c] {
                    let zero = rng.gen_bool(0.5);
                    tensors[a][b][c] = (0..dims[b][c] * dims[a][b])
                        .map(|_| (0..dims[a][c]).map(|_| if zero { 0 } else { rng.gen_range(0..p) }).collect())
                        .collect::<Vec<Vec<u32>>>();
                }
            }
        }
    }

    let names = (0..n).map(|a| format!("o{a}")).collect();
    let ids = algs.iter().map(|r| r.unit().to_vec()).collect();
    let d = dims.clone();
    let cat = EnrichedCategory::new(p, names, dims, ids, |a, b, c, g, f| {
        if a == b && b == c {
            algs[a].product_basis(g, f).to_vec()
        } else if a == b {
            // g ∈ Hom(a, c), f ∈ R_a.
            bims[a][c].as_ref().expect("nonzero forward hom").right_action(f).col(g)
        } else if b == c {
            // g ∈ R_b, f ∈ Hom(a, b).
            bims[a][b].as_ref().expect("nonzero forward hom").left_action(g).col(f)
        } else if tensors[a][b][c].is_empty() {
            vec![0; d[a][c]]
        } else {
            tensors[a][b][c][g * d[a][b] + f].clone()
        }
    })
    .ok()?;
    validate_category(&cat, true).passed().then_some(cat)
}

/// One draw of a functor; `None` if the generator values are not functorial.
fn draw_functor(rng: &mut ChaCha8Rng, ctx: &Arc<FunctorCategory>, max_dim: usize) -> Option<AddFunctor> {
    let p = ctx.prime();
    let dims: Vec<usize> = (0..ctx.object_count()).map(|_| rng.gen_range(0..=max_dim)).collect();
    let gens: Vec<FpMatrix> =
        ctx.category().generators().gens.iter().map(|(s, t, _)| random_matrix(rng, p, dims[*t], dims[*s])).collect();
    if !generator_values_are_functorial(ctx, &dims, &gens) {
        return None;
    }
    AddFunctor::from_generator_matrices(ctx.clone(), dims, &gens).ok()
}
