//! Constructors for the standard instances.

use std::sync::Arc;

use cotlab_algmod::{hom_bimodule, same_algebra, Algebra, AlgebraMorphism, Bimodule, LeftModule};
use cotlab_encat::{validate_category, EnrichedCategory};
use cotlab_functorcat::AdjunctionHandle;
use cotlab_linalg::{field, FpMatrix};

use crate::error::{InstanceError, Result};

/// Parameters of a standard instance.
#[derive(Clone, Debug)]
pub enum InstanceSpec {
    /// Objects `0..=length`, `Hom(i, j) = GF(p)` iff `i = j` or `i = j + 1`.
    Chain { p: u32, length: usize },
    /// Objects `A, B` with `R_A = T`, `R_B = S`, `Hom(A, B) = N` (an
    /// `(S, T)`-bimodule), `Hom(B, A) = M` (a `(T, S)`-bimodule) and both
    /// pairings zero.
    Morita { t: Arc<Algebra>, s: Arc<Algebra>, n: Bimodule, m: Bimodule },
    /// Objects `1..=max_object`, `Hom(n, m) = GF(p)` iff `m ≤ n ≤ 2m`.
    Fib { p: u32, max_object: usize },
    /// Base change and restriction along an algebra morphism.
    RingMor { morphism: AlgebraMorphism },
    /// The one-object category of an algebra.
    OneObject { alg: Arc<Algebra> },
}

/// What an instance spec builds.
#[derive(Clone, Debug)]
pub enum Instance {
    Category(EnrichedCategory),
    RingMor(RingMorInstance),
}

pub fn build_instance(spec: &InstanceSpec) -> Result<Instance> {
    Ok(match spec {
        InstanceSpec::Chain { p, length } => Instance::Category(chain(*p, *length)?),
        InstanceSpec::Morita { t, s, n, m } => Instance::Category(morita(t, s, n, m)?),
        InstanceSpec::Fib { p, max_object } => Instance::Category(fib(*p, *max_object)?),
        InstanceSpec::RingMor { morphism } => Instance::RingMor(ring_mor(morphism)),
        InstanceSpec::OneObject { alg } => Instance::Category(one_object(alg)?),
    })
}

fn checked(cat: EnrichedCategory, zero_trace: bool) -> Result<EnrichedCategory> {
    let report = validate_category(&cat, zero_trace);
    if report.passed() {
        Ok(cat)
    } else {
        Err(InstanceError::Validation(report.describe(&cat).join("; ")))
    }
}

/// A category whose Hom spaces are `GF(p)` or zero, composing basis
/// morphisms by multiplication whenever the target Hom is nonzero.
fn thin(p: u32, names: Vec<String>, nonzero: impl Fn(usize, usize) -> bool) -> Result<EnrichedCategory> {
    field::check_prime(p).map_err(|e| InstanceError::InvalidParameters(e.to_string()))?;
    let n = names.len();
    let dims: Vec<Vec<usize>> =
        (0..n).map(|a| (0..n).map(|b| usize::from(a == b || nonzero(a, b))).collect()).collect();
    let ids = vec![vec![1]; n];
    let d = dims.clone();
    Ok(EnrichedCategory::new(p, names, dims, ids, move |a, _, c, _, _| vec![1; d[a][c]])?)
}

/// Length-`length` chain complexes: differentials `i → i-1`, all longer
/// composites zero.
pub fn chain(p: u32, length: usize) -> Result<EnrichedCategory> {
    let names = (0..=length).map(|i| i.to_string()).collect();
    checked(thin(p, names, |a, b| b + 1 == a)?, true)
}

/// The truncation to `1..=max_object` of the category on the positive
/// integers with `Hom(n, m) = GF(p)` exactly when `m ≤ n ≤ 2m`.
pub fn fib(p: u32, max_object: usize) -> Result<EnrichedCategory> {
    if max_object == 0 {
        return Err(InstanceError::InvalidParameters("fib needs at least one object".into()));
    }
    let names = (1..=max_object).map(|i| i.to_string()).collect();
    // Object index i stands for the integer i + 1.
    checked(thin(p, names, |a, b| b <= a && a < 2 * (b + 1))?, true)
}

/// The category of a Morita context with zero pairings.
pub fn morita(t: &Arc<Algebra>, s: &Arc<Algebra>, n: &Bimodule, m: &Bimodule) -> Result<EnrichedCategory> {
    if t.prime() != s.prime() {
        return Err(InstanceError::InvalidParameters("T and S live over different fields".into()));
    }
    if !same_algebra(n.left_alg(), s) || !same_algebra(n.right_alg(), t) {
        return Err(InstanceError::InvalidParameters("N must be an (S, T)-bimodule".into()));
    }
    if !same_algebra(m.left_alg(), t) || !same_algebra(m.right_alg(), s) {
        return Err(InstanceError::InvalidParameters("M must be a (T, S)-bimodule".into()));
    }
    let names = vec!["A".to_string(), "B".to_string()];
    let dims = vec![vec![t.dim(), n.dim()], vec![m.dim(), s.dim()]];
    let ids = vec![t.unit().to_vec(), s.unit().to_vec()];
    let cat = EnrichedCategory::new(t.prime(), names, dims, ids, |a, b, c, g, f| match (a, b, c) {
        (0, 0, 0) => t.product_basis(g, f).to_vec(),
        (1, 1, 1) => s.product_basis(g, f).to_vec(),
        // n ∘ t = n · t and s ∘ n = s · n.
        (0, 0, 1) => n.right_action(f).col(g),
        (0, 1, 1) => n.left_action(g).col(f),
        // m ∘ s = m · s and t ∘ m = t · m.
        (1, 1, 0) => m.right_action(f).col(g),
        (1, 0, 0) => m.left_action(g).col(f),
        // The pairings M ⊗ N -> T and N ⊗ M -> S vanish.
        (0, 1, 0) => vec![0; t.dim()],
        _ => vec![0; s.dim()],
    })?;
    checked(cat, true)
}

pub fn one_object(alg: &Arc<Algebra>) -> Result<EnrichedCategory> {
    checked(EnrichedCategory::one_object("*", alg), false)
}

/// Base change `S ⊗_R -`, restriction and coinduction `Hom_R(S, -)` along
/// `f: R -> S`.
#[derive(Clone, Debug)]
pub struct RingMorInstance {
    pub morphism: AlgebraMorphism,
    /// `S ⊗_R - ⊣ restriction`.
    pub adjunction: AdjunctionHandle,
}

pub fn ring_mor(f: &AlgebraMorphism) -> RingMorInstance {
    RingMorInstance { morphism: f.clone(), adjunction: AdjunctionHandle::ring_mor(f) }
}

impl RingMorInstance {
    pub fn source(&self) -> &Arc<Algebra> {
        &self.morphism.source
    }
    pub fn target(&self) -> &Arc<Algebra> {
        &self.morphism.target
    }

    /// `S` as an `(R, S)`-bimodule: `r · s · s' = f(r) s s'`.
    fn target_as_bimodule(&self) -> Bimodule {
        let (r, s) = (self.source(), self.target());
        let p = r.prime();
        let left = (0..r.dim())
            .map(|i| {
                let fi = self.morphism.apply(&r.basis_vector(i));
                let mut m = FpMatrix::zeros(p, s.dim(), s.dim());
                for (j, &c) in fi.iter().enumerate() {
                    if c != 0 {
                        m.add_scaled(s.left_mult(j), c);
                    }
                }
                m
            })
            .collect();
        let right = (0..s.dim()).map(|j| s.right_mult(j)).collect();
        Bimodule::from_parts(r.clone(), s.clone(), s.dim(), left, right)
    }

    /// `Hom_R(S, M)` as an `S`-module, the right adjoint of restriction.
    pub fn coinduce(&self, m: &Arc<LeftModule>) -> Result<Arc<LeftModule>> {
        let (module, _) = hom_bimodule(&self.target_as_bimodule(), m)?;
        Ok(Arc::new(module))
    }

    /// Restriction of an `S`-module to `R`.
    pub fn restrict(&self, m: &LeftModule) -> Result<Arc<LeftModule>> {
        Ok(Arc::new(m.restrict(&self.morphism)?))
    }
}
