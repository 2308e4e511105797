//! Finite categories enriched over GF(p)-vector spaces.

use std::fmt;
use std::sync::{Arc, OnceLock};

use cotlab_algmod::{Algebra, Bimodule};
use cotlab_linalg::{field, FpMatrix};

use crate::error::{EncatError, Result};

/// A finite GF(p)-linear category with chosen bases of all Hom spaces.
///
/// For `g ∈ Hom(B, C)` (basis index `g`) and `f ∈ Hom(A, B)` (basis index
/// `f`), the composite `g ∘ f ∈ Hom(A, C)` has coordinates
/// `comp[A][B][C][(g * dim Hom(A,B) + f) * dim Hom(A,C) + k]`.
#[derive(Clone)]
pub struct EnrichedCategory {
    p: u32,
    objects: Vec<String>,
    hom_dims: Vec<Vec<usize>>,
    comp: Vec<Vec<u32>>,
    identities: Vec<Vec<u32>>,
    endo: Vec<OnceLock<Arc<Algebra>>>,
    generators: OnceLock<CategoryGenerators>,
}

impl PartialEq for EnrichedCategory {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p
            && self.objects == other.objects
            && self.hom_dims == other.hom_dims
            && self.comp == other.comp
            && self.identities == other.identities
    }
}
impl Eq for EnrichedCategory {}

impl fmt::Debug for EnrichedCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EnrichedCategory(GF({}), objects {:?}, homs {:?})", self.p, self.objects, self.hom_dims)
    }
}

impl EnrichedCategory {
    /// Builds a category from Hom dimensions, identity coordinates and a
    /// composition rule on basis elements `(A, B, C, g, f) -> g ∘ f`.
    ///
    /// Only shapes are checked; use [`validate_category`] for the axioms.
    pub fn new(
        p: u32,
        objects: Vec<String>,
        hom_dims: Vec<Vec<usize>>,
        identities: Vec<Vec<u32>>,
        mut comp: impl FnMut(usize, usize, usize, usize, usize) -> Vec<u32>,
    ) -> Result<Self> {
        let n = objects.len();
        let mut flat = Vec::with_capacity(n * n * n);
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let (dab, dbc, dac) = (hom_dims[a][b], hom_dims[b][c], hom_dims[a][c]);
                    let mut t = Vec::with_capacity(dab * dbc * dac);
                    for g in 0..dbc {
                        for f in 0..dab {
                            let v = comp(a, b, c, g, f);
                            if v.len() != dac {
                                return Err(EncatError::Shape(format!(
                                    "composite {}→{}→{} has {} coordinates, expected {dac}",
                                    objects[a],
                                    objects[b],
                                    objects[c],
                                    v.len()
                                )));
                            }
                            t.extend(v.into_iter().map(|x| x % p));
                        }
                    }
                    flat.push(t);
                }
            }
        }
        Self::from_flat(p, objects, hom_dims, identities, flat)
    }

    /// Builds a category from flattened composition tensors, one per object
    /// triple `(A, B, C)` in the order `(A * n + B) * n + C`.
    pub fn from_flat(
        p: u32,
        objects: Vec<String>,
        hom_dims: Vec<Vec<usize>>,
        identities: Vec<Vec<u32>>,
        comp: Vec<Vec<u32>>,
    ) -> Result<Self> {
        field::check_prime(p)?;
        let n = objects.len();
        if hom_dims.len() != n || hom_dims.iter().any(|r| r.len() != n) {
            return Err(EncatError::Shape("hom dimensions must form an n x n table".into()));
        }
        for (i, o) in objects.iter().enumerate() {
            if objects[..i].contains(o) {
                return Err(EncatError::Invalid(format!("duplicate object `{o}`")));
            }
        }
        if identities.len() != n || identities.iter().enumerate().any(|(a, v)| v.len() != hom_dims[a][a]) {
            return Err(EncatError::Shape("identity coordinates must match Hom(A, A)".into()));
        }
        if comp.len() != n * n * n {
            return Err(EncatError::Shape("one composition tensor per object triple".into()));
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let want = hom_dims[a][b] * hom_dims[b][c] * hom_dims[a][c];
                    if comp[(a * n + b) * n + c].len() != want {
                        return Err(EncatError::Shape(format!(
                            "composition tensor {}→{}→{} has {} entries, expected {want}",
                            objects[a],
                            objects[b],
                            objects[c],
                            comp[(a * n + b) * n + c].len()
                        )));
                    }
                }
            }
        }
        if comp.iter().flatten().chain(identities.iter().flatten()).any(|&x| x >= p) {
            return Err(EncatError::Shape(format!("entries must lie in [0, {p})")));
        }
        let endo = (0..n).map(|_| OnceLock::new()).collect();
        Ok(EnrichedCategory { p, objects, hom_dims, comp, identities, endo, generators: OnceLock::new() })
    }

    /// The one-object category whose endomorphism algebra is `alg`.
    pub fn one_object(name: &str, alg: &Algebra) -> Self {
        let d = alg.dim();
        EnrichedCategory::new(alg.prime(), vec![name.to_string()], vec![vec![d]], vec![alg.unit().to_vec()], |_, _, _, g, f| {
            alg.product_basis(g, f).to_vec()
        })
        .expect("algebra structure constants have the right shape")
    }

    pub fn prime(&self) -> u32 {
        self.p
    }
    pub fn objects(&self) -> &[String] {
        &self.objects
    }
    pub fn object_count(&self) -> usize {
        self.objects.len()
    }
    pub fn object_index(&self, name: &str) -> Result<usize> {
        self.objects.iter().position(|o| o == name).ok_or_else(|| EncatError::UnknownObject(name.to_string()))
    }
    pub fn hom_dim(&self, a: usize, b: usize) -> usize {
        self.hom_dims[a][b]
    }
    pub fn hom_dims(&self) -> &[Vec<usize>] {
        &self.hom_dims
    }
    pub fn identity(&self, a: usize) -> &[u32] {
        &self.identities[a]
    }

    /// Flattened composition tensor of the triple `(A, B, C)`.
    pub fn comp_tensor(&self, a: usize, b: usize, c: usize) -> &[u32] {
        let n = self.objects.len();
        &self.comp[(a * n + b) * n + c]
    }

    /// Coordinates of `g ∘ f` for basis elements `g ∈ Hom(B,C)`, `f ∈ Hom(A,B)`.
    pub fn compose_basis(&self, a: usize, b: usize, c: usize, g: usize, f: usize) -> &[u32] {
        let dab = self.hom_dims[a][b];
        let dac = self.hom_dims[a][c];
        let s = (g * dab + f) * dac;
        &self.comp_tensor(a, b, c)[s..s + dac]
    }

    /// `g ∘ f` for arbitrary `g ∈ Hom(B,C)`, `f ∈ Hom(A,B)`.
    pub fn compose(&self, a: usize, b: usize, c: usize, g: &[u32], f: &[u32]) -> Vec<u32> {
        let p = self.p;
        let dac = self.hom_dims[a][c];
        let mut out = vec![0u32; dac];
        for (gi, &x) in g.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (fi, &y) in f.iter().enumerate() {
                if y == 0 {
                    continue;
                }
                let s = field::mul(p, x, y);
                for (o, &v) in out.iter_mut().zip(self.compose_basis(a, b, c, gi, fi)) {
                    *o = field::add(p, *o, field::mul(p, s, v));
                }
            }
        }
        out
    }

    /// Matrix of `f ↦ g ∘ f : Hom(A,B) -> Hom(A,C)` for `g ∈ Hom(B,C)`.
    pub fn post_compose(&self, a: usize, b: usize, c: usize, g: &[u32]) -> FpMatrix {
        let (dab, dac) = (self.hom_dims[a][b], self.hom_dims[a][c]);
        let mut m = FpMatrix::zeros(self.p, dac, dab);
        for f in 0..dab {
            let mut e = vec![0; dab];
            e[f] = 1;
            for (k, v) in self.compose(a, b, c, g, &e).into_iter().enumerate() {
                m.set(k, f, v);
            }
        }
        m
    }

    /// Matrix of `g ↦ g ∘ f : Hom(B,C) -> Hom(A,C)` for `f ∈ Hom(A,B)`.
    pub fn pre_compose(&self, a: usize, b: usize, c: usize, f: &[u32]) -> FpMatrix {
        let (dbc, dac) = (self.hom_dims[b][c], self.hom_dims[a][c]);
        let mut m = FpMatrix::zeros(self.p, dac, dbc);
        for g in 0..dbc {
            let mut e = vec![0; dbc];
            e[g] = 1;
            for (k, v) in self.compose(a, b, c, &e, f).into_iter().enumerate() {
                m.set(k, g, v);
            }
        }
        m
    }

    /// The endomorphism algebra `R_A = Hom(A, A)` with `b_i b_j = b_i ∘ b_j`.
    pub fn endo_algebra(&self, a: usize) -> Arc<Algebra> {
        self.endo[a]
            .get_or_init(|| {
                let d = self.hom_dims[a][a];
                let alg = Algebra::from_fn(self.p, d, self.identities[a].clone(), |i, j| {
                    self.compose_basis(a, a, a, i, j).to_vec()
                })
                .expect("endomorphism constants have the right shape");
                Arc::new(alg)
            })
            .clone()
    }

    /// `Hom(A, B)` as an `(R_B, R_A)`-bimodule: `r·f·s = r ∘ f ∘ s`.
    pub fn hom_bimodule(&self, a: usize, b: usize) -> Bimodule {
        let (ra, rb) = (self.endo_algebra(a), self.endo_algebra(b));
        let basis = |d: usize, i: usize| {
            let mut e = vec![0; d];
            e[i] = 1;
            e
        };
        let left = (0..rb.dim()).map(|r| self.post_compose(a, b, b, &basis(rb.dim(), r))).collect();
        let right = (0..ra.dim()).map(|s| self.pre_compose(a, a, b, &basis(ra.dim(), s))).collect();
        Bimodule::from_parts(rb, ra, self.hom_dims[a][b], left, right)
    }

    /// The category with objects reordered: new object `i` is old object
    /// `perm[i]`.
    pub fn permute_objects(&self, perm: &[usize]) -> Result<Self> {
        let n = self.objects.len();
        let mut sorted = perm.to_vec();
        sorted.sort_unstable();
        if sorted != (0..n).collect::<Vec<_>>() {
            return Err(EncatError::Shape("not a permutation of the objects".into()));
        }
        let objects = perm.iter().map(|&i| self.objects[i].clone()).collect();
        let hom_dims = perm.iter().map(|&a| perm.iter().map(|&b| self.hom_dims[a][b]).collect()).collect();
        let identities = perm.iter().map(|&a| self.identities[a].clone()).collect();
        EnrichedCategory::new(self.p, objects, hom_dims, identities, |a, b, c, g, f| {
            self.compose_basis(perm[a], perm[b], perm[c], g, f).to_vec()
        })
    }

    /// Morphism generators of the category with word expressions for every
    /// basis morphism (computed once).
    pub fn generators(&self) -> &CategoryGenerators {
        self.generators.get_or_init(|| crate::generators::compute(self))
    }
}

/// Generating morphisms together with, for every basis morphism, an
/// expression as a combination of composable words in the generators.
#[derive(Clone, Debug)]
pub struct CategoryGenerators {
    /// `(source, target, coordinates)` of each generator.
    pub gens: Vec<(usize, usize, Vec<u32>)>,
    /// `words[A][B]`: words from `A` to `B`; a word lists generator indices
    /// in composition order (`[g1, g2]` means `g2 ∘ g1`); the empty word at
    /// `A` is `id_A`.
    pub words: Vec<Vec<Vec<Vec<usize>>>>,
    /// `expr[A][B][k][w]`: coefficient of `words[A][B][w]` in basis element `k`.
    pub expr: Vec<Vec<Vec<Vec<u32>>>>,
}
