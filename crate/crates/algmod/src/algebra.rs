//! Finite-dimensional associative unital algebras given by structure constants.

use std::fmt;
use std::sync::{Arc, OnceLock};

use cotlab_linalg::{field, inverse, FpMatrix, RowEchelon, SubspaceBasis};

use crate::error::{AlgmodError, Result};

/// An algebra over GF(p) with basis `b_0..b_{dim-1}`.
///
/// `b_i * b_j = Σ_k c[i][j][k] b_k`; the unit is the vector `unit`.
#[derive(Clone)]
pub struct Algebra {
    p: u32,
    dim: usize,
    consts: Vec<u32>,
    unit: Vec<u32>,
    left_mult: Vec<FpMatrix>,
    generators: OnceLock<Generators>,
    opposite: OnceLock<Arc<Algebra>>,
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.dim == other.dim && self.consts == other.consts && self.unit == other.unit
    }
}
impl Eq for Algebra {}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Algebra(GF({}), dim {})", self.p, self.dim)
    }
}

/// A generating set of an algebra together with, for every basis element,
/// an expression as a linear combination of words in the generators.
#[derive(Clone, Debug)]
pub struct Generators {
    /// Indices of the basis elements used as generators.
    pub gens: Vec<usize>,
    /// Words: sequences of positions into `gens`; `[g1, g2]` means `b_{g1} b_{g2}`.
    /// The empty word is the unit.
    pub words: Vec<Vec<usize>>,
    /// `expr[k][w]` is the coefficient of word `w` in basis element `b_k`.
    pub expr: Vec<Vec<u32>>,
}

impl Algebra {
    /// Builds an algebra from nested structure constants `c[i][j] = coords of b_i b_j`.
    ///
    /// Only shapes and ranges are checked here; use [`validate_algebra`] for
    /// associativity and unit laws.
    pub fn new(p: u32, consts: Vec<Vec<Vec<u32>>>, unit: Vec<u32>) -> Result<Self> {
        field::check_prime(p)?;
        let dim = unit.len();
        if consts.len() != dim || consts.iter().any(|r| r.len() != dim || r.iter().any(|v| v.len() != dim)) {
            return Err(AlgmodError::InvalidAlgebra(format!("structure constants must be {dim}x{dim}x{dim}")));
        }
        let flat: Vec<u32> = consts.into_iter().flatten().flatten().collect();
        Self::from_flat(p, dim, flat, unit)
    }

    /// Builds an algebra from flat constants indexed `(i * dim + j) * dim + k`.
    pub fn from_flat(p: u32, dim: usize, consts: Vec<u32>, unit: Vec<u32>) -> Result<Self> {
        field::check_prime(p)?;
        if consts.len() != dim * dim * dim || unit.len() != dim {
            return Err(AlgmodError::InvalidAlgebra("structure constant length".into()));
        }
        if consts.iter().chain(&unit).any(|&v| v >= p) {
            return Err(AlgmodError::InvalidAlgebra(format!("entries must lie in [0, {p})")));
        }
        let left_mult = (0..dim)
            .map(|i| {
                let mut m = FpMatrix::zeros(p, dim, dim);
                for j in 0..dim {
                    for k in 0..dim {
                        m.set(k, j, consts[(i * dim + j) * dim + k]);
                    }
                }
                m
            })
            .collect();
        Ok(Algebra { p, dim, consts, unit, left_mult, generators: OnceLock::new(), opposite: OnceLock::new() })
    }

    /// Builds an algebra from a multiplication rule on basis indices.
    pub fn from_fn(p: u32, dim: usize, unit: Vec<u32>, mut mul: impl FnMut(usize, usize) -> Vec<u32>) -> Result<Self> {
        let mut consts = Vec::with_capacity(dim * dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let v = mul(i, j);
                if v.len() != dim {
                    return Err(AlgmodError::InvalidAlgebra("product vector length".into()));
                }
                consts.extend(v.into_iter().map(|x| x % p));
            }
        }
        Self::from_flat(p, dim, consts, unit)
    }

    /// The prime field GF(p) itself.
    pub fn field(p: u32) -> Self {
        Self::from_flat(p, 1, vec![1], vec![1]).expect("prime field")
    }

    /// `GF(p)[x]/(x^n)` with basis `1, x, ..., x^{n-1}`.
    pub fn truncated_polynomial(p: u32, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(AlgmodError::InvalidAlgebra("x^0 = 0 gives the zero ring".into()));
        }
        let mut unit = vec![0; n];
        unit[0] = 1;
        Self::from_fn(p, n, unit, |i, j| {
            let mut v = vec![0; n];
            if i + j < n {
                v[i + j] = 1;
            }
            v
        })
    }

    /// Upper-triangular 2x2 matrices with basis `e11, e12, e22`.
    pub fn upper_triangular(p: u32) -> Self {
        // Products of matrix units: e_ab e_cd = δ_bc e_ad.
        let units = [(0, 0), (0, 1), (1, 1)];
        Self::from_fn(p, 3, vec![1, 0, 1], |i, j| {
            let (a, b) = units[i];
            let (c, d) = units[j];
            let mut v = vec![0; 3];
            if b == c {
                let k = units.iter().position(|&u| u == (a, d)).expect("upper triangular closed");
                v[k] = 1;
            }
            v
        })
        .expect("upper triangular algebra")
    }

    /// The direct product `A_1 × ... × A_n` with concatenated bases.
    pub fn product(factors: &[&Algebra]) -> Result<Self> {
        let p = factors.first().map_or(2, |a| a.p);
        if factors.iter().any(|a| a.p != p) {
            return Err(AlgmodError::AlgebraMismatch);
        }
        let offsets: Vec<usize> = factors
            .iter()
            .scan(0, |acc, a| {
                let o = *acc;
                *acc += a.dim;
                Some(o)
            })
            .collect();
        let dim: usize = factors.iter().map(|a| a.dim).sum();
        let block_of = |i: usize| offsets.iter().rposition(|&o| o <= i).expect("index in range");
        let mut unit = vec![0; dim];
        for (a, &o) in factors.iter().zip(&offsets) {
            unit[o..o + a.dim].copy_from_slice(&a.unit);
        }
        Self::from_fn(p, dim, unit, |i, j| {
            let mut v = vec![0; dim];
            let (bi, bj) = (block_of(i), block_of(j));
            if bi == bj {
                let (a, o) = (factors[bi], offsets[bi]);
                v[o..o + a.dim].copy_from_slice(a.product_basis(i - o, j - o));
            }
            v
        })
    }

    pub fn prime(&self) -> u32 {
        self.p
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn unit(&self) -> &[u32] {
        &self.unit
    }

    /// Coordinates of `b_i b_j`.
    pub fn product_basis(&self, i: usize, j: usize) -> &[u32] {
        let s = (i * self.dim + j) * self.dim;
        &self.consts[s..s + self.dim]
    }

    /// Nested structure constants `c[i][j][k]`.
    pub fn structure_constants(&self) -> Vec<Vec<Vec<u32>>> {
        (0..self.dim).map(|i| (0..self.dim).map(|j| self.product_basis(i, j).to_vec()).collect()).collect()
    }

    /// The matrix of left multiplication by `b_i` on the algebra.
    pub fn left_mult(&self, i: usize) -> &FpMatrix {
        &self.left_mult[i]
    }

    /// The matrix of right multiplication by `b_i` (column `j` is `b_j b_i`).
    pub fn right_mult(&self, i: usize) -> FpMatrix {
        let mut m = FpMatrix::zeros(self.p, self.dim, self.dim);
        for j in 0..self.dim {
            for (k, &v) in self.product_basis(j, i).iter().enumerate() {
                m.set(k, j, v);
            }
        }
        m
    }

    /// Product of two elements given in coordinates.
    pub fn mul(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        let p = self.p;
        let mut out = vec![0u32; self.dim];
        for (i, &a) in x.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in y.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                let s = field::mul(p, a, b);
                for (o, &c) in out.iter_mut().zip(self.product_basis(i, j)) {
                    *o = field::add(p, *o, field::mul(p, s, c));
                }
            }
        }
        out
    }

    /// The basis vector `b_i` in coordinates.
    pub fn basis_vector(&self, i: usize) -> Vec<u32> {
        let mut v = vec![0; self.dim];
        v[i] = 1;
        v
    }

    /// A generating set with word expressions for every basis element
    /// (computed once, greedily in basis order).
    pub fn generators(&self) -> &Generators {
        self.generators.get_or_init(|| compute_generators(self))
    }

    /// The opposite algebra, cached so repeated calls share one handle.
    pub fn opposite(&self) -> Arc<Algebra> {
        self.opposite.get_or_init(|| Arc::new(opposite_algebra(self))).clone()
    }

    /// Number of algebra generators.
    pub fn generator_count(&self) -> usize {
        self.generators().gens.len()
    }
}

/// Closure of `{1} ∪ gens` under left multiplication by generators; returns
/// the spanning elements found, each with its word.
fn closure(alg: &Algebra, gens: &[usize]) -> (RowEchelon, Vec<(Vec<u32>, Vec<usize>)>) {
    let p = alg.p;
    let mut ech = RowEchelon::new(p, alg.dim);
    let mut elems: Vec<(Vec<u32>, Vec<usize>)> = Vec::new();
    if alg.dim == 0 {
        return (ech, elems);
    }
    if ech.push_row(&alg.unit) {
        elems.push((alg.unit.clone(), Vec::new()));
    }
    let mut frontier = 0;
    while frontier < elems.len() {
        let (v, w) = elems[frontier].clone();
        frontier += 1;
        for (gi, &g) in gens.iter().enumerate() {
            let prod = alg.mul(&alg.basis_vector(g), &v);
            if ech.push_row(&prod) {
                let mut word = vec![gi];
                word.extend(&w);
                elems.push((prod, word));
            }
        }
    }
    (ech, elems)
}

fn compute_generators(alg: &Algebra) -> Generators {
    let mut gens = Vec::new();
    for k in 0..alg.dim {
        let (ech, _) = closure(alg, &gens);
        if !ech.contains(&alg.basis_vector(k)) {
            gens.push(k);
        }
    }
    let (_, elems) = closure(alg, &gens);
    let p = alg.p;
    let n = elems.len();
    let mut expr = vec![vec![0; n]; alg.dim];
    if n > 0 {
        // Columns are the spanning elements; invert to express each basis vector.
        let cols: Vec<Vec<u32>> = elems.iter().map(|(v, _)| v.clone()).collect();
        let m = FpMatrix::from_columns(p, alg.dim, &cols);
        let inv = inverse(&m).expect("closure spans the algebra");
        for (k, e) in expr.iter_mut().enumerate() {
            for (w, slot) in e.iter_mut().enumerate() {
                *slot = inv.get(w, k);
            }
        }
    }
    Generators { gens, words: elems.into_iter().map(|(_, w)| w).collect(), expr }
}

/// Outcome of [`validate_algebra`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AlgebraReport {
    /// Basis triples `(i, j, k)` with `(b_i b_j) b_k != b_i (b_j b_k)`.
    pub associativity_failures: Vec<(usize, usize, usize)>,
    /// Basis indices `i` with `1 b_i != b_i` or `b_i 1 != b_i`.
    pub unit_failures: Vec<usize>,
}

impl AlgebraReport {
    pub fn passed(&self) -> bool {
        self.associativity_failures.is_empty() && self.unit_failures.is_empty()
    }
}

/// Checks associativity on all basis triples and both unit laws.
pub fn validate_algebra(alg: &Algebra) -> AlgebraReport {
    let mut report = AlgebraReport::default();
    let d = alg.dim;
    for i in 0..d {
        let bi = alg.basis_vector(i);
        if alg.mul(&alg.unit, &bi) != bi || alg.mul(&bi, &alg.unit) != bi {
            report.unit_failures.push(i);
        }
        for j in 0..d {
            let ij = alg.product_basis(i, j).to_vec();
            for k in 0..d {
                let bk = alg.basis_vector(k);
                let left = alg.mul(&ij, &bk);
                let right = alg.mul(&bi, alg.product_basis(j, k));
                if left != right {
                    report.associativity_failures.push((i, j, k));
                }
            }
        }
    }
    report
}

/// The opposite algebra: `c^op[i][j] = c[j][i]` on the same basis.
pub fn opposite_algebra(alg: &Algebra) -> Algebra {
    Algebra::from_fn(alg.p, alg.dim, alg.unit.clone(), |i, j| alg.product_basis(j, i).to_vec())
        .expect("opposite of a valid algebra")
}

/// Whether two algebra handles denote the same algebra.
pub fn same_algebra(a: &Arc<Algebra>, b: &Arc<Algebra>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// A unital algebra homomorphism `f: R -> S`, stored as the `dim S x dim R`
/// matrix whose column `i` is `f(b_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraMorphism {
    pub source: Arc<Algebra>,
    pub target: Arc<Algebra>,
    pub matrix: FpMatrix,
}

impl AlgebraMorphism {
    /// Validates multiplicativity on basis pairs and preservation of the unit.
    pub fn new(source: Arc<Algebra>, target: Arc<Algebra>, matrix: FpMatrix) -> Result<Self> {
        if matrix.shape() != (target.dim, source.dim) || matrix.prime() != source.p || source.p != target.p {
            return Err(AlgmodError::Shape("morphism matrix must be dim(S) x dim(R) over the same prime".into()));
        }
        let f = AlgebraMorphism { source, target, matrix };
        if f.apply(f.source.unit()) != f.target.unit() {
            return Err(AlgmodError::InvalidAlgebra("morphism does not preserve the unit".into()));
        }
        for i in 0..f.source.dim {
            for j in 0..f.source.dim {
                let lhs = f.apply(f.source.product_basis(i, j));
                let rhs = f.target.mul(&f.matrix.col(i), &f.matrix.col(j));
                if lhs != rhs {
                    return Err(AlgmodError::InvalidAlgebra(format!("f(b{i} b{j}) != f(b{i}) f(b{j})")));
                }
            }
        }
        Ok(f)
    }

    pub fn apply(&self, x: &[u32]) -> Vec<u32> {
        self.matrix.apply(x)
    }

    /// The kernel of `f` as a subspace of the source.
    pub fn kernel(&self) -> SubspaceBasis {
        cotlab_linalg::kernel_basis(&self.matrix)
    }
}
