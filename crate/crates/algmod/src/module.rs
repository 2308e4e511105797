//! Left and right modules, bimodules and module homomorphisms.

use std::sync::Arc;

use cotlab_linalg::{
    is_injective, is_invertible, is_surjective, kernel_basis, quotient_space, solve_in_span, FpMatrix,
    RowEchelon, SubspaceBasis,
};

use crate::algebra::{same_algebra, Algebra, AlgebraMorphism};
use crate::error::{AlgmodError, Result};

/// A finite-dimensional left module: `action[i]` is the matrix of `b_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeftModule {
    alg: Arc<Algebra>,
    dim: usize,
    action: Vec<FpMatrix>,
}

/// Linear combination `Σ a_i mats[i]`.
pub(crate) fn combine(p: u32, dim_r: usize, dim_c: usize, mats: &[FpMatrix], a: &[u32]) -> FpMatrix {
    let mut out = FpMatrix::zeros(p, dim_r, dim_c);
    for (m, &c) in mats.iter().zip(a) {
        if c != 0 {
            out.add_scaled(m, c);
        }
    }
    out
}

/// Extends generator matrices to all basis elements via the word expressions.
/// `compose(x, y)` gives the matrix of the word `g x` from the generator
/// matrix `x` and the matrix `y` of the rest of the word.
fn extend_from_generators(
    alg: &Algebra,
    dim: usize,
    gens: &[FpMatrix],
    compose: impl Fn(&FpMatrix, &FpMatrix) -> FpMatrix,
) -> Vec<FpMatrix> {
    let p = alg.prime();
    let g = alg.generators();
    // Words are built by prepending a generator to an earlier word.
    let mut word_mats: Vec<FpMatrix> = Vec::with_capacity(g.words.len());
    for w in &g.words {
        let m = match w.split_first() {
            None => FpMatrix::identity(p, dim),
            Some((&first, rest)) => {
                let idx = g.words.iter().position(|v| v.as_slice() == rest).expect("words are prefix closed");
                compose(&gens[first], &word_mats[idx])
            }
        };
        word_mats.push(m);
    }
    g.expr.iter().map(|e| combine(p, dim, dim, &word_mats, e)).collect()
}

/// Checks `ρ(1) = I` and `ρ(g) ρ(b_j) = ρ(g b_j)` for generators `g`,
/// which is equivalent to multiplicativity on all of the algebra.
fn check_left_action(alg: &Algebra, dim: usize, action: &[FpMatrix]) -> Result<()> {
    let p = alg.prime();
    if action.len() != alg.dim() {
        return Err(AlgmodError::InvalidModule(format!("{} action matrices for an algebra of dim {}", action.len(), alg.dim())));
    }
    for (i, m) in action.iter().enumerate() {
        if m.shape() != (dim, dim) || m.prime() != p {
            return Err(AlgmodError::InvalidModule(format!("action matrix {i} must be {dim}x{dim} over GF({p})")));
        }
    }
    if combine(p, dim, dim, action, alg.unit()) != FpMatrix::identity(p, dim) {
        return Err(AlgmodError::InvalidModule("the unit does not act as the identity".into()));
    }
    for &g in &alg.generators().gens {
        for j in 0..alg.dim() {
            let lhs = action[g].mul(&action[j]);
            let rhs = combine(p, dim, dim, action, alg.product_basis(g, j));
            if lhs != rhs {
                return Err(AlgmodError::InvalidModule(format!("ρ(b{g}) ρ(b{j}) != ρ(b{g} b{j})")));
            }
        }
    }
    Ok(())
}

impl LeftModule {
    /// A module from the action of every basis element, validated.
    pub fn new(alg: Arc<Algebra>, dim: usize, action: Vec<FpMatrix>) -> Result<Self> {
        check_left_action(&alg, dim, &action)?;
        Ok(LeftModule { alg, dim, action })
    }

    /// A module from matrices for the algebra generators, validated.
    pub fn from_generator_matrices(alg: Arc<Algebra>, dim: usize, gens: &[FpMatrix]) -> Result<Self> {
        let p = alg.prime();
        if gens.len() != alg.generator_count() || gens.iter().any(|m| m.shape() != (dim, dim) || m.prime() != p) {
            return Err(AlgmodError::InvalidModule(format!(
                "expected {} generator matrices of size {dim}x{dim}",
                alg.generator_count()
            )));
        }
        let action = extend_from_generators(&alg, dim, gens, |g, rest| g.mul(rest));
        Self::new(alg, dim, action)
    }

    /// Wraps an action the caller has already validated.
    pub fn from_parts(alg: Arc<Algebra>, dim: usize, action: Vec<FpMatrix>) -> Self {
        debug_assert!(check_left_action(&alg, dim, &action).is_ok());
        LeftModule { alg, dim, action }
    }

    /// The regular module `A` acting on itself from the left.
    pub fn regular(alg: Arc<Algebra>) -> Self {
        let action = (0..alg.dim()).map(|i| alg.left_mult(i).clone()).collect();
        LeftModule { dim: alg.dim(), alg, action }
    }

    /// The free module `A^r`, coordinates `i * dim A + k`.
    pub fn free(alg: Arc<Algebra>, r: usize) -> Self {
        let p = alg.prime();
        let action = (0..alg.dim())
            .map(|i| {
                let blocks: Vec<&FpMatrix> = std::iter::repeat(alg.left_mult(i)).take(r).collect();
                FpMatrix::block_diag(p, &blocks)
            })
            .collect();
        LeftModule { dim: alg.dim() * r, alg, action }
    }

    pub fn zero(alg: Arc<Algebra>) -> Self {
        let p = alg.prime();
        let action = vec![FpMatrix::zeros(p, 0, 0); alg.dim()];
        LeftModule { alg, dim: 0, action }
    }

    /// Direct sum with concatenated coordinates.
    pub fn direct_sum(alg: Arc<Algebra>, parts: &[&LeftModule]) -> Result<Self> {
        if parts.iter().any(|m| !same_algebra(&m.alg, &alg)) {
            return Err(AlgmodError::AlgebraMismatch);
        }
        let p = alg.prime();
        let dim = parts.iter().map(|m| m.dim).sum();
        let action = (0..alg.dim())
            .map(|i| {
                let blocks: Vec<&FpMatrix> = parts.iter().map(|m| &m.action[i]).collect();
                FpMatrix::block_diag(p, &blocks)
            })
            .collect();
        Ok(LeftModule { alg, dim, action })
    }

    pub fn alg(&self) -> &Arc<Algebra> {
        &self.alg
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn prime(&self) -> u32 {
        self.alg.prime()
    }
    pub fn is_zero(&self) -> bool {
        self.dim == 0
    }

    /// Matrix of the basis element `b_i`.
    pub fn action(&self, i: usize) -> &FpMatrix {
        &self.action[i]
    }
    pub fn actions(&self) -> &[FpMatrix] {
        &self.action
    }

    /// Matrices of the algebra generators.
    pub fn generator_matrices(&self) -> Vec<FpMatrix> {
        self.alg.generators().gens.iter().map(|&g| self.action[g].clone()).collect()
    }

    /// Matrix of an arbitrary algebra element.
    pub fn act(&self, a: &[u32]) -> FpMatrix {
        combine(self.prime(), self.dim, self.dim, &self.action, a)
    }

    /// The submodule generated by the given vectors.
    pub fn generated_submodule(&self, vectors: &[Vec<u32>]) -> SubspaceBasis {
        let mut all = Vec::new();
        for v in vectors {
            for m in &self.action {
                all.push(m.apply(v));
            }
        }
        SubspaceBasis::span(self.prime(), self.dim, &all)
    }

    /// Whether a subspace is closed under the action.
    pub fn is_submodule(&self, s: &SubspaceBasis) -> bool {
        let gens = &self.alg.generators().gens;
        s.vectors().iter().all(|v| gens.iter().all(|&g| s.contains(&self.action[g].apply(v))))
    }

    /// The submodule on the column span of `cols` (independent columns) and
    /// its inclusion; fails if the span is not closed under the action.
    pub fn submodule(self: &Arc<Self>, cols: &FpMatrix) -> Result<(Arc<LeftModule>, ModuleMap)> {
        let k = cols.cols();
        if cols.rows() != self.dim || cotlab_linalg::rank(cols) != k {
            return Err(AlgmodError::Shape("submodule basis must be independent columns".into()));
        }
        let span = SubspaceBasis::column_span(cols);
        let mut action = Vec::with_capacity(self.alg.dim());
        for m in &self.action {
            let img = m.mul(cols);
            for c in 0..k {
                if !span.contains(&img.col(c)) {
                    return Err(AlgmodError::InvalidModule("subspace is not closed under the action".into()));
                }
            }
            action.push(solve_in_span(cols, &img));
        }
        let sub = Arc::new(LeftModule { alg: self.alg.clone(), dim: k, action });
        let inc = ModuleMap { source: sub.clone(), target: self.clone(), matrix: cols.clone() };
        Ok((sub, inc))
    }

    /// The quotient by a submodule, with projection map and a linear section.
    pub fn quotient(self: &Arc<Self>, s: &SubspaceBasis) -> Result<(Arc<LeftModule>, ModuleMap, FpMatrix)> {
        if !self.is_submodule(s) {
            return Err(AlgmodError::InvalidModule("quotient by a non-submodule".into()));
        }
        let (proj, sec) = quotient_space(self.dim, s)?;
        let action = self.action.iter().map(|m| proj.mul(m).mul(&sec)).collect();
        let q = Arc::new(LeftModule { alg: self.alg.clone(), dim: proj.rows(), action });
        let map = ModuleMap { source: self.clone(), target: q.clone(), matrix: proj };
        Ok((q, map, sec))
    }

    /// The linear dual `Hom(M, GF(p))`, a right module with `(f·a)(m) = f(a m)`
    /// (transposed action).
    pub fn dual(&self) -> RightModule {
        let action = self.action.iter().map(|m| m.transpose()).collect();
        RightModule { alg: self.alg.clone(), dim: self.dim, action }
    }

    /// The linear dual viewed as a left module over the opposite algebra.
    pub fn dual_opposite(&self) -> LeftModule {
        self.dual().to_left_opposite()
    }

    /// The dual of a module over the opposite algebra, as a module over
    /// `target`, which must be the opposite of this module's algebra.
    pub fn dual_over(&self, target: Arc<Algebra>) -> Result<LeftModule> {
        if *target.opposite() != *self.alg {
            return Err(AlgmodError::AlgebraMismatch);
        }
        let action = self.action.iter().map(|m| m.transpose()).collect();
        Ok(LeftModule { alg: target, dim: self.dim, action })
    }

    /// Restriction of scalars along `f: R -> S` (this module lives over `S`).
    pub fn restrict(&self, f: &AlgebraMorphism) -> Result<LeftModule> {
        if !same_algebra(&f.target, &self.alg) {
            return Err(AlgmodError::AlgebraMismatch);
        }
        let action = (0..f.source.dim()).map(|i| self.act(&f.matrix.col(i))).collect();
        Ok(LeftModule { alg: f.source.clone(), dim: self.dim, action })
    }

    /// The same module viewed as a right module over the opposite algebra.
    pub fn as_right_over_opposite(&self) -> RightModule {
        RightModule { alg: self.alg.opposite(), dim: self.dim, action: self.action.clone() }
    }

    /// Module generators chosen greedily in basis order: a standard basis
    /// vector is kept when it is not in the submodule generated so far.
    pub fn greedy_generators(&self) -> Vec<Vec<u32>> {
        let p = self.prime();
        let mut ech = RowEchelon::new(p, self.dim);
        let mut gens = Vec::new();
        for i in 0..self.dim {
            let mut e = vec![0; self.dim];
            e[i] = 1;
            if ech.contains(&e) {
                continue;
            }
            for m in &self.action {
                ech.push_row(&m.col(i));
            }
            gens.push(e);
            if ech.rank() == self.dim {
                break;
            }
        }
        gens
    }
}

/// A right module: `action[i]` is the matrix of `m ↦ m b_i`, so
/// `action(b_i b_j) = action(b_j) action(b_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RightModule {
    alg: Arc<Algebra>,
    dim: usize,
    action: Vec<FpMatrix>,
}

impl RightModule {
    pub fn new(alg: Arc<Algebra>, dim: usize, action: Vec<FpMatrix>) -> Result<Self> {
        let op = alg.opposite();
        check_left_action(&op, dim, &action)?;
        Ok(RightModule { alg, dim, action })
    }

    pub fn from_generator_matrices(alg: Arc<Algebra>, dim: usize, gens: &[FpMatrix]) -> Result<Self> {
        let op = alg.opposite();
        let left = LeftModule::from_generator_matrices(op, dim, gens)?;
        Ok(RightModule { alg, dim, action: left.action })
    }

    /// Wraps parts the caller has already validated.
    pub fn from_parts(alg: Arc<Algebra>, dim: usize, action: Vec<FpMatrix>) -> Self {
        RightModule { alg, dim, action }
    }

    /// The regular right module.
    pub fn regular(alg: Arc<Algebra>) -> Self {
        let action = (0..alg.dim()).map(|i| alg.right_mult(i)).collect();
        RightModule { dim: alg.dim(), alg, action }
    }

    pub fn alg(&self) -> &Arc<Algebra> {
        &self.alg
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn prime(&self) -> u32 {
        self.alg.prime()
    }
    pub fn action(&self, i: usize) -> &FpMatrix {
        &self.action[i]
    }
    pub fn actions(&self) -> &[FpMatrix] {
        &self.action
    }
    pub fn act(&self, a: &[u32]) -> FpMatrix {
        combine(self.prime(), self.dim, self.dim, &self.action, a)
    }

    /// The same module as a left module over the opposite algebra.
    pub fn to_left_opposite(&self) -> LeftModule {
        LeftModule { alg: self.alg.opposite(), dim: self.dim, action: self.action.clone() }
    }

    /// The linear dual, a left module over the same algebra.
    pub fn dual(&self) -> LeftModule {
        let action = self.action.iter().map(|m| m.transpose()).collect();
        LeftModule { alg: self.alg.clone(), dim: self.dim, action }
    }

    /// Restriction of scalars along `f: R -> S` (this module lives over `S`).
    pub fn restrict(&self, f: &AlgebraMorphism) -> Result<RightModule> {
        if !same_algebra(&f.target, &self.alg) {
            return Err(AlgmodError::AlgebraMismatch);
        }
        let action = (0..f.source.dim()).map(|i| self.act(&f.matrix.col(i))).collect();
        Ok(RightModule { alg: f.source.clone(), dim: self.dim, action })
    }
}

/// An `(R, S)`-bimodule: a left `R`-action commuting with a right `S`-action.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bimodule {
    left_alg: Arc<Algebra>,
    right_alg: Arc<Algebra>,
    dim: usize,
    left: Vec<FpMatrix>,
    right: Vec<FpMatrix>,
}

impl Bimodule {
    pub fn new(
        left_alg: Arc<Algebra>,
        right_alg: Arc<Algebra>,
        dim: usize,
        left: Vec<FpMatrix>,
        right: Vec<FpMatrix>,
    ) -> Result<Self> {
        check_left_action(&left_alg, dim, &left)?;
        check_left_action(&right_alg.opposite(), dim, &right)?;
        for &g in &left_alg.generators().gens {
            for &h in &right_alg.generators().gens {
                if left[g].mul(&right[h]) != right[h].mul(&left[g]) {
                    return Err(AlgmodError::InvalidModule(format!("left b{g} and right b{h} do not commute")));
                }
            }
        }
        Ok(Bimodule { left_alg, right_alg, dim, left, right })
    }

    /// Wraps parts the caller has already validated.
    pub fn from_parts(
        left_alg: Arc<Algebra>,
        right_alg: Arc<Algebra>,
        dim: usize,
        left: Vec<FpMatrix>,
        right: Vec<FpMatrix>,
    ) -> Self {
        Bimodule { left_alg, right_alg, dim, left, right }
    }

    /// `A` as an `(A, A)`-bimodule.
    pub fn regular(alg: Arc<Algebra>) -> Self {
        let left = (0..alg.dim()).map(|i| alg.left_mult(i).clone()).collect();
        let right = (0..alg.dim()).map(|i| alg.right_mult(i)).collect();
        Bimodule { left_alg: alg.clone(), right_alg: alg.clone(), dim: alg.dim(), left, right }
    }

    pub fn left_alg(&self) -> &Arc<Algebra> {
        &self.left_alg
    }
    pub fn right_alg(&self) -> &Arc<Algebra> {
        &self.right_alg
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn left_action(&self, i: usize) -> &FpMatrix {
        &self.left[i]
    }
    pub fn right_action(&self, i: usize) -> &FpMatrix {
        &self.right[i]
    }

    pub fn as_left(&self) -> LeftModule {
        LeftModule { alg: self.left_alg.clone(), dim: self.dim, action: self.left.clone() }
    }
    pub fn as_right(&self) -> RightModule {
        RightModule { alg: self.right_alg.clone(), dim: self.dim, action: self.right.clone() }
    }
}

/// A homomorphism of left modules; `matrix` is `dim target x dim source`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleMap {
    pub source: Arc<LeftModule>,
    pub target: Arc<LeftModule>,
    pub matrix: FpMatrix,
}

impl ModuleMap {
    /// Validates shape and compatibility with the generator actions.
    pub fn new(source: Arc<LeftModule>, target: Arc<LeftModule>, matrix: FpMatrix) -> Result<Self> {
        if !same_algebra(&source.alg, &target.alg) {
            return Err(AlgmodError::AlgebraMismatch);
        }
        if matrix.shape() != (target.dim, source.dim) || matrix.prime() != source.prime() {
            return Err(AlgmodError::Shape(format!(
                "map matrix is {:?}, expected {}x{}",
                matrix.shape(),
                target.dim,
                source.dim
            )));
        }
        for &g in &source.alg.generators().gens {
            if target.action[g].mul(&matrix) != matrix.mul(&source.action[g]) {
                return Err(AlgmodError::NotHomomorphism(format!("does not commute with b{g}")));
            }
        }
        Ok(ModuleMap { source, target, matrix })
    }

    /// Wraps parts the caller has already validated.
    pub fn from_parts(source: Arc<LeftModule>, target: Arc<LeftModule>, matrix: FpMatrix) -> Self {
        ModuleMap { source, target, matrix }
    }

    pub fn identity(m: &Arc<LeftModule>) -> Self {
        ModuleMap { source: m.clone(), target: m.clone(), matrix: FpMatrix::identity(m.prime(), m.dim) }
    }

    pub fn zero(source: &Arc<LeftModule>, target: &Arc<LeftModule>) -> Self {
        ModuleMap {
            source: source.clone(),
            target: target.clone(),
            matrix: FpMatrix::zeros(source.prime(), target.dim, source.dim),
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &ModuleMap) -> Result<ModuleMap> {
        if other.target.dim != self.source.dim || !same_algebra(&self.source.alg, &other.target.alg) {
            return Err(AlgmodError::Shape("composition of incompatible maps".into()));
        }
        Ok(ModuleMap { source: other.source.clone(), target: self.target.clone(), matrix: self.matrix.mul(&other.matrix) })
    }

    pub fn is_injective(&self) -> bool {
        is_injective(&self.matrix)
    }
    pub fn is_surjective(&self) -> bool {
        is_surjective(&self.matrix)
    }
    pub fn is_isomorphism(&self) -> bool {
        is_invertible(&self.matrix)
    }
    pub fn rank(&self) -> usize {
        cotlab_linalg::rank(&self.matrix)
    }

    /// The kernel submodule and its inclusion.
    pub fn kernel(&self) -> (Arc<LeftModule>, ModuleMap) {
        let k = kernel_basis(&self.matrix);
        self.source.submodule(&k.as_columns()).expect("kernels are submodules")
    }

    /// The image submodule of the target and its inclusion.
    pub fn image(&self) -> (Arc<LeftModule>, ModuleMap) {
        let span = SubspaceBasis::column_span(&self.matrix);
        self.target.submodule(&span.as_columns()).expect("images are submodules")
    }

    /// The cokernel with its projection map and a linear section.
    pub fn cokernel(&self) -> (Arc<LeftModule>, ModuleMap, FpMatrix) {
        let span = SubspaceBasis::column_span(&self.matrix);
        self.target.quotient(&span).expect("images are submodules")
    }

    /// `self - other`.
    pub fn sub(&self, other: &ModuleMap) -> ModuleMap {
        ModuleMap { source: self.source.clone(), target: self.target.clone(), matrix: self.matrix.sub(&other.matrix) }
    }

    /// Scalar multiple.
    pub fn scale(&self, s: u32) -> ModuleMap {
        let s = s % self.source.prime();
        ModuleMap { source: self.source.clone(), target: self.target.clone(), matrix: self.matrix.scale(s) }
    }
}
