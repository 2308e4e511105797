//! Free presentations and syzygies.

use std::sync::Arc;

use cotlab_linalg::{solve_linear, FpMatrix};

use crate::algebra::same_algebra;
use crate::error::{AlgmodError, Result};
use crate::module::{LeftModule, ModuleMap};

/// The map `A^r -> N` sending the `i`-th free generator to `images[i]`;
/// column `i * dim A + k` is `b_k · images[i]`.
pub fn free_map_matrix(n: &LeftModule, images: &[Vec<u32>]) -> FpMatrix {
    let p = n.prime();
    let da = n.alg().dim();
    let mut m = FpMatrix::zeros(p, n.dim(), images.len() * da);
    for (i, v) in images.iter().enumerate() {
        for k in 0..da {
            let col = n.action(k).apply(v);
            for (r, &x) in col.iter().enumerate() {
                m.set(r, i * da + k, x);
            }
        }
    }
    m
}

/// A free presentation `0 -> K -> F -> M -> 0` with `F = A^rank`.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub module: Arc<LeftModule>,
    pub free: Arc<LeftModule>,
    pub rank: usize,
    /// Images in `M` of the free generators.
    pub generators: Vec<Vec<u32>>,
    /// `F -> M`.
    pub cover: ModuleMap,
    pub kernel: Arc<LeftModule>,
    /// `K -> F`.
    pub inclusion: ModuleMap,
}

impl Presentation {
    /// Presentation on the given module generators; fails if they do not
    /// generate `M`.
    pub fn with_generators(m: &Arc<LeftModule>, generators: Vec<Vec<u32>>) -> Result<Self> {
        let rank = generators.len();
        let free = Arc::new(LeftModule::free(m.alg().clone(), rank));
        let mat = free_map_matrix(m, &generators);
        if cotlab_linalg::rank(&mat) != m.dim() {
            return Err(AlgmodError::InvalidModule("presentation generators do not generate the module".into()));
        }
        let cover = ModuleMap::from_parts(free.clone(), m.clone(), mat);
        let (kernel, inclusion) = cover.kernel();
        Ok(Presentation { module: m.clone(), free, rank, generators, cover, kernel, inclusion })
    }

    /// Lifts the free map with generator images `gens_images` in `M` along
    /// the cover, giving a map from a free module into `F`.
    fn lift_free(&self, gens_images: &[Vec<u32>]) -> Result<FpMatrix> {
        let p = self.module.prime();
        let b = FpMatrix::from_columns(p, self.module.dim(), gens_images);
        let pre = solve_linear(&self.cover.matrix, &b)?.ok_or_else(|| AlgmodError::NotExact("cover is not surjective".into()))?;
        let pre_cols: Vec<Vec<u32>> = (0..pre.cols()).map(|c| pre.col(c)).collect();
        Ok(free_map_matrix(&self.free, &pre_cols))
    }

    /// Lifts `f: M -> M'` to `F -> F'` commuting with the covers, and
    /// restricts it to the kernels `K -> K'`.
    pub fn lift_map(&self, target: &Presentation, f: &ModuleMap) -> Result<(ModuleMap, ModuleMap)> {
        if f.source.dim() != self.module.dim() || f.target.dim() != target.module.dim() {
            return Err(AlgmodError::Shape("map does not connect the presented modules".into()));
        }
        let images: Vec<Vec<u32>> = self.generators.iter().map(|g| f.matrix.apply(g)).collect();
        let lift = target.lift_free(&images)?;
        let on_kernel = solve_linear(&target.inclusion.matrix, &lift.mul(&self.inclusion.matrix))?
            .ok_or_else(|| AlgmodError::NotExact("lift does not preserve kernels".into()))?;
        Ok((
            ModuleMap::from_parts(self.free.clone(), target.free.clone(), lift),
            ModuleMap::from_parts(self.kernel.clone(), target.kernel.clone(), on_kernel),
        ))
    }
}

/// The presentation with one generator per basis vector (`F` of rank `dim M`).
pub fn free_presentation(m: &Arc<LeftModule>) -> Presentation {
    let gens = (0..m.dim())
        .map(|i| {
            let mut e = vec![0; m.dim()];
            e[i] = 1;
            e
        })
        .collect();
    Presentation::with_generators(m, gens).expect("basis vectors generate")
}

/// A presentation on greedily chosen module generators (usually far smaller
/// than [`free_presentation`]).
pub fn generator_presentation(m: &Arc<LeftModule>) -> Presentation {
    Presentation::with_generators(m, m.greedy_generators()).expect("greedy generators generate")
}

/// Successive syzygy presentations: entry `j` presents the `j`-th syzygy
/// (entry 0 presents `M` itself).
pub fn syzygy_chain(m: &Arc<LeftModule>, length: usize, minimal: bool) -> Vec<Presentation> {
    let mut out: Vec<Presentation> = Vec::with_capacity(length);
    let mut cur = m.clone();
    for _ in 0..length {
        let pres = if minimal { generator_presentation(&cur) } else { free_presentation(&cur) };
        cur = pres.kernel.clone();
        out.push(pres);
    }
    out
}

/// The `n`-th syzygy module of `M` (`n = 0` gives `M`).
pub fn syzygy(m: &Arc<LeftModule>, n: usize) -> Arc<LeftModule> {
    syzygy_chain(m, n, true).last().map_or_else(|| m.clone(), |p| p.kernel.clone())
}

/// Checks that two modules live over the same algebra.
pub(crate) fn check_same(a: &LeftModule, b: &LeftModule) -> Result<()> {
    if same_algebra(a.alg(), b.alg()) {
        Ok(())
    } else {
        Err(AlgmodError::AlgebraMismatch)
    }
}
