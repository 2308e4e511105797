//! The category algebra: all morphisms with composition, non-composable
//! products set to zero.

use std::sync::Arc;

use cotlab_algmod::Algebra;

use crate::category::EnrichedCategory;

/// The category algebra with its block grading.
///
/// Basis order: for each source `A`, for each target `B`, the basis of
/// `Hom(A, B)`. The product of `g ∈ Hom(B, C)` and `f ∈ Hom(A, B')` is
/// `g ∘ f` when `B = B'` and zero otherwise.
#[derive(Clone, Debug)]
pub struct CategoryAlgebra {
    pub algebra: Arc<Algebra>,
    offsets: Vec<Vec<usize>>,
    blocks: Vec<(usize, usize, usize)>,
}

impl CategoryAlgebra {
    pub fn new(cat: &EnrichedCategory) -> Self {
        let n = cat.object_count();
        let mut offsets = vec![vec![0; n]; n];
        let mut blocks = Vec::new();
        let mut off = 0;
        for a in 0..n {
            for b in 0..n {
                offsets[a][b] = off;
                for k in 0..cat.hom_dim(a, b) {
                    blocks.push((a, b, k));
                }
                off += cat.hom_dim(a, b);
            }
        }
        let dim = off;
        let mut unit = vec![0; dim];
        for a in 0..n {
            let o = offsets[a][a];
            unit[o..o + cat.hom_dim(a, a)].copy_from_slice(cat.identity(a));
        }
        let algebra = Algebra::from_fn(cat.prime(), dim, unit, |i, j| {
            let (b, c, g) = blocks[i];
            let (a, b2, f) = blocks[j];
            let mut v = vec![0; dim];
            if b == b2 {
                let o = offsets[a][c];
                v[o..o + cat.hom_dim(a, c)].copy_from_slice(cat.compose_basis(a, b, c, g, f));
            }
            v
        })
        .expect("category algebra constants have the right shape");
        CategoryAlgebra { algebra: Arc::new(algebra), offsets, blocks }
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// Flat index of basis element `k` of `Hom(A, B)`.
    pub fn index(&self, a: usize, b: usize, k: usize) -> usize {
        self.offsets[a][b] + k
    }

    /// Offset of the `Hom(A, B)` block.
    pub fn offset(&self, a: usize, b: usize) -> usize {
        self.offsets[a][b]
    }

    /// `(A, B, k)` of a flat index.
    pub fn block_of(&self, i: usize) -> (usize, usize, usize) {
        self.blocks[i]
    }

    /// The idempotent `id_A` as an element of the algebra.
    pub fn idempotent(&self, cat: &EnrichedCategory, a: usize) -> Vec<u32> {
        let mut v = vec![0; self.dim()];
        let o = self.offsets[a][a];
        v[o..o + cat.hom_dim(a, a)].copy_from_slice(cat.identity(a));
        v
    }
}
