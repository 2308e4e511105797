//! Subspaces given by independent basis rows.

use crate::echelon::RowEchelon;
use crate::error::{LinalgError, Result};
use crate::matrix::FpMatrix;

/// A subspace of `GF(p)^ambient_dim`, stored as the rows of `basis`.
///
/// Invariant: the rows are linearly independent, so `dim() == basis.rows()`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceBasis {
    ambient_dim: usize,
    basis: FpMatrix,
}

impl SubspaceBasis {
    /// Wraps independent rows, rejecting rank-deficient input.
    pub fn new(basis: FpMatrix) -> Result<Self> {
        let rank = crate::ops::rank(&basis);
        if rank != basis.rows() {
            return Err(LinalgError::RankDeficient { rank, rows: basis.rows() });
        }
        Ok(SubspaceBasis { ambient_dim: basis.cols(), basis })
    }

    /// The zero subspace.
    pub fn zero(p: u32, ambient_dim: usize) -> Self {
        SubspaceBasis { ambient_dim, basis: FpMatrix::zeros(p, 0, ambient_dim) }
    }

    /// The whole space, with the standard basis.
    pub fn full(p: u32, ambient_dim: usize) -> Self {
        SubspaceBasis { ambient_dim, basis: FpMatrix::identity(p, ambient_dim) }
    }

    /// Span of arbitrary vectors, reduced to its canonical (RREF) basis.
    pub fn span(p: u32, ambient_dim: usize, vectors: &[Vec<u32>]) -> Self {
        let mut ech = RowEchelon::new(p, ambient_dim);
        for v in vectors {
            ech.push_row(v);
        }
        let (_, rows) = ech.into_reduced();
        SubspaceBasis { ambient_dim, basis: FpMatrix::from_row_vecs(p, ambient_dim, &rows) }
    }

    /// Span of the columns of `m` (the image of the map `m`).
    pub fn column_span(m: &FpMatrix) -> Self {
        let cols: Vec<Vec<u32>> = (0..m.cols()).map(|c| m.col(c)).collect();
        Self::span(m.prime(), m.rows(), &cols)
    }

    pub fn prime(&self) -> u32 {
        self.basis.prime()
    }
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }
    pub fn dim(&self) -> usize {
        self.basis.rows()
    }
    pub fn basis_matrix(&self) -> &FpMatrix {
        &self.basis
    }
    pub fn vectors(&self) -> Vec<Vec<u32>> {
        self.basis.to_rows()
    }

    /// The basis vectors as the columns of an `ambient x dim` matrix.
    pub fn as_columns(&self) -> FpMatrix {
        self.basis.transpose()
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        let mut ech = RowEchelon::new(self.prime(), self.ambient_dim);
        for r in 0..self.dim() {
            ech.push_row(self.basis.row(r));
        }
        !ech.push_row(v)
    }

    /// Whether `self ⊆ other`.
    pub fn is_subspace_of(&self, other: &SubspaceBasis) -> bool {
        (0..self.dim()).all(|r| other.contains(self.basis.row(r)))
    }

    /// Sum of two subspaces.
    pub fn sum(&self, other: &SubspaceBasis) -> Self {
        let mut v = self.vectors();
        v.extend(other.vectors());
        Self::span(self.prime(), self.ambient_dim, &v)
    }

    /// Intersection of two subspaces.
    pub fn intersection(&self, other: &SubspaceBasis) -> Self {
        // x = Σ a_i u_i = Σ b_j w_j  ⇔  [U^T | -W^T] (a; b) = 0.
        let p = self.prime();
        let ut = self.as_columns();
        let wt = other.as_columns().neg();
        let k = crate::ops::kernel_basis(&FpMatrix::hstack(&[&ut, &wt]));
        let coeffs = k.basis_matrix().block(0, 0, k.dim(), self.dim());
        let vecs: Vec<Vec<u32>> = (0..k.dim()).map(|r| ut.apply(coeffs.row(r))).collect();
        Self::span(p, self.ambient_dim, &vecs)
    }
}
