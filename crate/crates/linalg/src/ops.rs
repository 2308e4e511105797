//! Row reduction, linear solving, kernels and quotients.

use crate::echelon::RowEchelon;
use crate::error::{LinalgError, Result};
use crate::field;
use crate::matrix::FpMatrix;
use crate::subspace::SubspaceBasis;

/// Result of [`row_reduce`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowReduction {
    pub rank: usize,
    /// The reduced row echelon form, same shape as the input.
    pub rref: FpMatrix,
    /// Pivot columns, strictly increasing.
    pub pivots: Vec<usize>,
}

fn echelon_of(m: &FpMatrix) -> RowEchelon {
    let mut ech = RowEchelon::new(m.prime(), m.cols());
    for r in 0..m.rows() {
        ech.push_row(m.row(r));
    }
    ech
}

/// Reduced row echelon form with rank and pivot columns.
pub fn row_reduce(m: &FpMatrix) -> RowReduction {
    let (pivots, rows) = echelon_of(m).into_reduced();
    let mut rref = FpMatrix::zeros(m.prime(), m.rows(), m.cols());
    for (i, r) in rows.iter().enumerate() {
        for (c, &v) in r.iter().enumerate() {
            rref.set(i, c, v);
        }
    }
    RowReduction { rank: pivots.len(), rref, pivots }
}

pub fn rank(m: &FpMatrix) -> usize {
    echelon_of(m).rank()
}

/// Solves `A X = B`, returning `None` when the system is inconsistent.
///
/// The solution is deterministic: every free variable is set to zero.
pub fn solve_linear(a: &FpMatrix, b: &FpMatrix) -> Result<Option<FpMatrix>> {
    if a.prime() != b.prime() {
        return Err(LinalgError::PrimeMismatch { left: a.prime(), right: b.prime() });
    }
    if a.rows() != b.rows() {
        return Err(LinalgError::DimensionMismatch {
            op: "solve_linear",
            detail: format!("A has {} rows, B has {}", a.rows(), b.rows()),
        });
    }
    let aug = FpMatrix::hstack(&[a, b]);
    let (pivots, rows) = echelon_of(&aug).into_reduced();
    if pivots.iter().any(|&c| c >= a.cols()) {
        return Ok(None);
    }
    let mut x = FpMatrix::zeros(a.prime(), a.cols(), b.cols());
    for (row, &pc) in rows.iter().zip(&pivots) {
        for j in 0..b.cols() {
            x.set(pc, j, row[a.cols() + j]);
        }
    }
    Ok(Some(x))
}

/// Basis of the right kernel `{v : A v = 0}` as rows; ambient dimension `A.cols`.
pub fn kernel_basis(a: &FpMatrix) -> SubspaceBasis {
    let (pivots, rows) = echelon_of(a).into_reduced();
    kernel_from_reduced(a.prime(), a.cols(), &pivots, &rows)
}

/// Kernel of the system whose reduced rows and pivots are given.
pub fn kernel_from_reduced(p: u32, cols: usize, pivots: &[usize], rows: &[Vec<u32>]) -> SubspaceBasis {
    let mut is_pivot = vec![false; cols];
    for &c in pivots {
        is_pivot[c] = true;
    }
    let mut basis = Vec::new();
    for f in (0..cols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![0u32; cols];
        v[f] = 1;
        for (row, &pc) in rows.iter().zip(pivots) {
            v[pc] = field::neg(p, row[f]);
        }
        basis.push(v);
    }
    SubspaceBasis::new(FpMatrix::from_row_vecs(p, cols, &basis)).expect("kernel vectors are independent")
}

/// Kernel of a map given by its columns' action, as a matrix whose columns
/// are kernel basis vectors (`A.cols x nullity`).
pub fn kernel_columns(a: &FpMatrix) -> FpMatrix {
    kernel_basis(a).as_columns()
}

/// Quotient of `GF(p)^ambient_dim` by `S`.
///
/// Returns `(projection, section)`: `projection` has `ambient_dim` columns and
/// `ambient_dim - dim S` rows and kills exactly `span(S)`; `section` is a
/// right inverse (`projection * section = I`) picking standard coordinates
/// outside the pivot columns of `S`.
pub fn quotient_space(ambient_dim: usize, s: &SubspaceBasis) -> Result<(FpMatrix, FpMatrix)> {
    if s.ambient_dim() != ambient_dim {
        return Err(LinalgError::DimensionMismatch {
            op: "quotient_space",
            detail: format!("subspace of GF(p)^{} in ambient {ambient_dim}", s.ambient_dim()),
        });
    }
    let p = s.prime();
    let (pivots, rows) = echelon_of(s.basis_matrix()).into_reduced();
    if pivots.len() != s.dim() {
        return Err(LinalgError::RankDeficient { rank: pivots.len(), rows: s.dim() });
    }
    let mut is_pivot = vec![false; ambient_dim];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    let free: Vec<usize> = (0..ambient_dim).filter(|&c| !is_pivot[c]).collect();
    let q = free.len();
    let mut proj = FpMatrix::zeros(p, q, ambient_dim);
    let mut sec = FpMatrix::zeros(p, ambient_dim, q);
    for (i, &c) in free.iter().enumerate() {
        proj.set(i, c, 1);
        sec.set(c, i, 1);
        for (row, &pc) in rows.iter().zip(&pivots) {
            proj.set(i, pc, field::neg(p, row[c]));
        }
    }
    Ok((proj, sec))
}

/// Quotient of the codomain of `m` by its image (cokernel data).
pub fn cokernel(m: &FpMatrix) -> (FpMatrix, FpMatrix) {
    quotient_space(m.rows(), &SubspaceBasis::column_span(m)).expect("column span lives in the codomain")
}

/// Inverse of a square matrix, if it exists.
pub fn inverse(m: &FpMatrix) -> Option<FpMatrix> {
    if !m.is_square() {
        return None;
    }
    if rank(m) != m.rows() {
        return None;
    }
    solve_linear(m, &FpMatrix::identity(m.prime(), m.rows())).ok().flatten()
}

pub fn is_invertible(m: &FpMatrix) -> bool {
    m.is_square() && rank(m) == m.rows()
}

pub fn is_injective(m: &FpMatrix) -> bool {
    rank(m) == m.cols()
}

pub fn is_surjective(m: &FpMatrix) -> bool {
    rank(m) == m.rows()
}

/// Solves `W Y = B` for a matrix `W` of full column rank (restriction to a
/// subspace); panics if `B`'s columns are not in the column span of `W`.
pub fn solve_in_span(w: &FpMatrix, b: &FpMatrix) -> FpMatrix {
    solve_linear(w, b)
        .expect("shapes agree")
        .expect("columns lie in the span")
}
