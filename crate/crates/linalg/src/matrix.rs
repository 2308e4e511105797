//! Dense matrices over GF(p).

use std::fmt;

use crate::error::{LinalgError, Result};
use crate::field;

/// A dense row-major matrix over GF(p).
///
/// Entries are residues in `[0, p)`. Shapes with zero rows or zero columns
/// are legal and behave as the corresponding zero maps.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FpMatrix {
    p: u32,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl fmt::Debug for FpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FpMatrix(GF({}), {}x{}, {:?})", self.p, self.rows, self.cols, self.to_rows())
    }
}

impl FpMatrix {
    /// The zero matrix of the given shape.
    pub fn zeros(p: u32, rows: usize, cols: usize) -> Self {
        FpMatrix { p, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(p: u32, n: usize) -> Self {
        let mut m = Self::zeros(p, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1 % p;
        }
        m
    }

    /// Builds a matrix from row-major residues, rejecting out-of-range entries.
    pub fn from_vec(p: u32, rows: usize, cols: usize, data: Vec<u32>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(LinalgError::DimensionMismatch {
                op: "from_vec",
                detail: format!("{} entries for a {rows}x{cols} matrix", data.len()),
            });
        }
        if let Some(&v) = data.iter().find(|&&v| v >= p) {
            return Err(LinalgError::EntryOutOfRange { value: v as u64, p });
        }
        Ok(FpMatrix { p, rows, cols, data })
    }

    /// Builds a matrix from rows of signed integers, reducing them mod `p`.
    ///
    /// All rows must have the same length; with no rows the column count is 0.
    pub fn from_rows_i64(p: u32, rows: &[Vec<i64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows_i64_with_cols(p, rows, cols)
    }

    /// As [`FpMatrix::from_rows_i64`], with an explicit column count so that
    /// `0 x n` shapes can be expressed.
    pub fn from_rows_i64_with_cols(p: u32, rows: &[Vec<i64>], cols: usize) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(LinalgError::DimensionMismatch {
                    op: "from_rows",
                    detail: format!("row {i} has {} entries, expected {cols}", r.len()),
                });
            }
            data.extend(r.iter().map(|&v| field::reduce_i64(p, v)));
        }
        Ok(FpMatrix { p, rows: rows.len(), cols, data })
    }

    /// Convenience constructor used heavily in tests; panics on ragged input.
    pub fn from_rows(p: u32, rows: &[&[i64]]) -> Self {
        let owned: Vec<Vec<i64>> = rows.iter().map(|r| r.to_vec()).collect();
        Self::from_rows_i64(p, &owned).expect("ragged matrix literal")
    }

    /// A single column from residues.
    pub fn column(p: u32, entries: &[u32]) -> Self {
        FpMatrix { p, rows: entries.len(), cols: 1, data: entries.iter().map(|&v| v % p).collect() }
    }

    /// Matrix whose columns are the given vectors (all of length `rows`).
    pub fn from_columns(p: u32, rows: usize, columns: &[Vec<u32>]) -> Self {
        let mut m = Self::zeros(p, rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length mismatch");
            for (i, &v) in c.iter().enumerate() {
                m.data[i * m.cols + j] = v % p;
            }
        }
        m
    }

    /// Matrix whose rows are the given vectors (all of length `cols`).
    pub fn from_row_vecs(p: u32, cols: usize, rows: &[Vec<u32>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "row length mismatch");
            data.extend(r.iter().map(|&v| v % p));
        }
        FpMatrix { p, rows: rows.len(), cols, data }
    }

    pub fn prime(&self) -> u32 {
        self.p
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }
    pub fn data(&self) -> &[u32] {
        &self.data
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v % self.p;
    }

    /// Adds `v` to entry `(r, c)`.
    #[inline]
    pub fn add_at(&mut self, r: usize, c: usize, v: u32) {
        let i = r * self.cols + c;
        self.data[i] = field::add(self.p, self.data[i], v);
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vec<u32> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.p, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.data[r * self.cols + c];
            }
        }
        t
    }

    fn same_prime(&self, other: &Self) -> Result<()> {
        if self.p != other.p {
            Err(LinalgError::PrimeMismatch { left: self.p, right: other.p })
        } else {
            Ok(())
        }
    }

    /// Product `self * other`, or an error when inner dimensions disagree.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.same_prime(other)?;
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch {
                op: "mul",
                detail: format!("{}x{} times {}x{}", self.rows, self.cols, other.rows, other.cols),
            });
        }
        let p = self.p as u64;
        let mut out = Self::zeros(self.p, self.rows, other.cols);
        let mut acc = vec![0u64; other.cols];
        // Residues below 2^16 allow 1024 products to accumulate before reducing.
        let chunk = if self.p < (1 << 16) { 1024 } else { 1 };
        for r in 0..self.rows {
            acc.iter_mut().for_each(|a| *a = 0);
            for k in 0..self.cols {
                let a = self.data[r * self.cols + k] as u64;
                if a == 0 {
                    continue;
                }
                let orow = &other.data[k * other.cols..(k + 1) * other.cols];
                for (s, &b) in acc.iter_mut().zip(orow) {
                    *s += a * b as u64;
                }
                if (k + 1) % chunk == 0 {
                    acc.iter_mut().for_each(|s| *s %= p);
                }
            }
            for (c, s) in acc.iter().enumerate() {
                out.data[r * other.cols + c] = (s % p) as u32;
            }
        }
        Ok(out)
    }

    /// Product `self * other`.
    ///
    /// # Panics
    /// When inner dimensions or primes disagree; use [`FpMatrix::checked_mul`]
    /// to get an error instead.
    pub fn mul(&self, other: &Self) -> Self {
        self.checked_mul(other).unwrap_or_else(|e| panic!("{e}"))
    }

    /// Applies the matrix to a column vector.
    pub fn apply(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        let p = self.p as u64;
        (0..self.rows)
            .map(|r| {
                let s: u64 = self.row(r).iter().zip(v).map(|(&a, &b)| a as u64 * b as u64 % p).sum();
                (s % p) as u32
            })
            .collect()
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_prime(other)?;
        if self.shape() != other.shape() {
            return Err(LinalgError::DimensionMismatch {
                op: "add",
                detail: format!("{:?} plus {:?}", self.shape(), other.shape()),
            });
        }
        let p = self.p;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| field::add(p, a, b)).collect();
        Ok(FpMatrix { p, rows: self.rows, cols: self.cols, data })
    }

    /// Entrywise sum; panics on shape mismatch.
    pub fn add(&self, other: &Self) -> Self {
        self.checked_add(other).unwrap_or_else(|e| panic!("{e}"))
    }

    /// Entrywise difference; panics on shape mismatch.
    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(self.p - 1)
    }

    pub fn scale(&self, s: u32) -> Self {
        let p = self.p;
        let s = s % p;
        FpMatrix { p, rows: self.rows, cols: self.cols, data: self.data.iter().map(|&a| field::mul(p, a, s)).collect() }
    }

    /// In-place `self += s * other`.
    pub fn add_scaled(&mut self, other: &Self, s: u32) {
        assert_eq!(self.shape(), other.shape(), "shape mismatch in add_scaled");
        let p = self.p;
        let s = s % p;
        if s == 0 {
            return;
        }
        for (a, &b) in self.data.iter_mut().zip(&other.data) {
            *a = field::add(p, *a, field::mul(p, b, s));
        }
    }

    /// Horizontal concatenation `[A | B]`.
    pub fn hstack(blocks: &[&FpMatrix]) -> Self {
        let p = blocks.first().map_or(2, |b| b.p);
        let rows = blocks.first().map_or(0, |b| b.rows);
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(p, rows, cols);
        let mut off = 0;
        for b in blocks {
            assert_eq!(b.rows, rows, "hstack row mismatch");
            out.set_block(0, off, b);
            off += b.cols;
        }
        out
    }

    /// Vertical concatenation.
    pub fn vstack(blocks: &[&FpMatrix]) -> Self {
        let p = blocks.first().map_or(2, |b| b.p);
        let cols = blocks.first().map_or(0, |b| b.cols);
        let rows = blocks.iter().map(|b| b.rows).sum();
        let mut out = Self::zeros(p, rows, cols);
        let mut off = 0;
        for b in blocks {
            assert_eq!(b.cols, cols, "vstack column mismatch");
            out.set_block(off, 0, b);
            off += b.rows;
        }
        out
    }

    /// Block-diagonal matrix.
    pub fn block_diag(p: u32, blocks: &[&FpMatrix]) -> Self {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(p, rows, cols);
        let (mut r, mut c) = (0, 0);
        for b in blocks {
            out.set_block(r, c, b);
            r += b.rows;
            c += b.cols;
        }
        out
    }

    /// Kronecker product `self ⊗ other` (row index `i * other.rows + k`).
    pub fn kron(&self, other: &Self) -> Self {
        let p = self.p;
        let mut out = Self::zeros(p, self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a == 0 {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let v = field::mul(p, a, other.get(k, l));
                        out.data[(i * other.rows + k) * out.cols + j * other.cols + l] = v;
                    }
                }
            }
        }
        out
    }

    /// Writes `block` with its top-left corner at `(r0, c0)`.
    pub fn set_block(&mut self, r0: usize, c0: usize, block: &FpMatrix) {
        for r in 0..block.rows {
            let dst = (r0 + r) * self.cols + c0;
            self.data[dst..dst + block.cols].copy_from_slice(block.row(r));
        }
    }

    /// Copies out the sub-block of rows `r0..r0+rows`, columns `c0..c0+cols`.
    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Self {
        let mut out = Self::zeros(self.p, rows, cols);
        for r in 0..rows {
            let src = (r0 + r) * self.cols + c0;
            out.data[r * cols..(r + 1) * cols].copy_from_slice(&self.data[src..src + cols]);
        }
        out
    }

    /// Selects the given columns, in order.
    pub fn select_cols(&self, cols: &[usize]) -> Self {
        let mut out = Self::zeros(self.p, self.rows, cols.len());
        for r in 0..self.rows {
            for (j, &c) in cols.iter().enumerate() {
                out.data[r * cols.len() + j] = self.get(r, c);
            }
        }
        out
    }

    /// Row-major flattening (the coordinates of a linear map as a vector).
    pub fn flatten(&self) -> Vec<u32> {
        self.data.clone()
    }

    /// Inverse of `flatten`.
    pub fn unflatten(p: u32, rows: usize, cols: usize, v: &[u32]) -> Self {
        FpMatrix::from_vec(p, rows, cols, v.to_vec()).expect("flat vector shape")
    }
}
