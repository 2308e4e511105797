//! Incremental row echelon reduction.
//!
//! Rows are pushed one at a time and reduced against the rows kept so far, so
//! very tall constraint systems never have to be materialised. Over GF(2) the
//! rows are bit-packed into `u64` words.

use crate::field;

#[derive(Debug, Clone)]
enum Store {
    Bits(Vec<(usize, Vec<u64>)>),
    Words(Vec<(usize, Vec<u32>)>),
}

/// An echelon basis of the span of all rows pushed so far.
#[derive(Debug, Clone)]
pub struct RowEchelon {
    p: u32,
    cols: usize,
    store: Store,
}

fn pack(row: &[u32]) -> Vec<u64> {
    let mut words = vec![0u64; row.len().div_ceil(64)];
    for (c, &v) in row.iter().enumerate() {
        if v & 1 == 1 {
            words[c / 64] |= 1u64 << (c % 64);
        }
    }
    words
}

#[inline]
fn bit(words: &[u64], c: usize) -> bool {
    (words[c / 64] >> (c % 64)) & 1 == 1
}

fn first_bit(words: &[u64]) -> Option<usize> {
    words
        .iter()
        .enumerate()
        .find(|(_, w)| **w != 0)
        .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}

impl RowEchelon {
    pub fn new(p: u32, cols: usize) -> Self {
        let store = if p == 2 {
            Store::Bits(Vec::new())
        } else {
            Store::Words(Vec::new())
        };
        RowEchelon { p, cols, store }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        match &self.store {
            Store::Bits(r) => r.len(),
            Store::Words(r) => r.len(),
        }
    }

    /// Pushes a row (residues in `[0, p)`); returns whether it enlarged the span.
    pub fn push_row(&mut self, row: &[u32]) -> bool {
        assert_eq!(row.len(), self.cols, "row width mismatch");
        let p = self.p;
        match &mut self.store {
            Store::Bits(rows) => {
                let mut v = pack(row);
                for (piv, r) in rows.iter() {
                    if bit(&v, *piv) {
                        for (a, b) in v.iter_mut().zip(r) {
                            *a ^= *b;
                        }
                    }
                }
                match first_bit(&v) {
                    None => false,
                    Some(piv) => {
                        let pos = rows.partition_point(|(q, _)| *q < piv);
                        rows.insert(pos, (piv, v));
                        true
                    }
                }
            }
            Store::Words(rows) => {
                let mut v = row.to_vec();
                for (piv, r) in rows.iter() {
                    let f = v[*piv];
                    if f != 0 {
                        for (a, b) in v.iter_mut().zip(r).skip(*piv) {
                            *a = field::sub(p, *a, field::mul(p, f, *b));
                        }
                    }
                }
                match v.iter().position(|&x| x != 0) {
                    None => false,
                    Some(piv) => {
                        let s = field::inv(p, v[piv]);
                        for a in v.iter_mut().skip(piv) {
                            *a = field::mul(p, *a, s);
                        }
                        let pos = rows.partition_point(|(q, _)| *q < piv);
                        rows.insert(pos, (piv, v));
                        true
                    }
                }
            }
        }
    }

    /// Whether `row` already lies in the span.
    pub fn contains(&self, row: &[u32]) -> bool {
        let mut probe = self.clone();
        !probe.push_row(row)
    }

    /// Finishes the reduction: returns pivot columns and the reduced rows.
    pub fn into_reduced(self) -> (Vec<usize>, Vec<Vec<u32>>) {
        let p = self.p;
        let cols = self.cols;
        match self.store {
            Store::Bits(mut rows) => {
                for i in (0..rows.len()).rev() {
                    let (piv, ri) = (rows[i].0, rows[i].1.clone());
                    for (_, rj) in rows.iter_mut().take(i) {
                        if bit(rj, piv) {
                            for (a, b) in rj.iter_mut().zip(&ri) {
                                *a ^= *b;
                            }
                        }
                    }
                }
                let pivots = rows.iter().map(|(q, _)| *q).collect();
                let dense = rows
                    .iter()
                    .map(|(_, w)| (0..cols).map(|c| bit(w, c) as u32).collect())
                    .collect();
                (pivots, dense)
            }
            Store::Words(mut rows) => {
                for i in (0..rows.len()).rev() {
                    let (piv, ri) = (rows[i].0, rows[i].1.clone());
                    for (_, rj) in rows.iter_mut().take(i) {
                        let f = rj[piv];
                        if f != 0 {
                            for (a, b) in rj.iter_mut().zip(&ri).skip(piv) {
                                *a = field::sub(p, *a, field::mul(p, f, *b));
                            }
                        }
                    }
                }
                let pivots = rows.iter().map(|(q, _)| *q).collect();
                let dense = rows.into_iter().map(|(_, r)| r).collect();
                (pivots, dense)
            }
        }
    }
}
