//! Greedy morphism generators of a finite linear category.

use std::collections::VecDeque;

use cotlab_linalg::{inverse, FpMatrix, RowEchelon};

use crate::category::{CategoryGenerators, EnrichedCategory};

struct Closure<'a> {
    cat: &'a EnrichedCategory,
    ech: Vec<Vec<RowEchelon>>,
    /// Spanning elements per `(A, B)`: coordinates and word.
    elems: Vec<Vec<Vec<(Vec<u32>, Vec<usize>)>>>,
    gens: Vec<(usize, usize, Vec<u32>)>,
    queue: VecDeque<(usize, usize, usize)>,
}

impl<'a> Closure<'a> {
    fn new(cat: &'a EnrichedCategory) -> Self {
        let n = cat.object_count();
        let ech = (0..n).map(|a| (0..n).map(|b| RowEchelon::new(cat.prime(), cat.hom_dim(a, b))).collect()).collect();
        let elems = vec![vec![Vec::new(); n]; n];
        let mut c = Closure { cat, ech, elems, gens: Vec::new(), queue: VecDeque::new() };
        for a in 0..n {
            c.insert(a, a, cat.identity(a).to_vec(), Vec::new());
        }
        c.run();
        c
    }

    fn insert(&mut self, a: usize, b: usize, v: Vec<u32>, w: Vec<usize>) {
        if self.ech[a][b].push_row(&v) {
            self.elems[a][b].push((v, w));
            self.queue.push_back((a, b, self.elems[a][b].len() - 1));
        }
    }

    /// Extends one element by one generator.
    fn extend(&mut self, a: usize, b: usize, idx: usize, gi: usize) {
        let (gb, gc, ref g) = self.gens[gi];
        if gb != b {
            return;
        }
        let (v, w) = &self.elems[a][b][idx];
        let nv = self.cat.compose(a, b, gc, g, v);
        let mut nw = w.clone();
        nw.push(gi);
        self.insert(a, gc, nv, nw);
    }

    fn run(&mut self) {
        while let Some((a, b, idx)) = self.queue.pop_front() {
            for gi in 0..self.gens.len() {
                self.extend(a, b, idx, gi);
            }
        }
    }

    fn add_generator(&mut self, src: usize, dst: usize, v: Vec<u32>) {
        self.gens.push((src, dst, v));
        let gi = self.gens.len() - 1;
        let n = self.cat.object_count();
        for a in 0..n {
            let existing = self.elems[a][src].len();
            for idx in 0..existing {
                self.extend(a, src, idx, gi);
            }
        }
        self.run();
    }
}

pub(crate) fn compute(cat: &EnrichedCategory) -> CategoryGenerators {
    let n = cat.object_count();
    let mut cl = Closure::new(cat);
    // Endomorphisms go first, then morphisms between distinct objects; in
    // both passes candidates that factor through a third object are
    // skipped, so that composites are not chosen ahead of their factors.
    let pairs: Vec<(usize, usize)> =
        (0..n).map(|a| (a, a)).chain((0..n).flat_map(|a| (0..n).filter(move |&b| b != a).map(move |b| (a, b)))).collect();
    for (a, b) in pairs {
        let d = cat.hom_dim(a, b);
        let mut through = cl.ech[a][b].clone();
        for c in (0..n).filter(|&c| c != a && c != b) {
            let (dcb, dac) = (cat.hom_dim(c, b), cat.hom_dim(a, c));
            for g in 0..dcb {
                for f in 0..dac {
                    let (mut eg, mut ef) = (vec![0; dcb], vec![0; dac]);
                    eg[g] = 1;
                    ef[f] = 1;
                    through.push_row(&cat.compose(a, c, b, &eg, &ef));
                }
            }
        }
        for k in 0..d {
            let mut e = vec![0; d];
            e[k] = 1;
            if !cl.ech[a][b].contains(&e) && through.push_row(&e) {
                cl.add_generator(a, b, e);
            }
        }
    }
    // Whatever is still missing.
    for a in 0..n {
        for b in 0..n {
            let d = cat.hom_dim(a, b);
            for k in 0..d {
                let mut e = vec![0; d];
                e[k] = 1;
                if !cl.ech[a][b].contains(&e) {
                    cl.add_generator(a, b, e);
                }
            }
        }
    }
    let p = cat.prime();
    let mut words = vec![vec![Vec::new(); n]; n];
    let mut expr = vec![vec![Vec::new(); n]; n];
    for a in 0..n {
        for b in 0..n {
            let d = cat.hom_dim(a, b);
            let elems = std::mem::take(&mut cl.elems[a][b]);
            let cols: Vec<Vec<u32>> = elems.iter().map(|(v, _)| v.clone()).collect();
            let mut e = vec![vec![0; elems.len()]; d];
            if d > 0 {
                let inv = inverse(&FpMatrix::from_columns(p, d, &cols)).expect("closure spans every Hom space");
                for (k, row) in e.iter_mut().enumerate() {
                    for (w, slot) in row.iter_mut().enumerate() {
                        *slot = inv.get(w, k);
                    }
                }
            }
            words[a][b] = elems.into_iter().map(|(_, w)| w).collect();
            expr[a][b] = e;
        }
    }
    CategoryGenerators { gens: cl.gens, words, expr }
}
