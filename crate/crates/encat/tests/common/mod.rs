//! Small categories built directly from their definitions.
#![allow(dead_code)]

use cotlab_encat::EnrichedCategory;

/// Categories whose Hom spaces are 0- or 1-dimensional and whose composition
/// is multiplication of the basis scalars whenever the target is nonzero.
pub fn thin(p: u32, names: &[&str], nonzero: impl Fn(usize, usize) -> bool) -> EnrichedCategory {
    let n = names.len();
    let dims: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| usize::from(a == b || nonzero(a, b))).collect()).collect();
    let ids = (0..n).map(|_| vec![1]).collect();
    let d2 = dims.clone();
    EnrichedCategory::new(p, names.iter().map(|s| s.to_string()).collect(), dims, ids, move |a, _, c, _, _| {
        vec![1; d2[a][c]]
    })
    .unwrap()
}

/// Objects `0..=n`, one differential `i → i-1`, composites of two
/// differentials land in zero spaces.
pub fn chain(p: u32, n: usize) -> EnrichedCategory {
    let names: Vec<String> = (0..=n).map(|i| i.to_string()).collect();
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    thin(p, &refs, |a, b| b + 1 == a)
}

/// Objects `1..=n` with `Hom(a, b)` nonzero iff `b <= a <= 2b`.
pub fn fib(p: u32, n: usize) -> EnrichedCategory {
    let names: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    thin(p, &refs, |a, b| {
        let (a, b) = (a + 1, b + 1);
        b <= a && a <= 2 * b
    })
}

/// The two-object category `a → b` with one nonzero morphism.
pub fn triangular() -> EnrichedCategory {
    thin(2, &["a", "b"], |a, b| a == 0 && b == 1)
}

/// The two-object category of 2x2 matrix units: `Hom(a, b)` and `Hom(b, a)`
/// are 1-dimensional and both round trips are identities.
pub fn matrix_units(p: u32) -> EnrichedCategory {
    thin(p, &["a", "b"], |_, _| true)
}

/// Objects `a, b` with `R_a = R_b = Hom(a, b) = F2[x]/x^2` and
/// `Hom(b, a) = 0`.
pub fn dual_numbers_arrow() -> EnrichedCategory {
    let names = vec!["a".to_string(), "b".to_string()];
    EnrichedCategory::new(2, names, vec![vec![2, 2], vec![0, 2]], vec![vec![1, 0], vec![1, 0]], |_, _, _, g, f| {
        let mut v = vec![0; 2];
        if g + f < 2 {
            v[g + f] = 1;
        }
        v
    })
    .unwrap()
}
