//! Longest nonvanishing composable chains through distinct objects.

use cotlab_linalg::SubspaceBasis;

use crate::category::EnrichedCategory;

/// Direction of the chains searched by [`chain_diagnostic`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ChainDirection {
    /// Chains `A_0 ← A_1 ← ... ← A_n` with `f_1 ∘ ... ∘ f_n != 0`; the
    /// witness starts at the final target `A_0`.
    Incoming,
    /// Chains `A_0 → A_1 → ... → A_n` with `f_n ∘ ... ∘ f_1 != 0`; the
    /// witness starts at the first source `A_0`.
    Outgoing,
}

/// The longest chain found, its length in morphisms, and the objects it
/// visits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainDiagnostic {
    pub max_len: usize,
    pub witness: Vec<usize>,
}

/// Depth-first search over paths of pairwise distinct objects carrying the
/// span of all achievable composites; a branch is pruned as soon as the span
/// is zero. Objects are tried in index order and the first longest path is
/// reported. In a finite category every such chain is bounded by the number
/// of objects, so nonvanishing infinite chains never exist.
pub fn chain_diagnostic(cat: &EnrichedCategory, direction: ChainDirection) -> ChainDiagnostic {
    let n = cat.object_count();
    let mut best = ChainDiagnostic { max_len: 0, witness: Vec::new() };
    for start in 0..n {
        let mut path = vec![start];
        let mut visited = vec![false; n];
        visited[start] = true;
        // The empty composite is the identity of the start object.
        let span = SubspaceBasis::span(cat.prime(), cat.hom_dim(start, start), &[cat.identity(start).to_vec()]);
        if span.dim() == 0 {
            continue;
        }
        if best.witness.is_empty() {
            best.witness = path.clone();
        }
        dfs(cat, direction, start, &span, &mut path, &mut visited, &mut best);
    }
    best
}

fn dfs(
    cat: &EnrichedCategory,
    dir: ChainDirection,
    start: usize,
    span: &SubspaceBasis,
    path: &mut Vec<usize>,
    visited: &mut [bool],
    best: &mut ChainDiagnostic,
) {
    let cur = *path.last().expect("nonempty path");
    let n = cat.object_count();
    for next in 0..n {
        if visited[next] {
            continue;
        }
        let composites: Vec<Vec<u32>> = match dir {
            // span ⊂ Hom(start, cur); extend by g ∈ Hom(cur, next).
            ChainDirection::Outgoing => {
                let d = cat.hom_dim(cur, next);
                span.vectors()
                    .iter()
                    .flat_map(|s| {
                        (0..d).map(move |g| {
                            let mut e = vec![0; d];
                            e[g] = 1;
                            cat.compose(start, cur, next, &e, s)
                        })
                    })
                    .collect()
            }
            // span ⊂ Hom(cur, start); extend by f ∈ Hom(next, cur).
            ChainDirection::Incoming => {
                let d = cat.hom_dim(next, cur);
                span.vectors()
                    .iter()
                    .flat_map(|s| {
                        (0..d).map(move |f| {
                            let mut e = vec![0; d];
                            e[f] = 1;
                            cat.compose(next, cur, start, s, &e)
                        })
                    })
                    .collect()
            }
        };
        let amb = match dir {
            ChainDirection::Outgoing => cat.hom_dim(start, next),
            ChainDirection::Incoming => cat.hom_dim(next, start),
        };
        let new_span = SubspaceBasis::span(cat.prime(), amb, &composites);
        if new_span.dim() == 0 {
            continue;
        }
        path.push(next);
        visited[next] = true;
        if path.len() - 1 > best.max_len {
            best.max_len = path.len() - 1;
            best.witness = path.clone();
        }
        dfs(cat, dir, start, &new_span, path, visited, best);
        visited[next] = false;
        path.pop();
    }
}
