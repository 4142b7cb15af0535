//! Bitmask views of small hypergraphs for the exhaustive searches.
//! Kept separate from the list-based code paths they are used to check.

use crate::hypergraph::Hypergraph;

pub(crate) fn edge_masks(h: &Hypergraph) -> Vec<u64> {
    debug_assert!(h.n() <= 64);
    h.edges()
        .iter()
        .map(|e| e.iter().fold(0u64, |m, &v| m | (1 << v)))
        .collect()
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Distinct nonempty traces of `edges` on `subset`.
pub(crate) fn traces(edges: &[u64], subset: u64) -> Vec<u64> {
    let mut out: Vec<u64> = edges.iter().map(|e| e & subset).filter(|&t| t != 0).collect();
    out.sort_unstable();
    out.dedup();
    out
}

pub(crate) fn maximal(sets: &[u64]) -> Vec<u64> {
    sets.iter()
        .copied()
        .filter(|&s| !sets.iter().any(|&o| o != s && o & s == s))
        .collect()
}

/// Minimum over `x ∈ subset` of the number of sets containing `x`.
pub(crate) fn min_count(sets: &[u64], subset: u64) -> usize {
    ones(subset)
        .map(|x| sets.iter().filter(|&&s| s >> x & 1 == 1).count())
        .min()
        .unwrap_or(0)
}

pub(crate) fn ones(mask: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |&i| mask >> i & 1 == 1)
}
