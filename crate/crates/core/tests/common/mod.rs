#![allow(dead_code)]

use hypercover::generators::{random_hypergraph, HypergraphParams};
use hypercover::{Hypergraph, Seed};
use proptest::prelude::*;

/// Hypergraph on `1..=max_n` vertices from a list of nonempty bitmasks.
pub fn hypergraph(max_n: usize, max_m: usize) -> impl Strategy<Value = Hypergraph> {
    (1..=max_n).prop_flat_map(move |n| {
        prop::collection::vec(1u32..(1 << n), 0..=max_m).prop_map(move |masks| {
            let mut masks = masks;
            masks.sort_unstable();
            masks.dedup();
            let edges = masks
                .into_iter()
                .map(|m| (0..n).filter(|&v| m >> v & 1 == 1).collect())
                .collect();
            Hypergraph::new(n, edges).unwrap()
        })
    })
}

/// Hypergraph in which every vertex lies in some edge.
pub fn coverable(max_n: usize, max_m: usize) -> impl Strategy<Value = Hypergraph> {
    hypergraph(max_n, max_m).prop_filter("no isolated vertex", |h| h.isolated_vertices().is_empty())
}

pub fn subset_of(n: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(any::<bool>(), n)
        .prop_map(|bits| bits.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i).collect())
}

/// Seeded cover-feasible random hypergraph with `4 <= n <= max_n`
/// and at most `max_m` edges.
pub fn seeded_coverable(seed: u64, max_n: usize, max_m: usize) -> Hypergraph {
    let n = 4 + (seed as usize * 7) % (max_n - 3);
    let max_edge_size = 2 + (seed as usize) % 3;
    let low = n.div_ceil(max_edge_size);
    let space: usize = (1..=max_edge_size).map(|k| binomial(n, k)).sum();
    let high = max_m.min(space);
    let m = low + (seed as usize * 5) % (high - low + 1);
    random_hypergraph(
        HypergraphParams {
            n,
            m,
            max_edge_size,
            cover_feasible: true,
        },
        Seed(seed),
    )
    .unwrap()
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}
