//! Instance factories. Every random generator is a pure function of its
//! parameters and a [`Seed`].

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};

use rand::seq::{index, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hypergraph::{DuplicatePolicy, Hypergraph, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Seed(pub u64);

impl Seed {
    pub fn rng(self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.0)
    }
}

/// The hypergraph on a clique `v2..vn` with a pendant `v1` attached to
/// `v2`, whose edges are `N[v1]` and the open neighborhoods `N(v2)..N(vn)`.
/// Its mighty degeneracy stays at 2 while its strong degeneracy is `n - 2`.
pub fn gap_family(n: usize) -> Result<Hypergraph> {
    if n < 3 {
        return Err(Error::NTooSmall { n });
    }
    let mut edges = vec![(vec![0, 1], "N[v1]".to_string())];
    let mut second = vec![0];
    second.extend(2..n);
    edges.push((second, "N(v2)".to_string()));
    for i in 2..n {
        let open: Vec<VertexId> = (1..n).filter(|&v| v != i).collect();
        edges.push((open, format!("N(v{})", i + 1)));
    }
    Ok(Hypergraph::with_labels(n, edges, DuplicatePolicy::Reject)?.hypergraph)
}

pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::new(n, &edges).expect("path edges are valid")
}

/// Star with `leaves` leaves around vertex 0.
pub fn star(leaves: usize) -> Graph {
    let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
    Graph::new(leaves + 1, &edges).expect("star edges are valid")
}

pub fn complete(n: usize) -> Graph {
    let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    Graph::new(n, &edges).expect("clique edges are valid")
}

/// Tree from a Prüfer sequence of length `n - 2` over `0..n`.
pub fn prufer_decode(sequence: &[VertexId], n: usize) -> Result<Graph> {
    if n < 2 || sequence.len() != n - 2 {
        return Err(Error::Parameter(format!(
            "a Prüfer sequence for {n} vertices has length n - 2"
        )));
    }
    if let Some(&v) = sequence.iter().find(|&&v| v >= n) {
        return Err(Error::VertexOutOfRange { vertex: v, n });
    }
    let mut degree = vec![1usize; n];
    for &v in sequence {
        degree[v] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<VertexId>> = (0..n).filter(|&v| degree[v] == 1).map(Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &v in sequence {
        let Reverse(leaf) = leaves.pop().expect("a leaf always exists");
        edges.push((leaf, v));
        degree[v] -= 1;
        if degree[v] == 1 {
            leaves.push(Reverse(v));
        }
    }
    let Reverse(a) = leaves.pop().expect("two leaves remain");
    let Reverse(b) = leaves.pop().expect("two leaves remain");
    edges.push((a, b));
    Graph::new(n, &edges)
}

/// Prüfer sequence of a tree on at least two vertices.
pub fn prufer_encode(tree: &Graph) -> Result<Vec<VertexId>> {
    let n = tree.n();
    if n < 2 || !tree.is_tree() {
        return Err(Error::NotATree {
            reason: "Prüfer encoding needs a tree on at least two vertices".into(),
        });
    }
    let mut degree: Vec<usize> = (0..n).map(|v| tree.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut leaves: BinaryHeap<Reverse<VertexId>> = (0..n).filter(|&v| degree[v] == 1).map(Reverse).collect();
    let mut sequence = Vec::with_capacity(n - 2);
    while sequence.len() < n - 2 {
        let Reverse(leaf) = leaves.pop().expect("a leaf always exists");
        removed[leaf] = true;
        let parent = *tree
            .neighbors(leaf)
            .iter()
            .find(|&&u| !removed[u])
            .expect("a leaf has one live neighbor");
        sequence.push(parent);
        degree[parent] -= 1;
        if degree[parent] == 1 {
            leaves.push(Reverse(parent));
        }
    }
    Ok(sequence)
}

/// Uniformly random labelled tree on `n` vertices.
pub fn random_tree(n: usize, seed: Seed) -> Result<Graph> {
    match n {
        0 => Err(Error::Parameter("a tree needs at least one vertex".into())),
        1 => Ok(Graph::empty(1)),
        2 => Graph::new(2, &[(0, 1)]),
        _ => {
            let mut rng = seed.rng();
            let sequence: Vec<VertexId> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
            prufer_decode(&sequence, n)
        }
    }
}

/// Erdős–Rényi graph: each pair joined independently with probability `p`.
pub fn random_graph(n: usize, p: f64, seed: Seed) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Parameter(format!("edge probability {p} outside [0, 1]")));
    }
    let mut rng = seed.rng();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HypergraphParams {
    pub n: usize,
    pub m: usize,
    pub max_edge_size: usize,
    /// Seed the edge set with a partition of the vertices so that every
    /// vertex lies in some edge.
    pub cover_feasible: bool,
}

fn binomial(n: usize, k: usize) -> u128 {
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    acc
}

/// Number of distinct nonempty edges of size at most `max` over `n` vertices.
fn edge_space(n: usize, max: usize) -> u128 {
    (1..=max).fold(0u128, |acc, k| acc.saturating_add(binomial(n, k)))
}

/// Largest edge space enumerated explicitly instead of rejection sampled.
const ENUMERATE_LIMIT: u128 = 1 << 16;

pub fn random_hypergraph(params: HypergraphParams, seed: Seed) -> Result<Hypergraph> {
    let HypergraphParams {
        n,
        m,
        max_edge_size: max,
        cover_feasible,
    } = params;
    if n == 0 {
        return Err(Error::Parameter("need at least one vertex".into()));
    }
    if max == 0 || max > n {
        return Err(Error::Parameter(format!("edge size bound {max} outside 1..={n}")));
    }
    let available = edge_space(n, max);
    if m as u128 > available {
        return Err(Error::InfeasibleEdgeCount {
            requested: m,
            available,
        });
    }
    let blocks = n.div_ceil(max);
    if cover_feasible && m < blocks {
        return Err(Error::Parameter(format!(
            "covering {n} vertices with edges of size <= {max} takes at least {blocks} edges"
        )));
    }

    let mut rng = seed.rng();
    let mut seen: HashSet<Vec<VertexId>> = HashSet::with_capacity(m);
    let mut edges: Vec<Vec<VertexId>> = Vec::with_capacity(m);
    let mut push = |edge: Vec<VertexId>, edges: &mut Vec<Vec<VertexId>>| {
        if seen.insert(edge.clone()) {
            edges.push(edge);
            true
        } else {
            false
        }
    };
    if cover_feasible {
        let mut perm: Vec<VertexId> = (0..n).collect();
        perm.shuffle(&mut rng);
        // near-equal block sizes
        let mut start = 0;
        for b in 0..blocks {
            let size = (n - start) / (blocks - b) + usize::from((n - start) % (blocks - b) != 0);
            let mut block = perm[start..start + size].to_vec();
            block.sort_unstable();
            push(block, &mut edges);
            start += size;
        }
    }
    let missing = m - edges.len();
    if n <= 20 && available <= ENUMERATE_LIMIT && (missing as u128) * 2 > available - edges.len() as u128 {
        let mut pool: Vec<Vec<VertexId>> = (1u64..1 << n)
            .filter(|mask| (mask.count_ones() as usize) <= max)
            .map(|mask| (0..n).filter(|&v| mask >> v & 1 == 1).collect::<Vec<_>>())
            .filter(|e| !edges.contains(e))
            .collect();
        pool.shuffle(&mut rng);
        for e in pool.into_iter().take(missing) {
            push(e, &mut edges);
        }
    } else {
        while edges.len() < m {
            let size = rng.random_range(1..=max);
            let mut edge = index::sample(&mut rng, n, size).into_vec();
            edge.sort_unstable();
            push(edge, &mut edges);
        }
    }
    edges.shuffle(&mut rng);
    Hypergraph::new(n, edges)
}
