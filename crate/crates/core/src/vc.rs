use std::collections::HashSet;

use itertools::Itertools;
use serde::Serialize;

use crate::bits;
use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, VertexId};

pub const VC_CAP: usize = 20;

/// Whether `set` is shattered and, if not, the lexicographically least
/// subset of it that is not a trace.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ShatterWitness {
    pub set: Vec<VertexId>,
    pub shattered: bool,
    pub missing_subset: Option<Vec<VertexId>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VcResult {
    /// Size of the largest shattered set; 0 when nothing is shattered.
    pub dimension: usize,
    /// Set when the hypergraph has no edges, so not even the empty set is
    /// shattered.
    pub none_shattered: bool,
    pub witness: ShatterWitness,
}

/// All traces `e ∩ S`, the empty one included. The empty set is a trace
/// exactly when some edge misses `S`, so `∅` is shattered iff there is an
/// edge at all.
fn trace_set(edges: &[u64], subset: u64) -> HashSet<u64> {
    edges.iter().map(|e| e & subset).collect()
}

fn mask_of(vertices: &[VertexId]) -> u64 {
    vertices.iter().fold(0, |m, &v| m | 1 << v)
}

pub fn shatter_witness(h: &Hypergraph, set: &[VertexId]) -> Result<ShatterWitness> {
    if h.n() > VC_CAP {
        return Err(Error::TooLarge {
            size: h.n(),
            cap: VC_CAP,
        });
    }
    if let Some(&v) = set.iter().find(|&&v| v >= h.n()) {
        return Err(Error::VertexOutOfRange { vertex: v, n: h.n() });
    }
    let mut set = set.to_vec();
    set.sort_unstable();
    set.dedup();
    let traces = trace_set(&bits::edge_masks(h), mask_of(&set));
    let missing_subset = set
        .iter()
        .copied()
        .powerset()
        .filter(|sub| !traces.contains(&mask_of(sub)))
        .min();
    Ok(ShatterWitness {
        shattered: missing_subset.is_none(),
        set,
        missing_subset,
    })
}

/// Exhaustive VC dimension, scanning candidate sizes from the largest
/// possible (`2^k <= |E|`) downwards and sets of one size in
/// lexicographic order.
pub fn vc_dimension(h: &Hypergraph) -> Result<VcResult> {
    let n = h.n();
    if n > VC_CAP {
        return Err(Error::TooLarge { size: n, cap: VC_CAP });
    }
    let m = h.edge_count();
    if m == 0 {
        return Ok(VcResult {
            dimension: 0,
            none_shattered: true,
            witness: ShatterWitness {
                set: Vec::new(),
                shattered: false,
                missing_subset: Some(Vec::new()),
            },
        });
    }
    let edges = bits::edge_masks(h);
    let top = (m.ilog2() as usize).min(n);
    for k in (1..=top).rev() {
        for set in (0..n).combinations(k) {
            if trace_set(&edges, mask_of(&set)).len() == 1 << k {
                return Ok(VcResult {
                    dimension: k,
                    none_shattered: false,
                    witness: ShatterWitness {
                        set,
                        shattered: true,
                        missing_subset: None,
                    },
                });
            }
        }
    }
    Ok(VcResult {
        dimension: 0,
        none_shattered: false,
        witness: ShatterWitness {
            set: Vec::new(),
            shattered: true,
            missing_subset: None,
        },
    })
}
