//! Peeling computation of strong and plain degeneracy, plus exhaustive
//! oracles for both and for mighty degeneracy.

use std::collections::HashSet;

use serde::Serialize;

use crate::bits;
use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, VertexId};
use crate::peel::{Key, Peeler};

/// Largest vertex count accepted by [`strong_degeneracy_bf`] and
/// [`degeneracy_bf`].
pub const STRONG_BF_CAP: usize = 12;
/// Largest vertex count accepted by [`mighty_degeneracy_bf`].
pub const MIGHTY_BF_CAP: usize = 14;

/// Peeling sequence: vertex removed at each step and the minimum degree
/// seen at that step.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EliminationOrder {
    pub order: Vec<VertexId>,
    pub step_values: Vec<usize>,
    pub value: usize,
}

/// Strong degeneracy by repeatedly deleting a vertex of minimum strong
/// degree in the current restriction (smallest id on ties).
pub fn strong_degeneracy(h: &Hypergraph) -> EliminationOrder {
    peel(h, Key::Strong)
}

/// Plain degeneracy: the same peeling driven by the number of distinct
/// traces containing each vertex.
pub fn degeneracy(h: &Hypergraph) -> EliminationOrder {
    peel(h, Key::Plain)
}

fn peel(h: &Hypergraph, key: Key) -> EliminationOrder {
    let mut peeler = Peeler::new(h, key);
    let mut order = Vec::with_capacity(h.n());
    let mut step_values = Vec::with_capacity(h.n());
    while let Some((v, k)) = peeler.peek_min() {
        order.push(v);
        step_values.push(k);
        peeler.remove(v);
    }
    debug_assert!(peeler.system.is_empty());
    let value = step_values.iter().copied().max().unwrap_or(0);
    EliminationOrder {
        order,
        step_values,
        value,
    }
}

fn cap(h: &Hypergraph, cap: usize) -> Result<()> {
    if h.n() > cap {
        Err(Error::TooLarge { size: h.n(), cap })
    } else {
        Ok(())
    }
}

/// Maximum over nonempty `S ⊆ V` of the minimum strong degree of `H[S]`.
pub fn strong_degeneracy_bf(h: &Hypergraph) -> Result<usize> {
    cap(h, STRONG_BF_CAP)?;
    let edges = bits::edge_masks(h);
    Ok((1..=bits::full_mask(h.n()))
        .map(|s| bits::min_count(&bits::maximal(&bits::traces(&edges, s)), s))
        .max()
        .unwrap_or(0))
}

/// Maximum over nonempty `S ⊆ V` of the minimum degree of `H[S]`.
pub fn degeneracy_bf(h: &Hypergraph) -> Result<usize> {
    cap(h, STRONG_BF_CAP)?;
    let edges = bits::edge_masks(h);
    Ok((1..=bits::full_mask(h.n()))
        .map(|s| bits::min_count(&bits::traces(&edges, s), s))
        .max()
        .unwrap_or(0))
}

/// Mighty degeneracy: maximum over all `R ⊆ V` whose strong removal leaves
/// something, of the minimum strong degree of what is left.
pub fn mighty_degeneracy_bf(h: &Hypergraph) -> Result<usize> {
    cap(h, MIGHTY_BF_CAP)?;
    let edges = bits::edge_masks(h);
    let full = bits::full_mask(h.n());
    let mut seen = HashSet::new();
    let mut best = 0;
    for r in 0..=full {
        let swept = edges.iter().filter(|&&e| e & r != 0).fold(r, |acc, &e| acc | e);
        let left = full & !swept;
        if left == 0 || !seen.insert(left) {
            continue;
        }
        let value = bits::min_count(&bits::maximal(&bits::traces(&edges, left)), left);
        best = best.max(value);
    }
    Ok(best)
}
