//! Greedy edge cover with a matching independent set, and its dual form
//! producing a transversal with a matching.
//!
//! Each step takes a vertex `x` of minimum strong degree in the current
//! restriction, puts the base edges behind the maximal traces through `x`
//! into the cover, and deletes every vertex of those traces. The chosen
//! vertices are pairwise independent and the number of edges per step is
//! at most the strong degeneracy, so `|C| <= ŝ(H) · |X|`.

use serde::Serialize;

use crate::degeneracy::{mighty_degeneracy_bf, strong_degeneracy};
use crate::error::{Error, Result};
use crate::hypergraph::{CheckKind, EdgeId, Hypergraph, VertexId};
use crate::peel::{Key, Peeler};

/// Instances up to this many vertices also get the exhaustive mighty
/// degeneracy attached to their certificate.
pub const MIGHTY_ATTACH_CAP: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverChecks {
    pub cover_valid: bool,
    pub independent_valid: bool,
    pub inequality_holds: bool,
}

impl CoverChecks {
    pub fn all(&self) -> bool {
        self.cover_valid && self.independent_valid && self.inequality_holds
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverCertificate {
    /// Cover edge ids, ascending.
    pub cover: Vec<EdgeId>,
    /// Chosen vertices in the order they were picked.
    pub independent: Vec<VertexId>,
    /// Number of maximal traces taken at each step.
    pub per_step_edges: Vec<usize>,
    /// Vertices deleted at each step, ascending.
    pub removed_per_step: Vec<Vec<VertexId>>,
    /// Strong degeneracy of the input.
    pub bound_factor: usize,
    /// Exhaustive mighty degeneracy, for small inputs.
    pub mighty_factor: Option<usize>,
    pub checks: CoverChecks,
}

pub fn greedy_cover(h: &Hypergraph) -> Result<CoverCertificate> {
    if let Some(&vertex) = h.isolated_vertices().first() {
        return Err(Error::IsolatedVertex { vertex });
    }
    let mut peeler = Peeler::new(h, Key::Strong);
    let mut cover = Vec::new();
    let mut independent = Vec::new();
    let mut per_step_edges = Vec::new();
    let mut removed_per_step = Vec::new();
    while let Some((x, _)) = peeler.peek_min() {
        let step = peeler.system.maximal_traces_containing(x);
        // any edge through a surviving vertex leaves a trace through it
        assert!(!step.is_empty(), "vertex {x} lost all its edges mid-run");
        let mut removed: Vec<VertexId> = step.iter().flat_map(|(t, _)| t.iter().copied()).collect();
        removed.sort_unstable();
        removed.dedup();
        per_step_edges.push(step.len());
        cover.extend(step.iter().map(|&(_, rep)| rep));
        independent.push(x);
        for &v in &removed {
            peeler.remove(v);
        }
        removed_per_step.push(removed);
    }
    cover.sort_unstable();
    cover.dedup();

    let bound_factor = strong_degeneracy(h).value;
    let mighty_factor = if h.n() <= MIGHTY_ATTACH_CAP {
        Some(mighty_degeneracy_bf(h)?)
    } else {
        None
    };
    let steps_total: usize = per_step_edges.iter().sum();
    let factor = mighty_factor.unwrap_or(bound_factor);
    let checks = CoverChecks {
        cover_valid: h.check(CheckKind::EdgeCover, &cover)?,
        independent_valid: h.check(CheckKind::IndependentSet, &independent)?,
        inequality_holds: cover.len() <= steps_total
            && steps_total <= factor * independent.len()
            && factor <= bound_factor,
    };
    debug_assert!(checks.all(), "greedy cover certificate failed: {checks:?}");
    Ok(CoverCertificate {
        cover,
        independent,
        per_step_edges,
        removed_per_step,
        bound_factor,
        mighty_factor,
        checks,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TransversalChecks {
    pub transversal_valid: bool,
    pub matching_valid: bool,
    pub inequality_holds: bool,
}

impl TransversalChecks {
    pub fn all(&self) -> bool {
        self.transversal_valid && self.matching_valid && self.inequality_holds
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TransversalCertificate {
    /// Vertices of the input, ascending.
    pub transversal: Vec<VertexId>,
    /// Pairwise disjoint edges of the input, ascending.
    pub matching: Vec<EdgeId>,
    /// Strong degeneracy of the dual.
    pub bound_factor: usize,
    /// Exhaustive mighty degeneracy of the dual, for small duals.
    pub mighty_factor: Option<usize>,
    pub checks: TransversalChecks,
}

/// Runs [`greedy_cover`] on the dual: dual cover edges come back as
/// vertices hitting every edge, the dual independent set as a matching.
pub fn greedy_transversal(h: &Hypergraph) -> Result<TransversalCertificate> {
    if let Some(&vertex) = h.isolated_vertices().first() {
        return Err(Error::IsolatedVertex { vertex });
    }
    let (dual, generators) = h.dual_with_generators()?;
    let cert = greedy_cover(&dual)?;
    let mut transversal: Vec<VertexId> = cert.cover.iter().map(|&e| generators[e][0]).collect();
    transversal.sort_unstable();
    let mut matching = cert.independent.clone();
    matching.sort_unstable();
    let factor = cert.mighty_factor.unwrap_or(cert.bound_factor);
    let checks = TransversalChecks {
        transversal_valid: h.check(CheckKind::Transversal, &transversal)?,
        matching_valid: h.check(CheckKind::Matching, &matching)?,
        inequality_holds: transversal.len() <= factor * matching.len(),
    };
    debug_assert!(checks.all(), "greedy transversal certificate failed: {checks:?}");
    Ok(TransversalCertificate {
        transversal,
        matching,
        bound_factor: cert.bound_factor,
        mighty_factor: cert.mighty_factor,
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gap5() -> Hypergraph {
        Hypergraph::new(
            5,
            vec![
                vec![0, 1],
                vec![0, 2, 3, 4],
                vec![1, 3, 4],
                vec![1, 2, 4],
                vec![1, 2, 3],
            ],
        )
        .unwrap()
    }

    #[test]
    fn gap_family_is_tight() {
        let cert = greedy_cover(&gap5()).unwrap();
        assert_eq!(cert.cover, vec![0, 1]);
        assert_eq!(cert.independent, vec![0]);
        assert_eq!(cert.per_step_edges, vec![2]);
        assert_eq!(cert.bound_factor, 3);
        assert_eq!(cert.mighty_factor, Some(2));
        assert_eq!(cert.cover.len(), 2 * cert.independent.len());
        assert!(cert.checks.all());
    }

    #[test]
    fn path_closed_neighborhoods() {
        let h = Hypergraph::new(3, vec![vec![0, 1], vec![0, 1, 2], vec![1, 2]]).unwrap();
        let cert = greedy_cover(&h).unwrap();
        assert_eq!(cert.cover, vec![1]);
        assert_eq!(cert.independent, vec![0]);
    }

    #[test]
    fn single_spanning_edge() {
        let h = Hypergraph::new(3, vec![vec![0, 1, 2]]).unwrap();
        let cert = greedy_cover(&h).unwrap();
        assert_eq!(cert.cover, vec![0]);
        assert_eq!(cert.independent.len(), 1);
    }

    #[test]
    fn isolated_vertex_is_rejected() {
        let h = Hypergraph::new(3, vec![vec![0, 1]]).unwrap();
        assert_eq!(greedy_cover(&h), Err(Error::IsolatedVertex { vertex: 2 }));
        assert_eq!(greedy_transversal(&h), Err(Error::IsolatedVertex { vertex: 2 }));
    }

    #[test]
    fn transversal_examples() {
        let h = Hypergraph::new(3, vec![vec![0, 1], vec![1, 2]]).unwrap();
        let cert = greedy_transversal(&h).unwrap();
        assert_eq!(cert.transversal, vec![1]);
        assert_eq!(cert.matching, vec![0]);
        assert!(cert.checks.all());

        let k = 4;
        let perfect = Hypergraph::new(2 * k, (0..k).map(|i| vec![2 * i, 2 * i + 1]).collect()).unwrap();
        let cert = greedy_transversal(&perfect).unwrap();
        assert_eq!(cert.transversal.len(), k);
        assert_eq!(cert.matching.len(), k);
        assert_eq!(cert.bound_factor, 1);
    }
}
