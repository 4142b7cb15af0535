//! Exhaustive exact solvers for small instances.
//!
//! Candidates are enumerated by size in lexicographic order, so the
//! reported witness is the lexicographically least optimum. Minimization
//! stops at the first feasible size. The maximization problems are all
//! hereditary (subsets of feasible sets are feasible), so the search climbs
//! sizes until a size has no feasible candidate.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::Serialize;

use crate::bits;
use crate::domination::{check_graph, GraphCheck};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hypergraph::{CheckKind, Hypergraph};

/// Vertex cap for hypergraph problems.
pub const HYPERGRAPH_CAP: usize = 16;
/// Vertex cap for graph problems.
pub const GRAPH_CAP: usize = 18;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExactProblem {
    MinEdgeCover,
    MaxIndependentSet,
    MinTransversal,
    MaxMatching,
    MinDominating,
    MinTotalDominating,
    #[serde(rename = "max-2-packing")]
    MaxTwoPacking,
    #[serde(rename = "max-open-2-packing")]
    MaxOpenTwoPacking,
}

impl ExactProblem {
    pub const ALL: [ExactProblem; 8] = [
        ExactProblem::MinEdgeCover,
        ExactProblem::MaxIndependentSet,
        ExactProblem::MinTransversal,
        ExactProblem::MaxMatching,
        ExactProblem::MinDominating,
        ExactProblem::MinTotalDominating,
        ExactProblem::MaxTwoPacking,
        ExactProblem::MaxOpenTwoPacking,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ExactProblem::MinEdgeCover => "min-edge-cover",
            ExactProblem::MaxIndependentSet => "max-independent-set",
            ExactProblem::MinTransversal => "min-transversal",
            ExactProblem::MaxMatching => "max-matching",
            ExactProblem::MinDominating => "min-dominating",
            ExactProblem::MinTotalDominating => "min-total-dominating",
            ExactProblem::MaxTwoPacking => "max-2-packing",
            ExactProblem::MaxOpenTwoPacking => "max-open-2-packing",
        }
    }

    /// Whether the problem takes a graph rather than a hypergraph.
    pub fn on_graph(self) -> bool {
        matches!(
            self,
            ExactProblem::MinDominating
                | ExactProblem::MinTotalDominating
                | ExactProblem::MaxTwoPacking
                | ExactProblem::MaxOpenTwoPacking
        )
    }
}

impl fmt::Display for ExactProblem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ExactProblem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ExactProblem::ALL
            .into_iter()
            .find(|p| p.as_str() == s)
            .ok_or_else(|| Error::Parameter(format!("unknown problem '{s}'")))
    }
}

#[derive(Debug, Clone, Copy)]
pub enum Instance<'a> {
    Hypergraph(&'a Hypergraph),
    Graph(&'a Graph),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExactResult {
    pub problem: ExactProblem,
    pub value: usize,
    /// Edge ids for covers and matchings, vertex ids otherwise; ascending.
    pub witness: Vec<usize>,
    /// Candidate sets examined.
    pub explored: u64,
}

struct Search {
    explored: u64,
}

impl Search {
    fn min(&mut self, universe: usize, feasible: impl Fn(&[usize]) -> bool) -> Option<Vec<usize>> {
        for k in 0..=universe {
            for combo in (0..universe).combinations(k) {
                self.explored += 1;
                if feasible(&combo) {
                    return Some(combo);
                }
            }
        }
        None
    }

    fn max_hereditary(&mut self, universe: usize, feasible: impl Fn(&[usize]) -> bool) -> Vec<usize> {
        let mut best = Vec::new();
        self.explored += 1;
        for k in 1..=universe {
            let mut found = None;
            for combo in (0..universe).combinations(k) {
                self.explored += 1;
                if feasible(&combo) {
                    found = Some(combo);
                    break;
                }
            }
            match found {
                Some(w) => best = w,
                None => break,
            }
        }
        best
    }
}

fn union(masks: &[u64], picks: &[usize]) -> u64 {
    picks.iter().fold(0, |acc, &i| acc | masks[i])
}

fn pairwise_disjoint(masks: &[u64], picks: &[usize]) -> bool {
    let mut seen = 0u64;
    for &i in picks {
        if seen & masks[i] != 0 {
            return false;
        }
        seen |= masks[i];
    }
    true
}

pub fn exact(instance: Instance<'_>, problem: ExactProblem) -> Result<ExactResult> {
    match instance {
        Instance::Hypergraph(h) if !problem.on_graph() => exact_hypergraph(h, problem),
        Instance::Graph(g) if problem.on_graph() => exact_graph(g, problem),
        _ => Err(Error::Parameter(format!(
            "{problem} expects a {}",
            if problem.on_graph() { "graph" } else { "hypergraph" }
        ))),
    }
}

fn exact_hypergraph(h: &Hypergraph, problem: ExactProblem) -> Result<ExactResult> {
    if h.n() > HYPERGRAPH_CAP {
        return Err(Error::TooLarge {
            size: h.n(),
            cap: HYPERGRAPH_CAP,
        });
    }
    let n = h.n();
    let m = h.edge_count();
    let edges = bits::edge_masks(h);
    let full = bits::full_mask(n);
    let mut search = Search { explored: 0 };
    let (witness, kind) = match problem {
        ExactProblem::MinEdgeCover => {
            if let Some(&v) = h.isolated_vertices().first() {
                return Err(Error::Infeasible {
                    reason: format!("vertex {} lies in no edge", v + 1),
                });
            }
            let w = search
                .min(m, |picks| union(&edges, picks) == full)
                .expect("edges cover every vertex");
            (w, CheckKind::EdgeCover)
        }
        ExactProblem::MaxIndependentSet => {
            let w = search.max_hereditary(n, |picks| {
                let s = picks.iter().fold(0u64, |acc, &v| acc | 1 << v);
                edges.iter().all(|e| (e & s).count_ones() <= 1)
            });
            (w, CheckKind::IndependentSet)
        }
        ExactProblem::MinTransversal => {
            let w = search
                .min(n, |picks| {
                    let s = picks.iter().fold(0u64, |acc, &v| acc | 1 << v);
                    edges.iter().all(|e| e & s != 0)
                })
                .expect("the whole vertex set hits every edge");
            (w, CheckKind::Transversal)
        }
        ExactProblem::MaxMatching => {
            let w = search.max_hereditary(m, |picks| pairwise_disjoint(&edges, picks));
            (w, CheckKind::Matching)
        }
        _ => unreachable!("graph problems are dispatched elsewhere"),
    };
    assert!(
        h.check(kind, &witness)?,
        "{problem} witness failed its definition check"
    );
    Ok(ExactResult {
        problem,
        value: witness.len(),
        witness,
        explored: search.explored,
    })
}

fn exact_graph(g: &Graph, problem: ExactProblem) -> Result<ExactResult> {
    let n = g.n();
    if n > GRAPH_CAP {
        return Err(Error::TooLarge {
            size: n,
            cap: GRAPH_CAP,
        });
    }
    let open: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u64, |acc, &u| acc | 1 << u))
        .collect();
    let closed: Vec<u64> = open.iter().enumerate().map(|(v, &m)| m | 1 << v).collect();
    let mut search = Search { explored: 0 };
    let (witness, kind) = match problem {
        ExactProblem::MinDominating => {
            let w = search
                .min(n, |picks| {
                    let s = picks.iter().fold(0u64, |acc, &v| acc | 1 << v);
                    closed.iter().all(|nb| nb & s != 0)
                })
                .expect("the whole vertex set dominates");
            (w, GraphCheck::Dominating)
        }
        ExactProblem::MinTotalDominating => {
            if let Some(v) = (0..n).find(|&v| open[v] == 0) {
                return Err(Error::Infeasible {
                    reason: format!("vertex {} has no neighbor", v + 1),
                });
            }
            let w = search
                .min(n, |picks| {
                    let s = picks.iter().fold(0u64, |acc, &v| acc | 1 << v);
                    open.iter().all(|nb| nb & s != 0)
                })
                .expect("without isolated vertices the whole set totally dominates");
            (w, GraphCheck::TotalDominating)
        }
        ExactProblem::MaxTwoPacking => (
            search.max_hereditary(n, |picks| pairwise_disjoint(&closed, picks)),
            GraphCheck::TwoPacking,
        ),
        ExactProblem::MaxOpenTwoPacking => (
            search.max_hereditary(n, |picks| pairwise_disjoint(&open, picks)),
            GraphCheck::OpenTwoPacking,
        ),
        _ => unreachable!("hypergraph problems are dispatched elsewhere"),
    };
    assert!(
        check_graph(g, kind, &witness)?,
        "{problem} witness failed its definition check"
    );
    Ok(ExactResult {
        problem,
        value: witness.len(),
        witness,
        explored: search.explored,
    })
}
