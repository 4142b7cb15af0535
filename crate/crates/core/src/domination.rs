//! Neighborhood hypergraphs of graphs, direct domination/packing checks,
//! and the leaf-first tree solver certifying `γ(T) = α₂(T)` and
//! `γ_t(T) = α₂°(T)`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use rand::Rng;
use serde::Serialize;

use crate::cover::greedy_cover;
use crate::degeneracy::strong_degeneracy;
use crate::error::{Error, Result};
use crate::generators::Seed;
use crate::graph::Graph;
use crate::hypergraph::{CheckKind, DuplicatePolicy, EdgeId, Hypergraph, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum NeighborhoodKind {
    Closed,
    Open,
}

impl FromStr for NeighborhoodKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "closed" => Ok(NeighborhoodKind::Closed),
            "open" => Ok(NeighborhoodKind::Open),
            other => Err(Error::Parameter(format!("unknown neighborhood kind '{other}'"))),
        }
    }
}

impl fmt::Display for NeighborhoodKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NeighborhoodKind::Closed => "closed",
            NeighborhoodKind::Open => "open",
        })
    }
}

/// Neighborhood hypergraph with, for each edge, the vertices whose
/// neighborhood it is (several when neighborhoods coincide).
#[derive(Debug, Clone)]
pub struct NeighborhoodHypergraph {
    pub hypergraph: Hypergraph,
    pub generators: Vec<Vec<VertexId>>,
    /// Edge id of each vertex's neighborhood.
    pub edge_of: Vec<EdgeId>,
}

pub fn neighborhood_hypergraph(g: &Graph, kind: NeighborhoodKind) -> Result<NeighborhoodHypergraph> {
    let mut raw = Vec::with_capacity(g.n());
    for v in 0..g.n() {
        let (edge, label) = match kind {
            NeighborhoodKind::Closed => (g.closed_neighborhood(v), format!("N[v{}]", v + 1)),
            NeighborhoodKind::Open => {
                if g.degree(v) == 0 {
                    return Err(Error::IsolatedVertexForOpen { vertex: v });
                }
                (g.neighbors(v).to_vec(), format!("N(v{})", v + 1))
            }
        };
        raw.push((edge, label));
    }
    let mut index: HashMap<Vec<VertexId>, EdgeId> = HashMap::new();
    let mut generators: Vec<Vec<VertexId>> = Vec::new();
    let mut edge_of = Vec::with_capacity(g.n());
    for (v, (edge, _)) in raw.iter().enumerate() {
        let next = generators.len();
        let id = *index.entry(edge.clone()).or_insert(next);
        if id == next {
            generators.push(Vec::new());
        }
        generators[id].push(v);
        edge_of.push(id);
    }
    let hypergraph = Hypergraph::with_labels(g.n(), raw, DuplicatePolicy::Merge)?.hypergraph;
    Ok(NeighborhoodHypergraph {
        hypergraph,
        generators,
        edge_of,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GraphCheck {
    Dominating,
    TotalDominating,
    TwoPacking,
    OpenTwoPacking,
}

impl GraphCheck {
    pub fn as_str(self) -> &'static str {
        match self {
            GraphCheck::Dominating => "dominating",
            GraphCheck::TotalDominating => "total-dominating",
            GraphCheck::TwoPacking => "2-packing",
            GraphCheck::OpenTwoPacking => "open-2-packing",
        }
    }
}

impl FromStr for GraphCheck {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dominating" => Ok(GraphCheck::Dominating),
            "total-dominating" => Ok(GraphCheck::TotalDominating),
            "2-packing" => Ok(GraphCheck::TwoPacking),
            "open-2-packing" => Ok(GraphCheck::OpenTwoPacking),
            other => Err(Error::Parameter(format!("unknown graph check '{other}'"))),
        }
    }
}

/// Checks a vertex set straight from the graph definitions.
pub fn check_graph(g: &Graph, kind: GraphCheck, set: &[VertexId]) -> Result<bool> {
    let n = g.n();
    if let Some(&v) = set.iter().find(|&&v| v >= n) {
        return Err(Error::VertexOutOfRange { vertex: v, n });
    }
    let mut member = vec![false; n];
    for &v in set {
        member[v] = true;
    }
    Ok(match kind {
        GraphCheck::Dominating => (0..n).all(|x| member[x] || g.neighbors(x).iter().any(|&y| member[y])),
        GraphCheck::TotalDominating => (0..n).all(|x| g.neighbors(x).iter().any(|&y| member[y])),
        GraphCheck::TwoPacking | GraphCheck::OpenTwoPacking => {
            // each vertex may sit in the neighborhood of at most one member
            let closed = kind == GraphCheck::TwoPacking;
            let mut hits = vec![0u32; n];
            for (s, _) in member.iter().enumerate().filter(|(_, &m)| m) {
                if closed {
                    hits[s] += 1;
                }
                for &y in g.neighbors(s) {
                    hits[y] += 1;
                }
            }
            hits.into_iter().all(|h| h <= 1)
        }
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DominationChecks {
    pub dominating_valid: bool,
    pub packing_valid: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DominationCertificate {
    pub kind: NeighborhoodKind,
    /// Dominating (closed) or total dominating (open) set, ascending.
    pub dominating: Vec<VertexId>,
    /// 2-packing (closed) or open 2-packing (open), ascending.
    pub packing: Vec<VertexId>,
    pub equal: bool,
    pub checks: DominationChecks,
}

impl DominationCertificate {
    fn new(
        g: &Graph,
        kind: NeighborhoodKind,
        mut dominating: Vec<VertexId>,
        mut packing: Vec<VertexId>,
    ) -> Result<Self> {
        dominating.sort_unstable();
        dominating.dedup();
        packing.sort_unstable();
        let (dom, pack) = match kind {
            NeighborhoodKind::Closed => (GraphCheck::Dominating, GraphCheck::TwoPacking),
            NeighborhoodKind::Open => (GraphCheck::TotalDominating, GraphCheck::OpenTwoPacking),
        };
        let checks = DominationChecks {
            dominating_valid: check_graph(g, dom, &dominating)?,
            packing_valid: check_graph(g, pack, &packing)?,
        };
        Ok(DominationCertificate {
            kind,
            equal: dominating.len() == packing.len(),
            dominating,
            packing,
            checks,
        })
    }

    pub fn valid(&self) -> bool {
        self.checks.dominating_valid && self.checks.packing_valid
    }
}

/// Minimum (total) dominating set and maximum (open) 2-packing of a tree,
/// of equal size.
///
/// Vertices are visited deepest first from a breadth-first search rooted at
/// vertex 0, so every visited vertex is a leaf of what is still undecided.
/// A vertex not yet dominated joins the packing and its parent (the support
/// vertex of that leaf) joins the dominating set, dominating the parent's
/// neighborhood. The root, having no parent, is dominated by its smallest
/// neighbor (by itself when it is the only vertex). No two
/// packing vertices can see the same dominator, so the two sets have the
/// same size.
pub fn tree_domination(t: &Graph, kind: NeighborhoodKind) -> Result<DominationCertificate> {
    if !t.is_tree() {
        return Err(Error::NotATree {
            reason: format!(
                "{} vertices, {} edges, connected: {}",
                t.n(),
                t.edge_count(),
                t.is_connected()
            ),
        });
    }
    let n = t.n();
    if kind == NeighborhoodKind::Open && n == 1 {
        return Err(Error::SingleVertexOpen);
    }

    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut visited = vec![false; n];
    visited[0] = true;
    order.push(0);
    let mut head = 0;
    while head < order.len() {
        let u = order[head];
        head += 1;
        for &v in t.neighbors(u) {
            if !visited[v] {
                visited[v] = true;
                parent[v] = u;
                order.push(v);
            }
        }
    }

    let mut dominated = vec![false; n];
    let mut in_dom = vec![false; n];
    let mut dominating = Vec::new();
    let mut packing = Vec::new();
    for &v in order.iter().rev() {
        if dominated[v] {
            continue;
        }
        let w = match parent[v] {
            usize::MAX => t.neighbors(v).first().copied().unwrap_or(v),
            p => p,
        };
        packing.push(v);
        if !in_dom[w] {
            in_dom[w] = true;
            dominating.push(w);
        }
        if kind == NeighborhoodKind::Closed {
            dominated[w] = true;
        }
        for &u in t.neighbors(w) {
            dominated[u] = true;
        }
    }
    let cert = DominationCertificate::new(t, kind, dominating, packing)?;
    debug_assert!(cert.valid() && cert.equal, "tree certificate failed: {cert:?}");
    Ok(cert)
}

/// Runs the generic greedy edge cover on the neighborhood hypergraph of
/// any graph. Cover edges are read back as their smallest generating
/// vertex; the independent set is a packing of the matching kind.
pub fn greedy_domination(g: &Graph, kind: NeighborhoodKind) -> Result<DominationCertificate> {
    let nh = neighborhood_hypergraph(g, kind)?;
    let cert = greedy_cover(&nh.hypergraph)?;
    let dominating = cert.cover.iter().map(|&e| nh.generators[e][0]).collect();
    DominationCertificate::new(g, kind, dominating, cert.independent)
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    pub samples: usize,
    pub equivalence_checks: usize,
    pub equivalence_violations: usize,
    pub degree_bound_checks: usize,
    pub degree_bound_violations: usize,
    /// Whether the graph had no isolated vertex, so open-neighborhood
    /// statements were audited as well.
    pub open_audited: bool,
    pub strong_degeneracy_closed: usize,
    pub max_degree: usize,
}

impl AuditReport {
    pub fn passed(&self) -> bool {
        self.equivalence_violations == 0 && self.degree_bound_violations == 0
    }
}

/// Samples vertex subsets and compares graph-side domination/packing
/// against hypergraph-side cover/independence on the neighborhood
/// hypergraphs, then checks the strong-degree bounds `s(x) <= deg(x) + 1`
/// (closed) and `s(x) <= deg(x)` (open). The first two samples are the
/// empty set and the whole vertex set.
pub fn neighborhood_equivalence_audit(g: &Graph, trials: usize, seed: Seed) -> Result<AuditReport> {
    let n = g.n();
    let closed = neighborhood_hypergraph(g, NeighborhoodKind::Closed)?;
    let open = if (0..n).all(|v| g.degree(v) > 0) {
        Some(neighborhood_hypergraph(g, NeighborhoodKind::Open)?)
    } else {
        None
    };
    let mut report = AuditReport {
        open_audited: open.is_some(),
        max_degree: g.max_degree(),
        strong_degeneracy_closed: strong_degeneracy(&closed.hypergraph).value,
        ..AuditReport::default()
    };

    let tally = |ok: bool, report: &mut AuditReport| {
        report.equivalence_checks += 1;
        if !ok {
            report.equivalence_violations += 1;
        }
    };
    let as_edges =
        |nh: &NeighborhoodHypergraph, set: &[VertexId]| -> Vec<EdgeId> { set.iter().map(|&v| nh.edge_of[v]).collect() };

    let mut rng = seed.rng();
    for trial in 0..trials {
        let set: Vec<VertexId> = match trial {
            0 => Vec::new(),
            1 => (0..n).collect(),
            _ => (0..n).filter(|_| rng.random_bool(0.5)).collect(),
        };
        report.samples += 1;
        let dominating = check_graph(g, GraphCheck::Dominating, &set)?;
        let covers = closed
            .hypergraph
            .check(CheckKind::EdgeCover, &as_edges(&closed, &set))?;
        tally(dominating == covers, &mut report);
        let packing = check_graph(g, GraphCheck::TwoPacking, &set)?;
        let independent = closed.hypergraph.check(CheckKind::IndependentSet, &set)?;
        tally(packing == independent, &mut report);
        if let Some(open) = &open {
            let total = check_graph(g, GraphCheck::TotalDominating, &set)?;
            let covers = open.hypergraph.check(CheckKind::EdgeCover, &as_edges(open, &set))?;
            tally(total == covers, &mut report);
            let packing = check_graph(g, GraphCheck::OpenTwoPacking, &set)?;
            let independent = open.hypergraph.check(CheckKind::IndependentSet, &set)?;
            tally(packing == independent, &mut report);
        }
    }

    let mut bound = |ok: bool| {
        report.degree_bound_checks += 1;
        if !ok {
            report.degree_bound_violations += 1;
        }
    };
    for (x, s) in closed.hypergraph.strong_degrees().into_iter().enumerate() {
        bound(s <= g.degree(x) + 1);
    }
    if let Some(open) = &open {
        for (x, s) in open.hypergraph.strong_degrees().into_iter().enumerate() {
            bound(s <= g.degree(x));
        }
    }
    let degeneracy_ok = n == 0 || report.strong_degeneracy_closed <= report.max_degree + 1;
    bound(degeneracy_ok);
    Ok(report)
}
