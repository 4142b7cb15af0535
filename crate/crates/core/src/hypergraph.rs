//! Canonical hypergraph representation.
//!
//! Vertices are `0..n`. Every edge is a nonempty, sorted, duplicate-free
//! list of vertex ids, and no two edges are equal as sets. Edge ids are
//! positions in the edge list.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

pub type VertexId = usize;
pub type EdgeId = usize;

/// What to do when the same edge shows up twice during construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DuplicatePolicy {
    #[default]
    Reject,
    /// Keep the first occurrence and append the later labels to it.
    Merge,
}

#[derive(Debug, Clone, Serialize)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Vec<VertexId>>,
    labels: Option<Vec<String>>,
}

/// Structural equality: labels are provenance only.
impl PartialEq for Hypergraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for Hypergraph {}

/// Result of building a hypergraph from raw edge lists.
#[derive(Debug, Clone)]
pub struct Built {
    pub hypergraph: Hypergraph,
    /// Edges dropped because they repeated an earlier edge.
    pub merged: usize,
    /// Edges that listed some vertex more than once.
    pub collapsed: usize,
}

impl Hypergraph {
    /// Strict constructor: rejects empty edges, out-of-range vertices and
    /// repeated edges.
    pub fn new(n: usize, edges: Vec<Vec<VertexId>>) -> Result<Self> {
        Ok(Self::build(n, edges.into_iter().map(|e| (e, None)), DuplicatePolicy::Reject)?.hypergraph)
    }

    pub fn with_labels(n: usize, edges: Vec<(Vec<VertexId>, String)>, policy: DuplicatePolicy) -> Result<Built> {
        Self::build(n, edges.into_iter().map(|(e, l)| (e, Some(l))), policy)
    }

    pub fn from_edges(n: usize, edges: Vec<Vec<VertexId>>, policy: DuplicatePolicy) -> Result<Built> {
        Self::build(n, edges.into_iter().map(|e| (e, None)), policy)
    }

    fn build<I>(n: usize, raw: I, policy: DuplicatePolicy) -> Result<Built>
    where
        I: IntoIterator<Item = (Vec<VertexId>, Option<String>)>,
    {
        let mut edges: Vec<Vec<VertexId>> = Vec::new();
        let mut labels: Vec<Option<String>> = Vec::new();
        let mut seen: HashMap<Vec<VertexId>, EdgeId> = HashMap::new();
        let mut merged = 0;
        let mut collapsed = 0;
        for (position, (mut edge, label)) in raw.into_iter().enumerate() {
            if edge.is_empty() {
                return Err(Error::EmptyEdge { line: position + 1 });
            }
            if let Some(&v) = edge.iter().find(|&&v| v >= n) {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            let before = edge.len();
            edge.sort_unstable();
            edge.dedup();
            if edge.len() != before {
                collapsed += 1;
            }
            match seen.get(&edge) {
                Some(&first) => match policy {
                    DuplicatePolicy::Reject => {
                        return Err(Error::DuplicateEdge {
                            first,
                            second: position,
                        });
                    }
                    DuplicatePolicy::Merge => {
                        merged += 1;
                        if let Some(extra) = label {
                            match &mut labels[first] {
                                Some(existing) => {
                                    existing.push(',');
                                    existing.push_str(&extra);
                                }
                                slot @ None => *slot = Some(extra),
                            }
                        }
                    }
                },
                None => {
                    seen.insert(edge.clone(), edges.len());
                    edges.push(edge);
                    labels.push(label);
                }
            }
        }
        let labels = if labels.iter().any(Option::is_some) {
            Some(labels.into_iter().map(Option::unwrap_or_default).collect())
        } else {
            None
        };
        Ok(Built {
            hypergraph: Hypergraph { n, edges, labels },
            merged,
            collapsed,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Vec<VertexId>] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> &[VertexId] {
        &self.edges[id]
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, id: EdgeId) -> Option<&str> {
        self.labels.as_ref().map(|l| l[id].as_str())
    }

    /// Sum of edge sizes.
    pub fn size(&self) -> usize {
        self.edges.iter().map(Vec::len).sum()
    }

    /// For each vertex, the ascending list of edges containing it.
    pub fn incidence(&self) -> Vec<Vec<EdgeId>> {
        let mut inc = vec![Vec::new(); self.n];
        for (id, e) in self.edges.iter().enumerate() {
            for &v in e {
                inc[v].push(id);
            }
        }
        inc
    }

    fn check_vertex(&self, x: VertexId) -> Result<()> {
        if x < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: x, n: self.n })
        }
    }

    pub fn degree(&self, x: VertexId) -> Result<usize> {
        self.check_vertex(x)?;
        Ok(self.edges.iter().filter(|e| e.binary_search(&x).is_ok()).count())
    }

    /// Number of maximal edges containing `x`.
    pub fn strong_degree(&self, x: VertexId) -> Result<usize> {
        self.check_vertex(x)?;
        let flags = maximal_flags(self.n, &self.edges);
        Ok(self
            .edges
            .iter()
            .zip(&flags)
            .filter(|(e, &max)| max && e.binary_search(&x).is_ok())
            .count())
    }

    /// Strong degree of every vertex.
    pub fn strong_degrees(&self) -> Vec<usize> {
        let flags = maximal_flags(self.n, &self.edges);
        let mut count = vec![0; self.n];
        for (e, _) in self.edges.iter().zip(&flags).filter(|(_, &m)| m) {
            for &v in e {
                count[v] += 1;
            }
        }
        count
    }

    /// Ids of edges not properly contained in another edge, ascending.
    pub fn maximal_edges(&self) -> Vec<EdgeId> {
        flagged_ids(&maximal_flags(self.n, &self.edges))
    }

    /// The induced subhypergraph on `subset`.
    pub fn restrict(&self, subset: &[VertexId]) -> Result<SubHypergraph<'_>> {
        let mut member = vec![false; self.n];
        for &v in subset {
            self.check_vertex(v)?;
            member[v] = true;
        }
        SubHypergraph::from_membership(self, member)
    }

    /// Removes `removed` together with every vertex of every edge meeting it,
    /// and restricts to what is left. `None` when nothing is left.
    pub fn strong_remove(&self, removed: &[VertexId]) -> Result<Option<SubHypergraph<'_>>> {
        let mut member = vec![true; self.n];
        for &v in removed {
            self.check_vertex(v)?;
            member[v] = false;
        }
        for e in &self.edges {
            if e.iter().any(|&v| removed.contains(&v)) {
                for &v in e {
                    member[v] = false;
                }
            }
        }
        if member.iter().any(|&m| m) {
            SubHypergraph::from_membership(self, member).map(Some)
        } else {
            Ok(None)
        }
    }

    /// Dual hypergraph: one vertex per edge, one edge per vertex listing the
    /// edges that contain it. Twin vertices produce a single dual edge whose
    /// label names all of them.
    pub fn dual(&self) -> Result<Hypergraph> {
        self.dual_with_generators().map(|(d, _)| d)
    }

    /// Like [`Hypergraph::dual`], also returning for every dual edge the
    /// ascending list of original vertices that generated it.
    pub fn dual_with_generators(&self) -> Result<(Hypergraph, Vec<Vec<VertexId>>)> {
        let inc = self.incidence();
        let mut edges: Vec<Vec<EdgeId>> = Vec::new();
        let mut generators: Vec<Vec<VertexId>> = Vec::new();
        let mut seen: HashMap<&[EdgeId], usize> = HashMap::new();
        for (v, list) in inc.iter().enumerate() {
            if list.is_empty() {
                return Err(Error::IsolatedVertex { vertex: v });
            }
            match seen.get(list.as_slice()) {
                Some(&id) => generators[id].push(v),
                None => {
                    seen.insert(list, edges.len());
                    edges.push(list.clone());
                    generators.push(vec![v]);
                }
            }
        }
        let labels = generators
            .iter()
            .map(|g| g.iter().map(|v| format!("v{}", v + 1)).collect::<Vec<_>>().join(","))
            .collect();
        let dual = Hypergraph {
            n: self.edges.len(),
            edges,
            labels: Some(labels),
        };
        Ok((dual, generators))
    }

    /// Vertices lying in no edge.
    pub fn isolated_vertices(&self) -> Vec<VertexId> {
        let mut covered = vec![false; self.n];
        for e in &self.edges {
            for &v in e {
                covered[v] = true;
            }
        }
        flagged_ids(&covered.iter().map(|c| !c).collect::<Vec<_>>())
    }

    /// Checks `ids` against one of the four covering/packing definitions.
    /// Edge ids for edge covers and matchings, vertex ids otherwise.
    pub fn check(&self, kind: CheckKind, ids: &[usize]) -> Result<bool> {
        let len = match kind {
            CheckKind::EdgeCover | CheckKind::Matching => self.edges.len(),
            CheckKind::IndependentSet | CheckKind::Transversal => self.n,
        };
        if let Some(&id) = ids.iter().find(|&&id| id >= len) {
            return Err(Error::IdOutOfRange { id, len });
        }
        let mut ids = ids.to_vec();
        ids.sort_unstable();
        ids.dedup();
        Ok(match kind {
            CheckKind::EdgeCover => {
                let mut covered = vec![false; self.n];
                for &e in &ids {
                    for &v in &self.edges[e] {
                        covered[v] = true;
                    }
                }
                covered.into_iter().all(|c| c)
            }
            CheckKind::IndependentSet => {
                let mut member = vec![false; self.n];
                for &v in &ids {
                    member[v] = true;
                }
                self.edges.iter().all(|e| e.iter().filter(|&&v| member[v]).count() <= 1)
            }
            CheckKind::Transversal => {
                let mut member = vec![false; self.n];
                for &v in &ids {
                    member[v] = true;
                }
                self.edges.iter().all(|e| e.iter().any(|&v| member[v]))
            }
            CheckKind::Matching => {
                let mut used = vec![false; self.n];
                for &e in &ids {
                    for &v in &self.edges[e] {
                        if used[v] {
                            return Ok(false);
                        }
                        used[v] = true;
                    }
                }
                true
            }
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckKind {
    EdgeCover,
    IndependentSet,
    Transversal,
    Matching,
}

impl CheckKind {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckKind::EdgeCover => "edge-cover",
            CheckKind::IndependentSet => "independent-set",
            CheckKind::Transversal => "transversal",
            CheckKind::Matching => "matching",
        }
    }
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CheckKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edge-cover" => Ok(CheckKind::EdgeCover),
            "independent-set" => Ok(CheckKind::IndependentSet),
            "transversal" => Ok(CheckKind::Transversal),
            "matching" => Ok(CheckKind::Matching),
            other => Err(Error::Parameter(format!("unknown check kind '{other}'"))),
        }
    }
}

/// Restriction of a hypergraph to a vertex subset: the distinct nonempty
/// traces of its edges, each remembered by the smallest edge producing it.
#[derive(Debug, Clone)]
pub struct SubHypergraph<'a> {
    base: &'a Hypergraph,
    member: Vec<bool>,
    vertices: Vec<VertexId>,
    traces: Vec<Vec<VertexId>>,
    representatives: Vec<EdgeId>,
}

impl<'a> SubHypergraph<'a> {
    fn from_membership(base: &'a Hypergraph, member: Vec<bool>) -> Result<Self> {
        let vertices = flagged_ids(&member);
        if vertices.is_empty() {
            return Err(Error::EmptySubset);
        }
        let mut traces = Vec::new();
        let mut representatives = Vec::new();
        let mut seen: HashMap<Vec<VertexId>, usize> = HashMap::new();
        for (id, e) in base.edges.iter().enumerate() {
            let trace: Vec<VertexId> = e.iter().copied().filter(|&v| member[v]).collect();
            if trace.is_empty() || seen.contains_key(&trace) {
                continue;
            }
            seen.insert(trace.clone(), traces.len());
            traces.push(trace);
            representatives.push(id);
        }
        Ok(SubHypergraph {
            base,
            member,
            vertices,
            traces,
            representatives,
        })
    }

    pub fn base(&self) -> &'a Hypergraph {
        self.base
    }

    /// Ascending vertex ids of the restriction, in base numbering.
    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.member.get(v).copied().unwrap_or(false)
    }

    pub fn traces(&self) -> &[Vec<VertexId>] {
        &self.traces
    }

    /// Smallest base edge id whose trace is `traces()[trace]`.
    pub fn representative(&self, trace: usize) -> EdgeId {
        self.representatives[trace]
    }

    pub fn representatives(&self) -> &[EdgeId] {
        &self.representatives
    }

    fn check_vertex(&self, x: VertexId) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: x,
                n: self.base.n,
            })
        }
    }

    /// Number of distinct traces containing `x`.
    pub fn degree(&self, x: VertexId) -> Result<usize> {
        self.check_vertex(x)?;
        Ok(self.traces.iter().filter(|t| t.binary_search(&x).is_ok()).count())
    }

    pub fn strong_degree(&self, x: VertexId) -> Result<usize> {
        self.check_vertex(x)?;
        let flags = maximal_flags(self.base.n, &self.traces);
        Ok(self
            .traces
            .iter()
            .zip(&flags)
            .filter(|(t, &max)| max && t.binary_search(&x).is_ok())
            .count())
    }

    /// Strong degree of every vertex, aligned with [`SubHypergraph::vertices`].
    pub fn strong_degrees(&self) -> Vec<usize> {
        let flags = maximal_flags(self.base.n, &self.traces);
        let mut count = vec![0; self.base.n];
        for (t, _) in self.traces.iter().zip(&flags).filter(|(_, &m)| m) {
            for &v in t {
                count[v] += 1;
            }
        }
        self.vertices.iter().map(|&v| count[v]).collect()
    }

    /// Trace indices of maximal traces, ascending.
    pub fn maximal_traces(&self) -> Vec<usize> {
        flagged_ids(&maximal_flags(self.base.n, &self.traces))
    }

    /// Strong removal inside this restriction; vertices of `removed` must
    /// belong to it.
    pub fn strong_remove(&self, removed: &[VertexId]) -> Result<Option<SubHypergraph<'a>>> {
        let mut member = self.member.clone();
        for &v in removed {
            self.check_vertex(v)?;
            member[v] = false;
        }
        for t in &self.traces {
            if t.iter().any(|&v| removed.contains(&v)) {
                for &v in t {
                    member[v] = false;
                }
            }
        }
        if member.iter().any(|&m| m) {
            SubHypergraph::from_membership(self.base, member).map(Some)
        } else {
            Ok(None)
        }
    }

    /// Re-indexes the restriction as a standalone hypergraph on
    /// `0..vertices().len()`; labels name the representative base edges.
    pub fn to_hypergraph(&self) -> Hypergraph {
        let mut index = vec![usize::MAX; self.base.n];
        for (i, &v) in self.vertices.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .traces
            .iter()
            .map(|t| t.iter().map(|&v| index[v]).collect())
            .collect();
        let labels = self
            .representatives
            .iter()
            .map(|&r| match self.base.label(r) {
                Some(l) if !l.is_empty() => l.to_string(),
                _ => format!("e{}", r + 1),
            })
            .collect();
        Hypergraph {
            n: self.vertices.len(),
            edges,
            labels: Some(labels),
        }
    }
}

pub(crate) fn flagged_ids(flags: &[bool]) -> Vec<usize> {
    flags.iter().enumerate().filter_map(|(i, &f)| f.then_some(i)).collect()
}

/// `a ⊆ b` for ascending slices.
pub(crate) fn is_subset(a: &[VertexId], b: &[VertexId]) -> bool {
    if a.len() > b.len() {
        return false;
    }
    let mut rest = b.iter();
    'outer: for x in a {
        for y in rest.by_ref() {
            if y == x {
                continue 'outer;
            }
            if y > x {
                return false;
            }
        }
        return false;
    }
    true
}

/// Maximality flag for each set of a family of pairwise distinct sorted
/// sets over `0..n`. Candidate supersets are drawn from the incidence list
/// of the set's least-used vertex.
pub(crate) fn maximal_flags(n: usize, sets: &[Vec<VertexId>]) -> Vec<bool> {
    let mut inc: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (id, s) in sets.iter().enumerate() {
        for &v in s {
            inc[v].push(id);
        }
    }
    sets.iter()
        .enumerate()
        .map(|(id, s)| {
            let Some(&pivot) = s.iter().min_by_key(|&&v| inc[v].len()) else {
                return sets.len() == 1;
            };
            !inc[pivot]
                .iter()
                .any(|&other| other != id && sets[other].len() > s.len() && is_subset(s, &sets[other]))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path_closed() -> Hypergraph {
        // a=0, b=1, c=2: N[a], N[b], N[c]
        Hypergraph::new(3, vec![vec![0, 1], vec![0, 1, 2], vec![1, 2]]).unwrap()
    }

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
    fn constructor_rejects_bad_edges() {
        assert_eq!(Hypergraph::new(2, vec![vec![]]), Err(Error::EmptyEdge { line: 1 }));
        assert_eq!(
            Hypergraph::new(2, vec![vec![2]]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        );
        assert_eq!(
            Hypergraph::new(3, vec![vec![0, 1], vec![1, 0]]),
            Err(Error::DuplicateEdge { first: 0, second: 1 })
        );
    }

    #[test]
    fn merge_policy_keeps_first_and_joins_labels() {
        let built = Hypergraph::with_labels(
            3,
            vec![
                (vec![0, 1], "A".into()),
                (vec![2], "B".into()),
                (vec![1, 0, 0], "C".into()),
            ],
            DuplicatePolicy::Merge,
        )
        .unwrap();
        assert_eq!(built.merged, 1);
        assert_eq!(built.collapsed, 1);
        assert_eq!(built.hypergraph.edges(), &[vec![0, 1], vec![2]]);
        assert_eq!(built.hypergraph.label(0), Some("A,C"));
    }

    #[test]
    fn restrict_path_neighborhoods() {
        let h = path_closed();
        let sub = h.restrict(&[1, 2]).unwrap();
        assert_eq!(sub.traces(), &[vec![1], vec![1, 2]]);
        assert_eq!(sub.representatives(), &[0, 1]);
    }

    #[test]
    fn restrict_to_everything_is_identity() {
        let h = gap5();
        let sub = h.restrict(&[0, 1, 2, 3, 4]).unwrap();
        assert_eq!(sub.traces(), h.edges());
        assert_eq!(sub.representatives(), &[0, 1, 2, 3, 4]);
    }

    #[test]
    fn restrict_single_edge_to_one_vertex() {
        let h = Hypergraph::new(3, vec![vec![0, 1, 2]]).unwrap();
        let sub = h.restrict(&[0]).unwrap();
        assert_eq!(sub.traces(), &[vec![0]]);
        assert_eq!(h.restrict(&[]).unwrap_err(), Error::EmptySubset);
    }

    #[test]
    fn strong_remove_cases() {
        assert!(gap5().strong_remove(&[2]).unwrap().is_none());
        let h = Hypergraph::new(4, vec![vec![0, 1], vec![2, 3]]).unwrap();
        let sub = h.strong_remove(&[0]).unwrap().unwrap();
        assert_eq!(sub.vertices(), &[2, 3]);
        assert_eq!(sub.traces(), &[vec![2, 3]]);
        let whole = h.strong_remove(&[]).unwrap().unwrap();
        assert_eq!(whole.traces(), h.edges());
    }

    #[test]
    fn maximal_edges_cases() {
        let h = Hypergraph::new(3, vec![vec![0], vec![0, 1], vec![1, 2]]).unwrap();
        assert_eq!(h.maximal_edges(), vec![1, 2]);
        assert_eq!(gap5().maximal_edges(), vec![0, 1, 2, 3, 4]);
        let single = Hypergraph::new(2, vec![vec![1]]).unwrap();
        assert_eq!(single.maximal_edges(), vec![0]);
    }

    #[test]
    fn degrees_in_gap_family() {
        let h = gap5();
        assert_eq!(h.strong_degree(0).unwrap(), 2);
        assert_eq!(h.strong_degree(1).unwrap(), 4);
        assert_eq!(h.strong_degree(2).unwrap(), 3);
        let lonely = Hypergraph::new(3, vec![vec![0, 1]]).unwrap();
        assert_eq!(lonely.strong_degree(2).unwrap(), 0);
        assert_eq!(lonely.degree(2).unwrap(), 0);
        assert!(matches!(lonely.degree(3), Err(Error::VertexOutOfRange { .. })));
    }

    #[test]
    fn dual_examples() {
        let h = Hypergraph::new(3, vec![vec![0, 1], vec![1, 2]]).unwrap();
        let d = h.dual().unwrap();
        assert_eq!(d.n(), 2);
        assert_eq!(d.edges(), &[vec![0], vec![0, 1], vec![1]]);

        let single = Hypergraph::new(1, vec![vec![0]]).unwrap();
        assert_eq!(single.dual().unwrap().edges(), &[vec![0]]);

        let twins = Hypergraph::new(2, vec![vec![0, 1]]).unwrap();
        let (d, gens) = twins.dual_with_generators().unwrap();
        assert_eq!(d.edges(), &[vec![0]]);
        assert_eq!(gens, vec![vec![0, 1]]);
        assert_eq!(d.label(0), Some("v1,v2"));

        let isolated = Hypergraph::new(2, vec![vec![0]]).unwrap();
        assert_eq!(isolated.dual(), Err(Error::IsolatedVertex { vertex: 1 }));
    }

    #[test]
    fn check_examples() {
        let g = gap5();
        assert!(g.check(CheckKind::EdgeCover, &[0, 1]).unwrap());
        assert!(!g.check(CheckKind::EdgeCover, &[1]).unwrap());
        assert!(g.check(CheckKind::IndependentSet, &[3]).unwrap());
        assert!(g.check(CheckKind::IndependentSet, &[]).unwrap());
        let h = Hypergraph::new(3, vec![vec![0, 1], vec![1, 2]]).unwrap();
        assert!(!h.check(CheckKind::Matching, &[0, 1]).unwrap());
        assert!(h.check(CheckKind::Matching, &[]).unwrap());
        assert!(h.check(CheckKind::Transversal, &[1]).unwrap());
        assert!(!h.check(CheckKind::EdgeCover, &[]).unwrap());
        assert_eq!(
            h.check(CheckKind::Matching, &[2]),
            Err(Error::IdOutOfRange { id: 2, len: 2 })
        );
        let empty = Hypergraph::new(0, vec![]).unwrap();
        assert!(empty.check(CheckKind::EdgeCover, &[]).unwrap());
    }

    #[test]
    fn subset_test() {
        assert!(is_subset(&[1, 3], &[0, 1, 2, 3]));
        assert!(!is_subset(&[1, 4], &[0, 1, 2, 3]));
        assert!(is_subset(&[], &[0]));
        assert!(!is_subset(&[0, 1], &[1]));
    }
}
