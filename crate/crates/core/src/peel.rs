//! Incremental restriction.
//!
//! [`TraceSystem`] holds `H[W]` for a shrinking vertex set `W` and keeps
//! plain and strong degrees current as single vertices leave `W`.
//!
//! Removing `x` only shrinks the traces containing `x`. A trace `t ∌ x`
//! keeps its maximality status: its supersets lose at most `x`, which it
//! does not contain. A maximal trace `t ∋ x` may, after losing `x`, become
//! a proper subset of another trace or coincide with one; both are found
//! by scanning the traces through the least-used vertex of `t \ {x}`.
//! Strong degrees therefore never increase.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::hypergraph::{is_subset, EdgeId, Hypergraph, VertexId};

#[derive(Debug, Clone)]
struct Trace {
    vertices: Vec<VertexId>,
    representative: EdgeId,
    maximal: bool,
    alive: bool,
}

#[derive(Debug, Clone)]
pub(crate) struct TraceSystem {
    traces: Vec<Trace>,
    /// Trace ids per vertex; may hold dead traces, filtered on read.
    incidence: Vec<Vec<usize>>,
    present: Vec<bool>,
    degree: Vec<usize>,
    strong: Vec<usize>,
    remaining: usize,
}

impl TraceSystem {
    pub(crate) fn new(h: &Hypergraph) -> Self {
        let n = h.n();
        let incidence = h.incidence();
        let mut system = TraceSystem {
            traces: h
                .edges()
                .iter()
                .enumerate()
                .map(|(id, e)| Trace {
                    vertices: e.clone(),
                    representative: id,
                    maximal: true,
                    alive: true,
                })
                .collect(),
            degree: incidence.iter().map(Vec::len).collect(),
            incidence,
            present: vec![true; n],
            strong: vec![0; n],
            remaining: n,
        };
        for id in 0..system.traces.len() {
            let (_, strict) = system.find_supersets(id);
            system.traces[id].maximal = strict.is_none();
        }
        for t in system.traces.iter().filter(|t| t.maximal) {
            for &v in &t.vertices {
                system.strong[v] += 1;
            }
        }
        system
    }

    pub(crate) fn is_empty(&self) -> bool {
        self.remaining == 0
    }

    pub(crate) fn contains(&self, v: VertexId) -> bool {
        self.present[v]
    }

    pub(crate) fn degree(&self, v: VertexId) -> usize {
        self.degree[v]
    }

    pub(crate) fn strong_degree(&self, v: VertexId) -> usize {
        self.strong[v]
    }

    /// Live traces containing `v`, as ids.
    fn live(&self, v: VertexId) -> impl Iterator<Item = usize> + '_ {
        self.incidence[v].iter().copied().filter(|&t| self.traces[t].alive)
    }

    /// Maximal traces containing `v`: `(vertices, representative edge)`,
    /// ordered by representative.
    pub(crate) fn maximal_traces_containing(&self, v: VertexId) -> Vec<(&[VertexId], EdgeId)> {
        let mut out: Vec<_> = self
            .live(v)
            .filter(|&t| self.traces[t].maximal)
            .map(|t| (self.traces[t].vertices.as_slice(), self.traces[t].representative))
            .collect();
        out.sort_by_key(|&(_, rep)| rep);
        out
    }

    /// For live trace `id`, finds another live trace equal to it and one
    /// strictly containing it.
    fn find_supersets(&self, id: usize) -> (Option<usize>, Option<usize>) {
        let set = &self.traces[id].vertices;
        let Some(&pivot) = set.iter().min_by_key(|&&v| self.degree[v]) else {
            return (None, None);
        };
        let mut equal = None;
        let mut strict = None;
        for other in self.live(pivot) {
            if other == id {
                continue;
            }
            let candidate = &self.traces[other].vertices;
            if candidate.len() >= set.len() && is_subset(set, candidate) {
                if candidate.len() == set.len() {
                    equal = Some(other);
                } else {
                    strict = Some(other);
                }
                if equal.is_some() && strict.is_some() {
                    break;
                }
            }
        }
        (equal, strict)
    }

    /// Removes `x` from the vertex set, returning the vertices whose plain
    /// or strong degree changed.
    pub(crate) fn remove_vertex(&mut self, x: VertexId) -> Vec<VertexId> {
        debug_assert!(self.present[x]);
        self.present[x] = false;
        self.remaining -= 1;
        let touched: Vec<usize> = self.live(x).collect();
        for &t in &touched {
            let vertices = &mut self.traces[t].vertices;
            let pos = vertices.binary_search(&x).expect("incidence is consistent");
            vertices.remove(pos);
        }
        self.degree[x] = 0;
        self.strong[x] = 0;
        let mut changed = Vec::new();
        for &t in &touched {
            if !self.traces[t].alive {
                continue;
            }
            if self.traces[t].vertices.is_empty() {
                self.traces[t].alive = false;
                continue;
            }
            let was_maximal = self.traces[t].maximal;
            let (equal, strict) = self.find_supersets(t);
            let now_maximal = strict.is_none();
            debug_assert!(was_maximal || !now_maximal, "non-maximal traces stay non-maximal");
            if let Some(twin) = equal {
                // The twin lacks x, so it sat strictly inside t and was not
                // maximal. Merge it away, keeping the smaller representative.
                debug_assert!(!self.traces[twin].maximal);
                self.traces[twin].alive = false;
                let rep = self.traces[twin].representative.min(self.traces[t].representative);
                self.traces[t].representative = rep;
                for &v in &self.traces[t].vertices {
                    self.degree[v] -= 1;
                }
                changed.extend_from_slice(&self.traces[t].vertices);
            }
            if was_maximal && !now_maximal {
                for &v in &self.traces[t].vertices {
                    self.strong[v] -= 1;
                }
                changed.extend_from_slice(&self.traces[t].vertices);
            }
            self.traces[t].maximal = now_maximal;
        }
        changed.sort_unstable();
        changed.dedup();
        changed
    }
}

/// Which degree drives vertex selection.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Key {
    Plain,
    Strong,
}

/// Min-degree selection over a [`TraceSystem`], ties broken by smallest id.
/// Degrees only decrease, so stale heap entries are skipped on pop.
pub(crate) struct Peeler {
    pub(crate) system: TraceSystem,
    key: Key,
    heap: BinaryHeap<Reverse<(usize, VertexId)>>,
}

impl Peeler {
    pub(crate) fn new(h: &Hypergraph, key: Key) -> Self {
        let system = TraceSystem::new(h);
        let mut peeler = Peeler {
            system,
            key,
            heap: BinaryHeap::new(),
        };
        for v in 0..h.n() {
            let k = peeler.key_of(v);
            peeler.heap.push(Reverse((k, v)));
        }
        peeler
    }

    fn key_of(&self, v: VertexId) -> usize {
        match self.key {
            Key::Plain => self.system.degree(v),
            Key::Strong => self.system.strong_degree(v),
        }
    }

    /// Current minimum-key vertex and its key, without removing it.
    pub(crate) fn peek_min(&mut self) -> Option<(VertexId, usize)> {
        while let Some(&Reverse((k, v))) = self.heap.peek() {
            if self.system.contains(v) && self.key_of(v) == k {
                return Some((v, k));
            }
            self.heap.pop();
        }
        None
    }

    pub(crate) fn remove(&mut self, v: VertexId) {
        for u in self.system.remove_vertex(v) {
            if self.system.contains(u) {
                let k = self.key_of(u);
                self.heap.push(Reverse((k, u)));
            }
        }
    }
}
