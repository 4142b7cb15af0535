use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hypergraph::{DuplicatePolicy, VertexId};

/// Simple undirected graph with sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Graph {
    adjacency: Vec<Vec<VertexId>>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            adjacency: vec![Vec::new(); n],
        }
    }

    pub fn new(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self> {
        Self::from_edges(n, edges, DuplicatePolicy::Reject).map(|(g, _)| g)
    }

    /// Builds a graph, returning it with the number of repeated edges that
    /// were merged (always zero under [`DuplicatePolicy::Reject`]).
    pub fn from_edges(n: usize, edges: &[(VertexId, VertexId)], policy: DuplicatePolicy) -> Result<(Self, usize)> {
        let mut adjacency = vec![Vec::new(); n];
        let mut seen: HashMap<(VertexId, VertexId), usize> = HashMap::new();
        let mut merged = 0;
        for (position, &(u, v)) in edges.iter().enumerate() {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop { vertex: u });
            }
            let key = (u.min(v), u.max(v));
            if let Some(&first) = seen.get(&key) {
                if policy == DuplicatePolicy::Reject {
                    return Err(Error::DuplicateEdge {
                        first,
                        second: position,
                    });
                }
                merged += 1;
                continue;
            }
            seen.insert(key, position);
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok((Graph { adjacency }, merged))
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
            .collect()
    }

    /// Closed neighborhood `N[v]`, ascending.
    pub fn closed_neighborhood(&self, v: VertexId) -> Vec<VertexId> {
        let mut n = self.adjacency[v].clone();
        let pos = n.binary_search(&v).unwrap_err();
        n.insert(pos, v);
        n
    }

    pub fn is_connected(&self) -> bool {
        let n = self.n();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &v in &self.adjacency[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == n
    }

    pub fn is_tree(&self) -> bool {
        self.n() > 0 && self.edge_count() + 1 == self.n() && self.is_connected()
    }
}
