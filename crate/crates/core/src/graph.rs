use alloc::vec;
use alloc::vec::Vec;

use crate::error::GraphError;
use crate::mask::{VertexMask, MAX_VERTICES};

/// Finite simple undirected graph on the vertex labels `0..n`.
///
/// Adjacency is stored as one [`VertexMask`] per vertex. A graph is never
/// mutated once built; the operations in [`ops`](crate::ops) return new graphs.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexMask>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices {
                n,
                max: MAX_VERTICES,
            });
        }
        Ok(Graph {
            n,
            adj: vec![VertexMask::EMPTY; n],
        })
    }

    /// Builds a graph from an edge list. Self-loops, out-of-range endpoints and
    /// repeated edges (in either orientation) are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::EndpointOutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop { v: u });
            }
            if g.has_edge(u, v) {
                return Err(GraphError::DuplicateEdge {
                    u: u.min(v),
                    v: u.max(v),
                });
            }
            g.link(u, v);
        }
        Ok(g)
    }

    /// Crate-internal edge insertion; idempotent, callers guarantee `u != v < n`.
    pub(crate) fn link(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub(crate) fn from_adjacency(n: usize, adj: Vec<VertexMask>) -> Self {
        debug_assert_eq!(adj.len(), n);
        Graph { n, adj }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexMask::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexMask {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn vertices(&self) -> VertexMask {
        VertexMask::full(self.n)
    }

    /// Degrees sorted in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut seq: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        seq.sort_unstable_by(|a, b| b.cmp(a));
        seq
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        self.component_of(0).len() == self.n
    }

    /// Vertices reachable from `start`.
    pub fn component_of(&self, start: usize) -> VertexMask {
        let mut seen = VertexMask::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexMask::EMPTY;
            for v in frontier.iter() {
                next = next.union(&self.adj[v]);
            }
            frontier = next.difference(&seen);
            seen = seen.union(&frontier);
        }
        seen
    }

    /// Connected tree: `m = n - 1`.
    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.edge_count() == self.n - 1 && self.is_connected()
    }

    /// Isomorphic to `P_n` for its own order `n >= 1`.
    pub fn is_path(&self) -> bool {
        self.is_tree() && (0..self.n).all(|v| self.degree(v) <= 2)
    }
}

impl core::fmt::Debug for Graph {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(
            Graph::from_edges(3, [(0, 3)]),
            Err(GraphError::EndpointOutOfRange { u: 0, v: 3, n: 3 })
        );
        assert_eq!(
            Graph::from_edges(3, [(1, 1)]),
            Err(GraphError::SelfLoop { v: 1 })
        );
        assert_eq!(
            Graph::from_edges(3, [(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge { u: 0, v: 1 })
        );
        assert!(Graph::empty(MAX_VERTICES + 1).is_err());
    }

    #[test]
    fn basic_queries() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.edges(), [(0, 1), (1, 2), (2, 3)]);
        assert!(g.is_connected() && g.is_tree() && g.is_path());
        assert_eq!(g.degree_sequence(), [2, 2, 1, 1]);

        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(star.is_tree() && !star.is_path());

        let split = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(!split.is_connected());
        assert_eq!(split.component_of(3).iter().collect::<Vec<_>>(), [2, 3]);
    }
}
