//! Exhaustive enumeration of labelled graphs of small order.
//!
//! No isomorphism reduction is performed: every adjacency matrix is visited,
//! so a property holds for all graphs of order `n` iff it holds on this stream.

use alloc::vec::Vec;
use core::fmt;

use crate::graph::Graph;
use crate::mask::VertexMask;

pub const ENUMERATION_MAX_ORDER: usize = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrderOutOfRange {
    pub n: usize,
}

impl fmt::Display for OrderOutOfRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "exhaustive enumeration needs 1 <= n <= {ENUMERATION_MAX_ORDER}, got {}",
            self.n
        )
    }
}

impl core::error::Error for OrderOutOfRange {}

/// Every labelled graph on `n` vertices, connected or not, in increasing order
/// of the edge-indicator bit string over the pairs `(0,1), (0,2), ..., (n-2,n-1)`.
pub fn all_graphs(n: usize) -> Result<LabelledGraphs, OrderOutOfRange> {
    if n == 0 || n > ENUMERATION_MAX_ORDER {
        return Err(OrderOutOfRange { n });
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    Ok(LabelledGraphs {
        n,
        end: 1u64 << pairs.len(),
        pairs,
        next: 0,
    })
}

/// Every connected labelled graph on `n` vertices.
pub fn connected_graphs(n: usize) -> Result<impl Iterator<Item = Graph>, OrderOutOfRange> {
    Ok(all_graphs(n)?.filter(Graph::is_connected))
}

pub struct LabelledGraphs {
    n: usize,
    pairs: Vec<(usize, usize)>,
    next: u64,
    end: u64,
}

impl LabelledGraphs {
    /// Number of graphs not yet produced.
    pub fn remaining(&self) -> u64 {
        self.end - self.next
    }
}

impl Iterator for LabelledGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.next == self.end {
            return None;
        }
        let code = self.next;
        self.next += 1;
        let mut adj = alloc::vec![VertexMask::EMPTY; self.n];
        for (bit, &(u, v)) in self.pairs.iter().enumerate() {
            if code >> bit & 1 == 1 {
                adj[u].insert(v);
                adj[v].insert(u);
            }
        }
        Some(Graph::from_adjacency(self.n, adj))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let r = self.remaining() as usize;
        (r, Some(r))
    }
}
