//! Graph operations: complement, disjoint union, join and vertex substitution.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::GraphError;
use crate::graph::Graph;
use crate::mask::VertexMask;

pub fn complement(g: &Graph) -> Graph {
    let n = g.order();
    let all = VertexMask::full(n);
    let adj = (0..n)
        .map(|v| {
            let mut m = all.difference(&g.neighbors(v));
            m.remove(v);
            m
        })
        .collect();
    Graph::from_adjacency(n, adj)
}

/// `g1 ∪ g2`; vertices of `g2` are shifted by `g1.order()`.
pub fn disjoint_union(g1: &Graph, g2: &Graph) -> Result<Graph, GraphError> {
    let offset = g1.order();
    let mut g = Graph::empty(offset + g2.order())?;
    for (u, v) in g1.edges() {
        g.link(u, v);
    }
    for (u, v) in g2.edges() {
        g.link(u + offset, v + offset);
    }
    Ok(g)
}

/// `g1 + g2`: the disjoint union plus every edge between the two sides.
pub fn join(g1: &Graph, g2: &Graph) -> Result<Graph, GraphError> {
    let mut g = disjoint_union(g1, g2)?;
    let offset = g1.order();
    for u in 0..offset {
        for v in 0..g2.order() {
            g.link(u, v + offset);
        }
    }
    Ok(g)
}

/// Replaces each assigned vertex `i` of `g` by the graph `assignment[i]`.
///
/// Every vertex of the replacement for `i` is joined to every vertex standing
/// for a neighbour of `i`; when two replaced vertices are adjacent their
/// replacements are completely joined. Unassigned vertices stay single
/// vertices. New labels are assigned block by block in the order of `g`'s
/// vertices, so `substitute(g, {})` returns `g` unchanged.
pub fn substitute(g: &Graph, assignment: &BTreeMap<usize, Graph>) -> Result<Graph, GraphError> {
    let n = g.order();
    if let Some((&v, _)) = assignment.iter().find(|(&v, _)| v >= n) {
        return Err(GraphError::EndpointOutOfRange { u: v, v, n });
    }
    let mut blocks: Vec<core::ops::Range<usize>> = Vec::with_capacity(n);
    let mut next = 0;
    for v in 0..n {
        let size = assignment.get(&v).map_or(1, Graph::order);
        blocks.push(next..next + size);
        next += size;
    }
    let mut out = Graph::empty(next)?;
    for (&v, h) in assignment {
        let base = blocks[v].start;
        for (a, b) in h.edges() {
            out.link(base + a, base + b);
        }
    }
    for (i, j) in g.edges() {
        for a in blocks[i].clone() {
            for b in blocks[j].clone() {
                out.link(a, b);
            }
        }
    }
    Ok(out)
}
