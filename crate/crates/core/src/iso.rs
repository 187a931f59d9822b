//! Brute-force isomorphism for small graphs, and twin classes.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::GraphError;
use crate::graph::Graph;
use crate::mask::VertexMask;

/// Largest order accepted by [`is_isomorphic`].
pub const ISO_MAX_ORDER: usize = 8;

/// Exact isomorphism test by permutation search.
///
/// Orders must match (otherwise `Ok(false)`), and both graphs must have at
/// most [`ISO_MAX_ORDER`] vertices. Edge counts and degree sequences are
/// compared first; the search then only maps vertices onto vertices of equal
/// degree and abandons a partial map as soon as an adjacency disagrees.
pub fn is_isomorphic(g1: &Graph, g2: &Graph) -> Result<bool, GraphError> {
    let n = g1.order();
    if n != g2.order() {
        return Ok(false);
    }
    if n > ISO_MAX_ORDER {
        return Err(GraphError::IsomorphismSizeGuard {
            n,
            max: ISO_MAX_ORDER,
        });
    }
    if g1.edge_count() != g2.edge_count() || g1.degree_sequence() != g2.degree_sequence() {
        return Ok(false);
    }
    let mut map = vec![usize::MAX; n];
    Ok(extend(g1, g2, 0, &mut map, VertexMask::EMPTY))
}

fn extend(g1: &Graph, g2: &Graph, v: usize, map: &mut Vec<usize>, used: VertexMask) -> bool {
    let n = g1.order();
    if v == n {
        return true;
    }
    for image in 0..n {
        if used.contains(image) || g1.degree(v) != g2.degree(image) {
            continue;
        }
        let consistent = (0..v).all(|u| g1.has_edge(u, v) == g2.has_edge(map[u], image));
        if !consistent {
            continue;
        }
        map[v] = image;
        let mut next = used;
        next.insert(image);
        if extend(g1, g2, v + 1, map, next) {
            return true;
        }
    }
    map[v] = usize::MAX;
    false
}

/// Partition of the vertices into twin classes: `u` and `v` are twins when
/// `N(u) \ {v} = N(v) \ {u}`.
///
/// Twinness is an equivalence relation (adjacent and non-adjacent twins never
/// mix inside one class), so classes are collected greedily. Each class is
/// sorted and classes are ordered by their smallest member.
pub fn twin_classes(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for v in 0..n {
        if class_of[v] != usize::MAX {
            continue;
        }
        let id = classes.len();
        class_of[v] = id;
        let mut class = vec![v];
        for u in v + 1..n {
            if class_of[u] == usize::MAX && are_twins(g, u, v) {
                class_of[u] = id;
                class.push(u);
            }
        }
        classes.push(class);
    }
    classes
}

pub fn are_twins(g: &Graph, u: usize, v: usize) -> bool {
    let mut nu = g.neighbors(u);
    nu.remove(v);
    let mut nv = g.neighbors(v);
    nv.remove(u);
    nu == nv
}
