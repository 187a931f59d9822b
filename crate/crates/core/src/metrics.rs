use alloc::collections::VecDeque;
use alloc::vec;

use crate::distance::{all_pairs_distances, DistanceMatrix};
use crate::graph::Graph;

/// Eccentricity-based metrics and girth.
///
/// `diameter` and `radius` are `None` (undefined) for disconnected graphs and
/// for the empty graph; `girth` is `None` (infinite) for forests.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GraphMetrics {
    pub connected: bool,
    pub diameter: Option<u32>,
    pub radius: Option<u32>,
    pub girth: Option<u32>,
}

pub fn metrics(g: &Graph) -> GraphMetrics {
    metrics_with(g, &all_pairs_distances(g))
}

/// Same as [`metrics`] but reuses a precomputed distance matrix.
pub fn metrics_with(g: &Graph, dm: &DistanceMatrix) -> GraphMetrics {
    let n = g.order();
    let connected = n > 0 && dm.is_connected();
    let (diameter, radius) = if connected {
        let ecc = (0..n).map(|v| dm.eccentricity(v).unwrap_or(0));
        let (lo, hi) = ecc.fold((u32::MAX, 0), |(lo, hi), e| (lo.min(e), hi.max(e)));
        (Some(hi), Some(lo))
    } else {
        (None, None)
    };
    GraphMetrics {
        connected,
        diameter,
        radius,
        girth: girth(g),
    }
}

/// Length of a shortest cycle, `None` for forests.
///
/// A BFS from every root; a non-tree edge `{u, w}` met during the search closes
/// a closed walk of length `d(u) + d(w) + 1`, and the minimum over all roots is
/// the girth.
pub fn girth(g: &Graph) -> Option<u32> {
    let n = g.order();
    let mut best = u32::MAX;
    let mut dist = vec![u32::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::with_capacity(n);
    for root in 0..n {
        dist.fill(u32::MAX);
        parent.fill(usize::MAX);
        dist[root] = 0;
        queue.clear();
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            if 2 * dist[u] + 1 >= best {
                break;
            }
            for w in g.neighbors(u).iter() {
                if dist[w] == u32::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    best = best.min(dist[u] + dist[w] + 1);
                }
            }
        }
    }
    (best != u32::MAX).then_some(best)
}
