//! Named basic graphs with canonical 0-based labelings.

use crate::error::FamilyError;
use crate::graph::Graph;
use crate::mask::MAX_VERTICES;

fn blank(n: usize) -> Result<Graph, FamilyError> {
    Graph::empty(n).map_err(|_| FamilyError::TooLarge {
        n,
        cap: MAX_VERTICES,
    })
}

/// `P_n`: `0 - 1 - ... - (n-1)`.
pub fn path(n: usize) -> Result<Graph, FamilyError> {
    if n == 0 {
        return Err(FamilyError::InvalidParams("path needs n >= 1"));
    }
    let mut g = blank(n)?;
    for v in 1..n {
        g.link(v - 1, v);
    }
    Ok(g)
}

/// `C_n`: edges `{i, i+1 mod n}`.
pub fn cycle(n: usize) -> Result<Graph, FamilyError> {
    if n < 3 {
        return Err(FamilyError::InvalidParams("cycle needs n >= 3"));
    }
    let mut g = path(n)?;
    g.link(n - 1, 0);
    Ok(g)
}

pub fn complete(n: usize) -> Result<Graph, FamilyError> {
    if n == 0 {
        return Err(FamilyError::InvalidParams("complete graph needs n >= 1"));
    }
    let mut g = blank(n)?;
    for u in 0..n {
        for v in u + 1..n {
            g.link(u, v);
        }
    }
    Ok(g)
}

/// `K̄_n`, the edgeless graph.
pub fn empty(n: usize) -> Result<Graph, FamilyError> {
    if n == 0 {
        return Err(FamilyError::InvalidParams("empty graph needs n >= 1"));
    }
    blank(n)
}

/// `K_{s,t}` with parts `{0..s-1}` and `{s..s+t-1}`.
pub fn complete_bipartite(s: usize, t: usize) -> Result<Graph, FamilyError> {
    if s == 0 || t == 0 {
        return Err(FamilyError::InvalidParams(
            "complete bipartite needs s, t >= 1",
        ));
    }
    let mut g = blank(s + t)?;
    for u in 0..s {
        for v in s..s + t {
            g.link(u, v);
        }
    }
    Ok(g)
}

/// `K_{1,n-1}` with centre `0`.
pub fn star(n: usize) -> Result<Graph, FamilyError> {
    if n < 2 {
        return Err(FamilyError::InvalidParams("star needs n >= 2"));
    }
    complete_bipartite(1, n - 1)
}

/// The bull: a triangle `{0, 1, 2}` with horns `3` at `0` and `4` at `1`.
pub fn bull() -> Graph {
    Graph::from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 4)]).expect("bull is simple")
}
