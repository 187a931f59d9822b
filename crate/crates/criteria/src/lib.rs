//! Brute-force reference values for the acceptance suite.
//!
//! Nothing here shares code with the pruned solvers: distances come from
//! Floyd-Warshall and every subset of the vertex set is tested against the
//! defining predicate.

use resdom_core::solvers::Invariant;
use resdom_core::Graph;

/// Largest order [`naive_value`] accepts.
pub const NAIVE_MAX_ORDER: usize = 16;

/// All-pairs distances, `u32::MAX` for unreachable pairs.
pub fn distances(g: &Graph) -> Vec<Vec<u32>> {
    let n = g.order();
    let mut d = vec![vec![u32::MAX; n]; n];
    for u in 0..n {
        d[u][u] = 0;
        for v in 0..n {
            if g.has_edge(u, v) {
                d[u][v] = 1;
            }
        }
    }
    for m in 0..n {
        for u in 0..n {
            for v in 0..n {
                let via = d[u][m].saturating_add(d[m][v]);
                if via < d[u][v] {
                    d[u][v] = via;
                }
            }
        }
    }
    d
}

/// Whether the vertices in the bit set `set` satisfy the predicate of `inv`.
pub fn feasible(d: &[Vec<u32>], set: u32, inv: Invariant, k: u32) -> bool {
    let n = d.len();
    let members: Vec<usize> = (0..n).filter(|&v| set >> v & 1 == 1).collect();
    let rest: Vec<usize> = (0..n).filter(|&v| set >> v & 1 == 0).collect();
    let near = |v: usize| members.iter().any(|&w| d[v][w] <= k);
    let code = |v: usize| -> Vec<u32> { members.iter().map(|&w| d[v][w]).collect() };
    // open k-neighbourhood trace on the set, as a bit mask
    let trace = |v: usize| -> u32 {
        members
            .iter()
            .filter(|&&w| d[v][w] >= 1 && d[v][w] <= k)
            .fold(0, |acc, &w| acc | 1 << w)
    };
    let distinct = |f: &dyn Fn(usize) -> Vec<u32>| {
        rest.iter()
            .enumerate()
            .all(|(i, &x)| rest[i + 1..].iter().all(|&y| f(x) != f(y)))
    };
    match inv {
        Invariant::Dim => distinct(&code),
        Invariant::GammaK => (0..n).all(near),
        Invariant::GammaRk => (0..n).all(near) && distinct(&code),
        Invariant::LdK => rest.iter().all(|&v| trace(v) != 0) && distinct(&|v| vec![trace(v)]),
    }
}

/// Minimum size of a feasible set, found by scanning all `2^n` subsets.
///
/// # Panics
/// If the graph has more than [`NAIVE_MAX_ORDER`] vertices.
pub fn naive_value(g: &Graph, inv: Invariant, k: u32) -> usize {
    assert!(
        g.order() <= NAIVE_MAX_ORDER,
        "naive scan is limited to small graphs"
    );
    let d = distances(g);
    (0u32..1 << g.order())
        .filter(|&s| feasible(&d, s, inv, k))
        .map(|s| s.count_ones() as usize)
        .min()
        .expect("the whole vertex set is feasible")
}

#[cfg(test)]
mod tests {
    use super::*;
    use resdom_core::generators::{complete, cycle, path};

    #[test]
    fn hand_values() {
        let p4 = path(4).unwrap();
        assert_eq!(naive_value(&p4, Invariant::Dim, 1), 1);
        assert_eq!(naive_value(&p4, Invariant::GammaK, 1), 2);
        assert_eq!(naive_value(&p4, Invariant::GammaRk, 3), 1);
        let k4 = complete(4).unwrap();
        assert_eq!(naive_value(&k4, Invariant::Dim, 1), 3);
        assert_eq!(naive_value(&k4, Invariant::LdK, 1), 3);
        let c6 = cycle(6).unwrap();
        assert_eq!(naive_value(&c6, Invariant::GammaRk, 1), 3);
    }

    #[test]
    fn disconnected_pairs_are_unreachable() {
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        let d = distances(&g);
        assert_eq!(d[0][2], u32::MAX);
        assert_eq!(d[0][1], 1);
    }
}
