use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::Graph;
use crate::mask::VertexMask;

/// All-pairs hop distances.
///
/// Unreachable pairs hold [`DistanceMatrix::UNREACHABLE`], which compares
/// greater than every finite distance.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    pub const UNREACHABLE: u32 = u32::MAX;

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Raw entry; `UNREACHABLE` when no path exists.
    #[inline]
    pub fn raw(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v]
    }

    /// `None` when `u` and `v` lie in different components.
    #[inline]
    pub fn get(&self, u: usize, v: usize) -> Option<u32> {
        match self.raw(u, v) {
            Self::UNREACHABLE => None,
            d => Some(d),
        }
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    pub fn is_connected(&self) -> bool {
        !self.d.contains(&Self::UNREACHABLE)
    }

    /// Closed ball `{v : d(u, v) <= radius}`.
    pub fn ball(&self, u: usize, radius: u32) -> VertexMask {
        self.row(u)
            .iter()
            .enumerate()
            .filter(|(_, &d)| d <= radius)
            .map(|(v, _)| v)
            .collect()
    }

    /// Largest finite entry in row `u`, `None` if some vertex is unreachable.
    pub fn eccentricity(&self, u: usize) -> Option<u32> {
        let row = self.row(u);
        if row.contains(&Self::UNREACHABLE) {
            return None;
        }
        row.iter().copied().max()
    }
}

/// Breadth-first search from every vertex.
pub fn all_pairs_distances(g: &Graph) -> DistanceMatrix {
    let n = g.order();
    let mut d = vec![DistanceMatrix::UNREACHABLE; n * n];
    let mut queue = VecDeque::with_capacity(n);
    for s in 0..n {
        let row = &mut d[s * n..(s + 1) * n];
        row[s] = 0;
        queue.clear();
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            let du = row[u];
            for v in g.neighbors(u).iter() {
                if row[v] == DistanceMatrix::UNREACHABLE {
                    row[v] = du + 1;
                    queue.push_back(v);
                }
            }
        }
    }
    DistanceMatrix { n, d }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::ops;

    #[test]
    fn path_endpoints() {
        let dm = all_pairs_distances(&generators::path(4).unwrap());
        assert_eq!(dm.get(0, 3), Some(3));
    }

    #[test]
    fn even_cycle_antipodes() {
        let dm = all_pairs_distances(&generators::cycle(6).unwrap());
        assert_eq!(dm.get(0, 3), Some(3));
    }

    #[test]
    fn disjoint_vertices_are_unreachable() {
        let k1 = generators::complete(1).unwrap();
        let g = ops::disjoint_union(&k1, &k1).unwrap();
        let dm = all_pairs_distances(&g);
        assert_eq!(dm.get(0, 1), None);
        assert_eq!(dm.raw(0, 1), DistanceMatrix::UNREACHABLE);
        assert!(!dm.is_connected());
        assert_eq!(dm.eccentricity(0), None);
    }

    #[test]
    fn balls() {
        let dm = all_pairs_distances(&generators::path(5).unwrap());
        assert_eq!(dm.ball(2, 1).iter().collect::<Vec<_>>(), [1, 2, 3]);
        assert_eq!(dm.ball(0, 0).len(), 1);
    }
}
