use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use resdom_core::enumerate::{all_graphs, connected_graphs, ENUMERATION_MAX_ORDER};
use resdom_core::families::FamilyParams;
use resdom_core::Graph;

use super::VerifyError;

/// Where the graphs of a check come from.
#[derive(Clone, Debug, PartialEq)]
pub enum CorpusSpec {
    /// Every labelled graph with `n_min <= n <= n_max`.
    Exhaustive {
        n_min: usize,
        n_max: usize,
        connected_only: bool,
    },
    /// `count` seeded random connected graphs with `n_min <= n <= n_max`,
    /// edge probabilities cycling through `p_percent`.
    Random {
        count: usize,
        n_min: usize,
        n_max: usize,
        p_percent: Vec<u32>,
        seed: u64,
    },
    /// Explicit family members.
    Family(Vec<FamilyParams>),
}

/// A corpus graph with the bookkeeping needed to group results.
#[derive(Clone, Debug)]
pub struct Sample {
    pub graph: Graph,
    pub seed: Option<u64>,
    pub p_percent: Option<u32>,
    pub family: Option<FamilyParams>,
}

impl CorpusSpec {
    pub fn validate(&self) -> Result<(), VerifyError> {
        match self {
            CorpusSpec::Exhaustive { n_min, n_max, .. } => {
                if *n_min == 0 || n_max > &ENUMERATION_MAX_ORDER || n_min > n_max {
                    return Err(VerifyError::Corpus(format!(
                        "exhaustive corpus needs 1 <= n_min <= n_max <= {ENUMERATION_MAX_ORDER}"
                    )));
                }
            }
            CorpusSpec::Random {
                n_min,
                n_max,
                p_percent,
                ..
            } => {
                if *n_min == 0 || n_min > n_max || p_percent.is_empty() {
                    return Err(VerifyError::Corpus(
                        "random corpus needs 1 <= n_min <= n_max and at least one p".into(),
                    ));
                }
                if p_percent.iter().any(|&p| p == 0 || p > 100) {
                    return Err(VerifyError::Corpus(
                        "edge probability must be in (0, 100]%".into(),
                    ));
                }
            }
            CorpusSpec::Family(_) => {}
        }
        Ok(())
    }

    pub fn samples(&self) -> Result<Vec<Sample>, VerifyError> {
        self.validate()?;
        let plain = |graph| Sample {
            graph,
            seed: None,
            p_percent: None,
            family: None,
        };
        Ok(match self {
            CorpusSpec::Exhaustive {
                n_min,
                n_max,
                connected_only,
            } => {
                let mut out = Vec::new();
                for n in *n_min..=*n_max {
                    if *connected_only {
                        out.extend(connected_graphs(n).expect("validated").map(plain));
                    } else {
                        out.extend(all_graphs(n).expect("validated").map(plain));
                    }
                }
                out
            }
            CorpusSpec::Random {
                count,
                n_min,
                n_max,
                p_percent,
                seed,
            } => {
                let mut rng = ChaCha8Rng::seed_from_u64(*seed);
                (0..*count)
                    .map(|i| {
                        let n = rng.random_range(*n_min..=*n_max);
                        let p = p_percent[i % p_percent.len()];
                        let s = rng.next_u64();
                        Sample {
                            graph: random_connected_graph(n, p as f64 / 100.0, s),
                            seed: Some(s),
                            p_percent: Some(p),
                            family: None,
                        }
                    })
                    .collect()
            }
            CorpusSpec::Family(members) => members
                .iter()
                .map(|p| {
                    Ok(Sample {
                        graph: resdom_core::families::generate(p)?,
                        seed: None,
                        p_percent: None,
                        family: Some(*p),
                    })
                })
                .collect::<Result<_, VerifyError>>()?,
        })
    }
}

const ATTEMPTS: usize = 1000;

/// Samples `G(n, p)` until the result is connected. After 1000 failed attempts
/// a uniformly random recursive spanning tree is laid down first and the
/// remaining pairs are sampled on top of it. Deterministic in `(n, p, seed)`.
///
/// # Panics
/// If `n == 0`, `n` exceeds the vertex limit, or `p` is not in `(0, 1]`.
pub fn random_connected_graph(n: usize, p: f64, seed: u64) -> Graph {
    assert!(n >= 1, "random_connected_graph needs n >= 1");
    assert!(p > 0.0 && p <= 1.0, "edge probability must be in (0, 1]");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    for _ in 0..ATTEMPTS {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .copied()
            .filter(|_| rng.random_bool(p))
            .collect();
        let g = Graph::from_edges(n, edges).expect("pairs are distinct and in range");
        if g.is_connected() {
            return g;
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        order.swap(i, rng.random_range(0..=i));
    }
    let mut tree: Vec<(usize, usize)> = (1..n)
        .map(|i| {
            let (a, b) = (order[i], order[rng.random_range(0..i)]);
            (a.min(b), a.max(b))
        })
        .collect();
    tree.sort_unstable();
    let extra = pairs
        .iter()
        .copied()
        .filter(|e| tree.binary_search(e).is_err())
        .filter(|_| rng.random_bool(p))
        .collect::<Vec<_>>();
    tree.extend(extra);
    Graph::from_edges(n, tree).expect("tree plus distinct extra pairs")
}
