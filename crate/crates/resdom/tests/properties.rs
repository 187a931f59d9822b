use std::collections::BTreeMap;

use proptest::prelude::*;
use resdom::edge_list;
use resdom::verify::{random_connected_graph, recheck, Counterexample, ExactOracle};
use resdom_core::ops::complement;
use resdom_core::solvers::{minimum_set, Invariant, SolverOptions};
use resdom_core::Graph;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[i] {
                        edges.push((u, v));
                    }
                    i += 1;
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn edge_list_round_trips(g in graph(12)) {
        let text = edge_list::to_string(&g);
        prop_assert_eq!(edge_list::parse(&text).unwrap(), g.clone());
        // CRLF line endings and a leading comment parse to the same graph
        let crlf = format!("# generated\r\n{}", text.replace('\n', "\r\n"));
        prop_assert_eq!(edge_list::parse(&crlf).unwrap(), g);
    }

    #[test]
    fn random_graphs_are_connected_and_reproducible(
        n in 1usize..=14,
        p in 1u32..=100,
        seed in any::<u64>(),
    ) {
        let p = p as f64 / 100.0;
        let g = random_connected_graph(n, p, seed);
        prop_assert_eq!(g.order(), n);
        prop_assert!(g.is_connected());
        prop_assert_eq!(random_connected_graph(n, p, seed), g);
    }

    #[test]
    fn honest_counterexamples_recheck(g in graph(6), k in 1u32..=3) {
        let ext = SolverOptions::extended();
        let grk = minimum_set(&g, Invariant::GammaRk, k, &ext).unwrap().value as i64;
        let co = minimum_set(&complement(&g), Invariant::GammaRk, k, &ext).unwrap().value as i64;
        let mut computed = BTreeMap::new();
        computed.insert("n".to_owned(), g.order() as i64);
        computed.insert("gamma_rk".to_owned(), grk);
        computed.insert("co_gamma_rk".to_owned(), co);
        let mut cex = Counterexample {
            graph: edge_list::to_string(&g),
            k: Some(k),
            computed,
            expected: String::new(),
        };
        prop_assert!(recheck(&ExactOracle, &cex).unwrap());
        *cex.computed.get_mut("co_gamma_rk").unwrap() += 1;
        prop_assert!(!recheck(&ExactOracle, &cex).unwrap());
    }
}
