use resdom_core::distance::all_pairs_distances;
use resdom_core::families::{
    extremal_gr, generate, predicted_max_order, realize_triple, tree_metric_dimension_formula,
    FamilyParams, TripleTarget,
};
use resdom_core::solvers::{
    is_distance_k_dominating, is_resolving, Invariant, Solver, SolverOptions,
};
use resdom_core::{FamilyError, Graph};

fn triple(g: &Graph, k: u32) -> (u32, u32, u32) {
    let s = Solver::new(g, SolverOptions::default()).unwrap();
    let v = s.values(k).unwrap();
    (v.dim as u32, v.gamma_k as u32, v.gamma_rk as u32)
}

fn certify(p: FamilyParams) {
    let g = generate(&p).unwrap();
    let k = p.k().unwrap();
    let claim = p.claim().unwrap();
    let (dim, gk, grk) = triple(&g, k);
    assert_eq!(grk, claim.gamma_rk, "{p:?}");
    if let Some(c) = claim.gamma_k {
        assert_eq!(gk, c, "{p:?}");
    }
    if let Some(c) = claim.dim {
        assert_eq!(dim, c, "{p:?}");
    }
    if !matches!(p, FamilyParams::ExtremalGr { .. }) {
        assert!(g.is_tree(), "{p:?}");
        if !g.is_path() {
            assert_eq!(
                tree_metric_dimension_formula(&g).unwrap() as u32,
                dim,
                "{p:?}"
            );
        }
    }
}

#[test]
fn t_gamma_meets_the_order_bound() {
    for k in 1..=3 {
        for gamma in 1..=4 {
            let p = FamilyParams::TGamma { k, gamma };
            certify(p);
            let g = generate(&p).unwrap();
            assert_eq!(g.order() as u32, gamma * (k + 1));
        }
    }
}

#[test]
fn t1_to_t3_claims() {
    for k in 2..=3 {
        for m in 0..=2 {
            for l in 1..=2 {
                certify(FamilyParams::T1 { k, m, l });
                if m >= 1 {
                    certify(FamilyParams::T2 { k, m, l });
                    certify(FamilyParams::T3 { k, m, l });
                }
            }
        }
    }
}

#[test]
fn t4_t5_claims() {
    for k in 2..=3 {
        for m in 0..=1 {
            for l in 0..=1 {
                if (m, l) == (0, 0) {
                    continue;
                }
                for r in 3..=4 {
                    certify(FamilyParams::T4 { k, m, l, r });
                }
                for r in 2..=3 {
                    certify(FamilyParams::T5 { k, m, l, r });
                }
            }
        }
    }
}

#[test]
fn spider_claims() {
    for k in 1..=3 {
        for legs in 3..=5 {
            certify(FamilyParams::Spider { legs, k });
        }
    }
}

#[test]
fn t4_cli_example() {
    let p = FamilyParams::T4 {
        k: 2,
        m: 1,
        l: 1,
        r: 3,
    };
    assert_eq!(triple(&generate(&p).unwrap(), 2), (4, 3, 6));
}

#[test]
fn realizable_triples() {
    for k in 2..=3 {
        for beta in 1..=3 {
            for gamma in 1..=3 {
                for alpha in 1..=6 {
                    let in_range = beta.max(gamma) <= alpha && alpha <= beta + gamma;
                    let excluded = beta == 1 && gamma >= 2 && alpha == gamma + 1;
                    let target = TripleTarget::new(k, beta, gamma, alpha);
                    if !in_range || excluded {
                        assert!(matches!(target, Err(FamilyError::InfeasibleTriple { .. })));
                        continue;
                    }
                    let (p, g) = realize_triple(&target.unwrap()).unwrap();
                    assert!(g.is_tree(), "{p:?}");
                    assert_eq!(triple(&g, k), (beta, gamma, alpha), "{p:?}");
                }
            }
        }
    }
}

fn extremal_claims(k: u32, r: u32, cap: usize) {
    let e = extremal_gr(k, r, cap).unwrap();
    let g = &e.graph;
    assert_eq!(Some(g.order() as u64), predicted_max_order(k, r));
    assert!(g.is_connected());
    let dm = all_pairs_distances(g);
    for (q, vec) in e.vectors.iter().enumerate().skip(r as usize) {
        let i = vec.iter().position(|&c| c >= 1 && c <= k).unwrap();
        assert_eq!(dm.get(q, i), Some(vec[i]), "vertex {vec:?}");
    }
    assert!(is_distance_k_dominating(g, &dm, &e.q0, k));
    assert_eq!(is_resolving(g, &dm, &e.q0), Ok(true));

    let solver = Solver::new(g, SolverOptions::with_cap(cap)).unwrap();
    assert_eq!(
        solver.solve(Invariant::GammaRk, k).unwrap().value,
        r as usize
    );
    assert_eq!(
        solver.first_feasible(Invariant::GammaRk, k, r as usize - 1),
        Ok(None)
    );
}

#[test]
fn extremal_graphs_small() {
    extremal_claims(1, 2, 64);
    extremal_claims(2, 2, 64);
    extremal_claims(1, 3, 64);
}

#[test]
fn extremal_graph_beyond_one_word() {
    extremal_claims(2, 3, 256);
}
