use resdom_core::distance::all_pairs_distances;
use resdom_core::generators::{complete, complete_bipartite, cycle, path, star};
use resdom_core::solvers::{
    all_invariants, is_distance_k_dominating, is_k_locating_dominating, is_resolving, minimum_set,
    Invariant, Solver, SolverOptions, VertexSet,
};
use resdom_core::{ops, Graph, SolveError};

fn value(g: &Graph, inv: Invariant, k: u32) -> usize {
    minimum_set(g, inv, k, &SolverOptions::default())
        .unwrap()
        .value
}

#[test]
fn domination_predicate() {
    let c6 = cycle(6).unwrap();
    let dm = all_pairs_distances(&c6);
    assert!(is_distance_k_dominating(
        &c6,
        &dm,
        &VertexSet::from([0, 3]),
        1
    ));

    let p5 = path(5).unwrap();
    let dm = all_pairs_distances(&p5);
    assert!(!is_distance_k_dominating(
        &p5,
        &dm,
        &VertexSet::from([0]),
        2
    ));
    assert!(is_distance_k_dominating(
        &p5,
        &dm,
        &VertexSet::from([0, 1, 2, 3, 4]),
        1
    ));
}

#[test]
fn resolving_predicate() {
    for n in 2..10 {
        let p = path(n).unwrap();
        let dm = all_pairs_distances(&p);
        assert_eq!(is_resolving(&p, &dm, &VertexSet::from([0])), Ok(true));
    }
    for k in 1..=4usize {
        for n in 2 * k + 2..=20 {
            let c = cycle(n).unwrap();
            let dm = all_pairs_distances(&c);
            let w = VertexSet::from([0, 2 * k + 1]);
            assert_eq!(is_resolving(&c, &dm, &w), Ok(n != 4 * k + 2), "k={k} n={n}");
        }
    }
    let two = ops::disjoint_union(&path(1).unwrap(), &path(1).unwrap()).unwrap();
    let dm = all_pairs_distances(&two);
    assert_eq!(
        is_resolving(&two, &dm, &VertexSet::from([0])),
        Err(SolveError::Disconnected)
    );
}

#[test]
fn locating_predicate() {
    let p4 = path(4).unwrap();
    let dm = all_pairs_distances(&p4);
    assert_eq!(
        is_k_locating_dominating(&p4, &dm, &VertexSet::from([0, 2]), 1),
        Ok(true)
    );
    assert_eq!(
        is_k_locating_dominating(&p4, &dm, &VertexSet::default(), 1),
        Ok(false)
    );

    let k3 = complete(3).unwrap();
    let dm = all_pairs_distances(&k3);
    assert_eq!(
        is_k_locating_dominating(&k3, &dm, &VertexSet::from([0]), 1),
        Ok(false)
    );
}

#[test]
fn minimum_set_examples() {
    assert_eq!(value(&path(10).unwrap(), Invariant::GammaRk, 2), 2);
    assert_eq!(value(&cycle(10).unwrap(), Invariant::GammaRk, 2), 3);
    assert_eq!(value(&complete(5).unwrap(), Invariant::GammaRk, 3), 4);
    assert_eq!(value(&complete(4).unwrap(), Invariant::Dim, 1), 3);
    assert_eq!(value(&path(7).unwrap(), Invariant::GammaK, 1), 3);
    assert_eq!(value(&path(4).unwrap(), Invariant::LdK, 1), 2);
}

#[test]
fn all_invariants_examples() {
    let vals = |g: &Graph, k| -> Vec<usize> {
        all_invariants(g, k)
            .unwrap()
            .iter()
            .map(|w| w.value)
            .collect()
    };
    let c9 = vals(&cycle(9).unwrap(), 1);
    assert_eq!(c9[..3], [2, 3, 3]);
    assert!(c9[3] >= 3);
    assert_eq!(vals(&star(5).unwrap(), 2)[..3], [3, 1, 3]);
    assert_eq!(vals(&path(2).unwrap(), 5)[..3], [1, 1, 1]);
}

#[test]
fn witnesses_are_feasible_and_sized() {
    let g = complete_bipartite(2, 3).unwrap();
    let solver = Solver::new(&g, SolverOptions::default()).unwrap();
    for inv in Invariant::ALL {
        let w = solver.solve(inv, 1).unwrap();
        assert_eq!(w.witness.len(), w.value);
        assert!(solver.is_feasible(inv, 1, &w.witness));
        assert_eq!(w.k.is_some(), inv.uses_k());
    }
}

#[test]
fn lexicographic_witness() {
    // P4 with k=2: {0,1} is the first pair in lexicographic order and works
    let p4 = path(4).unwrap();
    let w = minimum_set(&p4, Invariant::GammaRk, 2, &SolverOptions::default()).unwrap();
    assert_eq!(w.witness.as_slice(), [0, 1]);
    // K4 metric dimension: all but the last vertex
    let k4 = complete(4).unwrap();
    let w = minimum_set(&k4, Invariant::Dim, 1, &SolverOptions::default()).unwrap();
    assert_eq!(w.witness.as_slice(), [0, 1, 2]);
}

#[test]
fn single_vertex_conventions() {
    let k1 = path(1).unwrap();
    let w = minimum_set(&k1, Invariant::Dim, 1, &SolverOptions::default()).unwrap();
    assert_eq!(w.value, 0);
    assert!(w.witness.is_empty());
    assert_eq!(value(&k1, Invariant::GammaK, 1), 1);
    assert_eq!(value(&k1, Invariant::GammaRk, 1), 1);
    let k2 = path(2).unwrap();
    assert_eq!(value(&k2, Invariant::Dim, 1), 1);
    assert_eq!(value(&k2, Invariant::GammaRk, 1), 1);
}

#[test]
fn forced_members() {
    let p7 = path(7).unwrap();
    let opts = SolverOptions {
        forced: VertexSet::from([6]),
        ..Default::default()
    };
    let w = minimum_set(&p7, Invariant::GammaK, 1, &opts).unwrap();
    assert!(w.witness.contains(6));
    assert_eq!(w.value, 3);
    let w = minimum_set(&p7, Invariant::Dim, 1, &opts).unwrap();
    assert_eq!(w.witness.as_slice(), [6]);

    let bad = SolverOptions {
        forced: VertexSet::from([9]),
        ..Default::default()
    };
    assert_eq!(
        minimum_set(&p7, Invariant::Dim, 1, &bad).unwrap_err(),
        SolveError::ForcedOutOfRange { v: 9, n: 7 }
    );
}

#[test]
fn error_cases() {
    let empty = Graph::empty(0).unwrap();
    assert_eq!(
        minimum_set(&empty, Invariant::Dim, 1, &SolverOptions::default()).unwrap_err(),
        SolveError::EmptyGraph
    );
    let p70 = path(70).unwrap();
    assert_eq!(
        minimum_set(&p70, Invariant::Dim, 1, &SolverOptions::default()).unwrap_err(),
        SolveError::SizeGuard { n: 70, cap: 64 }
    );
    assert_eq!(
        minimum_set(&p70, Invariant::Dim, 1, &SolverOptions::with_cap(256))
            .unwrap()
            .value,
        1
    );
    let p3 = path(3).unwrap();
    assert_eq!(
        minimum_set(&p3, Invariant::GammaK, 0, &SolverOptions::default()).unwrap_err(),
        SolveError::InvalidK
    );
    let split = ops::disjoint_union(&p3, &p3).unwrap();
    assert_eq!(
        minimum_set(&split, Invariant::GammaRk, 1, &SolverOptions::default()).unwrap_err(),
        SolveError::Disconnected
    );
}

#[test]
fn extended_mode_on_disconnected_graphs() {
    let opts = SolverOptions::extended();
    for n in 2..=6 {
        let empty = resdom_core::generators::empty(n).unwrap();
        for k in 1..=3 {
            let w = minimum_set(&empty, Invariant::GammaRk, k, &opts).unwrap();
            assert_eq!(w.value, n);
        }
        // an edgeless graph is resolved by any n-1 vertices
        assert_eq!(
            minimum_set(&empty, Invariant::Dim, 1, &opts).unwrap().value,
            n - 1
        );
    }
    // P3 complement is K2 plus an isolated vertex
    let co = ops::complement(&path(3).unwrap());
    assert_eq!(
        minimum_set(&co, Invariant::GammaRk, 2, &opts)
            .unwrap()
            .value,
        2
    );
}
