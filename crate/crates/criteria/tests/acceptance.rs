//! One line per acceptance criterion, all comparisons exact.
//!
//! Run with `cargo test -p resdom-criteria --test acceptance -- --nocapture` to see the
//! table. The test fails if any criterion fails.

use std::time::Instant;

use resdom::verify::{run_check, CheckId, CheckResult, ExactOracle, Level, Scope, Status};
use resdom_core::enumerate::connected_graphs;
use resdom_core::families::{extremal_gr, generate, predicted_max_order, FamilyParams};
use resdom_core::generators::cycle;
use resdom_core::solvers::{minimum_set, Invariant, SolverOptions};
use resdom_criteria::naive_value;

fn desk() -> Scope {
    Scope::new(Level::Desk)
}

fn rows(ids: &[CheckId]) -> Vec<CheckResult> {
    ids.iter()
        .flat_map(|&id| run_check(&ExactOracle, id, &desk()).unwrap())
        .collect()
}

/// Every row passes or is out of domain, and at least one row passes.
fn all_hold(rows: &[CheckResult]) -> Result<(), String> {
    if let Some(f) = rows.iter().find(|r| r.status == Status::Fail) {
        let cex = f.counterexample.as_ref().unwrap();
        return Err(format!(
            "{} {:?}: {:?}, expected {}\n{}",
            f.check_id, f.params, cex.computed, cex.expected, cex.graph
        ));
    }
    if !rows.iter().any(|r| r.status == Status::Pass) {
        return Err("no row in domain".into());
    }
    Ok(())
}

fn criterion_1() -> Result<(), String> {
    all_hold(&rows(&[CheckId::PathFormula]))
}

fn criterion_2() -> Result<(), String> {
    all_hold(&rows(&[CheckId::CycleFormula]))?;
    for k in 1..=3u32 {
        let n = 4 * k as usize + 2;
        let v = minimum_set(
            &cycle(n).unwrap(),
            Invariant::GammaRk,
            k,
            &SolverOptions::default(),
        )
        .unwrap()
        .value;
        if v != 3 {
            return Err(format!("gamma_rk({k}) of C_{n} is {v}, expected 3"));
        }
    }
    Ok(())
}

fn criterion_3() -> Result<(), String> {
    let scope = Scope {
        k_max: Some(4),
        n_max: Some(20),
        ..desk()
    };
    all_hold(&run_check(&ExactOracle, CheckId::CycleResolving, &scope).unwrap())
}

fn criterion_4() -> Result<(), String> {
    let rs = rows(&[
        CheckId::Sandwich,
        CheckId::DiamCollapse,
        CheckId::RadiusPlus1,
        CheckId::NkUpper,
        CheckId::DiamUpper,
        CheckId::LowerTrio,
    ]);
    let random = rs.iter().filter(|r| r.params.contains_key("seed")).count();
    if random == 0 {
        return Err("random corpus missing".into());
    }
    all_hold(&rs)
}

fn criterion_5() -> Result<(), String> {
    for (k, gamma) in [(1, 2), (2, 2), (2, 3), (3, 2)] {
        let g = generate(&FamilyParams::TGamma { k, gamma }).unwrap();
        let o = SolverOptions::default();
        let grk = minimum_set(&g, Invariant::GammaRk, k, &o).unwrap().value;
        let gk = minimum_set(&g, Invariant::GammaK, k, &o).unwrap().value;
        let n = g.order();
        if gk != gamma as usize || grk != n - (k * gamma) as usize {
            return Err(format!(
                "T_gamma k={k} gamma={gamma}: gamma_k={gk} gamma_rk={grk} n={n}"
            ));
        }
    }
    Ok(())
}

fn criterion_6() -> Result<(), String> {
    all_hold(&rows(&[
        CheckId::Char1,
        CheckId::CharN2,
        CheckId::CharN1,
        CheckId::Lem22,
    ]))
}

fn criterion_7() -> Result<(), String> {
    all_hold(&rows(&[CheckId::Triples]))
}

fn criterion_8() -> Result<(), String> {
    for ((k, r), order) in [((1, 2), 8), ((2, 2), 18), ((1, 3), 30)] {
        let n = extremal_gr(k, r, 64).unwrap().graph.order() as u64;
        if n != order || predicted_max_order(k, r) != Some(order) {
            return Err(format!(
                "G_r at k={k} r={r} has order {n}, expected {order}"
            ));
        }
    }
    all_hold(&rows(&[CheckId::MaxOrder]))
}

fn criterion_9() -> Result<(), String> {
    all_hold(&rows(&[CheckId::Ng2, CheckId::NgK, CheckId::NgConnected]))
}

fn criterion_10() -> Result<(), String> {
    all_hold(&rows(&[CheckId::LdDominates]))
}

fn criterion_11() -> Result<(), String> {
    let o = SolverOptions::default();
    for n in 1..=5 {
        for g in connected_graphs(n).unwrap() {
            for inv in Invariant::ALL {
                for k in 1..=3 {
                    let fast = minimum_set(&g, inv, k, &o)
                        .map_err(|e| e.to_string())?
                        .value;
                    let slow = naive_value(&g, inv, k);
                    if fast != slow {
                        return Err(format!(
                            "{inv} k={k}: pruned {fast}, naive {slow} on {:?}",
                            g.edges()
                        ));
                    }
                }
            }
        }
    }
    Ok(())
}

type Criterion = fn() -> Result<(), String>;

#[test]
fn acceptance() {
    let criteria: [(&str, Criterion); 11] = [
        ("path formula", criterion_1),
        ("cycle formula", criterion_2),
        ("cycle resolving pair", criterion_3),
        ("sandwich and conditional bounds", criterion_4),
        ("T_gamma equality", criterion_5),
        ("characterizations", criterion_6),
        ("realizable triples", criterion_7),
        ("extremal order", criterion_8),
        ("Nordhaus-Gaddum", criterion_9),
        ("LD relation", criterion_10),
        ("oracle equivalence", criterion_11),
    ];
    let mut failed = Vec::new();
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let secs = start.elapsed().as_secs_f64();
        match &outcome {
            Ok(()) => println!("criterion {:>2} {name}: PASS ({secs:.2} s)", i + 1),
            Err(why) => {
                println!("criterion {:>2} {name}: FAIL ({secs:.2} s)", i + 1);
                println!("    {}", why.replace('\n', "\n    "));
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
