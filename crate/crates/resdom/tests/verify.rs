use resdom::verify::{
    recheck, run_all, run_check, CheckId, ExactOracle, Level, Oracle, Param, Report, Scope, Status,
};
use resdom_core::solvers::{Invariant, SolverOptions};
use resdom_core::{Graph, SolveError};

fn smoke() -> Scope {
    Scope {
        deterministic: true,
        ..Scope::new(Level::Smoke)
    }
}

fn desk() -> Scope {
    Scope {
        deterministic: true,
        ..Scope::new(Level::Desk)
    }
}

fn int(p: &Param) -> u64 {
    match p {
        Param::Int(v) => *v,
        Param::Text(t) => panic!("expected an integer, got {t}"),
    }
}

#[test]
fn check_ids_parse_loosely() {
    assert_eq!(
        "chk_sandwich".parse::<CheckId>().unwrap(),
        CheckId::Sandwich
    );
    assert_eq!(
        "CHK_NG_CONNECTED".parse::<CheckId>().unwrap(),
        CheckId::NgConnected
    );
    assert_eq!(
        "cycle_resolving".parse::<CheckId>().unwrap(),
        CheckId::CycleResolving
    );
    assert!("nonexistent".parse::<CheckId>().is_err());
    for id in CheckId::ALL {
        assert_eq!(id.name().parse::<CheckId>().unwrap(), id);
    }
}

#[test]
fn smoke_checks_pass() {
    for id in CheckId::ALL {
        let mut scope = smoke();
        if id == CheckId::NgConnected {
            // k = 3 at n = 5 is exercised by the acceptance target
            scope.k_max = Some(2);
        }
        let rows = run_check(&ExactOracle, id, &scope).unwrap();
        assert!(!rows.is_empty(), "{id}");
        for r in &rows {
            assert_ne!(
                r.status,
                Status::Fail,
                "{id} {:?} {:?}",
                r.params,
                r.counterexample
            );
        }
        assert!(
            rows.iter().any(|r| r.status == Status::Pass),
            "{id} has no PASS row"
        );
    }
}

#[test]
fn out_of_domain_rows_are_skipped() {
    let rows = run_check(&ExactOracle, CheckId::Lem22, &smoke()).unwrap();
    for r in &rows {
        if int(&r.params["k"]) == 1 {
            assert_eq!(r.status, Status::Skipped);
        }
    }
    let rows = run_check(&ExactOracle, CheckId::CharN1, &smoke()).unwrap();
    assert!(rows.iter().any(|r| r.status == Status::Skipped));
}

#[test]
fn path_formula_rows() {
    let rows = run_check(&ExactOracle, CheckId::PathFormula, &desk()).unwrap();
    assert_eq!(rows.len(), 4 * 15);
    assert!(rows.iter().all(|r| r.status == Status::Pass));
}

#[test]
fn cycle_resolving_includes_negative_rows() {
    let scope = Scope {
        k_max: Some(4),
        n_max: Some(20),
        ..desk()
    };
    let rows = run_check(&ExactOracle, CheckId::CycleResolving, &scope).unwrap();
    assert!(rows.iter().all(|r| r.status == Status::Pass));
    let negative: Vec<u64> = rows
        .iter()
        .filter(|r| r.params["expect"] == Param::from("not-resolving"))
        .map(|r| int(&r.params["n"]))
        .collect();
    assert_eq!(negative, [6, 10, 14, 18]);
}

#[test]
fn max_order_smallest_case() {
    let rows = run_check(&ExactOracle, CheckId::MaxOrder, &smoke()).unwrap();
    let row = rows
        .iter()
        .find(|r| r.params.get("r").map(int) == Some(2) && r.params.contains_key("family"))
        .unwrap();
    assert_eq!(row.status, Status::Pass);
    assert_eq!(int(&row.params["k"]), 1);
}

#[test]
fn report_round_trips_and_is_stable() {
    let scope = smoke();
    let ids = [CheckId::Sandwich, CheckId::CycleFormula, CheckId::Ng2];
    let a = run_all(&ExactOracle, &ids, &scope).unwrap();
    let b = run_all(&ExactOracle, &ids, &scope).unwrap();
    assert_eq!(a.to_json(), b.to_json());
    assert_eq!(a.run_id, "smoke-seed42");
    let back = Report::from_json(&a.to_json()).unwrap();
    assert_eq!(back, a);
    let keys: Vec<_> = a.checks.iter().map(|c| (&c.check_id, &c.params)).collect();
    assert!(keys.windows(2).all(|w| w[0] <= w[1]));
    let s = a.summary;
    assert_eq!(s.pass + s.fail + s.skipped, a.checks.len());
    assert!(a.checks.iter().all(|c| c.elapsed_ms == 0));
}

/// Reports `gamma_rk = n` on graphs with at least three vertices, which breaks
/// the `n - 1` cap of the sandwich bound.
struct Inflated;

impl Oracle for Inflated {
    fn value(
        &self,
        g: &Graph,
        invariant: Invariant,
        k: u32,
        options: &SolverOptions,
    ) -> Result<usize, SolveError> {
        let v = ExactOracle.value(g, invariant, k, options)?;
        Ok(if invariant == Invariant::GammaRk && g.order() >= 3 {
            g.order()
        } else {
            v
        })
    }
}

#[test]
fn corrupted_oracle_is_caught() {
    let report = run_all(&Inflated, &[CheckId::Sandwich], &smoke()).unwrap();
    assert!(!report.passed());
    let fail = report.failures().next().unwrap();
    assert_eq!(fail.check_id, "CHK_SANDWICH");
    let cex = fail.counterexample.as_ref().unwrap();
    assert_eq!(cex.computed["gamma_rk"], cex.computed["n"]);
    // self-certifying against the oracle that produced it, refuted by the real one
    assert!(recheck(&Inflated, cex).unwrap());
    assert!(!recheck(&ExactOracle, cex).unwrap());
}

#[test]
fn failures_recheck() {
    let scope = Scope {
        n_max: Some(5),
        ..desk()
    };
    let report = run_all(&ExactOracle, &[CheckId::NgConnected], &scope).unwrap();
    for f in report.failures() {
        let cex = f
            .counterexample
            .as_ref()
            .expect("FAIL carries a counterexample");
        assert!(recheck(&ExactOracle, cex).unwrap(), "{cex:?}");
    }
}
