use resdom_core::ops::complement;
use resdom_core::solvers::{Invariant, SolverOptions};
use resdom_core::{metrics, Graph, MAX_VERTICES};
use serde::{Deserialize, Serialize};

use super::{CheckResult, Counterexample, Level, Oracle, Status, VerifyError};
use crate::edge_list;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub run_id: String,
    pub level: String,
    pub checks: Vec<CheckResult>,
    pub summary: Summary,
}

impl Report {
    /// Sorts rows by check id, then parameters, and tallies the statuses.
    pub fn new(level: Level, seed: u64, mut checks: Vec<CheckResult>) -> Self {
        checks.sort_by(|a, b| (&a.check_id, &a.params).cmp(&(&b.check_id, &b.params)));
        let mut summary = Summary::default();
        for c in &checks {
            match c.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::Skipped => summary.skipped += 1,
            }
        }
        Report {
            run_id: format!("{}-seed{seed}", level.name()),
            level: level.name().to_owned(),
            checks,
            summary,
        }
    }

    pub fn passed(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    /// Pretty JSON with every object's keys in sorted order.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("report serializes");
        let mut s = serde_json::to_string_pretty(&value).expect("value serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

fn invariant_key(key: &str) -> Option<Invariant> {
    match key {
        "dim" => Some(Invariant::Dim),
        "gamma_k" => Some(Invariant::GammaK),
        "gamma_rk" => Some(Invariant::GammaRk),
        "ld_k" => Some(Invariant::LdK),
        _ => None,
    }
}

fn recompute(
    oracle: &dyn Oracle,
    g: &Graph,
    key: &str,
    k: u32,
) -> Result<Option<i64>, VerifyError> {
    let options = SolverOptions {
        cap: MAX_VERTICES,
        allow_disconnected: true,
        ..Default::default()
    };
    if let Some(inv) = invariant_key(key) {
        return Ok(Some(oracle.value(g, inv, k, &options)? as i64));
    }
    let m = metrics(g);
    let v = match key {
        "n" => Some(g.order() as i64),
        "diameter" => m.diameter.map(i64::from),
        "radius" => m.radius.map(i64::from),
        "girth" => m.girth.map(i64::from),
        _ => return Ok(None),
    };
    Ok(v)
}

/// Recomputes every recognised value of a counterexample from its edge list
/// and reports whether all of them match what was recorded. Values under
/// unrecognised keys are not checked.
pub fn recheck(oracle: &dyn Oracle, cex: &Counterexample) -> Result<bool, VerifyError> {
    let g = edge_list::parse(&cex.graph)?;
    let co = complement(&g);
    let k = cex.k.unwrap_or(1);
    for (key, &recorded) in &cex.computed {
        let (graph, name) = match key.strip_prefix("co_") {
            Some(rest) => (&co, rest),
            None => (&g, key.as_str()),
        };
        match recompute(oracle, graph, name, k)? {
            Some(v) if v != recorded => return Ok(false),
            _ => {}
        }
    }
    Ok(true)
}
