//! Machine-checkable claims about the invariants, evaluated over exhaustive,
//! seeded random and family corpora.
//!
//! Each check produces one [`CheckResult`] per parameter row (typically an
//! `(n, k)` pair or a family member). A row fails as soon as one graph violates
//! the claim; the first violating graph in corpus order becomes the
//! counterexample. Rows whose graphs all fall outside the claim's hypotheses
//! are reported as `SKIPPED`.

mod checks;
mod corpus;
mod report;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use resdom_core::solvers::{minimum_set, Invariant, SolverOptions};
use resdom_core::{FamilyError, Graph, SolveError};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use self::checks::{run_all, run_check, CheckId};
pub use self::corpus::{random_connected_graph, CorpusSpec, Sample};
pub use self::report::{recheck, Report, Summary};

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("unknown check {0:?}")]
    UnknownCheck(String),
    #[error("invalid corpus: {0}")]
    Corpus(String),
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error("counterexample graph does not parse: {0}")]
    Parse(#[from] crate::edge_list::ParseError),
}

/// Source of invariant values. Checks only ever ask the oracle, so a
/// deliberately wrong oracle exercises the failure path of the harness.
pub trait Oracle: Sync {
    fn value(
        &self,
        g: &Graph,
        invariant: Invariant,
        k: u32,
        options: &SolverOptions,
    ) -> Result<usize, SolveError>;
}

/// The exact solver.
#[derive(Clone, Copy, Debug, Default)]
pub struct ExactOracle;

impl Oracle for ExactOracle {
    fn value(
        &self,
        g: &Graph,
        invariant: Invariant,
        k: u32,
        options: &SolverOptions,
    ) -> Result<usize, SolveError> {
        minimum_set(g, invariant, k, options).map(|w| w.value)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// A parameter value in a result row.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Param {
    Int(u64),
    Text(String),
}

impl From<u64> for Param {
    fn from(v: u64) -> Self {
        Param::Int(v)
    }
}

impl From<u32> for Param {
    fn from(v: u32) -> Self {
        Param::Int(v as u64)
    }
}

impl From<usize> for Param {
    fn from(v: usize) -> Self {
        Param::Int(v as u64)
    }
}

impl From<&str> for Param {
    fn from(v: &str) -> Self {
        Param::Text(v.to_owned())
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Param::Int(v) => write!(f, "{v}"),
            Param::Text(s) => f.write_str(s),
        }
    }
}

pub type Params = BTreeMap<String, Param>;

/// A graph violating a claim, with the values that violate it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    /// Edge-list document of the graph.
    pub graph: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
    /// Recomputable values. Keys are `n`, `diameter`, `radius`, `girth`,
    /// `dim`, `gamma_k`, `gamma_rk`, `ld_k`, the same names prefixed with
    /// `co_` for the complement, or any other name for derived facts.
    pub computed: BTreeMap<String, i64>,
    /// The relation the computed values should have satisfied.
    pub expected: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub check_id: String,
    pub params: Params,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    pub elapsed_ms: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Level {
    /// Orders up to 5 and short sweeps; seconds.
    Smoke,
    /// The full desk-scale ranges.
    Desk,
}

impl Level {
    pub fn name(self) -> &'static str {
        match self {
            Level::Smoke => "smoke",
            Level::Desk => "desk",
        }
    }
}

impl FromStr for Level {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "smoke" => Ok(Level::Smoke),
            "desk" => Ok(Level::Desk),
            other => Err(format!("unknown level {other:?} (expected smoke or desk)")),
        }
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Ranges a run uses. `None` fields take the level's defaults.
#[derive(Clone, Debug)]
pub struct Scope {
    pub level: Level,
    pub seed: u64,
    pub k_max: Option<u32>,
    pub n_max: Option<usize>,
    /// Allow exhaustive corpora at order 7 (about two million matrices).
    pub exhaustive_seven: bool,
    /// Report `elapsed_ms` as 0 so that reports are byte-identical.
    pub deterministic: bool,
}

impl Scope {
    pub fn new(level: Level) -> Self {
        Scope {
            level,
            seed: 42,
            k_max: None,
            n_max: None,
            exhaustive_seven: false,
            deterministic: false,
        }
    }
}
