//! Exact predicates and minimum-cardinality search for resolving sets,
//! distance k-dominating sets, distance k-resolving dominating sets and
//! k-locating-dominating sets.
//!
//! The search walks target cardinalities upward from a lower bound and
//! enumerates subsets of each cardinality in lexicographic order, so the first
//! feasible set found is both minimum and lexicographically smallest.
//!
//! Lower bound and pruning: twin vertices (`N(u) \ {v} = N(v) \ {u}`) have the
//! same distance to every third vertex, so any resolving or locating set misses
//! at most one vertex of each twin class. Summing `|class| - 1` gives the
//! starting cardinality, and candidate subsets violating the rule are skipped
//! before the full predicate runs.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::distance::{all_pairs_distances, DistanceMatrix};
use crate::error::SolveError;
use crate::graph::Graph;
use crate::iso::twin_classes;
use crate::mask::{VertexMask, MAX_VERTICES};

/// Default bound on the order accepted by the search.
pub const DEFAULT_CAP: usize = 64;

/// The four invariants computed by the solvers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Invariant {
    /// Metric dimension: minimum resolving set.
    Dim,
    /// Distance k-domination number.
    GammaK,
    /// Distance k-resolving domination number.
    GammaRk,
    /// k-locating-domination number.
    LdK,
}

impl Invariant {
    pub const ALL: [Invariant; 4] = [
        Invariant::Dim,
        Invariant::GammaK,
        Invariant::GammaRk,
        Invariant::LdK,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Invariant::Dim => "dim",
            Invariant::GammaK => "gamma_k",
            Invariant::GammaRk => "gamma_rk",
            Invariant::LdK => "ld_k",
        }
    }

    pub fn uses_k(self) -> bool {
        self != Invariant::Dim
    }

    fn requires_domination(self) -> bool {
        self != Invariant::Dim
    }

    fn twin_rule_applies(self) -> bool {
        self != Invariant::GammaK
    }
}

impl fmt::Display for Invariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Invariant {
    type Err = &'static str;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key: alloc::string::String = s
            .chars()
            .filter(|c| *c != '_' && *c != '-')
            .map(|c| c.to_ascii_lowercase())
            .collect();
        match key.as_str() {
            "dim" | "resolving" => Ok(Invariant::Dim),
            "gammak" | "kdominating" => Ok(Invariant::GammaK),
            "gammark" | "kresolvingdominating" => Ok(Invariant::GammaRk),
            "ldk" | "klocatingdominating" => Ok(Invariant::LdK),
            _ => Err("expected one of dim, gamma_k, gamma_rk, ld_k"),
        }
    }
}

/// Strictly increasing list of vertex labels.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    /// Sorts and deduplicates `members`.
    pub fn new(mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        VertexSet(members)
    }

    pub fn from_mask(mask: &VertexMask) -> Self {
        VertexSet(mask.iter().collect())
    }

    pub fn to_mask(&self) -> VertexMask {
        self.0.iter().copied().collect()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(v: Vec<usize>) -> Self {
        VertexSet::new(v)
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(v: [usize; N]) -> Self {
        VertexSet::new(v.to_vec())
    }
}

/// An exact invariant value with a witness set of that size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessedInvariant {
    pub name: Invariant,
    /// Absent for [`Invariant::Dim`].
    pub k: Option<u32>,
    pub value: usize,
    pub witness: VertexSet,
}

#[derive(Clone, Debug)]
pub struct SolverOptions {
    /// Largest accepted order; clamped to [`MAX_VERTICES`].
    pub cap: usize,
    /// Vertices every candidate must contain; they count toward the cardinality.
    pub forced: VertexSet,
    /// Evaluate on disconnected graphs, treating "unreachable" as a distance
    /// value larger than every finite one. Used for complements in the
    /// Nordhaus-Gaddum checks.
    pub allow_disconnected: bool,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions {
            cap: DEFAULT_CAP,
            forced: VertexSet::default(),
            allow_disconnected: false,
        }
    }
}

impl SolverOptions {
    pub fn with_cap(cap: usize) -> Self {
        SolverOptions {
            cap,
            ..Default::default()
        }
    }

    pub fn extended() -> Self {
        SolverOptions {
            allow_disconnected: true,
            ..Default::default()
        }
    }
}

/// True iff every vertex outside `s` lies within distance `k` of a member of `s`.
pub fn is_distance_k_dominating(g: &Graph, dm: &DistanceMatrix, s: &VertexSet, k: u32) -> bool {
    let n = g.order();
    let covered = s
        .iter()
        .fold(VertexMask::EMPTY, |acc, v| acc.union(&dm.ball(v, k)));
    VertexMask::full(n).is_subset(&covered)
}

/// True iff every two distinct vertices outside `w` have different distance
/// vectors to `w`. Vertices in `w` are not compared: each is the only vertex
/// at distance 0 from itself.
pub fn is_resolving(g: &Graph, dm: &DistanceMatrix, w: &VertexSet) -> Result<bool, SolveError> {
    if !dm.is_connected() {
        return Err(SolveError::Disconnected);
    }
    Ok(resolves(g.order(), dm, &w.to_mask(), &mut Vec::new()))
}

/// True iff every vertex outside `x` has a nonempty trace `N_k(v) ∩ x`, and the
/// traces of distinct outside vertices differ. `N_k(v)` is the open
/// k-neighbourhood `{u : 0 < d(v, u) <= k}`.
pub fn is_k_locating_dominating(
    g: &Graph,
    dm: &DistanceMatrix,
    x: &VertexSet,
    k: u32,
) -> Result<bool, SolveError> {
    if !dm.is_connected() {
        return Err(SolveError::Disconnected);
    }
    let open = open_balls(g.order(), dm, k);
    Ok(locates(g.order(), &open, &x.to_mask(), &mut Vec::new()))
}

fn open_balls(n: usize, dm: &DistanceMatrix, k: u32) -> Vec<VertexMask> {
    (0..n)
        .map(|v| {
            let mut b = dm.ball(v, k);
            b.remove(v);
            b
        })
        .collect()
}

fn resolves(n: usize, dm: &DistanceMatrix, set: &VertexMask, scratch: &mut Vec<u32>) -> bool {
    let members: Vec<usize> = set.iter().collect();
    let outside: Vec<usize> = (0..n).filter(|v| !set.contains(*v)).collect();
    if outside.len() <= 1 {
        return true;
    }
    if members.is_empty() {
        return false;
    }
    let width = members.len();
    scratch.clear();
    for &v in &outside {
        let row = dm.row(v);
        scratch.extend(members.iter().map(|&w| row[w]));
    }
    let mut order: Vec<usize> = (0..outside.len()).collect();
    let sig = |i: usize| &scratch[i * width..(i + 1) * width];
    order.sort_unstable_by(|&a, &b| sig(a).cmp(sig(b)));
    order.windows(2).all(|p| sig(p[0]) != sig(p[1]))
}

fn locates(n: usize, open: &[VertexMask], set: &VertexMask, scratch: &mut Vec<VertexMask>) -> bool {
    scratch.clear();
    for v in (0..n).filter(|v| !set.contains(*v)) {
        let trace = open[v].intersection(set);
        if trace.is_empty() {
            return false;
        }
        scratch.push(trace);
    }
    scratch.sort_unstable();
    scratch.windows(2).all(|p| p[0] != p[1])
}

/// Reusable search state for one graph: distances, k-balls and twin classes.
pub struct Solver<'g> {
    graph: &'g Graph,
    dm: DistanceMatrix,
    options: SolverOptions,
    twin_masks: Vec<VertexMask>,
    twin_bound: usize,
}

impl<'g> Solver<'g> {
    pub fn new(graph: &'g Graph, options: SolverOptions) -> Result<Self, SolveError> {
        let dm = all_pairs_distances(graph);
        Self::with_distances(graph, dm, options)
    }

    pub fn with_distances(
        graph: &'g Graph,
        dm: DistanceMatrix,
        options: SolverOptions,
    ) -> Result<Self, SolveError> {
        let n = graph.order();
        if n == 0 {
            return Err(SolveError::EmptyGraph);
        }
        let cap = options.cap.min(MAX_VERTICES);
        if n > cap {
            return Err(SolveError::SizeGuard { n, cap });
        }
        if !options.allow_disconnected && !dm.is_connected() {
            return Err(SolveError::Disconnected);
        }
        if let Some(v) = options.forced.iter().find(|&v| v >= n) {
            return Err(SolveError::ForcedOutOfRange { v, n });
        }
        let classes = twin_classes(graph);
        let twin_bound = classes.iter().map(|c| c.len() - 1).sum();
        let twin_masks = classes
            .into_iter()
            .filter(|c| c.len() > 1)
            .map(|c| c.into_iter().collect())
            .collect();
        Ok(Solver {
            graph,
            dm,
            options,
            twin_masks,
            twin_bound,
        })
    }

    pub fn distances(&self) -> &DistanceMatrix {
        &self.dm
    }

    /// Cardinality where the search for `invariant` starts.
    pub fn lower_bound(&self, invariant: Invariant) -> usize {
        let mut lb = self.options.forced.len();
        if invariant.twin_rule_applies() {
            lb = lb.max(self.twin_bound);
        }
        if invariant.requires_domination() {
            lb = lb.max(1);
        }
        lb
    }

    /// Exact minimum with the lexicographically smallest optimal witness.
    pub fn solve(&self, invariant: Invariant, k: u32) -> Result<WitnessedInvariant, SolveError> {
        if invariant.uses_k() && k == 0 {
            return Err(SolveError::InvalidK);
        }
        let n = self.graph.order();
        for c in self.lower_bound(invariant)..=n {
            if let Some(witness) = self.first_feasible(invariant, k, c)? {
                return Ok(WitnessedInvariant {
                    name: invariant,
                    k: invariant.uses_k().then_some(k),
                    value: c,
                    witness,
                });
            }
        }
        Err(SolveError::Infeasible)
    }

    /// Lexicographically first feasible set of exactly `size` vertices
    /// (including the forced ones), or `None` if no such set exists.
    pub fn first_feasible(
        &self,
        invariant: Invariant,
        k: u32,
        size: usize,
    ) -> Result<Option<VertexSet>, SolveError> {
        if invariant.uses_k() && k == 0 {
            return Err(SolveError::InvalidK);
        }
        let n = self.graph.order();
        let forced = self.options.forced.to_mask();
        let forced_len = forced.len();
        if size < forced_len || size > n {
            return Ok(None);
        }
        let free: Vec<usize> = (0..n).filter(|v| !forced.contains(*v)).collect();
        let pick = size - forced_len;
        let check = Check::new(self, invariant, k);
        let mut scratch = Scratch::default();

        let mut idx: Vec<usize> = (0..pick).collect();
        loop {
            let mut set = forced;
            for &i in &idx {
                set.insert(free[i]);
            }
            if check.accepts(&set, &mut scratch) {
                return Ok(Some(VertexSet::from_mask(&set)));
            }
            if !next_combination(&mut idx, free.len()) {
                return Ok(None);
            }
        }
    }

    pub fn is_feasible(&self, invariant: Invariant, k: u32, set: &VertexSet) -> bool {
        let check = Check::new(self, invariant, k);
        check.accepts_unpruned(&set.to_mask(), &mut Scratch::default())
    }
}

#[derive(Default)]
struct Scratch {
    sig: Vec<u32>,
    traces: Vec<VertexMask>,
}

struct Check<'a> {
    n: usize,
    dm: &'a DistanceMatrix,
    invariant: Invariant,
    balls: Vec<VertexMask>,
    open: Vec<VertexMask>,
    twins: &'a [VertexMask],
}

impl<'a> Check<'a> {
    fn new(solver: &'a Solver<'_>, invariant: Invariant, k: u32) -> Self {
        let n = solver.graph.order();
        let dm = &solver.dm;
        let balls = if invariant.requires_domination() {
            (0..n).map(|v| dm.ball(v, k)).collect()
        } else {
            Vec::new()
        };
        let open = if invariant == Invariant::LdK {
            open_balls(n, dm, k)
        } else {
            Vec::new()
        };
        Check {
            n,
            dm,
            invariant,
            balls,
            open,
            twins: if invariant.twin_rule_applies() {
                &solver.twin_masks
            } else {
                &[]
            },
        }
    }

    fn accepts(&self, set: &VertexMask, scratch: &mut Scratch) -> bool {
        let twins_ok = self
            .twins
            .iter()
            .all(|class| class.difference(set).len() <= 1);
        twins_ok && self.accepts_unpruned(set, scratch)
    }

    fn accepts_unpruned(&self, set: &VertexMask, scratch: &mut Scratch) -> bool {
        let n = self.n;
        if self.invariant.requires_domination() {
            if set.is_empty() {
                return false;
            }
            if self.invariant != Invariant::LdK {
                let covered = set
                    .iter()
                    .fold(VertexMask::EMPTY, |acc, v| acc.union(&self.balls[v]));
                if !VertexMask::full(n).is_subset(&covered) {
                    return false;
                }
            }
        }
        match self.invariant {
            Invariant::GammaK => true,
            Invariant::Dim | Invariant::GammaRk => resolves(n, self.dm, set, &mut scratch.sig),
            Invariant::LdK => locates(n, &self.open, set, &mut scratch.traces),
        }
    }
}

/// Advances `idx` (strictly increasing indices into `0..len`) to the next
/// combination in lexicographic order.
fn next_combination(idx: &mut [usize], len: usize) -> bool {
    let r = idx.len();
    let mut i = r;
    while i > 0 {
        i -= 1;
        if idx[i] < len - r + i {
            idx[i] += 1;
            for j in i + 1..r {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Minimum set for `invariant` (`k` is ignored for [`Invariant::Dim`]).
pub fn minimum_set(
    g: &Graph,
    invariant: Invariant,
    k: u32,
    options: &SolverOptions,
) -> Result<WitnessedInvariant, SolveError> {
    Solver::new(g, options.clone())?.solve(invariant, k)
}

/// DIM, GAMMA_K, GAMMA_RK and LD_K for one `k`, sharing one distance matrix.
pub fn all_invariants(g: &Graph, k: u32) -> Result<Vec<WitnessedInvariant>, SolveError> {
    all_invariants_with(g, k, &SolverOptions::default())
}

pub fn all_invariants_with(
    g: &Graph,
    k: u32,
    options: &SolverOptions,
) -> Result<Vec<WitnessedInvariant>, SolveError> {
    let solver = Solver::new(g, options.clone())?;
    Invariant::ALL
        .iter()
        .map(|&inv| solver.solve(inv, k))
        .collect()
}

/// Values of the four invariants, in the order of [`Invariant::ALL`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InvariantValues {
    pub dim: usize,
    pub gamma_k: usize,
    pub gamma_rk: usize,
    pub ld_k: usize,
}

impl InvariantValues {
    pub fn get(&self, inv: Invariant) -> usize {
        match inv {
            Invariant::Dim => self.dim,
            Invariant::GammaK => self.gamma_k,
            Invariant::GammaRk => self.gamma_rk,
            Invariant::LdK => self.ld_k,
        }
    }
}

impl<'g> Solver<'g> {
    /// All four values for one `k`.
    pub fn values(&self, k: u32) -> Result<InvariantValues, SolveError> {
        Ok(InvariantValues {
            dim: self.solve(Invariant::Dim, k)?.value,
            gamma_k: self.solve(Invariant::GammaK, k)?.value,
            gamma_rk: self.solve(Invariant::GammaRk, k)?.value,
            ld_k: self.solve(Invariant::LdK, k)?.value,
        })
    }
}

/// Convenience: the value of a single invariant.
pub fn invariant_value(g: &Graph, invariant: Invariant, k: u32) -> Result<usize, SolveError> {
    minimum_set(g, invariant, k, &SolverOptions::default()).map(|w| w.value)
}
