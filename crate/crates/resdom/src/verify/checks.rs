use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use resdom_core::distance::all_pairs_distances;
use resdom_core::families::{
    extremal_gr, generate, predicted_gamma_rk_cycle, predicted_gamma_rk_path, predicted_max_order,
    realize_triple, FamilyParams, TripleTarget,
};
use resdom_core::generators::{bull, complete, complete_bipartite, cycle, empty, path};
use resdom_core::iso::is_isomorphic;
use resdom_core::ops::{complement, disjoint_union, join, substitute};
use resdom_core::solvers::{
    is_distance_k_dominating, is_resolving, Invariant, Solver, SolverOptions, VertexSet,
};
use resdom_core::{metrics, Graph, GraphMetrics, SolveError, MAX_VERTICES};

use super::{
    CheckResult, CorpusSpec, Counterexample, Level, Oracle, Param, Params, Report, Scope, Status,
    VerifyError,
};
use crate::edge_list;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CheckId {
    Sandwich,
    DiamCollapse,
    PathFormula,
    CycleFormula,
    RadiusPlus1,
    NkUpper,
    DiamUpper,
    LowerTrio,
    Lem22,
    Char1,
    CharN2,
    CharN1,
    CycleResolving,
    Triples,
    MaxOrder,
    Ng2,
    NgK,
    NgConnected,
    LdDominates,
}

impl CheckId {
    pub const ALL: [CheckId; 19] = [
        CheckId::Sandwich,
        CheckId::DiamCollapse,
        CheckId::PathFormula,
        CheckId::CycleFormula,
        CheckId::RadiusPlus1,
        CheckId::NkUpper,
        CheckId::DiamUpper,
        CheckId::LowerTrio,
        CheckId::Lem22,
        CheckId::Char1,
        CheckId::CharN2,
        CheckId::CharN1,
        CheckId::CycleResolving,
        CheckId::Triples,
        CheckId::MaxOrder,
        CheckId::Ng2,
        CheckId::NgK,
        CheckId::NgConnected,
        CheckId::LdDominates,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckId::Sandwich => "CHK_SANDWICH",
            CheckId::DiamCollapse => "CHK_DIAM_COLLAPSE",
            CheckId::PathFormula => "CHK_PATH_FORMULA",
            CheckId::CycleFormula => "CHK_CYCLE_FORMULA",
            CheckId::RadiusPlus1 => "CHK_RADIUS_PLUS1",
            CheckId::NkUpper => "CHK_NK_UPPER",
            CheckId::DiamUpper => "CHK_DIAM_UPPER",
            CheckId::LowerTrio => "CHK_LOWER_TRIO",
            CheckId::Lem22 => "CHK_LEM22",
            CheckId::Char1 => "CHK_CHAR1",
            CheckId::CharN2 => "CHK_CHAR_N2",
            CheckId::CharN1 => "CHK_CHAR_N1",
            CheckId::CycleResolving => "CHK_CYCLE_RESOLVING",
            CheckId::Triples => "CHK_TRIPLES",
            CheckId::MaxOrder => "CHK_MAXORDER",
            CheckId::Ng2 => "CHK_NG2",
            CheckId::NgK => "CHK_NGK",
            CheckId::NgConnected => "CHK_NG_CONNECTED",
            CheckId::LdDominates => "CHK_LD_DOMINATES",
        }
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CheckId {
    type Err = VerifyError;

    /// Case-insensitive, with or without the `CHK_` prefix.
    fn from_str(s: &str) -> Result<Self, VerifyError> {
        let upper = s.to_ascii_uppercase();
        let bare = upper.strip_prefix("CHK_").unwrap_or(&upper);
        CheckId::ALL
            .into_iter()
            .find(|c| &c.name()[4..] == bare)
            .ok_or_else(|| VerifyError::UnknownCheck(s.to_owned()))
    }
}

enum Verdict {
    Pass,
    Skip,
    Fail(Counterexample),
}

struct Values<'a> {
    entries: Vec<(&'a str, i64)>,
}

impl<'a> Values<'a> {
    fn new() -> Self {
        Values {
            entries: Vec::new(),
        }
    }

    fn with(mut self, key: &'a str, v: impl TryInto<i64>) -> Self {
        self.entries.push((
            key,
            v.try_into().unwrap_or_else(|_| panic!("{key} fits in i64")),
        ));
        self
    }

    fn fail(self, g: &Graph, k: Option<u32>, expected: impl Into<String>) -> Verdict {
        Verdict::Fail(Counterexample {
            graph: edge_list::to_string(g),
            k,
            computed: self
                .entries
                .into_iter()
                .map(|(key, v)| (key.to_owned(), v))
                .collect(),
            expected: expected.into(),
        })
    }
}

fn check(ok: bool, g: &Graph, k: Option<u32>, values: Values<'_>, expected: &str) -> Verdict {
    if ok {
        Verdict::Pass
    } else {
        values.fail(g, k, expected)
    }
}

fn params<const N: usize>(entries: [(&str, Param); N]) -> Params {
    entries
        .into_iter()
        .map(|(k, v)| (k.to_owned(), v))
        .collect()
}

/// Corpus name, order and the graphs of that order.
type Group = (&'static str, usize, Vec<Graph>);

struct Ctx<'a> {
    oracle: &'a dyn Oracle,
    scope: &'a Scope,
    options: SolverOptions,
    extended: SolverOptions,
}

impl<'a> Ctx<'a> {
    fn new(oracle: &'a dyn Oracle, scope: &'a Scope) -> Self {
        let options = SolverOptions::with_cap(MAX_VERTICES);
        let extended = SolverOptions {
            allow_disconnected: true,
            ..options.clone()
        };
        Ctx {
            oracle,
            scope,
            options,
            extended,
        }
    }

    fn value(&self, g: &Graph, inv: Invariant, k: u32) -> Result<usize, SolveError> {
        self.oracle.value(g, inv, k, &self.options)
    }

    fn value_ext(&self, g: &Graph, inv: Invariant, k: u32) -> Result<usize, SolveError> {
        self.oracle.value(g, inv, k, &self.extended)
    }

    fn smoke(&self) -> bool {
        self.scope.level == Level::Smoke
    }

    fn exhaustive_n_max(&self) -> usize {
        let top = if self.scope.exhaustive_seven { 7 } else { 6 };
        let default = if self.smoke() { 5 } else { top };
        self.scope.n_max.map_or(default, |n| n.min(top)).max(1)
    }

    fn k_max(&self, smoke: u32, desk: u32) -> u32 {
        self.scope
            .k_max
            .unwrap_or(if self.smoke() { smoke } else { desk })
    }

    fn n_max(&self, smoke: usize, desk: usize) -> usize {
        self.scope
            .n_max
            .unwrap_or(if self.smoke() { smoke } else { desk })
            .min(MAX_VERTICES)
    }

    fn random_spec(&self) -> CorpusSpec {
        let (count, n_max) = if self.smoke() { (40, 8) } else { (500, 12) };
        CorpusSpec::Random {
            count,
            n_min: 2,
            n_max,
            p_percent: vec![20, 50],
            seed: self.scope.seed,
        }
    }

    /// Evaluates `f` on every graph and folds the verdicts into one row.
    fn row<F>(&self, id: CheckId, params: Params, graphs: &[Graph], f: F) -> CheckResult
    where
        F: Fn(&Graph) -> Result<Verdict, SolveError> + Sync,
    {
        let start = Instant::now();
        let verdicts: Vec<Verdict> = graphs
            .par_iter()
            .map(|g| {
                f(g).unwrap_or_else(|e| Values::new().fail(g, None, format!("solver error: {e}")))
            })
            .collect();
        let mut status = Status::Skipped;
        let mut counterexample = None;
        for v in verdicts {
            match v {
                Verdict::Pass => status = Status::Pass,
                Verdict::Skip => {}
                Verdict::Fail(c) => {
                    status = Status::Fail;
                    counterexample = Some(c);
                    break;
                }
            }
        }
        self.finish(id, params, status, counterexample, start)
    }

    fn single(
        &self,
        id: CheckId,
        params: Params,
        f: impl FnOnce() -> Result<Verdict, VerifyError>,
    ) -> CheckResult {
        let start = Instant::now();
        let (status, cex) = match f() {
            Ok(Verdict::Pass) => (Status::Pass, None),
            Ok(Verdict::Skip) => (Status::Skipped, None),
            Ok(Verdict::Fail(c)) => (Status::Fail, Some(c)),
            Err(e) => (
                Status::Fail,
                Some(Counterexample {
                    graph: "0 0\n".into(),
                    k: None,
                    computed: BTreeMap::new(),
                    expected: format!("error: {e}"),
                }),
            ),
        };
        self.finish(id, params, status, cex, start)
    }

    fn finish(
        &self,
        id: CheckId,
        params: Params,
        status: Status,
        counterexample: Option<Counterexample>,
        start: Instant,
    ) -> CheckResult {
        let elapsed_ms = if self.scope.deterministic {
            0
        } else {
            start.elapsed().as_millis() as u64
        };
        CheckResult {
            check_id: id.name().to_owned(),
            params,
            status,
            counterexample,
            elapsed_ms,
        }
    }

    /// Connected graphs grouped by order: the exhaustive corpus from order
    /// `n_min`, followed by the seeded random corpus.
    fn standard_corpora(&self, n_min: usize) -> Result<Vec<Group>, VerifyError> {
        let mut out = Vec::new();
        for n in n_min..=self.exhaustive_n_max() {
            let spec = CorpusSpec::Exhaustive {
                n_min: n,
                n_max: n,
                connected_only: true,
            };
            let graphs = spec.samples()?.into_iter().map(|s| s.graph).collect();
            out.push(("exhaustive", n, graphs));
        }
        let mut by_n: BTreeMap<usize, Vec<Graph>> = BTreeMap::new();
        for s in self.random_spec().samples()? {
            by_n.entry(s.graph.order()).or_default().push(s.graph);
        }
        out.extend(by_n.into_iter().map(|(n, gs)| ("random", n, gs)));
        Ok(out)
    }

    fn exhaustive(&self, n: usize, connected_only: bool) -> Result<Vec<Graph>, VerifyError> {
        let spec = CorpusSpec::Exhaustive {
            n_min: n,
            n_max: n,
            connected_only,
        };
        Ok(spec.samples()?.into_iter().map(|s| s.graph).collect())
    }

    /// One row per (corpus, n, k) over the standard corpora.
    fn corpus_check<F>(
        &self,
        id: CheckId,
        ks: std::ops::RangeInclusive<u32>,
        f: F,
    ) -> Result<Vec<CheckResult>, VerifyError>
    where
        F: Fn(&Ctx<'_>, &Graph, u32) -> Result<Verdict, SolveError> + Sync,
    {
        let mut rows = Vec::new();
        for (corpus, n, graphs) in self.standard_corpora(2)? {
            for k in ks.clone() {
                let mut p = params([("corpus", corpus.into()), ("n", n.into()), ("k", k.into())]);
                if corpus == "random" {
                    p.insert("seed".into(), self.scope.seed.into());
                }
                rows.push(self.row(id, p, &graphs, |g| f(self, g, k)));
            }
        }
        Ok(rows)
    }
}

fn diameter_radius(m: &GraphMetrics) -> (u32, u32) {
    (m.diameter.expect("connected"), m.radius.expect("connected"))
}

fn is_member(g: &Graph, family: &[Graph]) -> bool {
    family
        .iter()
        .any(|h| is_isomorphic(g, h).expect("orders in scope are at most 8"))
}

/// `K_{s,t}`, `K_s + K̄_t` (t >= 2) and `K_s + (K_1 ∪ K_t)` on `n` vertices.
fn dim_n_minus_2_family(n: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for s in 1..n {
        let t = n - s;
        if s <= t {
            out.push(complete_bipartite(s, t).unwrap());
        }
        if t >= 2 {
            out.push(join(&complete(s).unwrap(), &empty(t).unwrap()).unwrap());
        }
        if t >= 2 {
            let side = disjoint_union(&complete(1).unwrap(), &complete(t - 1).unwrap()).unwrap();
            out.push(join(&complete(s).unwrap(), &side).unwrap());
        }
    }
    out
}

fn p4_with(assignment: &[(usize, Graph)]) -> Graph {
    let map: BTreeMap<usize, Graph> = assignment.iter().cloned().collect();
    substitute(&path(4).unwrap(), &map).unwrap()
}

/// Graphs on `n` vertices listed as attaining `γ^r_k(G) + γ^r_k(Ḡ) = 2n - 6`
/// (k >= 3) when both sides are connected. Substituted vertices are the
/// 0-based positions of `P_4 = 0-1-2-3`.
fn ng_upper_family(n: usize) -> Vec<Graph> {
    let mut out = vec![path(4).unwrap(), cycle(5).unwrap(), bull()];
    if n >= 4 {
        let m = n - 3;
        out.push(p4_with(&[(0, complete(m).unwrap())]));
        out.push(p4_with(&[(0, empty(m).unwrap())]));
        out.push(p4_with(&[(1, complete(m).unwrap())]));
        out.push(p4_with(&[(1, empty(m).unwrap())]));
        for r in 1..=n - 3 {
            out.push(p4_with(&[
                (0, complete(r).unwrap()),
                (1, complete(n - r - 2).unwrap()),
            ]));
            out.push(p4_with(&[
                (0, empty(r).unwrap()),
                (2, empty(n - r - 2).unwrap()),
            ]));
        }
    }
    out.retain(|g| g.order() == n);
    out
}

fn bound_rows(ctx: &Ctx<'_>, id: CheckId) -> Result<Vec<CheckResult>, VerifyError> {
    let ks = 1..=ctx.k_max(2, 3);
    match id {
        CheckId::Sandwich => ctx.corpus_check(id, ks, |c, g, k| {
            let n = g.order();
            if n < 2 {
                return Ok(Verdict::Skip);
            }
            let dim = c.value(g, Invariant::Dim, k)?;
            let gk = c.value(g, Invariant::GammaK, k)?;
            let grk = c.value(g, Invariant::GammaRk, k)?;
            let ok = gk.max(dim) <= grk && grk <= (gk + dim).min(n - 1);
            let v = Values::new()
                .with("n", n)
                .with("dim", dim)
                .with("gamma_k", gk)
                .with("gamma_rk", grk);
            Ok(check(
                ok,
                g,
                Some(k),
                v,
                "max(gamma_k, dim) <= gamma_rk <= min(gamma_k + dim, n - 1)",
            ))
        }),
        CheckId::DiamCollapse => ctx.corpus_check(id, ks, |c, g, k| {
            let (d, _) = diameter_radius(&metrics(g));
            if k < d {
                return Ok(Verdict::Skip);
            }
            let dim = c.value(g, Invariant::Dim, k)?;
            let grk = c.value(g, Invariant::GammaRk, k)?;
            let v = Values::new()
                .with("diameter", d)
                .with("dim", dim)
                .with("gamma_rk", grk);
            Ok(check(
                grk == dim,
                g,
                Some(k),
                v,
                "k >= diameter implies gamma_rk == dim",
            ))
        }),
        CheckId::RadiusPlus1 => ctx.corpus_check(id, ks, |c, g, k| {
            let (d, r) = diameter_radius(&metrics(g));
            if !(r <= k || d == k + 1) {
                return Ok(Verdict::Skip);
            }
            let dim = c.value(g, Invariant::Dim, k)?;
            let grk = c.value(g, Invariant::GammaRk, k)?;
            let v = Values::new()
                .with("diameter", d)
                .with("radius", r)
                .with("dim", dim)
                .with("gamma_rk", grk);
            Ok(check(
                dim <= grk && grk <= dim + 1,
                g,
                Some(k),
                v,
                "dim <= gamma_rk <= dim + 1",
            ))
        }),
        CheckId::NkUpper => {
            let mut rows = ctx.corpus_check(id, ks.clone(), |c, g, k| {
                let n = g.order() as i64;
                let (d, _) = diameter_radius(&metrics(g));
                if n < k as i64 + 1 || d < k {
                    return Ok(Verdict::Skip);
                }
                let gk = c.value(g, Invariant::GammaK, k)?;
                let grk = c.value(g, Invariant::GammaRk, k)?;
                let ok = grk as i64 <= n - k as i64 * gk as i64;
                let v = Values::new()
                    .with("n", n)
                    .with("diameter", d)
                    .with("gamma_k", gk)
                    .with("gamma_rk", grk);
                Ok(check(ok, g, Some(k), v, "gamma_rk <= n - k * gamma_k"))
            })?;
            let pairs: Vec<(u32, u32)> = if ctx.smoke() {
                vec![(1, 2), (2, 2)]
            } else {
                ks.flat_map(|k| (1..=3).map(move |gamma| (k, gamma)))
                    .collect()
            };
            for (k, gamma) in pairs {
                let p = params([
                    ("family", "t-gamma".into()),
                    ("k", k.into()),
                    ("gamma", gamma.into()),
                ]);
                rows.push(ctx.single(id, p, || {
                    let g = generate(&FamilyParams::TGamma { k, gamma })?;
                    let n = g.order();
                    let gk = ctx.value(&g, Invariant::GammaK, k)?;
                    let grk = ctx.value(&g, Invariant::GammaRk, k)?;
                    let ok = gk == gamma as usize && grk + k as usize * gamma as usize == n;
                    let v = Values::new()
                        .with("n", n)
                        .with("gamma_k", gk)
                        .with("gamma_rk", grk);
                    Ok(check(
                        ok,
                        &g,
                        Some(k),
                        v,
                        format!("gamma_k == {gamma} and gamma_rk == n - k * gamma").as_str(),
                    ))
                }));
            }
            Ok(rows)
        }
        CheckId::DiamUpper => ctx.corpus_check(id, ks, |c, g, k| {
            let n = g.order() as u32;
            let (d, _) = diameter_radius(&metrics(g));
            let bound = if d <= k {
                n - d
            } else if d <= 2 * k {
                n - d + 1
            } else {
                n - d + d / (2 * k + 1)
            };
            let grk = c.value(g, Invariant::GammaRk, k)?;
            let v = Values::new()
                .with("n", n)
                .with("diameter", d)
                .with("gamma_rk", grk);
            Ok(check(
                grk as u32 <= bound,
                g,
                Some(k),
                v,
                format!("gamma_rk <= {bound}").as_str(),
            ))
        }),
        CheckId::LowerTrio => ctx.corpus_check(id, ks, |c, g, k| {
            let m = metrics(g);
            let (d, r) = diameter_radius(&m);
            let grk = c.value(g, Invariant::GammaRk, k)? as u32;
            let scaled = (2 * k + 1) * grk;
            let mut ok = scaled > d && scaled >= 2 * r;
            let mut v = Values::new()
                .with("diameter", d)
                .with("radius", r)
                .with("gamma_rk", grk);
            if let Some(girth) = m.girth {
                ok &= scaled >= girth;
                v = v.with("girth", girth);
            }
            Ok(check(
                ok,
                g,
                Some(k),
                v,
                "(2k+1) * gamma_rk >= max(d + 1, 2r, girth)",
            ))
        }),
        CheckId::LdDominates => ctx.corpus_check(id, ks, |c, g, k| {
            let grk = c.value(g, Invariant::GammaRk, k)?;
            let ld = c.value(g, Invariant::LdK, k)?;
            let v = Values::new().with("gamma_rk", grk).with("ld_k", ld);
            Ok(check(grk <= ld, g, Some(k), v, "gamma_rk <= ld_k"))
        }),
        _ => unreachable!("not a corpus bound check"),
    }
}

fn exhaustive_rows<F>(
    ctx: &Ctx<'_>,
    id: CheckId,
    n_min: usize,
    ks: std::ops::RangeInclusive<u32>,
    f: F,
) -> Result<Vec<CheckResult>, VerifyError>
where
    F: Fn(&Graph, usize, u32) -> Result<Verdict, SolveError> + Sync,
{
    let mut rows = Vec::new();
    for n in n_min..=ctx.exhaustive_n_max() {
        let graphs = ctx.exhaustive(n, true)?;
        for k in ks.clone() {
            let p = params([
                ("corpus", "exhaustive".into()),
                ("n", n.into()),
                ("k", k.into()),
            ]);
            rows.push(ctx.row(id, p, &graphs, |g| f(g, n, k)));
        }
    }
    Ok(rows)
}

fn characterization_rows(ctx: &Ctx<'_>, id: CheckId) -> Result<Vec<CheckResult>, VerifyError> {
    let k_hi = ctx.k_max(3, 3);
    match id {
        CheckId::Lem22 => exhaustive_rows(ctx, id, 2, 1..=k_hi, |g, n, k| {
            if k < 2 || g.is_path() {
                return Ok(Verdict::Skip);
            }
            let applicable: Vec<usize> = (1..=k as usize).filter(|&i| n >= i + 2).collect();
            if applicable.is_empty() {
                return Ok(Verdict::Skip);
            }
            let dim = ctx.value(g, Invariant::Dim, k)?;
            let grk = ctx.value(g, Invariant::GammaRk, k)?;
            let ok = applicable.iter().all(|&i| (grk == n - i) == (dim == n - i));
            let v = Values::new()
                .with("n", n)
                .with("dim", dim)
                .with("gamma_rk", grk);
            Ok(check(
                ok,
                g,
                Some(k),
                v,
                "gamma_rk == n - i iff dim == n - i for 1 <= i <= k, n >= i + 2",
            ))
        }),
        CheckId::Char1 => {
            let mut rows = Vec::new();
            for n in 2..=ctx.exhaustive_n_max() {
                let graphs = ctx.exhaustive(n, true)?;
                for k in 1..=k_hi {
                    let family: Vec<Graph> = if n <= k as usize + 1 {
                        vec![path(n).unwrap()]
                    } else {
                        vec![]
                    };
                    let p = params([
                        ("corpus", "exhaustive".into()),
                        ("n", n.into()),
                        ("k", k.into()),
                    ]);
                    rows.push(ctx.row(id, p, &graphs, |g| {
                        let grk = ctx.value(g, Invariant::GammaRk, k)?;
                        let member = is_member(g, &family);
                        let v = Values::new()
                            .with("n", n)
                            .with("gamma_rk", grk)
                            .with("in_family", member as i64);
                        Ok(check(
                            (grk == 1) == member,
                            g,
                            Some(k),
                            v,
                            "gamma_rk == 1 iff G is a path on at most k + 1 vertices",
                        ))
                    }));
                }
            }
            Ok(rows)
        }
        CheckId::CharN2 => {
            let mut rows = Vec::new();
            for n in 4..=ctx.exhaustive_n_max() {
                let graphs = ctx.exhaustive(n, true)?;
                for k in 1..=k_hi {
                    let mut family = dim_n_minus_2_family(n);
                    if k == 2 && n == 4 {
                        family.push(path(4).unwrap());
                    }
                    let p = params([
                        ("corpus", "exhaustive".into()),
                        ("n", n.into()),
                        ("k", k.into()),
                    ]);
                    rows.push(ctx.row(id, p, &graphs, |g| {
                        if k < 2 {
                            return Ok(Verdict::Skip);
                        }
                        let grk = ctx.value(g, Invariant::GammaRk, k)?;
                        let member = is_member(g, &family);
                        let v = Values::new()
                            .with("n", n)
                            .with("gamma_rk", grk)
                            .with("in_family", member as i64);
                        Ok(check(
                            (grk == n - 2) == member,
                            g,
                            Some(k),
                            v,
                            "gamma_rk == n - 2 iff G is in the listed family",
                        ))
                    }));
                }
            }
            Ok(rows)
        }
        CheckId::CharN1 => exhaustive_rows(ctx, id, 2, 1..=k_hi, |g, n, k| {
            if k < 2 {
                return Ok(Verdict::Skip);
            }
            let grk = ctx.value(g, Invariant::GammaRk, k)?;
            let member = is_member(g, &[complete(n).unwrap()]);
            let v = Values::new()
                .with("n", n)
                .with("gamma_rk", grk)
                .with("in_family", member as i64);
            Ok(check(
                (grk == n - 1) == member,
                g,
                Some(k),
                v,
                "gamma_rk == n - 1 iff G is complete",
            ))
        }),
        _ => unreachable!("not a characterization check"),
    }
}

fn formula_rows(ctx: &Ctx<'_>, id: CheckId) -> Result<Vec<CheckResult>, VerifyError> {
    let mut rows = Vec::new();
    match id {
        CheckId::PathFormula => {
            for k in 1..=ctx.k_max(2, 4) {
                for n in 2..=ctx.n_max(10, 16) {
                    let p = params([("k", k.into()), ("n", n.into())]);
                    rows.push(ctx.single(id, p, || {
                        let g = path(n)?;
                        let grk = ctx.value(&g, Invariant::GammaRk, k)?;
                        let predicted = predicted_gamma_rk_path(k, n as u32) as usize;
                        let v = Values::new().with("n", n).with("gamma_rk", grk);
                        Ok(check(
                            grk == predicted,
                            &g,
                            Some(k),
                            v,
                            format!("gamma_rk == {predicted}").as_str(),
                        ))
                    }));
                }
            }
        }
        CheckId::CycleFormula => {
            for k in 1..=ctx.k_max(2, 3) {
                let mut ns: Vec<usize> = (3..=ctx.n_max(10, 16)).collect();
                let special = 4 * k as usize + 2;
                if special <= MAX_VERTICES && !ns.contains(&special) {
                    ns.push(special);
                }
                for n in ns {
                    let p = params([("k", k.into()), ("n", n.into())]);
                    rows.push(ctx.single(id, p, || {
                        let g = cycle(n)?;
                        let grk = ctx.value(&g, Invariant::GammaRk, k)?;
                        let predicted = predicted_gamma_rk_cycle(k, n as u32) as usize;
                        let v = Values::new().with("n", n).with("gamma_rk", grk);
                        Ok(check(
                            grk == predicted,
                            &g,
                            Some(k),
                            v,
                            format!("gamma_rk == {predicted}").as_str(),
                        ))
                    }));
                }
            }
        }
        CheckId::CycleResolving => {
            for k in 1..=ctx.k_max(2, 4) {
                let lo = 2 * k as usize + 2;
                for n in lo..=ctx.n_max(12, 20) {
                    let expect = n != 4 * k as usize + 2;
                    let p = params([
                        ("k", k.into()),
                        ("n", n.into()),
                        (
                            "expect",
                            if expect { "resolving" } else { "not-resolving" }.into(),
                        ),
                    ]);
                    rows.push(ctx.single(id, p, || {
                        let g = cycle(n)?;
                        let dm = all_pairs_distances(&g);
                        let w = VertexSet::new(vec![0, 2 * k as usize + 1]);
                        let got = is_resolving(&g, &dm, &w)?;
                        let v = Values::new().with("n", n).with("resolving", got as i64);
                        let expected = format!("{{0, {}}} resolving == {expect}", 2 * k + 1);
                        Ok(check(got == expect, &g, Some(k), v, &expected))
                    }));
                }
            }
        }
        _ => unreachable!("not a formula check"),
    }
    Ok(rows)
}

fn triple_rows(ctx: &Ctx<'_>) -> Result<Vec<CheckResult>, VerifyError> {
    let id = CheckId::Triples;
    let ks = 2..=ctx.k_max(2, 3).max(2);
    let mut rows = Vec::new();
    for k in ks.clone() {
        for beta in 1..=3u32 {
            for gamma in 1..=3u32 {
                for alpha in beta.max(gamma)..=(beta + gamma).min(6) {
                    if beta == 1 && gamma >= 2 && alpha == gamma + 1 {
                        continue;
                    }
                    let p = params([
                        ("k", k.into()),
                        ("beta", beta.into()),
                        ("gamma", gamma.into()),
                        ("alpha", alpha.into()),
                    ]);
                    rows.push(ctx.single(id, p, || {
                        let (_, g) = realize_triple(&TripleTarget::new(k, beta, gamma, alpha)?)?;
                        let dim = ctx.value(&g, Invariant::Dim, k)?;
                        let gk = ctx.value(&g, Invariant::GammaK, k)?;
                        let grk = ctx.value(&g, Invariant::GammaRk, k)?;
                        let ok = g.is_tree()
                            && (dim, gk, grk) == (beta as usize, gamma as usize, alpha as usize);
                        let v = Values::new()
                            .with("is_tree", g.is_tree() as i64)
                            .with("dim", dim)
                            .with("gamma_k", gk)
                            .with("gamma_rk", grk);
                        let expected = format!(
                            "tree with (dim, gamma_k, gamma_rk) = ({beta}, {gamma}, {alpha})"
                        );
                        Ok(check(ok, &g, Some(k), v, &expected))
                    }));
                }
            }
        }
        let p = params([("k", k.into()), ("scan", "infeasible-targets".into())]);
        rows.push(ctx.single(id, p, || {
            for beta in 1..=3u32 {
                for gamma in 1..=3u32 {
                    for alpha in 1..=6u32 {
                        let in_range = beta.max(gamma) <= alpha && alpha <= beta + gamma;
                        let excluded = beta == 1 && gamma >= 2 && alpha == gamma + 1;
                        let rejected = TripleTarget::new(k, beta, gamma, alpha).is_err();
                        if rejected != (!in_range || excluded) {
                            let v = Values::new()
                                .with("beta", beta)
                                .with("gamma", gamma)
                                .with("alpha", alpha)
                                .with("rejected", rejected as i64);
                            return Ok(v.fail(
                                &Graph::empty(0).unwrap(),
                                Some(k),
                                "rejected exactly outside the range and on (1, g, g + 1), g >= 2",
                            ));
                        }
                    }
                }
            }
            Ok(Verdict::Pass)
        }));
    }
    rows.extend(exhaustive_rows(ctx, id, 2, ks, |g, _, k| {
        let dim = ctx.value(g, Invariant::Dim, k)?;
        if dim != 1 {
            return Ok(Verdict::Pass);
        }
        let gk = ctx.value(g, Invariant::GammaK, k)?;
        let grk = ctx.value(g, Invariant::GammaRk, k)?;
        let bad = gk >= 2 && grk == gk + 1;
        let v = Values::new()
            .with("dim", dim)
            .with("gamma_k", gk)
            .with("gamma_rk", grk);
        Ok(check(
            !bad,
            g,
            Some(k),
            v,
            "no graph realizes (1, g, g + 1) with g >= 2",
        ))
    })?);
    Ok(rows)
}

fn max_order_rows(ctx: &Ctx<'_>) -> Result<Vec<CheckResult>, VerifyError> {
    let id = CheckId::MaxOrder;
    let cases: Vec<(u32, u32)> = if ctx.smoke() {
        vec![(1, 2)]
    } else {
        vec![(1, 2), (2, 2), (1, 3), (2, 3)]
    };
    let mut rows = Vec::new();
    for (k, r) in cases {
        let p = params([
            ("family", "extremal-gr".into()),
            ("k", k.into()),
            ("r", r.into()),
        ]);
        rows.push(ctx.single(id, p, || {
            let e = extremal_gr(k, r, MAX_VERTICES)?;
            let g = &e.graph;
            let n = g.order();
            let predicted = predicted_max_order(k, r).expect("small case");
            let dm = all_pairs_distances(g);
            let connected = dm.is_connected();
            let distances_ok = connected
                && e.vectors
                    .iter()
                    .enumerate()
                    .skip(r as usize)
                    .all(|(q, vec)| {
                        let i = vec
                            .iter()
                            .position(|&c| c >= 1 && c <= k)
                            .expect("vector of some Q_i");
                        dm.get(q, i) == Some(vec[i])
                    });
            let q0_ok = connected
                && is_distance_k_dominating(g, &dm, &e.q0, k)
                && is_resolving(g, &dm, &e.q0)?;
            let grk = if connected {
                ctx.value(g, Invariant::GammaRk, k)?
            } else {
                0
            };
            let solver = Solver::with_distances(g, dm, SolverOptions::with_cap(MAX_VERTICES))?;
            let none_smaller = solver
                .first_feasible(Invariant::GammaRk, k, r as usize - 1)?
                .is_none();
            let ok =
                n as u64 == predicted && distances_ok && q0_ok && grk == r as usize && none_smaller;
            let v = Values::new()
                .with("n", n)
                .with("predicted_order", predicted)
                .with("distances_ok", distances_ok as i64)
                .with("q0_ok", q0_ok as i64)
                .with("gamma_rk", grk)
                .with("feasible_below_r", !none_smaller as i64);
            Ok(check(
                ok,
                g,
                Some(k),
                v,
                format!("order {predicted}, gamma_rk == {r}, Q_0 resolving and dominating")
                    .as_str(),
            ))
        }));
    }
    rows.extend(exhaustive_rows(
        ctx,
        id,
        1,
        1..=ctx.k_max(2, 3),
        |g, n, k| {
            let grk = ctx.value(g, Invariant::GammaRk, k)?;
            let bound = predicted_max_order(k, grk as u32).unwrap_or(u64::MAX);
            let v = Values::new().with("n", n).with("gamma_rk", grk);
            Ok(check(
                n as u64 <= bound,
                g,
                Some(k),
                v,
                format!("n <= {bound}").as_str(),
            ))
        },
    )?);
    Ok(rows)
}

struct NgBounds {
    sum: (usize, usize),
    product: (usize, usize),
    lower_family: Option<Vec<Graph>>,
    upper_family: Option<Vec<Graph>>,
}

fn ng_verdict(g: &Graph, k: u32, a: usize, b: usize, bounds: &NgBounds) -> Verdict {
    let (sum, prod) = (a + b, a * b);
    let in_range = bounds.sum.0 <= sum
        && sum <= bounds.sum.1
        && bounds.product.0 <= prod
        && prod <= bounds.product.1;
    let lower_member = bounds.lower_family.as_ref().map(|f| is_member(g, f));
    let upper_member = bounds.upper_family.as_ref().map(|f| is_member(g, f));
    let lower_ok =
        lower_member.is_none_or(|m| (sum == bounds.sum.0) == m && (prod == bounds.product.0) == m);
    let upper_ok =
        upper_member.is_none_or(|m| (sum == bounds.sum.1) == m && (prod == bounds.product.1) == m);
    let mut v = Values::new()
        .with("n", g.order())
        .with("gamma_rk", a)
        .with("co_gamma_rk", b);
    if let Some(m) = lower_member {
        v = v.with("in_lower_family", m as i64);
    }
    if let Some(m) = upper_member {
        v = v.with("in_upper_family", m as i64);
    }
    let expected = format!(
        "{} <= sum <= {}, {} <= product <= {}, equality exactly on the listed graphs",
        bounds.sum.0, bounds.sum.1, bounds.product.0, bounds.product.1
    );
    check(in_range && lower_ok && upper_ok, g, Some(k), v, &expected)
}

fn ng_rows(ctx: &Ctx<'_>, id: CheckId) -> Result<Vec<CheckResult>, VerifyError> {
    let mut rows = Vec::new();
    let n_top = ctx.exhaustive_n_max();
    match id {
        CheckId::Ng2 | CheckId::NgK => {
            let ks: Vec<u32> = if id == CheckId::Ng2 {
                vec![2]
            } else {
                (3..=ctx.k_max(3, 3).max(3)).collect()
            };
            for n in 2..=n_top {
                let graphs = ctx.exhaustive(n, false)?;
                for &k in &ks {
                    let lower: Vec<Graph> = if k == 2 {
                        let p3 = path(3).unwrap();
                        let k2 = path(2).unwrap();
                        vec![complement(&k2), complement(&p3), k2, p3]
                    } else {
                        vec![path(4).unwrap()]
                    };
                    let bounds = NgBounds {
                        sum: (if k == 2 { 3 } else { 2 }, 2 * n - 1),
                        product: (if k == 2 { 2 } else { 1 }, n * (n - 1)),
                        lower_family: Some(lower.into_iter().filter(|h| h.order() == n).collect()),
                        upper_family: Some(vec![complete(n).unwrap(), empty(n).unwrap()]),
                    };
                    let p = params([
                        ("corpus", "exhaustive-all".into()),
                        ("n", n.into()),
                        ("k", k.into()),
                    ]);
                    rows.push(ctx.row(id, p, &graphs, |g| {
                        let a = ctx.value_ext(g, Invariant::GammaRk, k)?;
                        let b = ctx.value_ext(&complement(g), Invariant::GammaRk, k)?;
                        Ok(ng_verdict(g, k, a, b, &bounds))
                    }));
                }
            }
        }
        CheckId::NgConnected => {
            for n in 4..=n_top {
                let graphs: Vec<Graph> = ctx
                    .exhaustive(n, true)?
                    .into_iter()
                    .filter(|g| complement(g).is_connected())
                    .collect();
                for k in 2..=ctx.k_max(3, 3).max(2) {
                    let p4 = vec![path(4).unwrap()]
                        .into_iter()
                        .filter(|h| h.order() == n)
                        .collect::<Vec<_>>();
                    let bounds = if k == 2 {
                        NgBounds {
                            sum: (4, 2 * n - 4),
                            product: (4, (n - 2) * (n - 2)),
                            lower_family: None,
                            upper_family: Some(p4),
                        }
                    } else {
                        NgBounds {
                            sum: (2, 2 * n - 6),
                            product: (1, (n - 3) * (n - 3)),
                            lower_family: Some(p4),
                            upper_family: Some(ng_upper_family(n)),
                        }
                    };
                    let p = params([
                        ("corpus", "exhaustive-both-connected".into()),
                        ("n", n.into()),
                        ("k", k.into()),
                    ]);
                    rows.push(ctx.row(id, p, &graphs, |g| {
                        let a = ctx.value(g, Invariant::GammaRk, k)?;
                        let b = ctx.value(&complement(g), Invariant::GammaRk, k)?;
                        Ok(ng_verdict(g, k, a, b, &bounds))
                    }));
                }
            }
        }
        _ => unreachable!("not a Nordhaus-Gaddum check"),
    }
    Ok(rows)
}

/// Runs one registered check.
pub fn run_check(
    oracle: &dyn Oracle,
    id: CheckId,
    scope: &Scope,
) -> Result<Vec<CheckResult>, VerifyError> {
    let ctx = Ctx::new(oracle, scope);
    match id {
        CheckId::Sandwich
        | CheckId::DiamCollapse
        | CheckId::RadiusPlus1
        | CheckId::NkUpper
        | CheckId::DiamUpper
        | CheckId::LowerTrio
        | CheckId::LdDominates => bound_rows(&ctx, id),
        CheckId::Lem22 | CheckId::Char1 | CheckId::CharN2 | CheckId::CharN1 => {
            characterization_rows(&ctx, id)
        }
        CheckId::PathFormula | CheckId::CycleFormula | CheckId::CycleResolving => {
            formula_rows(&ctx, id)
        }
        CheckId::Triples => triple_rows(&ctx),
        CheckId::MaxOrder => max_order_rows(&ctx),
        CheckId::Ng2 | CheckId::NgK | CheckId::NgConnected => ng_rows(&ctx, id),
    }
}

/// Runs the given checks (all of them when `ids` is empty) into one report.
pub fn run_all(oracle: &dyn Oracle, ids: &[CheckId], scope: &Scope) -> Result<Report, VerifyError> {
    let ids: &[CheckId] = if ids.is_empty() { &CheckId::ALL } else { ids };
    let mut results = Vec::new();
    for &id in ids {
        results.extend(run_check(oracle, id, scope)?);
    }
    Ok(Report::new(scope.level, scope.seed, results))
}
