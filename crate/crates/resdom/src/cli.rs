//! The `resdom` command line.
//!
//! Exit codes: 0 on success, 1 on a failed verification or a solver domain
//! error, 2 on a usage or parse error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use resdom_core::enumerate::{all_graphs, connected_graphs, ENUMERATION_MAX_ORDER};
use resdom_core::families::{
    generate, predicted_gamma_rk_cycle, predicted_gamma_rk_path, realize_triple, FamilyParams,
    FamilyTag, RawParams, TripleTarget,
};
use resdom_core::solvers::{Invariant, Solver, SolverOptions};
use resdom_core::{FamilyError, Graph};
use serde_json::{json, Value};

use crate::edge_list;
use crate::verify::{self, CheckId, ExactOracle, Level, Scope};

const DEFAULT_CAP: usize = 64;

#[derive(Debug, Parser)]
#[command(
    name = "resdom",
    version,
    about = "Exact resolving and distance-domination invariants of small graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Debug, Args)]
struct Common {
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Seed for random corpora.
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,
    /// Worker threads (0 picks one per core).
    #[arg(long, global = true, default_value_t = 0)]
    parallel: usize,
    /// Largest graph order the solvers accept.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    cap: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    El,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute invariants of a graph given as an edge list.
    Compute(ComputeArgs),
    /// Emit a member of a named family.
    Generate(GenerateArgs),
    /// Run verification checks and write a JSON report.
    Verify(VerifyArgs),
    /// Compare solver values with closed forms along one parameter range.
    Sweep(SweepArgs),
    /// Count or list all labelled graphs of one order.
    Enumerate(EnumerateArgs),
}

#[derive(Debug, Args)]
struct ComputeArgs {
    /// Edge-list file, or `-` for stdin.
    #[arg(long)]
    input: PathBuf,
    #[arg(long, default_value_t = 1)]
    k: u32,
    /// Comma-separated subset of dim, gamma_k, gamma_rk, ld_k.
    #[arg(long, value_delimiter = ',')]
    invariants: Vec<Invariant>,
    /// Treat unreachable pairs as distinct distances on disconnected input.
    #[arg(long)]
    extended: bool,
}

#[derive(Debug, Args)]
struct FamilyArgs {
    #[arg(long)]
    k: Option<u32>,
    #[arg(long)]
    m: Option<u32>,
    #[arg(long)]
    l: Option<u32>,
    #[arg(long)]
    r: Option<u32>,
    #[arg(long)]
    s: Option<u32>,
    #[arg(long)]
    t: Option<u32>,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    gamma: Option<u32>,
    #[arg(long)]
    legs: Option<u32>,
}

impl FamilyArgs {
    fn raw(&self) -> RawParams {
        RawParams {
            k: self.k,
            m: self.m,
            l: self.l,
            r: self.r,
            s: self.s,
            t: self.t,
            n: self.n,
            gamma: self.gamma,
            legs: self.legs,
        }
    }
}

#[derive(Debug, Args)]
struct GenerateArgs {
    #[arg(long, required_unless_present = "realize")]
    family: Option<FamilyTag>,
    #[command(flatten)]
    params: FamilyArgs,
    /// Solve the generated graph and fail unless it matches the family's claim.
    #[arg(long)]
    certify: bool,
    /// Build a tree with prescribed (dim, gamma_k, gamma_rk) = (beta, gamma, alpha).
    #[arg(long, conflicts_with = "family", requires_all = ["beta", "alpha", "k"])]
    realize: bool,
    #[arg(long)]
    beta: Option<u32>,
    #[arg(long)]
    alpha: Option<u32>,
}

#[derive(Debug, Args)]
#[command(group = clap::ArgGroup::new("which").required(true).args(["all", "check"]))]
struct VerifyArgs {
    #[arg(long)]
    all: bool,
    /// Check id, with or without the CHK_ prefix. Repeatable.
    #[arg(long, value_delimiter = ',')]
    check: Vec<String>,
    #[arg(long, default_value = "desk")]
    level: Level,
    #[arg(long)]
    kmax: Option<u32>,
    #[arg(long)]
    nmax: Option<usize>,
    /// Include order 7 in the exhaustive corpora.
    #[arg(long)]
    exhaustive7: bool,
    /// Zero all timings so that reports are byte-identical across runs.
    #[arg(long)]
    deterministic: bool,
}

#[derive(Debug, Args)]
struct SweepArgs {
    #[arg(long)]
    family: FamilyTag,
    #[arg(long)]
    k: Option<String>,
    #[arg(long)]
    m: Option<String>,
    #[arg(long)]
    l: Option<String>,
    #[arg(long)]
    r: Option<String>,
    #[arg(long)]
    s: Option<String>,
    #[arg(long)]
    t: Option<String>,
    #[arg(long)]
    n: Option<String>,
    #[arg(long)]
    gamma: Option<String>,
    #[arg(long)]
    legs: Option<String>,
}

#[derive(Debug, Args)]
struct EnumerateArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    connected: bool,
    /// Emit the graphs, not only their number.
    #[arg(long)]
    list: bool,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Domain(String),
    /// A verification or certification failed; details were already written.
    Unsatisfied,
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Domain(_) | Failure::Unsatisfied => 1,
        }
    }
}

fn family_failure(e: FamilyError) -> Failure {
    match e {
        FamilyError::InvalidParams(_)
        | FamilyError::MissingParam(_)
        | FamilyError::UnknownFamily
        | FamilyError::InfeasibleTriple { .. } => Failure::Usage(e.to_string()),
        FamilyError::NotApplicable(_) | FamilyError::TooLarge { .. } => {
            Failure::Domain(e.to_string())
        }
    }
}

/// Parses `args` (including the program name), runs the command and returns
/// the process exit code.
pub fn run<I, T>(args: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code().clamp(0, 2) as u8;
        }
    };
    match dispatch(cli) {
        Ok(()) => 0,
        Err(f) => {
            match &f {
                Failure::Usage(m) | Failure::Domain(m) => eprintln!("error: {m}"),
                Failure::Unsatisfied => {}
            }
            f.code()
        }
    }
}

fn dispatch(cli: Cli) -> Result<(), Failure> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.common.parallel)
        .build()
        .map_err(|e| Failure::Domain(e.to_string()))?;
    let common = &cli.common;
    pool.install(|| match &cli.command {
        Command::Compute(a) => compute(common, a),
        Command::Generate(a) => generate_cmd(common, a),
        Command::Verify(a) => verify_cmd(common, a),
        Command::Sweep(a) => sweep(common, a),
        Command::Enumerate(a) => enumerate(common, a),
    })
}

fn emit(common: &Common, text: &str) -> Result<(), Failure> {
    match &common.out {
        Some(path) => fs::write(path, text)
            .map_err(|e| Failure::Domain(format!("cannot write {}: {e}", path.display()))),
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Domain(e.to_string())),
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

fn read_graph(path: &PathBuf) -> Result<Graph, Failure> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Usage(format!("cannot read stdin: {e}")))?;
        s
    } else {
        fs::read_to_string(path)
            .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?
    };
    edge_list::parse(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn compute(common: &Common, a: &ComputeArgs) -> Result<(), Failure> {
    if a.k == 0 {
        return Err(Failure::Usage("--k must be at least 1".into()));
    }
    let g = read_graph(&a.input)?;
    let invariants = if a.invariants.is_empty() {
        Invariant::ALL.to_vec()
    } else {
        a.invariants.clone()
    };
    let options = SolverOptions {
        cap: common.cap,
        allow_disconnected: a.extended,
        ..Default::default()
    };
    let solver = Solver::new(&g, options).map_err(|e| Failure::Domain(e.to_string()))?;
    let mut results = Vec::new();
    for inv in invariants {
        let w = solver
            .solve(inv, a.k)
            .map_err(|e| Failure::Domain(format!("{inv}: {e}")))?;
        results.push(w);
    }
    let text = match common.format.unwrap_or(Format::Json) {
        Format::Json => pretty(&json!({
            "n": g.order(),
            "m": g.edge_count(),
            "k": a.k,
            "invariants": results.iter().map(|w| json!({
                "invariant": w.name.name(),
                "value": w.value,
                "witness": w.witness.as_slice(),
            })).collect::<Vec<_>>(),
        })),
        Format::Csv => {
            let mut s = String::from("invariant,k,value,witness\n");
            for w in &results {
                let witness: Vec<String> = w.witness.iter().map(|v| v.to_string()).collect();
                let _ = writeln!(s, "{},{},{},{}", w.name, a.k, w.value, witness.join(" "));
            }
            s
        }
        Format::El => return Err(Failure::Usage("compute writes json or csv".into())),
    };
    emit(common, &text)
}

fn generate_cmd(common: &Common, a: &GenerateArgs) -> Result<(), Failure> {
    let (params, g) = if a.realize {
        let (k, beta, alpha) = (a.params.k.unwrap(), a.beta.unwrap(), a.alpha.unwrap());
        let gamma = a
            .params
            .gamma
            .ok_or_else(|| Failure::Usage("--realize needs --gamma".into()))?;
        let target = TripleTarget::new(k, beta, gamma, alpha).map_err(family_failure)?;
        realize_triple(&target).map_err(family_failure)?
    } else {
        let tag = a.family.expect("required unless --realize");
        let params = FamilyParams::from_raw(tag, &a.params.raw()).map_err(family_failure)?;
        let g = generate(&params).map_err(family_failure)?;
        (params, g)
    };

    if a.certify {
        certify(common, &params, &g, a.params.k)?;
    }

    let text = match common.format.unwrap_or(Format::El) {
        Format::El => edge_list::to_string(&g),
        Format::Json => {
            let named: serde_json::Map<String, Value> = params
                .named()
                .into_iter()
                .map(|(k, v)| (k.to_owned(), json!(v)))
                .collect();
            pretty(&json!({
                "family": params.tag().name(),
                "params": named,
                "n": g.order(),
                "edges": g.edges(),
                "claim": params.claim().map(|c| json!({
                    "dim": c.dim,
                    "gamma_k": c.gamma_k,
                    "gamma_rk": c.gamma_rk,
                })),
            }))
        }
        Format::Csv => return Err(Failure::Usage("generate writes el or json".into())),
    };
    emit(common, &text)
}

/// Solves `g` and compares with the family's claim, or with the path and
/// cycle closed forms when `--k` is given for those.
fn certify(
    common: &Common,
    params: &FamilyParams,
    g: &Graph,
    k_flag: Option<u32>,
) -> Result<(), Failure> {
    let mut expected: Vec<(Invariant, usize)> = Vec::new();
    let k = params.k().or(k_flag);
    if let Some(c) = params.claim() {
        expected.extend(c.dim.map(|v| (Invariant::Dim, v as usize)));
        expected.extend(c.gamma_k.map(|v| (Invariant::GammaK, v as usize)));
        expected.push((Invariant::GammaRk, c.gamma_rk as usize));
    } else if let (Some(k), FamilyParams::Path { n }) = (k, params) {
        expected.push((Invariant::GammaRk, predicted_gamma_rk_path(k, *n) as usize));
    } else if let (Some(k), FamilyParams::Cycle { n }) = (k, params) {
        expected.push((Invariant::GammaRk, predicted_gamma_rk_cycle(k, *n) as usize));
    }
    if expected.is_empty() {
        eprintln!("certify: {} carries no claim to check", params.tag());
        return Ok(());
    }
    let k = k.ok_or_else(|| Failure::Usage("--certify needs --k for this family".into()))?;
    let cap = if params.tag() == FamilyTag::ExtremalGr {
        common.cap.max(resdom_core::MAX_VERTICES)
    } else {
        common.cap
    };
    let solver =
        Solver::new(g, SolverOptions::with_cap(cap)).map_err(|e| Failure::Domain(e.to_string()))?;
    let mut ok = true;
    let mut line = String::from("certify:");
    for (inv, want) in expected {
        let got = solver
            .solve(inv, k)
            .map_err(|e| Failure::Domain(e.to_string()))?
            .value;
        let _ = write!(line, " {inv}={got}");
        if got != want {
            let _ = write!(line, " (expected {want})");
            ok = false;
        }
    }
    eprintln!("{line}");
    if ok {
        Ok(())
    } else {
        Err(Failure::Unsatisfied)
    }
}

fn verify_cmd(common: &Common, a: &VerifyArgs) -> Result<(), Failure> {
    let ids: Vec<CheckId> = if a.all {
        Vec::new()
    } else {
        a.check
            .iter()
            .map(|s| {
                s.parse()
                    .map_err(|e: verify::VerifyError| Failure::Usage(e.to_string()))
            })
            .collect::<Result<_, _>>()?
    };
    let scope = Scope {
        seed: common.seed,
        k_max: a.kmax,
        n_max: a.nmax,
        exhaustive_seven: a.exhaustive7,
        deterministic: a.deterministic,
        ..Scope::new(a.level)
    };
    let report =
        verify::run_all(&ExactOracle, &ids, &scope).map_err(|e| Failure::Domain(e.to_string()))?;
    if matches!(common.format, Some(Format::Csv | Format::El)) {
        return Err(Failure::Usage("verify writes json".into()));
    }
    emit(common, &report.to_json())?;
    for f in report.failures() {
        let params: Vec<String> = f.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        eprintln!("FAIL {} {}", f.check_id, params.join(" "));
    }
    let s = &report.summary;
    eprintln!("{} pass, {} fail, {} skipped", s.pass, s.fail, s.skipped);
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Unsatisfied)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Span {
    Fixed(u32),
    Range(u32, u32),
}

fn span(name: &str, text: &str) -> Result<Span, Failure> {
    let num = |t: &str| {
        t.trim().parse::<u32>().map_err(|_| {
            Failure::Usage(format!(
                "--{name}: expected an integer or a..b, got {text:?}"
            ))
        })
    };
    match text.split_once("..") {
        Some((lo, hi)) => {
            let hi = hi.strip_prefix('=').unwrap_or(hi);
            let (lo, hi) = (num(lo)?, num(hi)?);
            if lo > hi {
                return Err(Failure::Usage(format!("--{name}: empty range {text}")));
            }
            Ok(Span::Range(lo, hi))
        }
        None => Ok(Span::Fixed(num(text)?)),
    }
}

fn sweep(common: &Common, a: &SweepArgs) -> Result<(), Failure> {
    let given = [
        ("k", &a.k),
        ("m", &a.m),
        ("l", &a.l),
        ("r", &a.r),
        ("s", &a.s),
        ("t", &a.t),
        ("n", &a.n),
        ("gamma", &a.gamma),
        ("legs", &a.legs),
    ];
    let mut fixed = RawParams::default();
    let mut swept: Option<(&str, u32, u32)> = None;
    for (name, text) in given {
        let Some(text) = text else { continue };
        match span(name, text)? {
            Span::Fixed(v) => set_raw(&mut fixed, name, v),
            Span::Range(lo, hi) => {
                if swept.is_some() {
                    return Err(Failure::Usage("sweep takes exactly one a..b range".into()));
                }
                swept = Some((name, lo, hi));
            }
        }
    }
    let (var, lo, hi) =
        swept.ok_or_else(|| Failure::Usage("sweep needs one parameter given as a..b".into()))?;

    // build every row before solving, so that parameter errors exit 2 up front
    let mut members = Vec::new();
    for v in lo..=hi {
        let mut raw = fixed.clone();
        set_raw(&mut raw, var, v);
        let params = FamilyParams::from_raw(a.family, &raw).map_err(family_failure)?;
        let k = params
            .k()
            .or(raw.k)
            .ok_or_else(|| Failure::Usage("sweep needs --k".into()))?;
        if k == 0 {
            return Err(Failure::Usage("k must be at least 1".into()));
        }
        members.push((params, k));
    }

    let mut rows = Vec::new();
    let mut all_match = true;
    for (params, k) in members {
        let g = generate(&params).map_err(family_failure)?;
        let predicted = match params {
            FamilyParams::Path { n } => Some(predicted_gamma_rk_path(k, n)),
            FamilyParams::Cycle { n } => Some(predicted_gamma_rk_cycle(k, n)),
            _ => params.claim().map(|c| c.gamma_rk),
        };
        let solver = Solver::new(&g, SolverOptions::with_cap(common.cap))
            .map_err(|e| Failure::Domain(e.to_string()))?;
        let value = solver
            .solve(Invariant::GammaRk, k)
            .map_err(|e| Failure::Domain(e.to_string()))?
            .value as u32;
        let matched = predicted.map(|p| p == value);
        all_match &= matched.unwrap_or(true);
        let named = params.named();
        let get = |key: &str| named.iter().find(|(n, _)| *n == key).map(|(_, v)| *v);
        rows.push(SweepRow {
            family: params.tag().name(),
            k,
            n: g.order(),
            m: get("m"),
            l: get("l"),
            r: get("r"),
            solver: value,
            predicted,
            matched,
        });
    }

    let text = match common.format.unwrap_or(Format::Csv) {
        Format::Csv => {
            let opt = |v: Option<u32>| v.map(|v| v.to_string()).unwrap_or_default();
            let mut s = String::from("family,k,n,m,l,r,solver,predicted,match\n");
            for r in &rows {
                let _ = writeln!(
                    s,
                    "{},{},{},{},{},{},{},{},{}",
                    r.family,
                    r.k,
                    r.n,
                    opt(r.m),
                    opt(r.l),
                    opt(r.r),
                    r.solver,
                    opt(r.predicted),
                    r.matched.map(|b| b.to_string()).unwrap_or_default()
                );
            }
            s
        }
        Format::Json => pretty(&Value::Array(
            rows.iter()
                .map(|r| {
                    json!({
                        "family": r.family, "k": r.k, "n": r.n, "m": r.m, "l": r.l, "r": r.r,
                        "solver": r.solver, "predicted": r.predicted, "match": r.matched,
                    })
                })
                .collect(),
        )),
        Format::El => return Err(Failure::Usage("sweep writes csv or json".into())),
    };
    emit(common, &text)?;
    if all_match {
        Ok(())
    } else {
        Err(Failure::Unsatisfied)
    }
}

struct SweepRow {
    family: &'static str,
    k: u32,
    n: usize,
    m: Option<u32>,
    l: Option<u32>,
    r: Option<u32>,
    solver: u32,
    predicted: Option<u32>,
    matched: Option<bool>,
}

fn set_raw(raw: &mut RawParams, name: &str, v: u32) {
    let slot = match name {
        "k" => &mut raw.k,
        "m" => &mut raw.m,
        "l" => &mut raw.l,
        "r" => &mut raw.r,
        "s" => &mut raw.s,
        "t" => &mut raw.t,
        "n" => &mut raw.n,
        "gamma" => &mut raw.gamma,
        "legs" => &mut raw.legs,
        _ => unreachable!("fixed parameter names"),
    };
    *slot = Some(v);
}

fn enumerate(common: &Common, a: &EnumerateArgs) -> Result<(), Failure> {
    if a.n == 0 || a.n > ENUMERATION_MAX_ORDER {
        return Err(Failure::Usage(format!(
            "--n must be in 1..={ENUMERATION_MAX_ORDER}"
        )));
    }
    let graphs: Box<dyn Iterator<Item = Graph>> = if a.connected {
        Box::new(connected_graphs(a.n).map_err(|e| Failure::Usage(e.to_string()))?)
    } else {
        Box::new(all_graphs(a.n).map_err(|e| Failure::Usage(e.to_string()))?)
    };
    let text = match common.format.unwrap_or(Format::Json) {
        Format::Json if a.list => {
            let graphs: Vec<Value> = graphs.map(|g| json!(g.edges())).collect();
            pretty(&json!({
                "n": a.n,
                "connected": a.connected,
                "count": graphs.len(),
                "graphs": graphs,
            }))
        }
        Format::Json => pretty(&json!({
            "n": a.n,
            "connected": a.connected,
            "count": graphs.count(),
        })),
        Format::El => {
            let mut s = String::new();
            for (i, g) in graphs.enumerate() {
                let _ = writeln!(s, "# graph {i}");
                s.push_str(&edge_list::to_string(&g));
            }
            s
        }
        Format::Csv => return Err(Failure::Usage("enumerate writes json or el".into())),
    };
    emit(common, &text)
}
