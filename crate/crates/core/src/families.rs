//! Parameterised graph families, closed-form predictors, the tree metric
//! dimension formula and the triple realizer.
//!
//! The tree families are built as a chain of "units" whose centres are
//! consecutive vertices of a path. Every unit hangs at least one leg of length
//! `k` off its centre, so each unit needs its own dominator and units never
//! share dominators or resolvers. The unit kinds are:
//!
//! | unit   | shape at the centre                  | dim | γ_k | γ^r_k |
//! |--------|--------------------------------------|-----|-----|-------|
//! | V      | one leg of length `k` plus one leaf  | 1   | 1   | 1     |
//! | W      | two legs of length `k`               | 1   | 1   | 2     |
//! | D      | one leg of length `k` (chain interior only) | 0 | 1 | 1   |
//! | hub(l) | `l` legs of length `k` plus one leaf | l   | 1   | l     |
//! | S(r)   | `r` legs of length `k`               | r-1 | 1   | r     |
//!
//! and each family is a fixed sequence of units; see [`FamilyParams`].

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::FamilyError;
use crate::generators;
use crate::graph::Graph;
use crate::mask::MAX_VERTICES;
use crate::solvers::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyTag {
    TGamma,
    T1,
    T2,
    T3,
    T4,
    T5,
    Spider,
    ExtremalGr,
    Path,
    Cycle,
    Complete,
    CompleteBipartite,
    Star,
    Bull,
}

impl FamilyTag {
    pub const ALL: [FamilyTag; 14] = [
        FamilyTag::TGamma,
        FamilyTag::T1,
        FamilyTag::T2,
        FamilyTag::T3,
        FamilyTag::T4,
        FamilyTag::T5,
        FamilyTag::Spider,
        FamilyTag::ExtremalGr,
        FamilyTag::Path,
        FamilyTag::Cycle,
        FamilyTag::Complete,
        FamilyTag::CompleteBipartite,
        FamilyTag::Star,
        FamilyTag::Bull,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyTag::TGamma => "t-gamma",
            FamilyTag::T1 => "t1",
            FamilyTag::T2 => "t2",
            FamilyTag::T3 => "t3",
            FamilyTag::T4 => "t4",
            FamilyTag::T5 => "t5",
            FamilyTag::Spider => "spider",
            FamilyTag::ExtremalGr => "extremal-gr",
            FamilyTag::Path => "path",
            FamilyTag::Cycle => "cycle",
            FamilyTag::Complete => "complete",
            FamilyTag::CompleteBipartite => "complete-bipartite",
            FamilyTag::Star => "star",
            FamilyTag::Bull => "bull",
        }
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyTag {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, FamilyError> {
        let key: alloc::string::String = s
            .chars()
            .filter(|c| !matches!(c, '-' | '_'))
            .map(|c| c.to_ascii_lowercase())
            .collect();
        let tag = match key.as_str() {
            "tgamma" => FamilyTag::TGamma,
            "t1" => FamilyTag::T1,
            "t2" => FamilyTag::T2,
            "t3" => FamilyTag::T3,
            "t4" => FamilyTag::T4,
            "t5" => FamilyTag::T5,
            "spider" => FamilyTag::Spider,
            "extremalgr" | "extremal" => FamilyTag::ExtremalGr,
            "path" => FamilyTag::Path,
            "cycle" => FamilyTag::Cycle,
            "complete" => FamilyTag::Complete,
            "completebipartite" | "bipartite" => FamilyTag::CompleteBipartite,
            "star" => FamilyTag::Star,
            "bull" => FamilyTag::Bull,
            _ => return Err(FamilyError::UnknownFamily),
        };
        Ok(tag)
    }
}

/// Unvalidated parameter bag, as collected from a command line.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RawParams {
    pub k: Option<u32>,
    pub m: Option<u32>,
    pub l: Option<u32>,
    pub r: Option<u32>,
    pub s: Option<u32>,
    pub t: Option<u32>,
    pub n: Option<u32>,
    pub gamma: Option<u32>,
    pub legs: Option<u32>,
}

/// Validated parameters of one family member.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyParams {
    /// Spine path on `gamma` vertices with a pendant leg of length `k` at every
    /// spine vertex; order `gamma * (k + 1)`.
    TGamma {
        k: u32,
        gamma: u32,
    },
    /// Units `V^m W^l`.
    T1 {
        k: u32,
        m: u32,
        l: u32,
    },
    /// Units `V^m hub(l)`.
    T2 {
        k: u32,
        m: u32,
        l: u32,
    },
    /// Units `V^m D^l V`.
    T3 {
        k: u32,
        m: u32,
        l: u32,
    },
    /// Units `V^m W^l S(r)`.
    T4 {
        k: u32,
        m: u32,
        l: u32,
        r: u32,
    },
    /// Units `V^m W^l D^(r-1) W`.
    T5 {
        k: u32,
        m: u32,
        l: u32,
        r: u32,
    },
    /// Centre with `legs` legs of length `k`.
    Spider {
        legs: u32,
        k: u32,
    },
    ExtremalGr {
        k: u32,
        r: u32,
    },
    Path {
        n: u32,
    },
    Cycle {
        n: u32,
    },
    Complete {
        n: u32,
    },
    CompleteBipartite {
        s: u32,
        t: u32,
    },
    Star {
        n: u32,
    },
    Bull,
}

fn need(v: Option<u32>, name: &'static str) -> Result<u32, FamilyError> {
    v.ok_or(FamilyError::MissingParam(name))
}

fn ensure(cond: bool, why: &'static str) -> Result<(), FamilyError> {
    if cond {
        Ok(())
    } else {
        Err(FamilyError::InvalidParams(why))
    }
}

impl FamilyParams {
    pub fn from_raw(tag: FamilyTag, raw: &RawParams) -> Result<Self, FamilyError> {
        let k = || need(raw.k, "k");
        let m = || need(raw.m, "m");
        let l = || need(raw.l, "l");
        let r = || need(raw.r, "r");
        let n = || need(raw.n, "n");
        let p = match tag {
            FamilyTag::TGamma => FamilyParams::TGamma {
                k: k()?,
                gamma: need(raw.gamma, "gamma")?,
            },
            FamilyTag::T1 => FamilyParams::T1 {
                k: k()?,
                m: m()?,
                l: l()?,
            },
            FamilyTag::T2 => FamilyParams::T2 {
                k: k()?,
                m: m()?,
                l: l()?,
            },
            FamilyTag::T3 => FamilyParams::T3 {
                k: k()?,
                m: m()?,
                l: l()?,
            },
            FamilyTag::T4 => FamilyParams::T4 {
                k: k()?,
                m: m()?,
                l: l()?,
                r: r()?,
            },
            FamilyTag::T5 => FamilyParams::T5 {
                k: k()?,
                m: m()?,
                l: l()?,
                r: r()?,
            },
            FamilyTag::Spider => FamilyParams::Spider {
                legs: need(raw.legs, "legs")?,
                k: k()?,
            },
            FamilyTag::ExtremalGr => FamilyParams::ExtremalGr { k: k()?, r: r()? },
            FamilyTag::Path => FamilyParams::Path { n: n()? },
            FamilyTag::Cycle => FamilyParams::Cycle { n: n()? },
            FamilyTag::Complete => FamilyParams::Complete { n: n()? },
            FamilyTag::CompleteBipartite => FamilyParams::CompleteBipartite {
                s: need(raw.s, "s")?,
                t: need(raw.t, "t")?,
            },
            FamilyTag::Star => FamilyParams::Star { n: n()? },
            FamilyTag::Bull => FamilyParams::Bull,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<(), FamilyError> {
        match *self {
            FamilyParams::TGamma { k, gamma } => {
                ensure(k >= 1, "t-gamma needs k >= 1")?;
                ensure(gamma >= 1, "t-gamma needs gamma >= 1")
            }
            FamilyParams::T1 { k, l, .. } => {
                ensure(k >= 2, "t1 needs k >= 2")?;
                ensure(l >= 1, "t1 needs m >= 0, l >= 1")
            }
            FamilyParams::T2 { k, m, l } => {
                ensure(k >= 2, "t2 needs k >= 2")?;
                ensure(m >= 1 && l >= 1, "t2 needs m >= 1, l >= 1")
            }
            FamilyParams::T3 { k, m, l } => {
                ensure(k >= 2, "t3 needs k >= 2")?;
                ensure(m >= 1 && l >= 1, "t3 needs m >= 1, l >= 1")
            }
            FamilyParams::T4 { k, m, l, r } => {
                ensure(k >= 2, "t4 needs k >= 2")?;
                ensure(r >= 3, "t4 needs r >= 3")?;
                ensure((m, l) != (0, 0), "t4 needs (m, l) != (0, 0)")
            }
            FamilyParams::T5 { k, m, l, r } => {
                ensure(k >= 2, "t5 needs k >= 2")?;
                ensure(r >= 2, "t5 needs r >= 2")?;
                ensure((m, l) != (0, 0), "t5 needs (m, l) != (0, 0)")
            }
            FamilyParams::Spider { legs, k } => {
                ensure(legs >= 3, "spider needs legs >= 3")?;
                ensure(k >= 1, "spider needs k >= 1")
            }
            FamilyParams::ExtremalGr { k, r } => {
                ensure(k >= 1, "extremal-gr needs k >= 1")?;
                ensure(r >= 2, "extremal-gr needs r >= 2")
            }
            FamilyParams::Path { n } | FamilyParams::Complete { n } => {
                ensure(n >= 1, "needs n >= 1")
            }
            FamilyParams::Cycle { n } => ensure(n >= 3, "cycle needs n >= 3"),
            FamilyParams::CompleteBipartite { s, t } => {
                ensure(s >= 1 && t >= 1, "complete-bipartite needs s, t >= 1")
            }
            FamilyParams::Star { n } => ensure(n >= 2, "star needs n >= 2"),
            FamilyParams::Bull => Ok(()),
        }
    }

    pub fn tag(&self) -> FamilyTag {
        match self {
            FamilyParams::TGamma { .. } => FamilyTag::TGamma,
            FamilyParams::T1 { .. } => FamilyTag::T1,
            FamilyParams::T2 { .. } => FamilyTag::T2,
            FamilyParams::T3 { .. } => FamilyTag::T3,
            FamilyParams::T4 { .. } => FamilyTag::T4,
            FamilyParams::T5 { .. } => FamilyTag::T5,
            FamilyParams::Spider { .. } => FamilyTag::Spider,
            FamilyParams::ExtremalGr { .. } => FamilyTag::ExtremalGr,
            FamilyParams::Path { .. } => FamilyTag::Path,
            FamilyParams::Cycle { .. } => FamilyTag::Cycle,
            FamilyParams::Complete { .. } => FamilyTag::Complete,
            FamilyParams::CompleteBipartite { .. } => FamilyTag::CompleteBipartite,
            FamilyParams::Star { .. } => FamilyTag::Star,
            FamilyParams::Bull => FamilyTag::Bull,
        }
    }

    /// The `k` the family's claims refer to, if any.
    pub fn k(&self) -> Option<u32> {
        match *self {
            FamilyParams::TGamma { k, .. }
            | FamilyParams::T1 { k, .. }
            | FamilyParams::T2 { k, .. }
            | FamilyParams::T3 { k, .. }
            | FamilyParams::T4 { k, .. }
            | FamilyParams::T5 { k, .. }
            | FamilyParams::Spider { k, .. }
            | FamilyParams::ExtremalGr { k, .. } => Some(k),
            _ => None,
        }
    }

    /// Named parameters, for reports.
    pub fn named(&self) -> Vec<(&'static str, u32)> {
        match *self {
            FamilyParams::TGamma { k, gamma } => vec![("k", k), ("gamma", gamma)],
            FamilyParams::T1 { k, m, l }
            | FamilyParams::T2 { k, m, l }
            | FamilyParams::T3 { k, m, l } => vec![("k", k), ("m", m), ("l", l)],
            FamilyParams::T4 { k, m, l, r } | FamilyParams::T5 { k, m, l, r } => {
                vec![("k", k), ("m", m), ("l", l), ("r", r)]
            }
            FamilyParams::Spider { legs, k } => vec![("legs", legs), ("k", k)],
            FamilyParams::ExtremalGr { k, r } => vec![("k", k), ("r", r)],
            FamilyParams::Path { n }
            | FamilyParams::Cycle { n }
            | FamilyParams::Complete { n }
            | FamilyParams::Star { n } => vec![("n", n)],
            FamilyParams::CompleteBipartite { s, t } => vec![("s", s), ("t", t)],
            FamilyParams::Bull => Vec::new(),
        }
    }

    /// The invariant values the family is constructed to have, at its own `k`.
    pub fn claim(&self) -> Option<Claim> {
        let c = |dim, gamma_k, gamma_rk| {
            Some(Claim {
                dim: Some(dim),
                gamma_k: Some(gamma_k),
                gamma_rk,
            })
        };
        match *self {
            FamilyParams::TGamma { k, gamma } => Some(Claim {
                dim: None,
                gamma_k: Some(gamma),
                gamma_rk: gamma * (k + 1) - k * gamma,
            }),
            FamilyParams::T1 { m, l, .. } => c(m + l, m + l, m + 2 * l),
            FamilyParams::T2 { m, l, .. } => c(m + l, m + 1, m + l),
            FamilyParams::T3 { m, l, .. } => c(m + 1, m + l + 1, m + l + 1),
            FamilyParams::T4 { m, l, r, .. } => c(m + l + r - 1, m + l + 1, m + 2 * l + r),
            FamilyParams::T5 { m, l, r, .. } => c(m + l + 1, m + l + r, m + 2 * l + r + 1),
            FamilyParams::Spider { legs, .. } => c(legs - 1, 1, legs),
            FamilyParams::ExtremalGr { r, .. } => Some(Claim {
                dim: None,
                gamma_k: None,
                gamma_rk: r,
            }),
            _ => None,
        }
    }
}

/// Claimed invariant values of a family member at the family's own `k`.
/// `None` marks a value the construction makes no claim about.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Claim {
    pub dim: Option<u32>,
    pub gamma_k: Option<u32>,
    pub gamma_rk: u32,
}

struct TreeBuilder {
    edges: Vec<(usize, usize)>,
    n: usize,
}

impl TreeBuilder {
    fn new() -> Self {
        TreeBuilder {
            edges: Vec::new(),
            n: 0,
        }
    }

    fn vertex(&mut self) -> usize {
        self.n += 1;
        self.n - 1
    }

    /// Hangs a path of `len` new vertices off `from`; returns the far end.
    fn leg(&mut self, from: usize, len: u32) -> usize {
        let mut prev = from;
        for _ in 0..len {
            let v = self.vertex();
            self.edges.push((prev, v));
            prev = v;
        }
        prev
    }

    fn build(self) -> Result<Graph, FamilyError> {
        if self.n > MAX_VERTICES {
            return Err(FamilyError::TooLarge {
                n: self.n,
                cap: MAX_VERTICES,
            });
        }
        Ok(Graph::from_edges(self.n, self.edges).expect("tree builder emits simple edges"))
    }
}

#[derive(Clone, Copy)]
enum Unit {
    /// one leg of length k and one leaf
    V,
    /// two legs of length k
    W,
    /// one leg of length k
    D,
    /// `l` legs of length k and one leaf
    Hub(u32),
    /// `r` legs of length k
    Spider(u32),
}

fn unit_chain(k: u32, units: &[Unit]) -> Result<Graph, FamilyError> {
    // bail out before allocating absurd chains
    let approx: u64 = units
        .iter()
        .map(|u| {
            let legs = match *u {
                Unit::V | Unit::D => 1,
                Unit::W => 2,
                Unit::Hub(l) => l as u64,
                Unit::Spider(r) => r as u64,
            };
            1 + legs * k as u64 + 1
        })
        .sum();
    if approx > 4 * MAX_VERTICES as u64 {
        return Err(FamilyError::TooLarge {
            n: approx as usize,
            cap: MAX_VERTICES,
        });
    }
    let mut t = TreeBuilder::new();
    let mut prev: Option<usize> = None;
    for unit in units {
        let c = t.vertex();
        if let Some(p) = prev {
            t.edges.push((p, c));
        }
        match *unit {
            Unit::V => {
                t.leg(c, k);
                t.leg(c, 1);
            }
            Unit::W => {
                t.leg(c, k);
                t.leg(c, k);
            }
            Unit::D => {
                t.leg(c, k);
            }
            Unit::Hub(l) => {
                for _ in 0..l {
                    t.leg(c, k);
                }
                t.leg(c, 1);
            }
            Unit::Spider(r) => {
                for _ in 0..r {
                    t.leg(c, k);
                }
            }
        }
        prev = Some(c);
    }
    t.build()
}

fn repeat(units: &mut Vec<Unit>, unit: Unit, times: u32) {
    units.extend(core::iter::repeat_n(unit, times as usize));
}

/// Builds the family member described by `p`.
pub fn generate(p: &FamilyParams) -> Result<Graph, FamilyError> {
    p.validate()?;
    let usize_of = |x: u32| x as usize;
    match *p {
        FamilyParams::TGamma { k, gamma } => {
            let mut t = TreeBuilder::new();
            let spine: Vec<usize> = (0..gamma).map(|_| t.vertex()).collect();
            for w in spine.windows(2) {
                t.edges.push((w[0], w[1]));
            }
            for &s in &spine {
                t.leg(s, k);
            }
            t.build()
        }
        FamilyParams::T1 { k, m, l } => {
            let mut u = Vec::new();
            repeat(&mut u, Unit::V, m);
            repeat(&mut u, Unit::W, l);
            unit_chain(k, &u)
        }
        FamilyParams::T2 { k, m, l } => {
            let mut u = Vec::new();
            repeat(&mut u, Unit::V, m);
            u.push(Unit::Hub(l));
            unit_chain(k, &u)
        }
        FamilyParams::T3 { k, m, l } => {
            let mut u = Vec::new();
            repeat(&mut u, Unit::V, m);
            repeat(&mut u, Unit::D, l);
            u.push(Unit::V);
            unit_chain(k, &u)
        }
        FamilyParams::T4 { k, m, l, r } => {
            let mut u = Vec::new();
            repeat(&mut u, Unit::V, m);
            repeat(&mut u, Unit::W, l);
            u.push(Unit::Spider(r));
            unit_chain(k, &u)
        }
        FamilyParams::T5 { k, m, l, r } => {
            let mut u = Vec::new();
            repeat(&mut u, Unit::V, m);
            repeat(&mut u, Unit::W, l);
            repeat(&mut u, Unit::D, r - 1);
            u.push(Unit::W);
            unit_chain(k, &u)
        }
        FamilyParams::Spider { legs, k } => unit_chain(k, &[Unit::Spider(legs)]),
        FamilyParams::ExtremalGr { k, r } => extremal_gr(k, r, MAX_VERTICES).map(|e| e.graph),
        FamilyParams::Path { n } => generators::path(usize_of(n)),
        FamilyParams::Cycle { n } => generators::cycle(usize_of(n)),
        FamilyParams::Complete { n } => generators::complete(usize_of(n)),
        FamilyParams::CompleteBipartite { s, t } => {
            generators::complete_bipartite(usize_of(s), usize_of(t))
        }
        FamilyParams::Star { n } => generators::star(usize_of(n)),
        FamilyParams::Bull => Ok(generators::bull()),
    }
}

/// Closed form for the distance k-resolving domination number of `P_n`.
pub fn predicted_gamma_rk_path(k: u32, n: u32) -> u32 {
    debug_assert!(k >= 1 && n >= 2);
    if k >= n - 1 {
        1
    } else if n / 2 <= k {
        2
    } else {
        n.div_ceil(2 * k + 1)
    }
}

/// Closed form for the distance k-resolving domination number of `C_n`.
pub fn predicted_gamma_rk_cycle(k: u32, n: u32) -> u32 {
    debug_assert!(k >= 1 && n >= 3);
    if n <= 4 * k + 1 {
        2
    } else if n == 4 * k + 2 {
        3
    } else {
        n.div_ceil(2 * k + 1)
    }
}

/// Largest order of a connected graph with distance k-resolving domination
/// number `grk`: `grk + grk * sum_{p=1..k} (2p+1)^(grk-1)`.
/// `None` when the value does not fit in a `u64`.
pub fn predicted_max_order(k: u32, grk: u32) -> Option<u64> {
    let g = grk as u64;
    let mut sum: u64 = 0;
    for p in 1..=k as u64 {
        let term = (2 * p + 1).checked_pow(grk.checked_sub(1)?)?;
        sum = sum.checked_add(term)?;
    }
    g.checked_mul(sum)?.checked_add(g)
}

/// `dim(T) = L(T) - EX(T)` for a tree that is not a path: leaves minus
/// exterior major vertices (degree >= 3 with at least one terminal leaf).
pub fn tree_metric_dimension_formula(t: &Graph) -> Result<usize, FamilyError> {
    if !t.is_tree() {
        return Err(FamilyError::NotApplicable("graph is not a tree"));
    }
    if t.is_path() {
        return Err(FamilyError::NotApplicable("tree is a path"));
    }
    let n = t.order();
    let mut exterior = vec![false; n];
    let mut leaves = 0;
    for leaf in (0..n).filter(|&v| t.degree(v) == 1) {
        leaves += 1;
        // walk inward along degree-2 vertices to the nearest major vertex
        let mut prev = leaf;
        let mut cur = t
            .neighbors(leaf)
            .iter()
            .next()
            .expect("leaf has a neighbour");
        while t.degree(cur) == 2 {
            let next = t
                .neighbors(cur)
                .iter()
                .find(|&w| w != prev)
                .expect("degree-2 vertex has another neighbour");
            prev = cur;
            cur = next;
        }
        debug_assert!(
            t.degree(cur) >= 3,
            "non-path tree: walk ends at a major vertex"
        );
        exterior[cur] = true;
    }
    Ok(leaves - exterior.iter().filter(|&&e| e).count())
}

/// Target `(dim, γ_k, γ^r_k) = (beta, gamma, alpha)` for [`realize_triple`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TripleTarget {
    pub k: u32,
    pub beta: u32,
    pub gamma: u32,
    pub alpha: u32,
}

impl TripleTarget {
    /// Checks `k >= 2`, positivity, `max(beta, gamma) <= alpha <= beta + gamma`
    /// and excludes `(1, gamma, gamma + 1)` for `gamma >= 2`.
    pub fn new(k: u32, beta: u32, gamma: u32, alpha: u32) -> Result<Self, FamilyError> {
        let t = TripleTarget {
            k,
            beta,
            gamma,
            alpha,
        };
        ensure(k >= 2, "triple realization needs k >= 2")?;
        let infeasible = Err(FamilyError::InfeasibleTriple { beta, gamma, alpha });
        if beta == 0 || gamma == 0 || alpha < beta.max(gamma) || alpha > beta + gamma {
            return infeasible;
        }
        if beta == 1 && gamma >= 2 && alpha == gamma + 1 {
            return infeasible;
        }
        Ok(t)
    }
}

/// Picks a family member realizing the target triple and builds it.
pub fn realize_triple(t: &TripleTarget) -> Result<(FamilyParams, Graph), FamilyError> {
    let TripleTarget {
        k,
        beta,
        gamma,
        alpha,
    } = TripleTarget::new(t.k, t.beta, t.gamma, t.alpha)?;
    let params = if beta == 1 {
        // paths: (1,1,1) for n <= k+1, (1,1,2) for n = k+2, (1,γ,γ) for n = γ(2k+1)
        let n = match (gamma, alpha) {
            (1, 1) => 2,
            (1, 2) => k + 2,
            _ => gamma * (2 * k + 1),
        };
        FamilyParams::Path { n }
    } else if gamma == 1 {
        if alpha == beta {
            FamilyParams::Star { n: beta + 2 }
        } else {
            FamilyParams::Spider { legs: beta + 1, k }
        }
    } else if beta == gamma && gamma < alpha {
        FamilyParams::T1 {
            k,
            m: 2 * beta - alpha,
            l: alpha - beta,
        }
    } else if gamma < beta && beta == alpha {
        FamilyParams::T2 {
            k,
            m: gamma - 1,
            l: beta - gamma + 1,
        }
    } else if beta == gamma && gamma == alpha {
        FamilyParams::T2 {
            k,
            m: gamma - 1,
            l: 1,
        }
    } else if beta < gamma && gamma == alpha {
        FamilyParams::T3 {
            k,
            m: beta - 1,
            l: gamma - beta,
        }
    } else if gamma < beta && beta < alpha {
        FamilyParams::T4 {
            k,
            m: gamma + beta - alpha,
            l: alpha - beta - 1,
            r: beta - gamma + 2,
        }
    } else {
        debug_assert!(beta < gamma && gamma < alpha);
        FamilyParams::T5 {
            k,
            m: beta + gamma - alpha,
            l: alpha - gamma - 1,
            r: gamma - beta + 1,
        }
    };
    if let Some(claim) = params.claim() {
        // the inversion must reproduce the target through the forward formulas
        debug_assert_eq!(
            (claim.dim, claim.gamma_k, claim.gamma_rk),
            (Some(beta), Some(gamma), alpha)
        );
    }
    let g = generate(&params)?;
    Ok((params, g))
}

/// The graph `G_r` of maximum order together with its vertex coordinates.
#[derive(Clone, Debug)]
pub struct ExtremalGraph {
    pub graph: Graph,
    /// Integer vector of each vertex, indexed by label.
    pub vectors: Vec<Vec<u32>>,
    /// Labels of the `r` vectors with a single zero coordinate; label `i` has
    /// its zero at coordinate `i`.
    pub q0: VertexSet,
}

/// Builds `G_r` for `r >= 2`: vertices are the vectors of `Q_0 ∪ Q_1 ∪ ... ∪ Q_r`,
/// adjacent when every coordinate differs by at most one.
///
/// `Q_0` holds the `r` vectors with `0` in one coordinate and `2k+1` elsewhere.
/// `Q_i` holds the vectors with `1 <= q_i <= k` and
/// `2k - q_i + 1 <= q_j <= 2k + q_i + 1` for `j != i`. Labels follow
/// lexicographic order of the vectors, `Q_0` first.
pub fn extremal_gr(k: u32, r: u32, cap: usize) -> Result<ExtremalGraph, FamilyError> {
    ensure(k >= 1, "extremal-gr needs k >= 1")?;
    ensure(r >= 2, "extremal-gr needs r >= 2")?;
    let cap = cap.min(MAX_VERTICES);
    let order = predicted_max_order(k, r).unwrap_or(u64::MAX);
    if order > cap as u64 {
        return Err(FamilyError::TooLarge {
            n: order.min(usize::MAX as u64) as usize,
            cap,
        });
    }
    let r = r as usize;
    let top = 2 * k + 1;

    let mut q0: Vec<Vec<u32>> = (0..r)
        .map(|i| {
            let mut v = vec![top; r];
            v[i] = 0;
            v
        })
        .collect();
    q0.sort();

    let mut rest: Vec<Vec<u32>> = Vec::new();
    for i in 0..r {
        for qi in 1..=k {
            let lo = 2 * k - qi + 1;
            let hi = 2 * k + qi + 1;
            // odometer over the other r-1 coordinates
            let mut v = vec![lo; r];
            v[i] = qi;
            loop {
                rest.push(v.clone());
                let mut j = 0;
                loop {
                    if j == r {
                        break;
                    }
                    if j == i {
                        j += 1;
                        continue;
                    }
                    if v[j] < hi {
                        v[j] += 1;
                        break;
                    }
                    v[j] = lo;
                    j += 1;
                }
                if j == r {
                    break;
                }
            }
        }
    }
    rest.sort();

    let vectors: Vec<Vec<u32>> = q0.into_iter().chain(rest).collect();
    let n = vectors.len();
    debug_assert_eq!(n as u64, order);
    let mut g = Graph::empty(n).map_err(|_| FamilyError::TooLarge { n, cap })?;
    for a in 0..n {
        for b in a + 1..n {
            let close = vectors[a]
                .iter()
                .zip(&vectors[b])
                .all(|(x, y)| x.abs_diff(*y) <= 1);
            if close {
                g.link(a, b);
            }
        }
    }
    Ok(ExtremalGraph {
        graph: g,
        vectors,
        q0: VertexSet::new((0..r).collect()),
    })
}
