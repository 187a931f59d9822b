use core::fmt;

/// Errors raised while constructing or inspecting a [`Graph`](crate::Graph).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    TooManyVertices {
        n: usize,
        max: usize,
    },
    EndpointOutOfRange {
        u: usize,
        v: usize,
        n: usize,
    },
    SelfLoop {
        v: usize,
    },
    DuplicateEdge {
        u: usize,
        v: usize,
    },
    /// Brute-force isomorphism is only offered for small orders.
    IsomorphismSizeGuard {
        n: usize,
        max: usize,
    },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::TooManyVertices { n, max } => {
                write!(f, "graph has {n} vertices, at most {max} are supported")
            }
            GraphError::EndpointOutOfRange { u, v, n } => {
                write!(f, "edge {{{u}, {v}}} has an endpoint outside 0..{n}")
            }
            GraphError::SelfLoop { v } => write!(f, "self-loop at vertex {v}"),
            GraphError::DuplicateEdge { u, v } => write!(f, "duplicate edge {{{u}, {v}}}"),
            GraphError::IsomorphismSizeGuard { n, max } => {
                write!(f, "isomorphism test limited to n <= {max}, got n = {n}")
            }
        }
    }
}

impl core::error::Error for GraphError {}

/// Errors raised by the exact solvers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveError {
    Disconnected,
    EmptyGraph,
    SizeGuard {
        n: usize,
        cap: usize,
    },
    InvalidK,
    /// A forced member is not a vertex of the graph.
    ForcedOutOfRange {
        v: usize,
        n: usize,
    },
    /// No set containing the forced members satisfies the predicate.
    Infeasible,
}

impl fmt::Display for SolveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolveError::Disconnected => f.write_str("graph is not connected"),
            SolveError::EmptyGraph => f.write_str("graph has no vertices"),
            SolveError::SizeGuard { n, cap } => {
                write!(f, "graph order {n} exceeds the solver cap {cap}")
            }
            SolveError::InvalidK => f.write_str("k must be at least 1"),
            SolveError::ForcedOutOfRange { v, n } => {
                write!(f, "forced vertex {v} is outside 0..{n}")
            }
            SolveError::Infeasible => f.write_str("no feasible set exists"),
        }
    }
}

impl core::error::Error for SolveError {}

/// Errors raised by the family generators and closed-form predictors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyError {
    /// Parameter outside the family's domain; the message names the violated bound.
    InvalidParams(&'static str),
    MissingParam(&'static str),
    UnknownFamily,
    InfeasibleTriple {
        beta: u32,
        gamma: u32,
        alpha: u32,
    },
    /// Graph handed to the tree formula is not a tree, or is a path.
    NotApplicable(&'static str),
    TooLarge {
        n: usize,
        cap: usize,
    },
}

impl fmt::Display for FamilyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyError::InvalidParams(why) => write!(f, "invalid parameters: {why}"),
            FamilyError::MissingParam(name) => write!(f, "missing parameter `{name}`"),
            FamilyError::UnknownFamily => f.write_str("unknown family"),
            FamilyError::InfeasibleTriple { beta, gamma, alpha } => write!(
                f,
                "no graph realizes (dim, gamma_k, gamma_rk) = ({beta}, {gamma}, {alpha})"
            ),
            FamilyError::NotApplicable(why) => write!(f, "formula not applicable: {why}"),
            FamilyError::TooLarge { n, cap } => {
                write!(f, "construction has order {n}, above the cap {cap}")
            }
        }
    }
}

impl core::error::Error for FamilyError {}
