//! Plain-text edge lists.
//!
//! ```text
//! # optional comment lines
//! <n> <m>
//! <u> <v>      (exactly m lines, 0 <= u, v < n, u != v)
//! ```
//!
//! Tokens are separated by a single space. A trailing newline is optional.
//! Duplicate edges (in either orientation) are rejected.

use std::collections::HashSet;
use std::fmt::Write as _;

use resdom_core::{Graph, MAX_VERTICES};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("missing header line \"<n> <m>\"")]
    MissingHeader,
    #[error("line {line}: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("line {line}: endpoint {v} out of range for n = {n}")]
    EndpointOutOfRange { line: usize, v: usize, n: usize },
    #[error("line {line}: self-loop at vertex {v}")]
    SelfLoop { line: usize, v: usize },
    #[error("line {line}: duplicate edge {u} {v}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("line {line}: header declares {declared} edges but {found} were listed")]
    EdgeCountMismatch {
        line: usize,
        declared: usize,
        found: usize,
    },
    #[error("line {line}: n = {n} exceeds the supported maximum of {max} vertices")]
    TooManyVertices { line: usize, n: usize, max: usize },
}

impl ParseError {
    /// 1-based line the error refers to, if any.
    pub fn line(&self) -> Option<usize> {
        match *self {
            ParseError::MissingHeader => None,
            ParseError::Malformed { line, .. }
            | ParseError::EndpointOutOfRange { line, .. }
            | ParseError::SelfLoop { line, .. }
            | ParseError::DuplicateEdge { line, .. }
            | ParseError::EdgeCountMismatch { line, .. }
            | ParseError::TooManyVertices { line, .. } => Some(line),
        }
    }
}

fn number(token: &str, line: usize) -> Result<usize, ParseError> {
    if token.is_empty() || !token.bytes().all(|b| b.is_ascii_digit()) {
        return Err(ParseError::Malformed {
            line,
            reason: format!("expected a non-negative integer, found {token:?}"),
        });
    }
    token.parse().map_err(|_| ParseError::Malformed {
        line,
        reason: format!("integer {token} is too large"),
    })
}

fn pair(text: &str, line: usize) -> Result<(usize, usize), ParseError> {
    let mut it = text.split(' ');
    match (it.next(), it.next(), it.next()) {
        (Some(a), Some(b), None) => Ok((number(a, line)?, number(b, line)?)),
        _ => Err(ParseError::Malformed {
            line,
            reason: format!("expected two tokens separated by one space, found {text:?}"),
        }),
    }
}

/// Parses an edge-list document.
pub fn parse(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text
        .split('\n')
        .map(|l| l.strip_suffix('\r').unwrap_or(l))
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.starts_with('#'))
        .peekable();

    // blank lines are only tolerated at the very end
    let mut next_line = move || -> Option<(usize, &str)> {
        let (no, l) = lines.next()?;
        if l.is_empty() && lines.clone().all(|(_, rest)| rest.is_empty()) {
            return None;
        }
        Some((no, l))
    };

    let (header_line, header) = next_line().ok_or(ParseError::MissingHeader)?;
    let (n, m) = pair(header, header_line)?;
    if n > MAX_VERTICES {
        return Err(ParseError::TooManyVertices {
            line: header_line,
            n,
            max: MAX_VERTICES,
        });
    }

    let mut seen = HashSet::with_capacity(m);
    let mut edges = Vec::with_capacity(m);
    let mut last_line = header_line;
    while let Some((line, text)) = next_line() {
        last_line = line;
        if text.is_empty() {
            return Err(ParseError::Malformed {
                line,
                reason: "empty line".into(),
            });
        }
        let (u, v) = pair(text, line)?;
        if edges.len() == m {
            return Err(ParseError::EdgeCountMismatch {
                line,
                declared: m,
                found: m + 1,
            });
        }
        for w in [u, v] {
            if w >= n {
                return Err(ParseError::EndpointOutOfRange { line, v: w, n });
            }
        }
        if u == v {
            return Err(ParseError::SelfLoop { line, v: u });
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(ParseError::DuplicateEdge { line, u, v });
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(ParseError::EdgeCountMismatch {
            line: last_line,
            declared: m,
            found: edges.len(),
        });
    }
    Ok(Graph::from_edges(n, edges).expect("edges validated above"))
}

/// Canonical document: header, then edges `u < v` in increasing order.
pub fn to_string(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = String::with_capacity(8 * (edges.len() + 1));
    let _ = writeln!(out, "{} {}", g.order(), edges.len());
    for (u, v) in edges {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}
