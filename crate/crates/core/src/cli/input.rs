use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::graph6::{self, Graph6Error};
use crate::graphcore::{build_named, NamedGraph, NamedGraphError, MAX_VERTICES};
use crate::Graph;

/// Where an input graph comes from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InputGraphSpec {
    Graph6(String),
    EdgeListFile(PathBuf),
    Named(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InputError {
    #[error("graph6: {0}")]
    Graph6(#[from] Graph6Error),
    #[error(transparent)]
    Named(#[from] NamedGraphError),
    #[error("line {line}: {reason}")]
    EdgeList { line: usize, reason: String },
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
}

impl InputGraphSpec {
    pub fn load(&self) -> Result<Graph, InputError> {
        match self {
            InputGraphSpec::Graph6(s) => Ok(graph6::parse(s)?),
            InputGraphSpec::Named(s) => Ok(build_named(&s.parse::<NamedGraph>()?)?),
            InputGraphSpec::EdgeListFile(path) => parse_edge_list(&read(path)?),
        }
    }
}

fn read(path: &Path) -> Result<String, InputError> {
    std::fs::read_to_string(path).map_err(|e| InputError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

/// Parse the edge-list format: one `u v` pair of 0-based vertices per line,
/// `#` starting a comment, and an optional `n=<count>` line declaring the
/// vertex count (otherwise one more than the largest vertex named).
pub fn parse_edge_list(text: &str) -> Result<Graph, InputError> {
    let err = |line: usize, reason: String| InputError::EdgeList { line, reason };
    let mut declared: Option<(usize, usize)> = None;
    let mut edges: Vec<(usize, usize, usize)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        if let Some(rest) = body.strip_prefix("n=") {
            if declared.is_some() {
                return Err(err(line, "second `n=` line".into()));
            }
            let n = rest
                .trim()
                .parse::<usize>()
                .map_err(|_| err(line, format!("bad vertex count `{}`", rest.trim())))?;
            declared = Some((n, line));
            continue;
        }
        let fields: Vec<&str> = body.split_whitespace().collect();
        let [u, v] = fields[..] else {
            return Err(err(line, format!("expected `u v`, found `{body}`")));
        };
        let parse = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| err(line, format!("`{s}` is not a vertex index")))
        };
        let (u, v) = (parse(u)?, parse(v)?);
        if u == v {
            return Err(err(line, format!("self-loop at {u}")));
        }
        edges.push((u.min(v), u.max(v), line));
    }
    let needed = edges.iter().map(|&(_, v, _)| v + 1).max().unwrap_or(0);
    let n = match declared {
        Some((n, _)) => {
            if let Some(&(_, v, line)) = edges.iter().find(|&&(_, v, _)| v >= n) {
                return Err(err(line, format!("vertex {v} out of range for n={n}")));
            }
            n
        }
        None => needed,
    };
    if n > MAX_VERTICES {
        let line = declared.map_or(edges.last().map_or(1, |e| e.2), |(_, l)| l);
        return Err(err(line, format!("{n} vertices exceed the limit of {MAX_VERTICES}")));
    }
    let mut g = Graph::new(n);
    for (u, v, line) in edges {
        if g.has_edge(u, v) {
            return Err(err(line, format!("duplicate edge {u} {v}")));
        }
        g.add_edge(u, v);
    }
    Ok(g)
}

/// Render in the edge-list format, with an `n=` line.
pub fn format_edge_list(g: &Graph) -> String {
    let mut out = format!("n={}\n", g.order());
    for (u, v) in g.edges().iter() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
