use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use super::{disjoint_union, Graph};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NamedGraphError {
    #[error("unknown graph name `{0}`")]
    UnknownName(String),
    #[error("invalid parameter for `{name}`: {reason}")]
    InvalidParameter { name: String, reason: String },
}

/// A named graph family member, as written in the literature:
/// `K5`, `C6`, `P4`, `K1,3`, `F5`, `K4-`, `K3oK1`, `K3+`, `H1`..`H3`,
/// `Petersen`, `E3` (edgeless), unions `K3uP3` and copies `2K2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum NamedGraph {
    Complete(usize),
    Cycle(usize),
    /// Path on the given number of vertices.
    Path(usize),
    Edgeless(usize),
    /// `K_{1,λ}`.
    Star(usize),
    /// `F_k`: the star `K_{1,k}` plus one edge between two leaves.
    FStar(usize),
    K4Minus,
    /// Triangle with one pendant edge at each vertex.
    K3CircK1,
    /// Triangle with one pendant edge.
    K3Plus,
    /// `K3∘K1` plus an edge joining two leaves.
    H1,
    /// `K3∘K1` plus a pendant edge hung from a leaf.
    H2,
    /// `K3∘K1 ∪ K2`.
    H3,
    Petersen,
    Union(Box<NamedGraph>, Box<NamedGraph>),
    Copies(usize, Box<NamedGraph>),
}

impl NamedGraph {
    pub fn union(a: NamedGraph, b: NamedGraph) -> Self {
        NamedGraph::Union(Box::new(a), Box::new(b))
    }

    pub fn copies(k: usize, g: NamedGraph) -> Self {
        NamedGraph::Copies(k, Box::new(g))
    }
}

fn invalid(name: &NamedGraph, reason: &str) -> NamedGraphError {
    NamedGraphError::InvalidParameter {
        name: name.to_string(),
        reason: reason.to_string(),
    }
}

fn corona_k3() -> Graph {
    Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)])
}

/// Parse and build a named graph in one step, e.g. `named("K3uP3")`.
pub fn named(name: &str) -> Result<Graph, NamedGraphError> {
    build_named(&name.parse()?)
}

pub fn build_named(spec: &NamedGraph) -> Result<Graph, NamedGraphError> {
    use NamedGraph::*;
    let g = match spec {
        Complete(n) => Graph::complete(*n),
        Edgeless(n) => Graph::new(*n),
        Cycle(n) => {
            if *n < 3 {
                return Err(invalid(spec, "cycles need at least 3 vertices"));
            }
            let edges: Vec<_> = (0..*n).map(|i| (i, (i + 1) % n)).collect();
            Graph::from_edges(*n, &edges)
        }
        Path(n) => {
            if *n < 1 {
                return Err(invalid(spec, "paths need at least 1 vertex"));
            }
            let edges: Vec<_> = (1..*n).map(|i| (i - 1, i)).collect();
            Graph::from_edges(*n, &edges)
        }
        Star(l) => {
            if *l < 1 {
                return Err(invalid(spec, "stars need at least one leaf"));
            }
            let edges: Vec<_> = (1..=*l).map(|i| (0, i)).collect();
            Graph::from_edges(l + 1, &edges)
        }
        FStar(k) => {
            if *k < 2 {
                return Err(invalid(spec, "F_k needs k >= 2"));
            }
            let mut edges: Vec<_> = (1..=*k).map(|i| (0, i)).collect();
            edges.push((1, 2));
            Graph::from_edges(k + 1, &edges)
        }
        K4Minus => Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]),
        K3CircK1 => corona_k3(),
        K3Plus => Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (0, 3)]),
        H1 => {
            let mut g = corona_k3();
            g.add_edge(3, 4);
            g
        }
        H2 => disjoint_union(&corona_k3(), &Graph::new(1)).with_edge(3, 6),
        H3 => disjoint_union(&corona_k3(), &Graph::complete(2)),
        Petersen => {
            let mut g = Graph::new(10);
            for i in 0..5 {
                g.add_edge(i, (i + 1) % 5);
                g.add_edge(i, i + 5);
                g.add_edge(i + 5, (i + 2) % 5 + 5);
            }
            g
        }
        Union(a, b) => disjoint_union(&build_named(a)?, &build_named(b)?),
        Copies(k, inner) => {
            if *k < 1 {
                return Err(invalid(spec, "need at least one copy"));
            }
            let one = build_named(inner)?;
            (1..*k).fold(one.clone(), |acc, _| disjoint_union(&acc, &one))
        }
    };
    Ok(g)
}

impl Graph {
    fn with_edge(mut self, u: usize, v: usize) -> Graph {
        self.add_edge(u, v);
        self
    }
}

impl fmt::Display for NamedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use NamedGraph::*;
        match self {
            Complete(n) => write!(f, "K{n}"),
            Cycle(n) => write!(f, "C{n}"),
            Path(n) => write!(f, "P{n}"),
            Edgeless(n) => write!(f, "E{n}"),
            Star(l) => write!(f, "K1,{l}"),
            FStar(k) => write!(f, "F{k}"),
            K4Minus => f.write_str("K4-"),
            K3CircK1 => f.write_str("K3oK1"),
            K3Plus => f.write_str("K3+"),
            H1 => f.write_str("H1"),
            H2 => f.write_str("H2"),
            H3 => f.write_str("H3"),
            Petersen => f.write_str("Petersen"),
            Union(a, b) => write!(f, "{a}u{b}"),
            Copies(k, g) => write!(f, "{k}{g}"),
        }
    }
}

fn parse_number(s: &str, whole: &str) -> Result<usize, NamedGraphError> {
    s.parse()
        .map_err(|_| NamedGraphError::UnknownName(whole.to_string()))
}

fn parse_atom(s: &str) -> Result<NamedGraph, NamedGraphError> {
    use NamedGraph::*;
    let fixed = match s {
        "K4-" => Some(K4Minus),
        "K3oK1" => Some(K3CircK1),
        "K3+" => Some(K3Plus),
        "H1" => Some(H1),
        "H2" => Some(H2),
        "H3" => Some(H3),
        "Petersen" => Some(Petersen),
        _ => None,
    };
    if let Some(g) = fixed {
        return Ok(g);
    }
    if let Some(rest) = s.strip_prefix("K1,") {
        return Ok(Star(parse_number(rest, s)?));
    }
    let (head, tail) = s.split_at(s.find(|c: char| c.is_ascii_digit()).unwrap_or(s.len()));
    let num = || parse_number(tail, s);
    match head {
        "K" => Ok(Complete(num()?)),
        "C" => Ok(Cycle(num()?)),
        "P" => Ok(Path(num()?)),
        "E" => Ok(Edgeless(num()?)),
        "F" => Ok(FStar(num()?)),
        _ => Err(NamedGraphError::UnknownName(s.to_string())),
    }
}

fn parse_term(s: &str) -> Result<NamedGraph, NamedGraphError> {
    let digits = s.find(|c: char| !c.is_ascii_digit()).unwrap_or(s.len());
    if digits == 0 {
        return parse_atom(s);
    }
    if digits == s.len() {
        return Err(NamedGraphError::UnknownName(s.to_string()));
    }
    let k = parse_number(&s[..digits], s)?;
    Ok(NamedGraph::copies(k, parse_atom(&s[digits..])?))
}

impl FromStr for NamedGraph {
    type Err = NamedGraphError;

    /// Terms joined by `u` (or `∪`) form a disjoint union; a leading count
    /// means that many copies.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let mut terms = s.split(['u', '∪']).filter(|t| !t.is_empty());
        let first = terms
            .next()
            .ok_or_else(|| NamedGraphError::UnknownName(s.to_string()))?;
        let mut acc = parse_term(first)?;
        for t in terms {
            acc = NamedGraph::union(acc, parse_term(t)?);
        }
        Ok(acc)
    }
}
