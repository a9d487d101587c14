use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt::Write as _;
use std::path::Path;
use std::sync::OnceLock;

use thiserror::Error;

use crate::graph6;
use crate::graphcore::{build_named, coline, Graph, NamedGraph};
use crate::oracle::{canonical_form, hamiltonian_path, is_isomorphic, is_tough, CanonicalForm};

use super::decide::{degree_clause_fires, is_wu_meng_exception};

/// Version written in the header line of catalog files.
pub const CATALOG_FORMAT_VERSION: u32 = 1;

/// Environment variable naming a catalog file to use instead of the
/// embedded one.
pub const CATALOG_ENV: &str = "COLINE_CATALOG";

const EMBEDDED: &str = include_str!("../../data/catalog.txt");

const HEADER: &str = "coline-catalog";

/// Graphs every catalog carries by name.
pub const NAMED: [&str; 11] = [
    "K5", "H1", "H2", "H3", "K3oK1", "K3uP3", "K3u2K2", "C4uK2", "K3+", "K4-", "K4",
];

pub const TOUGH_EXCEPTION_COUNT: usize = 18;
pub const TRACE_EXCEPTION_COUNT: usize = 9;
pub const WU_MENG_COUNT: usize = 21;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error("cannot read catalog {path}: {message}")]
    Io { path: String, message: String },
    #[error("catalog line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("catalog section [{section}] has {found} members, expected {expected}")]
    Cardinality {
        section: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("catalog section [{section}] member {member}: {reason}")]
    Invalid {
        section: &'static str,
        member: String,
        reason: String,
    },
    #[error("catalog lacks the named graph {0}")]
    MissingNamed(String),
}

/// The exception sets behind the toughness and traceability decisions,
/// plus the named graphs the decisions refer to. All members are stored as
/// canonical forms of graphs without isolated vertices.
#[derive(Clone, Debug)]
pub struct Catalog {
    pub named: BTreeMap<String, Graph>,
    pub toughness_exceptions: BTreeSet<CanonicalForm>,
    pub trace_exceptions: BTreeSet<CanonicalForm>,
    pub wu_meng_21: BTreeSet<CanonicalForm>,
    /// Where the catalog came from: `embedded` or a file path.
    pub source: String,
    tough_sizes: HashSet<(usize, usize)>,
    trace_sizes: HashSet<(usize, usize)>,
    corona: CanonicalForm,
}

fn sizes(set: &BTreeSet<CanonicalForm>) -> HashSet<(usize, usize)> {
    set.iter()
        .map(|f| {
            let g = f.graph();
            (g.order(), g.edge_count())
        })
        .collect()
}

fn build(name: &str) -> Graph {
    let spec: NamedGraph = name.parse().expect("built-in name");
    build_named(&spec).expect("built-in graph")
}

impl Catalog {
    /// Assemble a catalog from the three exception sets and validate it.
    pub fn from_sets(
        toughness_exceptions: BTreeSet<CanonicalForm>,
        trace_exceptions: BTreeSet<CanonicalForm>,
        wu_meng_21: BTreeSet<CanonicalForm>,
        source: &str,
    ) -> Result<Self, CatalogError> {
        let named = NAMED
            .iter()
            .map(|&n| (n.to_string(), canonical_form(&build(n)).graph()))
            .collect();
        Self::assemble(named, toughness_exceptions, trace_exceptions, wu_meng_21, source)
    }

    fn assemble(
        named: BTreeMap<String, Graph>,
        toughness_exceptions: BTreeSet<CanonicalForm>,
        trace_exceptions: BTreeSet<CanonicalForm>,
        wu_meng_21: BTreeSet<CanonicalForm>,
        source: &str,
    ) -> Result<Self, CatalogError> {
        let corona = canonical_form(named.get("K3oK1").ok_or_else(|| {
            CatalogError::MissingNamed("K3oK1".to_string())
        })?);
        let cat = Catalog {
            tough_sizes: sizes(&toughness_exceptions),
            trace_sizes: sizes(&trace_exceptions),
            named,
            toughness_exceptions,
            trace_exceptions,
            wu_meng_21,
            source: source.to_string(),
            corona,
        };
        cat.validate()?;
        Ok(cat)
    }

    /// The catalog named by `COLINE_CATALOG`, or the embedded one.
    pub fn load() -> Result<Self, CatalogError> {
        match std::env::var_os(CATALOG_ENV) {
            Some(path) => Self::load_path(Path::new(&path)),
            None => Self::parse(EMBEDDED, "embedded"),
        }
    }

    pub fn load_path(path: &Path) -> Result<Self, CatalogError> {
        let text = std::fs::read_to_string(path).map_err(|e| CatalogError::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
        Self::parse(&text, &path.display().to_string())
    }

    /// The process-wide catalog, loaded and validated on first use.
    pub fn global() -> Result<&'static Catalog, CatalogError> {
        static CELL: OnceLock<Result<Catalog, CatalogError>> = OnceLock::new();
        CELL.get_or_init(Self::load).as_ref().map_err(Clone::clone)
    }

    pub fn parse(text: &str, source: &str) -> Result<Self, CatalogError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let parse_err = |line: usize, reason: String| CatalogError::Parse { line, reason };

        let (line, header) = lines
            .next()
            .ok_or_else(|| parse_err(1, "empty catalog".into()))?;
        let version = header
            .strip_prefix(HEADER)
            .map(str::trim)
            .ok_or_else(|| parse_err(line, format!("expected `{HEADER} <version>` header")))?;
        if version != CATALOG_FORMAT_VERSION.to_string() {
            return Err(parse_err(line, format!("unsupported format version `{version}`")));
        }

        let mut named = BTreeMap::new();
        let mut sets: [BTreeSet<CanonicalForm>; 3] = Default::default();
        let mut section: Option<&str> = None;
        for (line, text) in lines {
            if let Some(name) = text.strip_prefix('[').and_then(|t| t.strip_suffix(']')) {
                if !["named", "tough18", "trace9", "wumeng21"].contains(&name) {
                    return Err(parse_err(line, format!("unknown section [{name}]")));
                }
                section = Some(name);
                continue;
            }
            let sec = section.ok_or_else(|| parse_err(line, "entry before any section".into()))?;
            let (label, code) = match sec {
                "named" => text
                    .split_once(char::is_whitespace)
                    .map(|(a, b)| (Some(a), b.trim()))
                    .ok_or_else(|| parse_err(line, "expected `<name> <graph6>`".into()))?,
                _ => (None, text),
            };
            let g = graph6::parse(code).map_err(|e| parse_err(line, e.to_string()))?;
            let form = canonical_form(&g);
            if form.as_str() != code {
                return Err(parse_err(line, format!("`{code}` is not in canonical form")));
            }
            let fresh = match (sec, label) {
                ("named", Some(name)) => named.insert(name.to_string(), g).is_none(),
                ("tough18", _) => sets[0].insert(form),
                ("trace9", _) => sets[1].insert(form),
                _ => sets[2].insert(form),
            };
            if !fresh {
                return Err(parse_err(line, format!("duplicate entry `{text}`")));
            }
        }
        let [tough, trace, wu] = sets;
        Self::assemble(named, tough, trace, wu, source)
    }

    /// Render in the on-disk format; `parse` reads it back unchanged.
    pub fn to_text(&self) -> String {
        let mut out = format!("{HEADER} {CATALOG_FORMAT_VERSION}\n");
        out.push_str("# canonical graph6, isolated vertices removed\n[named]\n");
        for (name, g) in &self.named {
            let _ = writeln!(out, "{name} {}", graph6::emit(g));
        }
        for (title, set) in [
            ("tough18", &self.toughness_exceptions),
            ("trace9", &self.trace_exceptions),
            ("wumeng21", &self.wu_meng_21),
        ] {
            let _ = writeln!(out, "[{title}]");
            for f in set {
                let _ = writeln!(out, "{f}");
            }
        }
        out
    }

    /// Check cardinalities, named graphs, and each member against the
    /// property that puts it in its set.
    pub fn validate(&self) -> Result<(), CatalogError> {
        for name in NAMED {
            let g = self
                .named
                .get(name)
                .ok_or_else(|| CatalogError::MissingNamed(name.to_string()))?;
            if is_isomorphic(g, &build(name)).is_none() {
                return Err(CatalogError::Invalid {
                    section: "named",
                    member: name.to_string(),
                    reason: "not isomorphic to the graph of that name".into(),
                });
            }
        }
        let sections: [(&'static str, &BTreeSet<CanonicalForm>, usize); 3] = [
            ("tough18", &self.toughness_exceptions, TOUGH_EXCEPTION_COUNT),
            ("trace9", &self.trace_exceptions, TRACE_EXCEPTION_COUNT),
            ("wumeng21", &self.wu_meng_21, WU_MENG_COUNT),
        ];
        for (section, set, expected) in sections {
            if set.len() != expected {
                return Err(CatalogError::Cardinality {
                    section,
                    expected,
                    found: set.len(),
                });
            }
            for f in set {
                let g = f.graph();
                let reason = if !g.isolated_vertices().is_empty() {
                    Some("has isolated vertices")
                } else {
                    match section {
                        "tough18" => tough_exception_defect(&g),
                        "trace9" => trace_exception_defect(&g, &self.corona),
                        _ => (!is_wu_meng_exception(&g))
                            .then_some("does not meet the Wu–Meng clauses (iii)/(iv) alone"),
                    }
                };
                if let Some(reason) = reason {
                    return Err(CatalogError::Invalid {
                        section,
                        member: f.to_string(),
                        reason: reason.into(),
                    });
                }
            }
        }
        Ok(())
    }

    /// The named graph `K3∘K1` as a canonical form.
    pub fn corona(&self) -> &CanonicalForm {
        &self.corona
    }

    pub fn named(&self, name: &str) -> Option<&Graph> {
        self.named.get(name)
    }

    /// `F_k`: star `K_{1,k}` plus an edge between two leaves.
    pub fn f_star(k: usize) -> Result<Graph, crate::graphcore::NamedGraphError> {
        build_named(&NamedGraph::FStar(k))
    }

    /// Screen: could a graph with `n` non-isolated vertices and `m` edges
    /// be a toughness exception?
    pub(crate) fn may_contain_tough(&self, n: usize, m: usize) -> bool {
        self.tough_sizes.contains(&(n, m))
    }

    pub(crate) fn may_contain_trace(&self, n: usize, m: usize) -> bool {
        self.trace_sizes.contains(&(n, m))
    }
}

/// Why `g` fails to be a toughness exception, if it does: it must have at
/// least three edges, escape the degree clauses and still have a non-tough
/// coline.
fn tough_exception_defect(g: &Graph) -> Option<&'static str> {
    if g.edge_count() < 3 {
        Some("fewer than three edges")
    } else if degree_clause_fires(g, 0) {
        Some("already covered by the degree clauses")
    } else if is_tough(&coline(g).0).tough {
        Some("coline graph is tough")
    } else {
        None
    }
}

fn trace_exception_defect(g: &Graph, corona: &CanonicalForm) -> Option<&'static str> {
    if g.edge_count() < 2 {
        Some("fewer than two edges")
    } else if degree_clause_fires(g, 1) {
        Some("already covered by the degree clauses")
    } else if canonical_form(g) == *corona {
        Some("is K3oK1, which has its own clause")
    } else if hamiltonian_path(&coline(g).0).is_some() {
        Some("coline graph is traceable")
    } else {
        None
    }
}
