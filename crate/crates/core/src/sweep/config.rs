use std::collections::BTreeSet;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::characterize::CatalogError;
use crate::graphcore::binomial;

/// One kind of cross-check the sweep can run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    Toughness,
    Hamiltonicity,
    Traceability,
    LemmaProperties,
    InducedFreeness,
    SelfColine,
    Whitney,
    /// Structure of disconnected coline graphs.
    Classification,
    /// `cms(G) >= 2` exactly when `co(G)` is Hamiltonian.
    Cms,
}

impl Check {
    pub const ALL: [Check; 9] = [
        Check::Toughness,
        Check::Hamiltonicity,
        Check::Traceability,
        Check::LemmaProperties,
        Check::InducedFreeness,
        Check::SelfColine,
        Check::Whitney,
        Check::Classification,
        Check::Cms,
    ];

    /// Parse a comma-separated list; `all` selects every check.
    pub fn parse_list(s: &str) -> Result<BTreeSet<Check>, SweepError> {
        let mut out = BTreeSet::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            if part == "all" {
                out.extend(Check::ALL);
            } else {
                out.insert(part.parse()?);
            }
        }
        if out.is_empty() {
            return Err(SweepError::InvalidConfig("no checks selected".into()));
        }
        Ok(out)
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Check::Toughness => "toughness",
            Check::Hamiltonicity => "hamiltonicity",
            Check::Traceability => "traceability",
            Check::LemmaProperties => "lemma_properties",
            Check::InducedFreeness => "induced_freeness",
            Check::SelfColine => "self_coline",
            Check::Whitney => "whitney",
            Check::Classification => "classification",
            Check::Cms => "cms",
        })
    }
}

impl FromStr for Check {
    type Err = SweepError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Check::ALL
            .into_iter()
            .find(|c| c.to_string() == s.replace('-', "_"))
            .ok_or_else(|| SweepError::InvalidConfig(format!("unknown check `{s}`")))
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SweepError {
    #[error("invalid sweep configuration: {0}")]
    InvalidConfig(String),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error("{0} work units failed; the sweep is incomplete")]
    Incomplete(usize),
    #[error("cannot write {path}: {message}")]
    Io { path: String, message: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepConfig {
    /// Graphs are labelled on exactly this many vertices; isolated vertices
    /// stand in for smaller graphs.
    pub max_vertices: usize,
    pub max_edges: usize,
    pub checks: BTreeSet<Check>,
    pub worker_count: usize,
    pub output_path: Option<PathBuf>,
    /// Run without a catalog, collecting the exception censuses only.
    pub bootstrap: bool,
    /// Index of the first work unit to run, from a partial report.
    pub resume_from: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            max_vertices: 8,
            max_edges: 10,
            checks: Check::ALL.into_iter().collect(),
            worker_count: std::thread::available_parallelism().map_or(1, |n| n.get()),
            output_path: None,
            bootstrap: false,
            resume_from: 0,
        }
    }
}

impl SweepConfig {
    pub fn validate(&self) -> Result<(), SweepError> {
        let bad = |msg: String| Err(SweepError::InvalidConfig(msg));
        if self.max_vertices > 10 {
            return bad(format!("max_vertices {} exceeds 10", self.max_vertices));
        }
        let pairs = binomial(self.max_vertices, 2) as usize;
        if self.max_edges > pairs {
            return bad(format!(
                "max_edges {} exceeds the {pairs} vertex pairs on {} vertices",
                self.max_edges, self.max_vertices
            ));
        }
        if self.worker_count == 0 {
            return bad("worker_count must be positive".into());
        }
        if self.checks.is_empty() {
            return bad("no checks selected".into());
        }
        Ok(())
    }

    /// Whether the bounds reach every graph the exception lists can
    /// contain, so census counts are comparable with the known values.
    pub fn covers_exception_range(&self) -> bool {
        self.max_vertices >= 8 && self.max_edges >= 10
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_checks() {
        assert_eq!(Check::parse_list("all").unwrap().len(), 9);
        let s = Check::parse_list("toughness, lemma-properties").unwrap();
        assert!(s.contains(&Check::LemmaProperties));
        assert!(Check::parse_list("bogus").is_err());
        assert!(Check::parse_list("").is_err());
    }

    #[test]
    fn validation() {
        let mut c = SweepConfig::default();
        assert!(c.validate().is_ok());
        c.max_edges = 29;
        assert!(c.validate().is_err());
        c.max_edges = 3;
        c.max_vertices = 11;
        assert!(c.validate().is_err());
        c.max_vertices = 4;
        c.worker_count = 0;
        assert!(c.validate().is_err());
    }
}
