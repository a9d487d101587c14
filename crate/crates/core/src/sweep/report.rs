use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::oracle::CanonicalForm;

use super::config::{Check, SweepConfig};

/// Census sizes expected over the full exception range.
pub const CENSUS_EXPECTATIONS: [(&str, usize); 5] = [
    (super::TOUGH_NOT_HAMILTONIAN, 4),
    (super::TOUGH_EXCEPTIONS, 18),
    (super::TRACE_EXCEPTIONS, 9),
    (super::TRACE_CORONA, 1),
    (super::WU_MENG_21, 21),
];

/// A graph on which a decision and an oracle disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub graph: CanonicalForm,
    pub check: String,
    pub theorem: String,
    pub oracle: String,
}

/// Work units that panicked. Rerun with `resume_from = resume_cursor` to
/// cover them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartialRun {
    pub resume_cursor: usize,
    pub failed_units: Vec<usize>,
    pub units_total: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusCheck {
    pub key: String,
    pub expected: usize,
    pub found: usize,
}

impl CensusCheck {
    pub fn ok(&self) -> bool {
        self.expected == self.found
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepReport {
    pub max_vertices: usize,
    pub max_edges: usize,
    pub checks: Vec<Check>,
    pub bootstrap: bool,
    /// Why the bounds suffice, for the report header.
    pub bound_note: String,
    /// Labelled graphs visited.
    pub graphs_enumerated: u64,
    /// Degree-ordered labelled graphs actually checked.
    pub graphs_scanned: u64,
    pub mismatches: Vec<Mismatch>,
    pub exception_census: BTreeMap<String, BTreeSet<CanonicalForm>>,
    /// Largest vertex count among members of the exception censuses.
    pub max_exception_vertices: usize,
    /// Scanned graphs with a disconnected coline, by structural case.
    pub coline_cases: BTreeMap<String, u64>,
    pub lemma_contexts_checked: u64,
    pub self_coline: Option<BTreeSet<CanonicalForm>>,
    pub whitney: Option<Vec<(CanonicalForm, CanonicalForm)>>,
    /// Census sizes against the expected ones; empty unless the bounds
    /// cover the exception range.
    pub census_checks: Vec<CensusCheck>,
    /// Seconds per check, summed over workers, plus `total` wall time.
    pub timing: BTreeMap<String, f64>,
    pub partial: Option<PartialRun>,
}

static EMPTY: BTreeSet<CanonicalForm> = BTreeSet::new();

impl SweepReport {
    pub(super) fn new(config: &SweepConfig, bootstrap: bool) -> Self {
        SweepReport {
            max_vertices: config.max_vertices,
            max_edges: config.max_edges,
            checks: config.checks.iter().copied().collect(),
            bootstrap,
            bound_note: "every exception has at most 8 edges and 8 non-isolated vertices; \
                         the degree clauses settle all other edge counts, and K5 with 10 edges \
                         is the largest named exception"
                .into(),
            graphs_enumerated: 0,
            graphs_scanned: 0,
            mismatches: Vec::new(),
            exception_census: BTreeMap::new(),
            max_exception_vertices: 0,
            coline_cases: BTreeMap::new(),
            lemma_contexts_checked: 0,
            self_coline: None,
            whitney: None,
            census_checks: Vec::new(),
            timing: BTreeMap::new(),
            partial: None,
        }
    }

    pub(super) fn finish(&mut self) {
        self.mismatches
            .sort_by(|a, b| (&a.check, &a.graph).cmp(&(&b.check, &b.graph)));
        self.mismatches.dedup();
        self.max_exception_vertices = [super::TOUGH_EXCEPTIONS, super::TRACE_EXCEPTIONS, super::WU_MENG_21]
            .iter()
            .flat_map(|k| self.census(k))
            .map(|f| f.graph().order())
            .max()
            .unwrap_or(0);
        if self.max_vertices >= 8 && self.max_edges >= 10 {
            let hamiltonicity = self.checks.contains(&Check::Hamiltonicity);
            self.census_checks = CENSUS_EXPECTATIONS
                .iter()
                .filter(|(k, _)| hamiltonicity || *k != super::WU_MENG_21)
                .map(|&(key, expected)| CensusCheck {
                    key: key.to_string(),
                    expected,
                    found: self.census(key).len(),
                })
                .collect();
        }
    }

    /// Members of one census (empty if never populated).
    pub fn census(&self, key: &str) -> &BTreeSet<CanonicalForm> {
        self.exception_census.get(key).unwrap_or(&EMPTY)
    }

    /// No mismatches, no failed units, and every census size as expected.
    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty()
            && self.partial.is_none()
            && self.census_checks.iter().all(CensusCheck::ok)
    }

    /// The same report with timings cleared, for comparing runs.
    pub fn without_timing(&self) -> SweepReport {
        SweepReport {
            timing: BTreeMap::new(),
            ..self.clone()
        }
    }

    /// Human-readable summary, one `key: value` per line.
    pub fn summary_lines(&self) -> Vec<String> {
        let mut out = vec![
            format!("bounds: {} vertices, {} edges", self.max_vertices, self.max_edges),
            format!("graphs enumerated: {}", self.graphs_enumerated),
            format!("graphs scanned: {}", self.graphs_scanned),
            format!("mismatches: {}", self.mismatches.len()),
        ];
        for (key, set) in &self.exception_census {
            out.push(format!("{key}: {}", set.len()));
        }
        out.push(format!("max exception vertices: {}", self.max_exception_vertices));
        out.push(format!("lemma contexts checked: {}", self.lemma_contexts_checked));
        if let Some(s) = &self.self_coline {
            out.push(format!("self-coline: {}", s.len()));
        }
        if let Some(w) = &self.whitney {
            out.push(format!("whitney pairs: {}", w.len()));
        }
        for c in &self.census_checks {
            let status = if c.ok() { "ok" } else { "MISMATCH" };
            out.push(format!("expected {}: {} found {} {status}", c.key, c.expected, c.found));
        }
        if let Some(p) = &self.partial {
            out.push(format!(
                "partial: {} of {} units failed, resume from {}",
                p.failed_units.len(),
                p.units_total,
                p.resume_cursor
            ));
        }
        if let Some(t) = self.timing.get("total") {
            out.push(format!("seconds: {t:.2}"));
        }
        out
    }
}
