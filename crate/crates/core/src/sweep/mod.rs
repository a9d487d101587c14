//! Exhaustive cross-checking of the decisions against the oracles.
//!
//! Every labelled graph on `max_vertices` vertices with at most
//! `max_edges` edges is an edge subset of `K_n`, so the sweep walks edge
//! bitmasks. Only labellings with non-increasing vertex degrees are checked:
//! every isomorphism class has one, which cuts the work by orders of
//! magnitude without needing an orderly generator. Graphs are canonicalized
//! only when they land in a census or disagree with an oracle.
//!
//! Work is split into units (edge count, highest edge bit) that run on a
//! rayon pool and merge in unit order, so reports do not depend on the
//! number of workers.

mod census;
mod config;
mod report;

pub use census::{self_coline_census, whitney_census};
pub use config::{Check, SweepConfig, SweepError};
pub use report::{CensusCheck, Mismatch, PartialRun, SweepReport, CENSUS_EXPECTATIONS};

use std::collections::{BTreeMap, BTreeSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::characterize::{
    classify_disconnected_coline, decide_coline_hamiltonian_with, decide_coline_tough_with,
    decide_coline_traceable_with, decide_wu_meng, degree_clause_fires, is_wu_meng_exception,
    Catalog, ColineCase,
};
use crate::graphcore::{build_named, coline, for_each_mask_with_top, EdgeSpace, Graph};
use crate::lemmacheck::{check_all, LongestCycleContext};
use crate::oracle::{
    canonical_form, cms_exact, hamiltonian_cycle, hamiltonian_path, is_induced_free, is_tough,
    CanonicalForm,
};

/// Census keys.
pub const TOUGH_NOT_HAMILTONIAN: &str = "tough-not-hamiltonian";
pub const TOUGH_EXCEPTIONS: &str = "tough-exceptions";
pub const TRACE_EXCEPTIONS: &str = "trace-exceptions";
pub const TRACE_CORONA: &str = "trace-corona";
pub const WU_MENG_21: &str = "wu-meng-21";
/// Non-Hamiltonian colines of graphs escaping the degree clauses, found by
/// the oracle; this is the Wu–Meng set plus `K5`.
pub const NON_HAMILTONIAN_BEYOND_DEGREE: &str = "non-hamiltonian-beyond-degree";

/// Every labelled graph on exactly `max_vertices` vertices with at most
/// `max_edges` edges, by edge count and then by edge mask.
pub fn enumerate_labeled(max_vertices: usize, max_edges: usize) -> impl Iterator<Item = Graph> {
    let space = EdgeSpace::new(max_vertices);
    let total = space.pair_count();
    let limit = if total == 64 { u64::MAX } else { 1u64 << total };
    (0..=max_edges.min(total)).flat_map(move |k| {
        let space = space.clone();
        let mut next = Some(if k == 0 { 0 } else { (1u64 << k) - 1 });
        std::iter::from_fn(move || {
            let s = next?;
            next = if s == 0 {
                None
            } else {
                let c = s & s.wrapping_neg();
                let r = s + c;
                let n = (((r ^ s) >> 2) / c) | r;
                (r != 0 && n < limit).then_some(n)
            };
            Some(s)
        })
        .map(move |mask| space.graph(mask))
    })
}

/// A slice of the search: all masks with `edges` bits whose highest set
/// bit is `top`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Unit {
    edges: usize,
    top: usize,
}

fn units(space: &EdgeSpace, max_edges: usize) -> Vec<Unit> {
    let total = space.pair_count();
    let mut out = vec![Unit { edges: 0, top: 0 }];
    for edges in 1..=max_edges.min(total) {
        out.extend((edges - 1..total).map(|top| Unit { edges, top }));
    }
    out
}

#[derive(Default)]
struct UnitResult {
    enumerated: u64,
    scanned: u64,
    mismatches: BTreeMap<(String, CanonicalForm), Mismatch>,
    census: BTreeMap<String, BTreeSet<CanonicalForm>>,
    cases: BTreeMap<String, u64>,
    lemma_contexts: u64,
    timing: BTreeMap<Check, Duration>,
}

impl UnitResult {
    fn merge(&mut self, other: UnitResult) {
        self.enumerated += other.enumerated;
        self.scanned += other.scanned;
        for (k, v) in other.mismatches {
            self.mismatches.entry(k).or_insert(v);
        }
        for (k, v) in other.census {
            self.census.entry(k).or_default().extend(v);
        }
        for (k, v) in other.cases {
            *self.cases.entry(k).or_default() += v;
        }
        self.lemma_contexts += other.lemma_contexts;
        for (k, v) in other.timing {
            *self.timing.entry(k).or_default() += v;
        }
    }

    fn census(&mut self, key: &str, g: &Graph) {
        self.census
            .entry(key.to_string())
            .or_default()
            .insert(canonical_form(&g.strip_isolated()));
    }

    fn mismatch(&mut self, check: Check, g: &Graph, theorem: String, oracle: String) {
        let graph = canonical_form(&g.strip_isolated());
        self.mismatches
            .entry((check.to_string(), graph.clone()))
            .or_insert(Mismatch {
                graph,
                check: check.to_string(),
                theorem,
                oracle,
            });
    }

    fn timed<T>(&mut self, check: Check, f: impl FnOnce(&mut Self) -> T) -> T {
        let start = Instant::now();
        let out = f(self);
        *self.timing.entry(check).or_default() += start.elapsed();
        out
    }
}

fn yes_no(b: bool) -> String {
    if b { "yes" } else { "no" }.to_string()
}

struct Shared<'a> {
    config: &'a SweepConfig,
    catalog: Option<&'a Catalog>,
    pattern: Graph,
    corona: CanonicalForm,
}

fn check_graph(g: &Graph, sh: &Shared<'_>, out: &mut UnitResult) {
    let m = g.edge_count();
    if m == 0 {
        return;
    }
    let l = coline(g).0;
    let want = |c: Check| sh.config.checks.contains(&c);

    let ham = (m >= 3).then(|| hamiltonian_cycle(&l).is_some());
    let tough = (m >= 3).then(|| is_tough(&l));

    if let (Some(t), Some(h)) = (&tough, ham) {
        if t.tough && !h {
            out.census(TOUGH_NOT_HAMILTONIAN, g);
        }
        if !degree_clause_fires(g, 0) {
            if !t.tough {
                out.census(TOUGH_EXCEPTIONS, g);
            }
            if !h {
                out.census(NON_HAMILTONIAN_BEYOND_DEGREE, g);
            }
        }
    }

    if want(Check::Toughness) && m >= 3 {
        let t = tough.as_ref().unwrap();
        // complete colines are tough only vacuously
        if let (Some(cat), false) = (sh.catalog, l.is_complete()) {
            out.timed(Check::Toughness, |out| {
                let d = decide_coline_tough_with(cat, g).expect("m >= 3");
                if d.holds != t.tough {
                    out.mismatch(Check::Toughness, g, yes_no(d.holds), yes_no(t.tough));
                }
            });
        }
    }

    if want(Check::Hamiltonicity) && m >= 3 {
        let h = ham.unwrap();
        out.timed(Check::Hamiltonicity, |out| {
            let wm = decide_wu_meng(g).expect("m >= 3");
            if wm.holds != h {
                out.mismatch(Check::Hamiltonicity, g, format!("wu-meng {}", yes_no(wm.holds)), yes_no(h));
            }
            if is_wu_meng_exception(g) {
                out.census(WU_MENG_21, g);
            }
            if let Some(cat) = sh.catalog {
                let d = decide_coline_hamiltonian_with(cat, g).expect("m >= 3");
                if d.holds != h {
                    out.mismatch(Check::Hamiltonicity, g, yes_no(d.holds), yes_no(h));
                }
                let tough = decide_coline_tough_with(cat, g).expect("m >= 3");
                let trace = decide_coline_traceable_with(cat, g).expect("m >= 3");
                if d.holds && !(tough.holds && trace.holds) {
                    out.mismatch(
                        Check::Hamiltonicity,
                        g,
                        "hamiltonian without tough and traceable".into(),
                        yes_no(h),
                    );
                }
            }
        });
    }

    if (want(Check::Traceability) || want(Check::Hamiltonicity)) && m >= 2 {
        let p = hamiltonian_path(&l).is_some();
        if !p && !degree_clause_fires(g, 1) {
            if canonical_form(&g.strip_isolated()) == sh.corona {
                out.census(TRACE_CORONA, g);
            } else {
                out.census(TRACE_EXCEPTIONS, g);
            }
        }
        if let (Some(cat), true) = (sh.catalog, want(Check::Traceability)) {
            out.timed(Check::Traceability, |out| {
                let d = decide_coline_traceable_with(cat, g).expect("m >= 2");
                if d.holds != p {
                    out.mismatch(Check::Traceability, g, yes_no(d.holds), yes_no(p));
                }
            });
        }
    }

    if want(Check::Classification) {
        out.timed(Check::Classification, |out| {
            let class = classify_disconnected_coline(g);
            let c = l.component_count();
            let expected_case = c >= 2;
            let ok = class.component_count == c
                && (class.case != ColineCase::Connected) == expected_case
                && class.matches_prediction(m);
            if !ok {
                out.mismatch(
                    Check::Classification,
                    g,
                    format!("{} c={} rho={:?}", class.case, class.component_count, class.rho),
                    format!("c={c}"),
                );
            }
            if expected_case {
                let key = match class.case {
                    ColineCase::Star(_) => "star".to_string(),
                    ColineCase::F(_) => "F".to_string(),
                    other => other.to_string(),
                };
                *out.cases.entry(key).or_default() += 1;
            }
        });
    }

    if want(Check::Cms) && m >= 3 {
        if let Some(cat) = sh.catalog {
            out.timed(Check::Cms, |out| {
                let cms = cms_exact(g).expect("m >= 3");
                let d = decide_coline_hamiltonian_with(cat, g).expect("m >= 3");
                if (cms >= 2) != d.holds {
                    out.mismatch(Check::Cms, g, yes_no(d.holds), format!("cms {cms}"));
                }
            });
        }
    }

    if want(Check::LemmaProperties) && ham == Some(false) {
        out.timed(Check::LemmaProperties, |out| {
            if let Ok(ctx) = LongestCycleContext::longest(&l) {
                out.lemma_contexts += 1;
                let root = tough.as_ref().is_some_and(|t| t.tough).then_some(g);
                match check_all(&ctx, root) {
                    Ok(v) if v.is_empty() => {}
                    Ok(v) => out.mismatch(
                        Check::LemmaProperties,
                        g,
                        "no violations".into(),
                        format!("{} violations, first: {}", v.len(), v[0].detail),
                    ),
                    Err(e) => out.mismatch(Check::LemmaProperties, g, "checkable".into(), e.to_string()),
                }
            }
        });
    }

    if want(Check::InducedFreeness) {
        out.timed(Check::InducedFreeness, |out| {
            if !is_induced_free(&l, &sh.pattern) {
                out.mismatch(Check::InducedFreeness, g, "K2∪3K1-free".into(), "contains K2∪3K1".into());
            }
        });
    }
}

fn run_unit(space: &EdgeSpace, unit: Unit, sh: &Shared<'_>) -> UnitResult {
    #[cfg(test)]
    tests::maybe_fail(space.vertices(), unit.edges, unit.top);
    let mut out = UnitResult::default();
    for_each_mask_with_top(space.pair_count(), unit.edges, unit.top, |mask| {
        out.enumerated += 1;
        if !space.is_degree_ordered(mask) {
            return;
        }
        out.scanned += 1;
        check_graph(&space.graph(mask), sh, &mut out);
    });
    out
}

/// Sweep with the process-wide catalog (or none in bootstrap mode).
pub fn run_sweep(config: &SweepConfig) -> Result<SweepReport, SweepError> {
    let catalog = if config.bootstrap {
        None
    } else {
        Some(Catalog::global()?)
    };
    run_sweep_with(config, catalog)
}

/// Sweep against an explicit catalog; with `None`, only the checks that
/// need no catalog run and the censuses are collected.
pub fn run_sweep_with(
    config: &SweepConfig,
    catalog: Option<&Catalog>,
) -> Result<SweepReport, SweepError> {
    config.validate()?;
    let started = Instant::now();
    let space = EdgeSpace::new(config.max_vertices);
    let all_units = units(&space, config.max_edges);
    let start = config.resume_from.min(all_units.len());
    let sh = Shared {
        config,
        catalog,
        pattern: build_named(&"K2u3E1".parse().expect("built-in name")).expect("built-in graph"),
        corona: canonical_form(&build_named(&"K3oK1".parse().expect("built-in name")).expect("built-in graph")),
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.worker_count)
        .build()
        .map_err(|e| SweepError::InvalidConfig(format!("cannot start workers: {e}")))?;
    let results: Vec<Result<UnitResult, ()>> = pool.install(|| {
        all_units[start..]
            .par_iter()
            .map(|&u| catch_unwind(AssertUnwindSafe(|| run_unit(&space, u, &sh))).map_err(|_| ()))
            .collect()
    });

    let mut merged = UnitResult::default();
    let mut failed = Vec::new();
    for (i, r) in results.into_iter().enumerate() {
        match r {
            Ok(r) => merged.merge(r),
            Err(()) => failed.push(start + i),
        }
    }

    let mut timing: BTreeMap<String, f64> = merged
        .timing
        .iter()
        .map(|(k, v)| (k.to_string(), v.as_secs_f64()))
        .collect();

    let mut report = SweepReport::new(config, catalog.is_none());
    report.graphs_enumerated = merged.enumerated;
    report.graphs_scanned = merged.scanned;
    report.mismatches = merged.mismatches.into_values().collect();
    report.exception_census = merged.census;
    report.coline_cases = merged.cases;
    report.lemma_contexts_checked = merged.lemma_contexts;
    report.partial = (!failed.is_empty()).then(|| PartialRun {
        resume_cursor: failed[0],
        failed_units: failed.clone(),
        units_total: all_units.len(),
    });
    if config.checks.contains(&Check::Hamiltonicity) {
        census_cross_check(&mut report);
    }

    if config.checks.contains(&Check::SelfColine) {
        let t = Instant::now();
        report.self_coline = Some(self_coline_census(config.max_vertices.min(8)));
        timing.insert(Check::SelfColine.to_string(), t.elapsed().as_secs_f64());
    }
    if config.checks.contains(&Check::Whitney) {
        let t = Instant::now();
        report.whitney = Some(whitney_census(config.max_vertices.min(6)));
        timing.insert(Check::Whitney.to_string(), t.elapsed().as_secs_f64());
    }
    timing.insert("total".into(), started.elapsed().as_secs_f64());
    report.timing = timing;
    report.finish();
    Ok(report)
}

/// The oracle's non-Hamiltonian set beyond the degree clauses must be the
/// Wu–Meng set plus `K5`.
fn census_cross_check(report: &mut SweepReport) {
    let k5 = canonical_form(&Graph::complete(5));
    let oracle: BTreeSet<CanonicalForm> = report
        .census(NON_HAMILTONIAN_BEYOND_DEGREE)
        .iter()
        .filter(|f| **f != k5)
        .cloned()
        .collect();
    let predicate = report.census(WU_MENG_21).clone();
    for f in oracle.symmetric_difference(&predicate) {
        report.mismatches.push(Mismatch {
            graph: f.clone(),
            check: Check::Hamiltonicity.to_string(),
            theorem: format!("wu-meng exception: {}", yes_no(predicate.contains(f))),
            oracle: format!("non-hamiltonian beyond degree clauses: {}", yes_no(oracle.contains(f))),
        });
    }
}

/// Derive the three exception sets by sweeping without a catalog, validate
/// them, and write the catalog file when `config.output_path` is set.
pub fn bootstrap_catalog(config: &SweepConfig) -> Result<(Catalog, SweepReport), SweepError> {
    if config.max_vertices < 8 || config.max_edges < 10 {
        return Err(SweepError::InvalidConfig(
            "bootstrap needs at least 8 vertices and 10 edges to cover every exception".into(),
        ));
    }
    let mut cfg = config.clone();
    cfg.bootstrap = true;
    cfg.checks = [Check::Hamiltonicity, Check::Traceability].into_iter().collect();
    let report = run_sweep_with(&cfg, None)?;
    if let Some(p) = &report.partial {
        return Err(SweepError::Incomplete(p.failed_units.len()));
    }
    let catalog = Catalog::from_sets(
        report.census(TOUGH_EXCEPTIONS).clone(),
        report.census(TRACE_EXCEPTIONS).clone(),
        report.census(WU_MENG_21).clone(),
        "bootstrap",
    )?;
    if let Some(path) = &config.output_path {
        std::fs::write(path, catalog.to_text()).map_err(|e| SweepError::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
    }
    Ok((catalog, report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::atomic::{AtomicUsize, Ordering};

    static FAIL_AT: AtomicUsize = AtomicUsize::new(usize::MAX);

    pub(super) fn maybe_fail(n: usize, edges: usize, top: usize) {
        if FAIL_AT.load(Ordering::Relaxed) == n * 10_000 + edges * 100 + top {
            panic!("injected failure");
        }
    }

    fn config(n: usize, m: usize, workers: usize) -> SweepConfig {
        SweepConfig {
            max_vertices: n,
            max_edges: m,
            worker_count: workers,
            ..SweepConfig::default()
        }
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_labeled(4, 6).count(), 64);
        assert_eq!(enumerate_labeled(3, 3).count(), 8);
        let expected: u64 = (0..=4).map(|k| crate::graphcore::binomial(15, k)).sum();
        assert_eq!(enumerate_labeled(6, 4).count() as u64, expected);
    }

    #[test]
    fn units_cover_every_mask() {
        let space = EdgeSpace::new(5);
        let sum: u64 = units(&space, 10)
            .iter()
            .map(|u| {
                let mut c = 0;
                for_each_mask_with_top(space.pair_count(), u.edges, u.top, |_| c += 1);
                c
            })
            .sum();
        assert_eq!(sum, 1 << 10);
    }

    #[test]
    fn small_sweep_is_clean_and_worker_independent() {
        let one = run_sweep(&config(6, 8, 1)).unwrap();
        let three = run_sweep(&config(6, 8, 3)).unwrap();
        assert!(one.mismatches.is_empty(), "{:#?}", one.mismatches);
        assert!(one.partial.is_none());
        assert_eq!(one.without_timing(), three.without_timing());
        assert!(one.graphs_scanned < one.graphs_enumerated);
    }

    #[test]
    fn degree_ordered_filter_loses_no_class() {
        // every isomorphism class met by the full enumeration is met by the
        // filtered one
        let space = EdgeSpace::new(5);
        let mut all = BTreeSet::new();
        let mut kept = BTreeSet::new();
        for k in 0..=10 {
            crate::graphcore::for_each_mask(10, k, |mask| {
                let f = canonical_form(&space.graph(mask));
                if space.is_degree_ordered(mask) {
                    kept.insert(f.clone());
                }
                all.insert(f);
            });
        }
        assert_eq!(all.len(), 34);
        assert_eq!(all, kept);
    }

    #[test]
    fn failed_units_give_partial_report() {
        FAIL_AT.store(5 * 10_000 + 3 * 100 + 7, Ordering::Relaxed);
        let r = run_sweep(&config(5, 4, 1)).unwrap();
        FAIL_AT.store(usize::MAX, Ordering::Relaxed);
        let p = r.partial.expect("partial");
        assert_eq!(p.failed_units.len(), 1);
        // resuming from the cursor covers the failed unit again
        let resumed = run_sweep(&SweepConfig {
            resume_from: p.resume_cursor,
            ..config(5, 4, 1)
        })
        .unwrap();
        assert!(resumed.partial.is_none());
        assert!(resumed.graphs_enumerated > 0);
    }
}
