//! End-to-end acceptance checks. Runs as a plain binary (no libtest
//! harness) and prints one PASS/FAIL line per criterion; exits non-zero if
//! any criterion fails.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use coline::characterize::{
    classify_disconnected_coline, decide_coline_hamiltonian, rho, Catalog, ColineCase,
};
use coline::graphcore::{
    add_dominating_vertex, coline, disjoint_union, for_each_mask, named, EdgeSpace, Graph,
};
use coline::lemmacheck::{check_all, negative_controls, Lemma, LongestCycleContext};
use coline::oracle::{
    canonical_form, hamiltonian_cycle, hamiltonian_path, is_induced_free, is_isomorphic,
    is_tough, longest_cycle, CanonicalForm,
};
use coline::sweep::{
    run_sweep, self_coline_census, whitney_census, Check, SweepConfig, SweepReport,
    TOUGH_EXCEPTIONS, TOUGH_NOT_HAMILTONIAN, TRACE_CORONA, TRACE_EXCEPTIONS, WU_MENG_21,
    NON_HAMILTONIAN_BEYOND_DEGREE,
};

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn form(name: &str) -> CanonicalForm {
    canonical_form(&named(name).unwrap())
}

fn forms(names: &[&str]) -> BTreeSet<CanonicalForm> {
    names.iter().map(|n| form(n)).collect()
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn no_mismatches(report: &SweepReport, check: Check) -> Result<(), String> {
    let name = check.to_string();
    let bad: Vec<_> = report.mismatches.iter().filter(|m| m.check == name).collect();
    ensure(
        bad.is_empty(),
        format!("{} {name} mismatches, first {:?}", bad.len(), bad.first()),
    )
}

/// One graph per isomorphism class on at most `n` vertices (padded with
/// isolated vertices to exactly `n`).
fn classes_up_to(n: usize) -> Vec<Graph> {
    let space = EdgeSpace::new(n);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for k in 0..=space.pair_count() {
        for_each_mask(space.pair_count(), k, |mask| {
            if space.is_degree_ordered(mask) {
                let g = space.graph(mask);
                if seen.insert(canonical_form(&g)) {
                    out.push(g);
                }
            }
        });
    }
    out
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    ensure(elapsed < limit, format!("took {elapsed:?}, limit {limit:?}"))
}

fn petersen() -> Outcome {
    let start = Instant::now();
    let l = coline(&named("K5").unwrap()).0;
    ensure(is_isomorphic(&l, &named("Petersen").unwrap()).is_some(), "co(K5) is not Petersen")?;
    ensure(hamiltonian_cycle(&l).is_none(), "found a Hamiltonian cycle")?;
    let longest = longest_cycle(&l).map_or(0, |c| c.len());
    ensure(longest == 9, format!("longest cycle {longest}"))?;
    let path = hamiltonian_path(&l).ok_or("no Hamiltonian path")?;
    ensure(path.is_spanning_in(&l), "path is not spanning")?;
    within(start.elapsed(), Duration::from_secs(1))?;
    Ok(format!("longest cycle 9, Hamiltonian path found in {:?}", start.elapsed()))
}

fn tough_non_hamiltonian(r: &SweepReport) -> Outcome {
    let got = r.census(TOUGH_NOT_HAMILTONIAN);
    let want = forms(&["K5", "H1", "H2", "H3"]);
    ensure(got == &want, format!("found {got:?}"))?;
    Ok(format!("{{K5, H1, H2, H3}}, sweep wall time {:.1}s", r.timing["total"]))
}

fn toughness_exceptions(r: &SweepReport) -> Outcome {
    no_mismatches(r, Check::Toughness)?;
    let got = r.census(TOUGH_EXCEPTIONS);
    ensure(got.len() == 18, format!("{} exceptions", got.len()))?;
    let catalog = Catalog::global().map_err(|e| e.to_string())?;
    ensure(got == &catalog.toughness_exceptions, "census differs from the catalog")?;
    Ok("decisions match the oracle, 18 exception classes".into())
}

fn wu_meng(r: &SweepReport) -> Outcome {
    no_mismatches(r, Check::Hamiltonicity)?;
    let got = r.census(WU_MENG_21);
    ensure(got.len() == 21, format!("{} Wu–Meng graphs", got.len()))?;
    let mut beyond = r.census(NON_HAMILTONIAN_BEYOND_DEGREE).clone();
    beyond.remove(&form("K5"));
    ensure(&beyond == got, "oracle non-Hamiltonian set minus K5 differs from the 21")?;
    Ok("both decisions match the oracle, 21 classes".into())
}

fn traceability(r: &SweepReport) -> Outcome {
    no_mismatches(r, Check::Traceability)?;
    let got = r.census(TRACE_EXCEPTIONS);
    ensure(got.len() == 9, format!("{} trace exceptions", got.len()))?;
    ensure(r.census(TRACE_CORONA) == &forms(&["K3oK1"]), "corona clause is not exactly K3oK1")?;
    Ok("decisions match path search, 9 exceptions plus K3oK1".into())
}

fn h_graphs() -> Outcome {
    let start = Instant::now();
    for name in ["H1", "H2", "H3"] {
        let g = named(name).unwrap();
        let l = coline(&g).0;
        ensure(is_tough(&l).tough, format!("co({name}) not tough"))?;
        ensure(hamiltonian_cycle(&l).is_none(), format!("co({name}) Hamiltonian"))?;
        let ctx = LongestCycleContext::longest(&l).map_err(|e| e.to_string())?;
        let v = check_all(&ctx, Some(&g)).map_err(|e| e.to_string())?;
        ensure(v.is_empty(), format!("co({name}): {} violations", v.len()))?;
    }
    within(start.elapsed(), Duration::from_secs(1))?;
    Ok(format!("tough, non-Hamiltonian, lemmas hold ({:?})", start.elapsed()))
}

fn disconnected_classification(r: &SweepReport) -> Outcome {
    no_mismatches(r, Check::Classification)?;
    let mut expected: Vec<(String, usize)> = vec![
        ("C4".into(), 6),
        ("K4-".into(), 8),
        ("K4".into(), 9),
    ];
    expected.extend((2..=6).map(|k| (format!("F{k}"), k + 4)));
    expected.extend((2..=8).map(|l| (format!("K1,{l}"), 2 * l)));
    for (name, want) in &expected {
        let g = named(name).unwrap();
        let class = classify_disconnected_coline(&g);
        let c = coline(&g).0.component_count();
        ensure(class.case != ColineCase::Connected, format!("{name} classified connected"))?;
        ensure(class.component_count == c, format!("{name}: c {} vs oracle {c}", class.component_count))?;
        ensure(class.rho == Some(*want) && rho(&g) == Some(*want), format!("{name}: rho {:?}", class.rho))?;
    }
    let total: u64 = r.coline_cases.values().sum();
    Ok(format!("{total} swept disconnected colines, {} named cases", expected.len()))
}

fn lemma_suite(r: &SweepReport) -> Outcome {
    no_mismatches(r, Check::LemmaProperties)?;
    ensure(r.lemma_contexts_checked > 0, "no longest-cycle contexts checked")?;
    let mut fired = BTreeSet::new();
    for control in negative_controls() {
        let ctx = LongestCycleContext::with_cycle(&control.host, control.cycle.clone())
            .map_err(|e| e.to_string())?;
        let v = check_all(&ctx, control.root.as_ref()).map_err(|e| e.to_string())?;
        for lemma in &control.fires {
            ensure(v.iter().any(|x| x.lemma == *lemma), format!("{lemma} silent on {}", control.name))?;
            fired.insert(lemma.to_string());
        }
    }
    let all = [
        Lemma::NeighborGaps,
        Lemma::NoCrossingPaths,
        Lemma::IndependentSets,
        Lemma::CommonArg,
        Lemma::NonXyEdges,
        Lemma::TrivialComponents,
    ];
    for lemma in all {
        ensure(fired.contains(&lemma.to_string()), format!("no control for {lemma}"))?;
    }
    Ok(format!("{} contexts clean, every verifier fires on its control", r.lemma_contexts_checked))
}

fn trace_bridge() -> Outcome {
    let k2 = named("K2").unwrap();
    let mut checked = 0;
    for g in classes_up_to(6) {
        // one edge gives L = K1, traceable, but L* = K2 has no cycle at all
        if g.edge_count() < 2 {
            continue;
        }
        let l = coline(&g).0;
        let star = add_dominating_vertex(&l);
        ensure(
            hamiltonian_path(&l).is_some() == hamiltonian_cycle(&star).is_some(),
            format!("bridge fails for {}", canonical_form(&g)),
        )?;
        ensure(
            is_isomorphic(&star, &coline(&disjoint_union(&g, &k2)).0).is_some(),
            format!("L* is not co(G ∪ K2) for {}", canonical_form(&g)),
        )?;
        checked += 1;
    }
    Ok(format!("{checked} classes on at most 6 vertices with m >= 2"))
}

fn censuses() -> Outcome {
    let selfs = self_coline_census(7);
    ensure(selfs == forms(&["C5", "K3oK1"]), format!("self-coline {selfs:?}"))?;
    let whitney = whitney_census(6);
    let (a, b) = (form("K3"), form("K1,3"));
    let pair = if a < b { (a, b) } else { (b, a) };
    ensure(whitney == vec![pair], format!("Whitney {whitney:?}"))?;
    Ok("{C5, K3oK1} and {(K3, K1,3)}".into())
}

fn induced_freeness(r: &SweepReport) -> Outcome {
    no_mismatches(r, Check::InducedFreeness)?;
    let pattern = named("K2u3K1").unwrap();
    let classes = classes_up_to(6);
    for g in &classes {
        ensure(
            is_induced_free(&coline(g).0, &pattern),
            format!("co({}) contains K2 ∪ 3K1", canonical_form(g)),
        )?;
    }
    Ok(format!("{} classes on at most 6 vertices, plus the full sweep", classes.len()))
}

fn cms(r: &SweepReport) -> Outcome {
    no_mismatches(r, Check::Cms)?;
    // spot checks outside the sweep's internal comparison
    for (name, ham) in [("K5", false), ("C7", true), ("H2", false), ("4K2", true)] {
        let g = named(name).unwrap();
        let k = coline::oracle::cms_exact(&g).map_err(|e| e.to_string())?;
        let d = decide_coline_hamiltonian(&g).map_err(|e| e.to_string())?;
        ensure((k >= 2) == d.holds && d.holds == ham, format!("{name}: cms {k}"))?;
    }
    Ok("cms >= 2 exactly when co(G) is Hamiltonian, m <= 10".into())
}

fn main() {
    let start = Instant::now();
    let config = SweepConfig::default();
    let report = run_sweep(&config).expect("sweep runs");
    let sweep_ok = report.partial.is_none() && report.max_vertices == 8 && report.max_edges == 10;
    let sweep_time = start.elapsed();

    let criteria: Vec<Criterion<'_>> = vec![
        ("co(K5) is the Petersen graph", Box::new(petersen)),
        ("tough non-Hamiltonian colines", Box::new(|| tough_non_hamiltonian(&report))),
        ("toughness decision and exceptions", Box::new(|| toughness_exceptions(&report))),
        ("Wu–Meng equivalence", Box::new(|| wu_meng(&report))),
        ("traceability decision", Box::new(|| traceability(&report))),
        ("H1, H2, H3", Box::new(h_graphs)),
        ("disconnected coline classification", Box::new(|| disconnected_classification(&report))),
        ("longest-cycle lemma suite", Box::new(|| lemma_suite(&report))),
        ("pseudo-toughness bridge", Box::new(trace_bridge)),
        ("self-coline and Whitney censuses", Box::new(censuses)),
        ("(K2 ∪ 3K1)-freeness", Box::new(|| induced_freeness(&report))),
        ("cms consistency", Box::new(|| cms(&report))),
    ];

    println!(
        "sweep: n <= 8, m <= 10, {} graphs scanned, {} mismatches, {:.1}s",
        report.graphs_scanned,
        report.mismatches.len(),
        sweep_time.as_secs_f64()
    );
    let mut failed = 0;
    if !sweep_ok {
        println!("FAIL sweep incomplete: {:?}", report.partial);
        failed += 1;
    }
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS criterion {}: {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {}: {name}: {why}", i + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
    println!("all {} criteria passed", criteria.len());
}
