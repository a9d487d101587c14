use std::fmt;
use std::sync::OnceLock;

use serde::{Serialize, Serializer};

use crate::graphcore::{build_named, NamedGraph};
use crate::oracle::{canonical_form, contains_subgraph, CanonicalForm};
use crate::Graph;

use super::catalog::Catalog;
use super::CharacterizeError;

/// Outcome of a decision: whether the property holds in `co(G)` and, when
/// it fails, the first clause (in statement order) that fired plus every
/// clause that fired.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Decision<C> {
    pub holds: bool,
    pub clause: Option<C>,
    pub all_clauses: Vec<C>,
}

impl<C: Clone> Decision<C> {
    fn from_clauses(all: Vec<C>) -> Self {
        Decision {
            holds: all.is_empty(),
            clause: all.first().cloned(),
            all_clauses: all,
        }
    }
}

macro_rules! serialize_as_display {
    ($($t:ty),*) => {$(
        impl Serialize for $t {
            fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                s.collect_str(self)
            }
        }
    )*};
}

/// Why `co(G)` is not tough.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ToughClause {
    /// `m < 2Δ`.
    FewEdges,
    /// `m = 2Δ` and two vertices of degree `Δ` are adjacent.
    SaturatedAdjacent,
    /// `G` is one of the eighteen catalogued exceptions.
    Exception,
}

impl fmt::Display for ToughClause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ToughClause::FewEdges => "(i) m < 2Δ",
            ToughClause::SaturatedAdjacent => "(ii) m = 2Δ with adjacent degree-Δ vertices",
            ToughClause::Exception => "(iii) toughness exception",
        })
    }
}

/// Why `co(G)` is not Hamiltonian: it is not tough, or `G` is one of the
/// four tough exceptions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HamClause {
    NotTough(ToughClause),
    K5,
    H1,
    H2,
    H3,
}

impl fmt::Display for HamClause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HamClause::NotTough(c) => write!(f, "not tough: {c}"),
            HamClause::K5 => f.write_str("K5"),
            HamClause::H1 => f.write_str("H1"),
            HamClause::H2 => f.write_str("H2"),
            HamClause::H3 => f.write_str("H3"),
        }
    }
}

/// Clauses of the Wu–Meng characterization of non-Hamiltonian colines.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WuMengClause {
    /// `m < 2Δ`.
    FewEdges,
    /// `m = 2Δ` with two adjacent degree-`Δ` vertices.
    SaturatedAdjacent,
    /// `G` is `K3∪P3`, `K3∪2K2` or `C4∪K2`.
    ForbiddenUnion(&'static str),
    /// The edge count and a (not necessarily induced) subgraph match one of
    /// `m = 6, K3+`; `m = 7, K4-` or `K3∘K1`; `m = 8, K4`.
    Subgraph(&'static str),
    /// `G` is `K5`.
    K5,
}

impl fmt::Display for WuMengClause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WuMengClause::FewEdges => f.write_str("(i) m < 2Δ"),
            WuMengClause::SaturatedAdjacent => {
                f.write_str("(ii) m = 2Δ with adjacent degree-Δ vertices")
            }
            WuMengClause::ForbiddenUnion(name) => write!(f, "(iii) G is {name}"),
            WuMengClause::Subgraph(name) => write!(f, "(iv) subgraph {name}"),
            WuMengClause::K5 => f.write_str("(v) G is K5"),
        }
    }
}

/// Why `co(G)` has no Hamiltonian path.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TraceClause {
    /// `m < 2Δ - 1`.
    FewEdges,
    /// `m = 2Δ - 1` with two adjacent degree-`Δ` vertices.
    SaturatedAdjacent,
    /// `G` is one of the nine catalogued exceptions.
    Exception,
    /// `G` is `K3∘K1`.
    Corona,
}

impl fmt::Display for TraceClause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TraceClause::FewEdges => "(i) m < 2Δ-1",
            TraceClause::SaturatedAdjacent => "(ii) m = 2Δ-1 with adjacent degree-Δ vertices",
            TraceClause::Exception => "(iii) traceability exception",
            TraceClause::Corona => "(iv) G is K3oK1",
        })
    }
}

serialize_as_display!(ToughClause, HamClause, WuMengClause, TraceClause);

/// Clauses (i) and (ii) shared by every decision, with `2Δ - slack` as the
/// threshold.
fn degree_clauses(g: &Graph, slack: usize) -> (bool, bool) {
    let m = g.edge_count();
    let delta = g.max_degree();
    let threshold = 2 * delta;
    let few = m + slack < threshold;
    let saturated = m + slack == threshold && {
        let top = (0..g.order())
            .filter(|&v| g.degree(v) == delta)
            .fold(0u64, |acc, v| acc | 1u64 << v);
        crate::graphcore::bits(top).any(|v| g.neighbors(v) & top != 0)
    };
    (few, saturated)
}

fn require_edges(g: &Graph, need: usize, what: &'static str) -> Result<(), CharacterizeError> {
    let m = g.edge_count();
    if m < need {
        return Err(CharacterizeError::OutOfScope { what, need, m });
    }
    Ok(())
}

fn forms(names: &[&'static str]) -> Vec<(&'static str, CanonicalForm)> {
    names
        .iter()
        .map(|&name| {
            let spec: NamedGraph = name.parse().expect("built-in name");
            (name, canonical_form(&build_named(&spec).expect("built-in graph")))
        })
        .collect()
}

fn tough_exceptions() -> &'static [(&'static str, CanonicalForm)] {
    static CELL: OnceLock<Vec<(&'static str, CanonicalForm)>> = OnceLock::new();
    CELL.get_or_init(|| forms(&["K5", "H1", "H2", "H3"]))
}

fn forbidden_unions() -> &'static [(&'static str, CanonicalForm)] {
    static CELL: OnceLock<Vec<(&'static str, CanonicalForm)>> = OnceLock::new();
    CELL.get_or_init(|| forms(&["K3∪P3", "K3∪2K2", "C4∪K2"]))
}

fn named_pattern(name: &str) -> Graph {
    build_named(&name.parse().expect("built-in name")).expect("built-in graph")
}

/// Canonical form of `g` without isolated vertices, computed on demand.
struct Stripped {
    graph: Graph,
    form: Option<CanonicalForm>,
}

impl Stripped {
    fn new(g: &Graph) -> Self {
        Stripped {
            graph: g.strip_isolated(),
            form: None,
        }
    }

    fn form(&mut self) -> &CanonicalForm {
        let graph = &self.graph;
        self.form.get_or_insert_with(|| canonical_form(graph))
    }

    fn is(&mut self, target: &CanonicalForm) -> bool {
        // cheap size screen before canonicalizing
        let t = target.graph();
        if t.order() != self.graph.order() || t.edge_count() != self.graph.edge_count() {
            return false;
        }
        self.form() == target
    }
}

/// Toughness of `co(g)` from the edge count, the maximum degree and the
/// catalogue of eighteen exceptions. Needs `m >= 3`.
pub fn decide_coline_tough(g: &Graph) -> Result<Decision<ToughClause>, CharacterizeError> {
    decide_coline_tough_with(Catalog::global()?, g)
}

pub fn decide_coline_tough_with(
    catalog: &Catalog,
    g: &Graph,
) -> Result<Decision<ToughClause>, CharacterizeError> {
    require_edges(g, 3, "toughness")?;
    Ok(tough_clauses(catalog, g))
}

fn tough_clauses(catalog: &Catalog, g: &Graph) -> Decision<ToughClause> {
    let (few, saturated) = degree_clauses(g, 0);
    let mut all = Vec::new();
    if few {
        all.push(ToughClause::FewEdges);
    }
    if saturated {
        all.push(ToughClause::SaturatedAdjacent);
    }
    let mut s = Stripped::new(g);
    if catalog.may_contain_tough(s.graph.order(), s.graph.edge_count())
        && catalog.toughness_exceptions.contains(s.form())
    {
        all.push(ToughClause::Exception);
    }
    Decision::from_clauses(all)
}

/// Hamiltonicity of `co(g)`: tough and not `K5`, `H1`, `H2` or `H3`.
/// Needs `m >= 3`.
pub fn decide_coline_hamiltonian(g: &Graph) -> Result<Decision<HamClause>, CharacterizeError> {
    decide_coline_hamiltonian_with(Catalog::global()?, g)
}

pub fn decide_coline_hamiltonian_with(
    catalog: &Catalog,
    g: &Graph,
) -> Result<Decision<HamClause>, CharacterizeError> {
    require_edges(g, 3, "Hamiltonicity")?;
    let tough = tough_clauses(catalog, g);
    let mut all: Vec<HamClause> = tough.all_clauses.iter().map(|&c| HamClause::NotTough(c)).collect();
    let mut s = Stripped::new(g);
    let m = s.graph.edge_count();
    if m == 7 || m == 10 {
        for (name, form) in tough_exceptions() {
            if s.is(form) {
                all.push(match *name {
                    "K5" => HamClause::K5,
                    "H1" => HamClause::H1,
                    "H2" => HamClause::H2,
                    _ => HamClause::H3,
                });
            }
        }
    }
    Ok(Decision::from_clauses(all))
}

/// Hamiltonicity of `co(g)` by the older Wu–Meng characterization, which
/// needs no catalogue. Needs `m >= 3`.
pub fn decide_wu_meng(g: &Graph) -> Result<Decision<WuMengClause>, CharacterizeError> {
    require_edges(g, 3, "Hamiltonicity")?;
    let (few, saturated) = degree_clauses(g, 0);
    let mut all = Vec::new();
    if few {
        all.push(WuMengClause::FewEdges);
    }
    if saturated {
        all.push(WuMengClause::SaturatedAdjacent);
    }
    let mut s = Stripped::new(g);
    if (5..=7).contains(&s.graph.edge_count()) {
        for (name, form) in forbidden_unions() {
            if s.is(form) {
                all.push(WuMengClause::ForbiddenUnion(name));
            }
        }
    }
    let patterns: &[&'static str] = match g.edge_count() {
        6 => &["K3+"],
        7 => &["K4-", "K3oK1"],
        8 => &["K4"],
        _ => &[],
    };
    for &p in patterns {
        if contains_subgraph(&s.graph, &named_pattern(p)) {
            all.push(WuMengClause::Subgraph(p));
        }
    }
    if s.graph.edge_count() == 10 && s.is(&tough_exceptions()[0].1) {
        all.push(WuMengClause::K5);
    }
    Ok(Decision::from_clauses(all))
}

/// Whether `g` meets clause (iii) or (iv) of the Wu–Meng characterization
/// but neither (i) nor (ii). Exactly 21 graphs do.
pub fn is_wu_meng_exception(g: &Graph) -> bool {
    match decide_wu_meng(g) {
        Ok(d) => {
            let has = |f: fn(&WuMengClause) -> bool| d.all_clauses.iter().any(f);
            has(|c| matches!(c, WuMengClause::ForbiddenUnion(_) | WuMengClause::Subgraph(_)))
                && !has(|c| {
                    matches!(c, WuMengClause::FewEdges | WuMengClause::SaturatedAdjacent)
                })
        }
        Err(_) => false,
    }
}

/// Traceability of `co(g)`. Needs `m >= 2`.
pub fn decide_coline_traceable(g: &Graph) -> Result<Decision<TraceClause>, CharacterizeError> {
    decide_coline_traceable_with(Catalog::global()?, g)
}

pub fn decide_coline_traceable_with(
    catalog: &Catalog,
    g: &Graph,
) -> Result<Decision<TraceClause>, CharacterizeError> {
    require_edges(g, 2, "traceability")?;
    let (few, saturated) = degree_clauses(g, 1);
    let mut all = Vec::new();
    if few {
        all.push(TraceClause::FewEdges);
    }
    if saturated {
        all.push(TraceClause::SaturatedAdjacent);
    }
    let mut s = Stripped::new(g);
    if catalog.may_contain_trace(s.graph.order(), s.graph.edge_count())
        && catalog.trace_exceptions.contains(s.form())
    {
        all.push(TraceClause::Exception);
    }
    if s.graph.edge_count() == 6 && s.is(catalog.corona()) {
        all.push(TraceClause::Corona);
    }
    Ok(Decision::from_clauses(all))
}

/// `m < 2Δ - slack`, or `m = 2Δ - slack` with adjacent degree-`Δ` vertices:
/// the analytic clauses shared by the toughness (`slack = 0`) and
/// traceability (`slack = 1`) decisions.
pub fn degree_clause_fires(g: &Graph, slack: usize) -> bool {
    let (few, saturated) = degree_clauses(g, slack);
    few || saturated
}

/// `l` with one dominating vertex added is tough.
pub fn is_pseudo_tough(l: &Graph) -> bool {
    crate::oracle::is_tough(&crate::graphcore::add_dominating_vertex(l)).tough
}

#[cfg(test)]
mod tests {
    use super::*;

    fn named(s: &str) -> Graph {
        named_pattern(s)
    }

    #[test]
    fn toughness_examples() {
        let d = decide_coline_tough(&named("K1,3")).unwrap();
        assert!(!d.holds);
        assert_eq!(d.clause, Some(ToughClause::FewEdges));
        let d = decide_coline_tough(&named("C4uK2")).unwrap();
        assert_eq!(d.clause, Some(ToughClause::Exception));
        assert!(decide_coline_tough(&named("K5")).unwrap().holds);
        assert!(decide_coline_tough(&named("H1")).unwrap().holds);
    }

    #[test]
    fn degenerate_sizes_are_rejected() {
        assert!(matches!(
            decide_coline_tough(&named("P3")),
            Err(CharacterizeError::OutOfScope { need: 3, m: 2, .. })
        ));
        assert!(decide_coline_traceable(&named("K2")).is_err());
        assert!(decide_coline_traceable(&named("P3")).is_ok());
    }

    #[test]
    fn hamiltonian_examples() {
        let d = decide_coline_hamiltonian(&named("K5")).unwrap();
        assert_eq!(d.clause, Some(HamClause::K5));
        let d = decide_coline_hamiltonian(&named("H3")).unwrap();
        assert_eq!(d.clause, Some(HamClause::H3));
        assert!(decide_coline_hamiltonian(&named("C6")).unwrap().holds);
    }

    #[test]
    fn wu_meng_examples() {
        let d = decide_wu_meng(&named("K3u2K2")).unwrap();
        assert_eq!(d.clause, Some(WuMengClause::ForbiddenUnion("K3∪2K2")));
        let d = decide_wu_meng(&named("H2")).unwrap();
        assert!(d.all_clauses.contains(&WuMengClause::Subgraph("K3oK1")));
        assert!(matches!(d.clause, Some(WuMengClause::Subgraph(_))));
        let d = decide_wu_meng(&named("K5")).unwrap();
        assert_eq!(d.clause, Some(WuMengClause::K5));
        assert!(decide_wu_meng(&named("C6")).unwrap().holds);
        assert!(is_wu_meng_exception(&named("H1")));
        assert!(!is_wu_meng_exception(&named("K5")));
    }

    #[test]
    fn traceability_examples() {
        let d = decide_coline_traceable(&named("K3oK1")).unwrap();
        assert_eq!(d.clause, Some(TraceClause::Corona));
        let d = decide_coline_traceable(&named("P3")).unwrap();
        assert_eq!(d.clause, Some(TraceClause::FewEdges));
        assert!(decide_coline_traceable(&named("K5")).unwrap().holds);
    }

    #[test]
    fn isolated_vertices_do_not_change_verdicts() {
        let padded = crate::graphcore::disjoint_union(&named("H2"), &Graph::new(2));
        assert_eq!(
            decide_coline_hamiltonian(&padded).unwrap().clause,
            Some(HamClause::H2)
        );
        let padded = crate::graphcore::disjoint_union(&named("C4uK2"), &Graph::new(1));
        assert!(!decide_coline_tough(&padded).unwrap().holds);
    }

    #[test]
    fn pseudo_toughness() {
        use crate::graphcore::coline;
        assert!(is_pseudo_tough(&coline(&named("K3oK1")).0));
        assert!(!is_pseudo_tough(&Graph::new(2)));
        assert!(is_pseudo_tough(&coline(&named("C6")).0));
    }

    #[test]
    fn clause_strings() {
        let json = serde_json::to_string(&decide_wu_meng(&named("K5")).unwrap()).unwrap();
        assert!(json.contains("\"(v) G is K5\""), "{json}");
    }
}
