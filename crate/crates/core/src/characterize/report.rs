use serde::Serialize;

use crate::graphcore::coline;
use crate::oracle::{canonical_form, hamiltonian_cycle, hamiltonian_path, is_tough, CanonicalForm};
use crate::Graph;

use super::catalog::Catalog;
use super::decide::{
    decide_coline_hamiltonian_with, decide_coline_tough_with, decide_coline_traceable_with,
    decide_wu_meng, Decision, HamClause, ToughClause, TraceClause, WuMengClause,
};
use super::CharacterizeError;

/// Coline graphs above this many vertices are not handed to the oracles.
pub const ORACLE_VERTEX_LIMIT: usize = 20;

/// Largest inputs (non-isolated vertices, edges) covered by the exhaustive
/// sweep, inside which every decision has been checked against the oracles.
pub const SWEPT_RANGE: (usize, usize) = (8, 10);

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum Verdict<C> {
    Decided(Decision<C>),
    OutOfScope { reason: String },
}

impl<C> Verdict<C> {
    fn from(result: Result<Decision<C>, CharacterizeError>) -> Result<Self, CharacterizeError> {
        match result {
            Ok(d) => Ok(Verdict::Decided(d)),
            Err(e @ CharacterizeError::OutOfScope { .. }) => Ok(Verdict::OutOfScope {
                reason: e.to_string(),
            }),
            Err(e) => Err(e),
        }
    }

    pub fn holds(&self) -> Option<bool> {
        match self {
            Verdict::Decided(d) => Some(d.holds),
            Verdict::OutOfScope { .. } => None,
        }
    }
}

/// What the exact searches say about `co(G)`, with witnesses.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleCheck {
    pub tough: bool,
    /// `co(G)` is complete, so it has no cutset at all.
    pub tough_vacuous: bool,
    pub cutset: Option<Vec<usize>>,
    pub hamiltonian: bool,
    pub cycle: Option<Vec<usize>>,
    pub traceable: bool,
    pub path: Option<Vec<usize>>,
    /// Verdicts that disagree with the oracle, by name.
    pub disagreements: Vec<String>,
}

impl OracleCheck {
    pub fn agrees(&self) -> bool {
        self.disagreements.is_empty()
    }
}

/// Every decision about `co(G)` for one input graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecisionReport {
    pub graph_id: CanonicalForm,
    pub n: usize,
    pub m: usize,
    pub max_degree: usize,
    pub tough: Verdict<ToughClause>,
    pub hamiltonian: Verdict<HamClause>,
    pub wu_meng: Verdict<WuMengClause>,
    pub traceable: Verdict<TraceClause>,
    pub oracle: Option<OracleCheck>,
    /// The input lies inside the exhaustively swept range.
    pub in_swept_range: bool,
}

impl DecisionReport {
    pub fn provenance(&self) -> &'static str {
        if self.in_swept_range {
            "oracle-verified by exhaustive sweep"
        } else {
            "theorem-asserted, not oracle-verified"
        }
    }
}

/// Run every decision on `g`; with `verify`, also run the oracles on
/// `co(g)` and record any disagreement.
pub fn classify_graph(
    catalog: &Catalog,
    g: &Graph,
    verify: bool,
) -> Result<DecisionReport, CharacterizeError> {
    let s = g.strip_isolated();
    let m = g.edge_count();
    let report = DecisionReport {
        graph_id: canonical_form(g),
        n: g.order(),
        m,
        max_degree: g.max_degree(),
        tough: Verdict::from(decide_coline_tough_with(catalog, g))?,
        hamiltonian: Verdict::from(decide_coline_hamiltonian_with(catalog, g))?,
        wu_meng: Verdict::from(decide_wu_meng(g))?,
        traceable: Verdict::from(decide_coline_traceable_with(catalog, g))?,
        oracle: None,
        in_swept_range: s.order() <= SWEPT_RANGE.0 && m <= SWEPT_RANGE.1,
    };
    if !verify {
        return Ok(report);
    }
    if m > ORACLE_VERTEX_LIMIT {
        return Err(CharacterizeError::TooLargeToVerify {
            vertices: m,
            limit: ORACLE_VERTEX_LIMIT,
        });
    }
    let l = coline(g).0;
    let t = is_tough(&l);
    let cycle = hamiltonian_cycle(&l);
    let path = hamiltonian_path(&l);
    let mut check = OracleCheck {
        tough: t.tough,
        tough_vacuous: t.vacuous,
        cutset: t.witness.map(|w| w.cutset),
        hamiltonian: cycle.is_some(),
        cycle: cycle.map(|c| c.vertices),
        traceable: path.is_some(),
        path: path.map(|p| p.vertices),
        disagreements: Vec::new(),
    };
    // complete colines and colines on fewer than 3 vertices say nothing
    // about the toughness characterization
    let tough_comparable = l.order() >= 3 && !l.is_complete();
    let pairs = [
        ("tough", report.tough.holds().filter(|_| tough_comparable), check.tough),
        ("hamiltonian", report.hamiltonian.holds(), check.hamiltonian),
        ("wu_meng", report.wu_meng.holds(), check.hamiltonian),
        ("traceable", report.traceable.holds(), check.traceable),
    ];
    for (name, decided, oracle) in pairs {
        if decided.is_some_and(|d| d != oracle) {
            check.disagreements.push(name.to_string());
        }
    }
    Ok(DecisionReport {
        oracle: Some(check),
        ..report
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphcore::{build_named, NamedGraph};

    fn classify(name: &str, verify: bool) -> DecisionReport {
        let g = build_named(&name.parse::<NamedGraph>().unwrap()).unwrap();
        classify_graph(Catalog::global().unwrap(), &g, verify).unwrap()
    }

    #[test]
    fn k5_report() {
        let r = classify("K5", true);
        assert_eq!(r.tough.holds(), Some(true));
        assert_eq!(r.hamiltonian.holds(), Some(false));
        assert_eq!(r.traceable.holds(), Some(true));
        let o = r.oracle.unwrap();
        assert!(o.agrees(), "{:?}", o.disagreements);
        assert!(o.path.is_some() && o.cycle.is_none());
    }

    #[test]
    fn out_of_scope_is_reported_not_failed() {
        let r = classify("P3", true);
        assert!(matches!(r.tough, Verdict::OutOfScope { .. }));
        assert_eq!(r.traceable.holds(), Some(false));
        assert!(r.oracle.unwrap().agrees());
    }

    #[test]
    fn provenance_label() {
        assert!(classify("C6", false).in_swept_range);
        let big = classify("K1,12", false);
        assert!(!big.in_swept_range);
        assert_eq!(big.provenance(), "theorem-asserted, not oracle-verified");
    }
}
