use std::fmt;

use serde::Serialize;

use crate::graphcore::{coline, Graph};

/// Which family a graph with a disconnected coline graph belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ColineCase {
    /// `K_{1,λ}`.
    Star(usize),
    /// An edge meets every other edge and the coline graph has exactly two
    /// components.
    TypeA,
    C4,
    /// `F_k`, including `F_2 = K3`.
    F(usize),
    K4Minus,
    K4,
    /// The coline graph is connected (or has no vertices).
    Connected,
    /// Disconnected coline graph matching none of the families. The
    /// structure theorem says this never happens; the sweep reports it as a
    /// mismatch if it does.
    Unclassified,
}

impl fmt::Display for ColineCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ColineCase::Star(l) => write!(f, "K1,{l}"),
            ColineCase::TypeA => f.write_str("type-A"),
            ColineCase::C4 => f.write_str("C4"),
            ColineCase::F(k) => write!(f, "F{k}"),
            ColineCase::K4Minus => f.write_str("K4-"),
            ColineCase::K4 => f.write_str("K4"),
            ColineCase::Connected => f.write_str("connected"),
            ColineCase::Unclassified => f.write_str("unclassified"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ColineClass {
    pub case: ColineCase,
    /// Components of `co(G)`, counted directly.
    pub component_count: usize,
    /// `m + c(co(G))`, defined only when `co(G)` is disconnected.
    pub rho: Option<usize>,
}

impl ColineClass {
    /// `(c, ρ)` the structure lemma predicts for this case and edge count.
    pub fn predicted(&self, m: usize) -> Option<(usize, usize)> {
        match self.case {
            ColineCase::Star(l) => Some((l, 2 * l)),
            ColineCase::TypeA => Some((2, m + 2)),
            ColineCase::C4 => Some((2, 6)),
            ColineCase::F(k) => Some((3, k + 4)),
            ColineCase::K4Minus => Some((3, 8)),
            ColineCase::K4 => Some((3, 9)),
            ColineCase::Connected | ColineCase::Unclassified => None,
        }
    }

    /// Whether the measured `(c, ρ)` agree with the prediction.
    pub fn matches_prediction(&self, m: usize) -> bool {
        match self.case {
            ColineCase::Connected => self.rho.is_none() && self.component_count <= 1,
            ColineCase::Unclassified => false,
            _ => self.predicted(m) == Some((self.component_count, self.rho.unwrap_or(0))),
        }
    }
}

/// Index of an edge that shares an endpoint with every other edge.
fn dominating_edge(g: &Graph) -> Option<usize> {
    let edges = g.edges();
    (0..edges.len()).find(|&i| (0..edges.len()).all(|j| j == i || edges.adjacent(i, j)))
}

fn star_leaves(g: &Graph) -> Option<usize> {
    let m = g.edge_count();
    (m >= 1 && g.order() == m + 1 && g.max_degree() == m).then_some(m)
}

fn f_index(g: &Graph) -> Option<usize> {
    // F_k: k + 1 vertices and edges, a centre of degree k, and the extra edge
    // between two leaves
    let m = g.edge_count();
    if m < 3 || g.order() != m {
        return None;
    }
    let k = m - 1;
    let centre = (0..g.order()).find(|&v| g.degree(v) == k)?;
    let rest = g.vertex_mask() & !(1u64 << centre);
    let others: Vec<usize> = crate::graphcore::bits(rest).collect();
    let deg2 = others.iter().filter(|&&v| g.degree(v) == 2).count();
    (deg2 == 2 && others.iter().all(|&v| g.degree(v) <= 2)).then_some(k)
}

/// Classify `g` by the structure of its coline graph. Isolated vertices of
/// `g` are ignored.
pub fn classify_disconnected_coline(g: &Graph) -> ColineClass {
    let s = g.strip_isolated();
    let m = s.edge_count();
    let c = coline(&s).0.component_count();
    if c <= 1 {
        return ColineClass {
            case: ColineCase::Connected,
            component_count: c,
            rho: None,
        };
    }
    let n = s.order();
    let case = if let Some(l) = star_leaves(&s) {
        ColineCase::Star(l)
    } else if n == 4 && m == 4 && s.degrees().iter().all(|&d| d == 2) {
        ColineCase::C4
    } else if n == 4 && m == 5 {
        ColineCase::K4Minus
    } else if n == 4 && m == 6 {
        ColineCase::K4
    } else if let Some(k) = f_index(&s) {
        ColineCase::F(k)
    } else if c == 2 && dominating_edge(&s).is_some() {
        ColineCase::TypeA
    } else {
        ColineCase::Unclassified
    };
    ColineClass {
        case,
        component_count: c,
        rho: Some(m + c),
    }
}

/// Some edge meets every other edge, and `co(g)` has exactly 2 components.
pub fn is_type_a(g: &Graph) -> bool {
    let s = g.strip_isolated();
    dominating_edge(&s).is_some() && coline(&s).0.component_count() == 2
}

/// `m + c(co(g))` when `co(g)` is disconnected.
pub fn rho(g: &Graph) -> Option<usize> {
    let c = coline(g).0.component_count();
    (c >= 2).then(|| g.edge_count() + c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphcore::{build_named, NamedGraph};

    fn named(s: &str) -> Graph {
        build_named(&s.parse::<NamedGraph>().unwrap()).unwrap()
    }

    #[test]
    fn lemma_examples() {
        let star = classify_disconnected_coline(&named("K1,4"));
        assert_eq!(star.case, ColineCase::Star(4));
        assert_eq!((star.component_count, star.rho), (4, Some(8)));

        let p4 = classify_disconnected_coline(&named("P4"));
        assert_eq!(p4.case, ColineCase::TypeA);
        assert_eq!((p4.component_count, p4.rho), (2, Some(5)));

        let k4m = classify_disconnected_coline(&named("K4-"));
        assert_eq!(k4m.case, ColineCase::K4Minus);
        assert_eq!((k4m.component_count, k4m.rho), (3, Some(8)));

        let c6 = classify_disconnected_coline(&named("C6"));
        assert_eq!(c6.case, ColineCase::Connected);
        assert_eq!(c6.rho, None);
    }

    #[test]
    fn small_families() {
        let k3 = classify_disconnected_coline(&Graph::complete(3));
        assert_eq!(k3.case, ColineCase::F(2));
        assert_eq!(k3.rho, Some(6));
        let k4 = classify_disconnected_coline(&Graph::complete(4));
        assert_eq!((k4.case, k4.rho), (ColineCase::K4, Some(9)));
        let c4 = classify_disconnected_coline(&named("C4"));
        assert_eq!((c4.case, c4.rho), (ColineCase::C4, Some(6)));
        for k in 2..=6 {
            let f = classify_disconnected_coline(&named(&format!("F{k}")));
            assert_eq!(f.case, ColineCase::F(k));
            assert_eq!(f.rho, Some(k + 4));
            assert!(f.matches_prediction(k + 1));
        }
    }

    #[test]
    fn isolated_vertices_ignored() {
        let g = crate::graphcore::disjoint_union(&named("C4"), &Graph::new(3));
        assert_eq!(classify_disconnected_coline(&g).case, ColineCase::C4);
    }

    #[test]
    fn type_a_examples() {
        assert!(is_type_a(&named("P4")));
        assert!(!is_type_a(&named("C4")));
        assert!(!is_type_a(&named("K1,3")));
    }

    #[test]
    fn rho_examples() {
        assert_eq!(rho(&named("C4")), Some(6));
        assert_eq!(rho(&named("F5")), Some(9));
        assert_eq!(rho(&named("C6")), None);
    }
}
