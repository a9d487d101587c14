use std::fmt;

use serde::{Deserialize, Serialize};

use crate::graph6;
use crate::graphcore::Graph;

use super::iso::refine;

/// Isomorphism-invariant key of a graph, rendered as graph6 of the
/// canonically relabelled graph.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CanonicalForm(String);

impl CanonicalForm {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn as_bytes(&self) -> &[u8] {
        self.0.as_bytes()
    }

    /// The canonical representative itself.
    pub fn graph(&self) -> Graph {
        graph6::parse(&self.0).expect("canonical forms are valid graph6")
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Canonical form by individualisation and refinement: every branch of the
/// search tree is explored (pruning only swaps of twin vertices, which are
/// automorphisms fixing the current partition), and the relabelled
/// adjacency matrix that is lexicographically largest wins.
pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let labeling = canonical_labeling(g);
    CanonicalForm(graph6::emit(&g.relabel(&labeling)))
}

/// `labeling[v]` is the canonical position of vertex `v`.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    let n = g.order();
    if n == 0 {
        return vec![];
    }
    let start = refine(g, vec![(0..n).collect()]);
    let mut best: Option<(Vec<u64>, Vec<usize>)> = None;
    search(g, start, &mut best);
    let (_, order) = best.unwrap();
    let mut labeling = vec![0; n];
    for (pos, &v) in order.iter().enumerate() {
        labeling[v] = pos;
    }
    labeling
}

fn search(g: &Graph, cells: Vec<Vec<usize>>, best: &mut Option<(Vec<u64>, Vec<usize>)>) {
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let key = relabelled_rows(g, &order);
        if best.as_ref().is_none_or(|(b, _)| key > *b) {
            *best = Some((key, order));
        }
        return;
    };
    let cell = &cells[target];
    let mut tried: Vec<usize> = Vec::new();
    for &v in cell {
        let twin = tried.iter().any(|&u| {
            g.neighbors(u) & !(1u64 << v) == g.neighbors(v) & !(1u64 << u)
        });
        if twin {
            continue;
        }
        tried.push(v);
        let mut next = Vec::with_capacity(cells.len() + 1);
        next.extend_from_slice(&cells[..target]);
        next.push(vec![v]);
        next.push(cell.iter().copied().filter(|&w| w != v).collect());
        next.extend_from_slice(&cells[target + 1..]);
        search(g, refine(g, next), best);
    }
}

/// Row `i` holds the neighbourhood of the vertex at position `i`, in
/// position coordinates.
fn relabelled_rows(g: &Graph, order: &[usize]) -> Vec<u64> {
    let n = order.len();
    let mut pos = [0usize; 64];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    (0..n)
        .map(|i| {
            crate::graphcore::bits(g.neighbors(order[i]))
                .fold(0u64, |m, w| m | 1u64 << (63 - pos[w]))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphcore::{build_named, coline, NamedGraph};

    fn named(s: &str) -> Graph {
        build_named(&s.parse::<NamedGraph>().unwrap()).unwrap()
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for i in 0..n {
                let mut q = p.clone();
                q.insert(i, n - 1);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn c5_equals_its_coline() {
        let c5 = named("C5");
        assert_eq!(canonical_form(&c5), canonical_form(&coline(&c5).0));
    }

    #[test]
    fn triangle_and_claw_differ() {
        assert_ne!(canonical_form(&Graph::complete(3)), canonical_form(&named("K1,3")));
    }

    #[test]
    fn constant_over_all_relabelings_of_c5() {
        let c5 = named("C5");
        let base = canonical_form(&c5);
        let perms = permutations(5);
        assert_eq!(perms.len(), 120);
        for p in perms {
            assert_eq!(canonical_form(&c5.relabel(&p)), base);
        }
    }

    #[test]
    fn regular_graphs_separate() {
        assert_ne!(canonical_form(&named("C6")), canonical_form(&named("2K3")));
        let prism = coline(&named("C6")).0;
        let k33 = Graph::from_edges(
            6,
            &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)],
        );
        assert_ne!(canonical_form(&prism), canonical_form(&k33));
    }

    #[test]
    fn canonical_graph_is_isomorphic_to_input() {
        let p = named("Petersen");
        let cf = canonical_form(&p);
        assert!(crate::oracle::is_isomorphic(&cf.graph(), &p).is_some());
        assert_eq!(canonical_form(&cf.graph()), cf);
    }

    #[test]
    fn large_twin_classes_are_fast() {
        // twin pruning keeps these from exploring n! leaves
        let _ = canonical_form(&Graph::complete(16));
        let _ = canonical_form(&Graph::new(16));
        let _ = canonical_form(&named("K1,15"));
    }
}
