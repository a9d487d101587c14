use std::collections::{BTreeMap, BTreeSet};

use crate::graphcore::{coline, for_each_mask, line_graph, EdgeSpace};
use crate::oracle::{canonical_form, is_isomorphic, CanonicalForm};

/// Graphs without isolated vertices, on at most `max_vertices` vertices,
/// isomorphic to their own coline graph. Such a graph has as many edges as
/// vertices.
pub fn self_coline_census(max_vertices: usize) -> BTreeSet<CanonicalForm> {
    assert!(max_vertices <= 8, "self-coline census supports at most 8 vertices");
    let mut out = BTreeSet::new();
    for n in 1..=max_vertices {
        let space = EdgeSpace::new(n);
        if space.pair_count() < n {
            continue;
        }
        for_each_mask(space.pair_count(), n, |mask| {
            if !space.is_degree_ordered(mask) {
                return;
            }
            let g = space.graph(mask);
            // degree order puts any isolated vertex last
            if g.degree(n - 1) == 0 {
                return;
            }
            if is_isomorphic(&coline(&g).0, &g).is_some() {
                out.insert(canonical_form(&g));
            }
        });
    }
    out
}

/// Pairs of non-isomorphic connected graphs on at most `max_vertices`
/// vertices whose line graphs are isomorphic, each pair ordered by
/// canonical form.
pub fn whitney_census(max_vertices: usize) -> Vec<(CanonicalForm, CanonicalForm)> {
    assert!(max_vertices <= 6, "Whitney census supports at most 6 vertices");
    let mut by_line: BTreeMap<CanonicalForm, BTreeSet<CanonicalForm>> = BTreeMap::new();
    for n in 2..=max_vertices {
        let space = EdgeSpace::new(n);
        let pairs = space.pair_count();
        for k in n - 1..=pairs {
            for_each_mask(pairs, k, |mask| {
                if !space.is_degree_ordered(mask) {
                    return;
                }
                let g = space.graph(mask);
                if g.is_connected() {
                    by_line
                        .entry(canonical_form(&line_graph(&g).0))
                        .or_default()
                        .insert(canonical_form(&g));
                }
            });
        }
    }
    let mut out = Vec::new();
    for roots in by_line.values() {
        let roots: Vec<&CanonicalForm> = roots.iter().collect();
        for (i, a) in roots.iter().enumerate() {
            for b in &roots[i + 1..] {
                out.push(((*a).clone(), (*b).clone()));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphcore::{build_named, Graph, NamedGraph};

    fn form(s: &str) -> CanonicalForm {
        canonical_form(&build_named(&s.parse::<NamedGraph>().unwrap()).unwrap())
    }

    #[test]
    fn self_coline_up_to_seven() {
        let got = self_coline_census(7);
        let want: BTreeSet<_> = [form("C5"), form("K3oK1")].into_iter().collect();
        assert_eq!(got, want);
        assert!(!got.contains(&form("C4")));
        assert!(!got.contains(&canonical_form(&Graph::complete(3))));
    }

    #[test]
    fn whitney_up_to_six() {
        let got = whitney_census(6);
        assert_eq!(got.len(), 1);
        let (a, b) = &got[0];
        let pair: BTreeSet<_> = [a.clone(), b.clone()].into_iter().collect();
        let want: BTreeSet<_> = [form("K3"), form("K1,3")].into_iter().collect();
        assert_eq!(pair, want);
    }
}
