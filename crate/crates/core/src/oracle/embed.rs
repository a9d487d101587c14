use crate::graphcore::{bits, Graph};

/// Whether `host` has a (not necessarily induced) subgraph isomorphic to
/// `pattern`.
pub fn contains_subgraph(host: &Graph, pattern: &Graph) -> bool {
    find_embedding(host, pattern, false).is_some()
}

/// Whether no vertex subset of `host` induces a copy of `pattern`.
pub fn is_induced_free(host: &Graph, pattern: &Graph) -> bool {
    find_embedding(host, pattern, true).is_none()
}

/// Injective map from pattern vertices to host vertices carrying edges to
/// edges, and with `induced` also non-edges to non-edges.
pub fn find_embedding(host: &Graph, pattern: &Graph, induced: bool) -> Option<Vec<usize>> {
    let k = pattern.order();
    if k > host.order() {
        return None;
    }
    if !induced && pattern.edge_count() > host.edge_count() {
        return None;
    }
    // connected-first order: next vertex has the most already-placed
    // neighbours, ties to higher degree
    let mut order = Vec::with_capacity(k);
    let mut placed = 0u64;
    while order.len() < k {
        let u = (0..k)
            .filter(|&v| placed >> v & 1 == 0)
            .max_by_key(|&v| {
                (
                    (pattern.neighbors(v) & placed).count_ones(),
                    pattern.degree(v),
                    std::cmp::Reverse(v),
                )
            })
            .unwrap();
        order.push(u);
        placed |= 1u64 << u;
    }
    let mut mapping = vec![usize::MAX; k];
    place(host, pattern, induced, &order, &mut mapping, 0, 0).then_some(mapping)
}

fn place(
    host: &Graph,
    pattern: &Graph,
    induced: bool,
    order: &[usize],
    mapping: &mut [usize],
    depth: usize,
    used: u64,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let u = order[depth];
    let mut must = 0u64;
    let mut mapped = 0u64;
    for &a in &order[..depth] {
        let img = 1u64 << mapping[a];
        mapped |= img;
        if pattern.has_edge(u, a) {
            must |= img;
        }
    }
    let need_degree = pattern.degree(u);
    for w in bits(host.vertex_mask() & !used) {
        if host.degree(w) < need_degree {
            continue;
        }
        let here = host.neighbors(w) & mapped;
        let ok = if induced { here == must } else { here & must == must };
        if !ok {
            continue;
        }
        mapping[u] = w;
        if place(host, pattern, induced, order, mapping, depth + 1, used | 1u64 << w) {
            return true;
        }
    }
    mapping[u] = usize::MAX;
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphcore::{build_named, coline, NamedGraph};

    fn named(s: &str) -> Graph {
        build_named(&s.parse::<NamedGraph>().unwrap()).unwrap()
    }

    /// Brute force over vertex subsets and their orderings.
    fn brute_contains(host: &Graph, pattern: &Graph, induced: bool) -> bool {
        fn go(host: &Graph, p: &Graph, induced: bool, map: &mut Vec<usize>, used: u64) -> bool {
            let i = map.len();
            if i == p.order() {
                return true;
            }
            for w in 0..host.order() {
                if used >> w & 1 == 1 {
                    continue;
                }
                let ok = (0..i).all(|a| {
                    let pe = p.has_edge(i, a);
                    let he = host.has_edge(w, map[a]);
                    if induced { pe == he } else { !pe || he }
                });
                if ok {
                    map.push(w);
                    if go(host, p, induced, map, used | 1 << w) {
                        return true;
                    }
                    map.pop();
                }
            }
            false
        }
        go(host, pattern, induced, &mut Vec::new(), 0)
    }

    #[test]
    fn basic_containment() {
        assert!(contains_subgraph(&Graph::complete(4), &Graph::complete(3)));
        assert!(contains_subgraph(&named("H2"), &named("K3oK1")));
        assert!(!contains_subgraph(&named("H1"), &named("K4-")));
        assert!(!contains_subgraph(&named("H1"), &named("F4")));
    }

    #[test]
    fn embedding_respects_edges() {
        let host = named("H2");
        let pat = named("K3oK1");
        let m = find_embedding(&host, &pat, false).unwrap();
        for (u, v) in pat.edges().iter() {
            assert!(host.has_edge(m[*u], m[*v]));
        }
    }

    #[test]
    fn induced_freeness() {
        let k2_3k1 = named("K2u3E1");
        assert_eq!(k2_3k1.order(), 5);
        assert!(is_induced_free(&coline(&Graph::complete(5)).0, &k2_3k1));
        assert!(!is_induced_free(&k2_3k1, &k2_3k1));
        // C4 contains P3 as a subgraph and as an induced subgraph, but no
        // induced K3
        assert!(!is_induced_free(&named("C4"), &named("P3")));
        assert!(is_induced_free(&named("C4"), &Graph::complete(3)));
        assert!(contains_subgraph(&Graph::complete(4), &named("C4")));
        assert!(!is_induced_free(&Graph::complete(4), &Graph::complete(3)));
        assert!(is_induced_free(&Graph::complete(4), &named("C4")));
    }

    #[test]
    fn agrees_with_brute_force() {
        let hosts = ["Petersen", "H1", "H3", "K4-uK2", "C6"];
        let pats = ["K3", "P4", "C4", "K3+", "K1,3", "2K2", "K2u2E1"];
        for h in hosts {
            for p in pats {
                let (hg, pg) = (named(h), named(p));
                for induced in [false, true] {
                    assert_eq!(
                        find_embedding(&hg, &pg, induced).is_some(),
                        brute_contains(&hg, &pg, induced),
                        "{h} {p} {induced}"
                    );
                }
            }
        }
    }
}
