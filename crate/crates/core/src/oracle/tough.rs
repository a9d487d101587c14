use serde::Serialize;

use crate::graphcore::{bits, Graph};

/// A vertex set whose removal leaves `components_after` components.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ToughnessWitness {
    pub cutset: Vec<usize>,
    pub components_after: usize,
}

impl ToughnessWitness {
    /// Recompute the component count of `g - cutset` from scratch.
    pub fn certifies_non_toughness(&self, g: &Graph) -> bool {
        let removed = self.cutset.iter().fold(0u64, |m, &v| m | 1u64 << v);
        let c = g.count_components_within(g.vertex_mask() & !removed);
        c == self.components_after && c >= 2 && c > self.cutset.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ToughnessResult {
    pub tough: bool,
    /// Complete graphs have no cutset, so toughness holds vacuously.
    pub vacuous: bool,
    pub witness: Option<ToughnessWitness>,
}

/// Visit every `k`-subset of the lowest `n` bits in increasing numeric order.
pub(crate) fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(u64) -> bool) -> bool {
    assert!(n < 64, "subset enumeration needs n < 64");
    if k > n {
        return true;
    }
    if k == 0 {
        return f(0);
    }
    let limit = 1u64 << n;
    let mut s: u64 = (1u64 << k) - 1;
    while s < limit {
        if !f(s) {
            return false;
        }
        // Gosper's hack
        let c = s & s.wrapping_neg();
        let r = s + c;
        s = (((r ^ s) >> 2) / c) | r;
    }
    true
}

/// 1-toughness: connected, and every cutset `S` leaves at most `|S|`
/// components. Cutsets are tried by increasing size and the first violating
/// one is returned as the witness.
pub fn is_tough(g: &Graph) -> ToughnessResult {
    let n = g.order();
    if g.is_complete() {
        return ToughnessResult {
            tough: true,
            vacuous: true,
            witness: None,
        };
    }
    let all = g.vertex_mask();
    let mut witness = None;
    // c(G - S) <= n - |S|, so only |S| < n/2 can violate
    for size in 0..n {
        if n - size <= size {
            break;
        }
        let done = for_each_subset(n, size, |s| {
            let c = g.count_components_within(all & !s);
            if c >= 2 && c > size {
                witness = Some(ToughnessWitness {
                    cutset: bits(s).collect(),
                    components_after: c,
                });
                false
            } else {
                true
            }
        });
        if !done {
            break;
        }
    }
    ToughnessResult {
        tough: witness.is_none(),
        vacuous: false,
        witness,
    }
}

/// Minimum size of a vertex cutset; `n - 1` for complete graphs and 0 for
/// disconnected ones.
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.order();
    if g.is_complete() {
        return n.saturating_sub(1);
    }
    if !g.is_connected() {
        return 0;
    }
    let all = g.vertex_mask();
    for size in 1..n {
        let mut found = false;
        for_each_subset(n, size, |s| {
            let rest = all & !s;
            if rest.count_ones() >= 2 && g.count_components_within(rest) >= 2 {
                found = true;
                return false;
            }
            true
        });
        if found {
            return size;
        }
    }
    unreachable!("a non-complete graph has a cutset")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphcore::{build_named, coline, NamedGraph};

    fn named(s: &str) -> Graph {
        build_named(&s.parse::<NamedGraph>().unwrap()).unwrap()
    }

    /// Independent check: every subset, no early exit.
    fn brute_tough(g: &Graph) -> bool {
        let n = g.order();
        if !g.is_connected() {
            return false;
        }
        (0u64..1 << n).all(|s| {
            let c = g.count_components_within(g.vertex_mask() & !s);
            c < 2 || c <= s.count_ones() as usize
        })
    }

    #[test]
    fn star_is_not_tough() {
        let r = is_tough(&named("K1,3"));
        assert!(!r.tough);
        let w = r.witness.unwrap();
        assert_eq!(w.cutset, vec![0]);
        assert_eq!(w.components_after, 3);
        assert!(w.certifies_non_toughness(&named("K1,3")));
    }

    #[test]
    fn lemma_graphs_have_tough_colines() {
        for s in ["H1", "H2", "H3", "K5"] {
            assert!(is_tough(&coline(&named(s)).0).tough, "{s}");
        }
        let r = is_tough(&coline(&named("C4uK2")).0);
        assert!(!r.tough);
        assert!(r.witness.unwrap().certifies_non_toughness(&coline(&named("C4uK2")).0));
    }

    #[test]
    fn disconnected_witness_is_empty_cutset() {
        let g = named("C4uK2");
        let r = is_tough(&g);
        assert_eq!(
            r.witness,
            Some(ToughnessWitness { cutset: vec![], components_after: 2 })
        );
    }

    #[test]
    fn complete_is_vacuous() {
        for n in 0..5 {
            let r = is_tough(&Graph::complete(n));
            assert!(r.tough && r.vacuous);
        }
    }

    #[test]
    fn agrees_with_brute_force() {
        for s in ["Petersen", "C6", "P4", "K4-", "F4", "H1", "K3oK1", "C5", "K1,4"] {
            for g in [named(s), coline(&named(s)).0] {
                if !g.is_complete() {
                    assert_eq!(is_tough(&g).tough, brute_tough(&g), "{s}");
                }
            }
        }
    }

    #[test]
    fn connectivity_values() {
        assert_eq!(vertex_connectivity(&named("Petersen")), 3);
        assert_eq!(vertex_connectivity(&Graph::complete(5)), 4);
        assert_eq!(vertex_connectivity(&named("C4uK2")), 0);
        assert_eq!(vertex_connectivity(&named("C6")), 2);
        assert_eq!(vertex_connectivity(&named("K1,3")), 1);
    }

    #[test]
    fn subsets_enumerated_once() {
        let mut seen = Vec::new();
        for_each_subset(5, 2, |s| {
            seen.push(s);
            true
        });
        assert_eq!(seen.len(), 10);
        assert!(seen.windows(2).all(|w| w[0] < w[1]));
    }
}
