use serde::Serialize;

use crate::graphcore::{bits, coline, Graph};

use super::OracleError;

/// Bitmask dynamic programmes are used up to this many vertices.
const DP_LIMIT: usize = 24;

/// A cycle or a path, listed as distinct vertices in traversal order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycleOrPath {
    pub vertices: Vec<usize>,
    pub closed: bool,
}

impl CycleOrPath {
    pub fn cycle(vertices: Vec<usize>) -> Self {
        CycleOrPath { vertices, closed: true }
    }

    pub fn path(vertices: Vec<usize>) -> Self {
        CycleOrPath { vertices, closed: false }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn mask(&self) -> u64 {
        self.vertices.iter().fold(0, |m, &v| m | 1u64 << v)
    }

    /// Distinct vertices, consecutive ones adjacent, and for a cycle at
    /// least three vertices with the closing edge present.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let vs = &self.vertices;
        if vs.iter().any(|&v| v >= g.order()) {
            return false;
        }
        if self.mask().count_ones() as usize != vs.len() {
            return false;
        }
        if !vs.windows(2).all(|w| g.has_edge(w[0], w[1])) {
            return false;
        }
        if self.closed {
            vs.len() >= 3 && g.has_edge(vs[vs.len() - 1], vs[0])
        } else {
            !vs.is_empty()
        }
    }

    pub fn is_spanning_in(&self, g: &Graph) -> bool {
        self.is_valid_in(g) && self.vertices.len() == g.order()
    }
}

/// Spanning cycle by backtracking from vertex 0, trying low-degree
/// neighbours first and pruning when some unvisited vertex cannot get two
/// usable neighbours.
pub fn hamiltonian_cycle(g: &Graph) -> Option<CycleOrPath> {
    let n = g.order();
    if n < 3 || !g.is_connected() || g.min_degree() < 2 {
        return None;
    }
    let mut path = Vec::with_capacity(n);
    path.push(0);
    if extend_cycle(g, &mut path, 1) {
        Some(CycleOrPath::cycle(path))
    } else {
        None
    }
}

fn extend_cycle(g: &Graph, path: &mut Vec<usize>, visited: u64) -> bool {
    let n = g.order();
    let last = *path.last().unwrap();
    if path.len() == n {
        return g.has_edge(last, 0);
    }
    let unvisited = g.vertex_mask() & !visited;
    let open = unvisited | 1 | 1u64 << last;
    for u in bits(unvisited) {
        if (g.neighbors(u) & open).count_ones() < 2 {
            return false;
        }
    }
    let mut next: Vec<usize> = bits(g.neighbors(last) & unvisited).collect();
    next.sort_by_key(|&w| ((g.neighbors(w) & unvisited).count_ones(), w));
    for w in next {
        path.push(w);
        if extend_cycle(g, path, visited | 1u64 << w) {
            return true;
        }
        path.pop();
    }
    false
}

/// Spanning path. A one-vertex graph is traceable; the empty graph is not.
pub fn hamiltonian_path(g: &Graph) -> Option<CycleOrPath> {
    let n = g.order();
    if n == 0 || !g.is_connected() {
        return None;
    }
    if n == 1 {
        return Some(CycleOrPath::path(vec![0]));
    }
    if n <= DP_LIMIT {
        hamiltonian_path_dp(g)
    } else {
        (0..n).find_map(|s| {
            let mut path = vec![s];
            extend_path(g, &mut path, 1u64 << s).then_some(CycleOrPath::path(path))
        })
    }
}

/// `ends[mask]` is the set of vertices at which some path covering exactly
/// `mask` can end.
fn hamiltonian_path_dp(g: &Graph) -> Option<CycleOrPath> {
    let n = g.order();
    let size = 1usize << n;
    let mut ends = vec![0u32; size];
    for v in 0..n {
        ends[1 << v] = 1 << v;
    }
    for mask in 1..size {
        let e = ends[mask];
        if e == 0 {
            continue;
        }
        for v in bits(e as u64) {
            for w in bits(g.neighbors(v) & !(mask as u64)) {
                ends[mask | 1 << w] |= 1 << w;
            }
        }
    }
    let full = size - 1;
    if ends[full] == 0 {
        return None;
    }
    let mut mask = full;
    let mut v = ends[full].trailing_zeros() as usize;
    let mut rev = vec![v];
    while mask.count_ones() > 1 {
        let prev = mask & !(1 << v);
        let u = (ends[prev] as u64 & g.neighbors(v)).trailing_zeros() as usize;
        rev.push(u);
        mask = prev;
        v = u;
    }
    rev.reverse();
    Some(CycleOrPath::path(rev))
}

fn extend_path(g: &Graph, path: &mut Vec<usize>, visited: u64) -> bool {
    if path.len() == g.order() {
        return true;
    }
    let last = *path.last().unwrap();
    let unvisited = g.vertex_mask() & !visited;
    for u in bits(unvisited) {
        if g.neighbors(u) & (unvisited | 1u64 << last) == 0 {
            return false;
        }
    }
    let next: Vec<usize> = bits(g.neighbors(last) & unvisited).collect();
    for w in next {
        path.push(w);
        if extend_path(g, path, visited | 1u64 << w) {
            return true;
        }
        path.pop();
    }
    false
}

/// A longest cycle, or `None` for a forest.
///
/// Paths are grown from the lowest vertex of their vertex set, so every
/// cycle is found from its minimum vertex. Among cycles of maximal length
/// the one whose vertex set is numerically smallest wins.
///
/// Panics above 24 vertices.
pub fn longest_cycle(g: &Graph) -> Option<CycleOrPath> {
    let n = g.order();
    assert!(n <= DP_LIMIT, "longest_cycle supports at most {DP_LIMIT} vertices");
    if n < 3 {
        return None;
    }
    let size = 1usize << n;
    let mut ends = vec![0u32; size];
    let mut best: Option<(u32, usize, usize)> = None;
    for s in 0..n {
        ends[1 << s] = 1 << s;
    }
    for mask in 1..size {
        let e = ends[mask];
        if e == 0 {
            continue;
        }
        let s = mask.trailing_zeros() as usize;
        let len = mask.count_ones();
        if len >= 3 {
            let closing = e as u64 & g.neighbors(s);
            if closing != 0 && best.is_none_or(|(l, _, _)| len > l) {
                best = Some((len, mask, closing.trailing_zeros() as usize));
            }
        }
        let above = !((2u64 << s) - 1);
        for v in bits(e as u64) {
            for w in bits(g.neighbors(v) & !(mask as u64) & above) {
                ends[mask | 1 << w] |= 1 << w;
            }
        }
    }
    let (_, mut mask, mut v) = best?;
    let s = mask.trailing_zeros() as usize;
    let mut rev = vec![v];
    while v != s {
        let prev = mask & !(1 << v);
        let u = (ends[prev] as u64 & g.neighbors(v)).trailing_zeros() as usize;
        rev.push(u);
        mask = prev;
        v = u;
    }
    rev.reverse();
    Some(CycleOrPath::cycle(rev))
}

/// Whether some cyclic ordering of all vertices has every pair at cyclic
/// distance at most `k` adjacent, i.e. `g` contains the `k`-th power of a
/// Hamiltonian cycle. Needs at least 3 vertices, as a Hamiltonian cycle does.
pub fn contains_power_ham_cycle(g: &Graph, k: usize) -> bool {
    assert!(k >= 1, "power must be at least 1");
    let n = g.order();
    if n < 3 {
        return false;
    }
    if 2 * k >= n {
        return g.is_complete();
    }
    if g.min_degree() < 2 * k || !g.is_connected() {
        return false;
    }
    let mut order = Vec::with_capacity(n);
    order.push(0);
    place_power(g, k, &mut order, 1)
}

fn place_power(g: &Graph, k: usize, order: &mut Vec<usize>, used: u64) -> bool {
    let n = g.order();
    let i = order.len();
    if i == n {
        return true;
    }
    // back-neighbours within distance k, plus wrap-around neighbours at the
    // start once we are within k of closing the cycle
    let mut need = 0u64;
    for &v in &order[i.saturating_sub(k)..] {
        need |= 1u64 << v;
    }
    if i + k >= n {
        for &v in &order[..=(i + k - n)] {
            need |= 1u64 << v;
        }
    }
    let candidates = g.vertex_mask() & !used;
    for w in bits(candidates) {
        if g.neighbors(w) & need == need {
            order.push(w);
            if place_power(g, k, order, used | 1u64 << w) {
                return true;
            }
            order.pop();
        }
    }
    false
}

/// Cyclic matching sequenceability through the coline graph: the largest
/// `k` such that `co(g)` contains the `(k-1)`-th power of a Hamiltonian
/// cycle, the zeroth power always counting. When `co(g)` is complete every
/// power is present and the value is capped at `m`.
pub fn cms_exact(g: &Graph) -> Result<usize, OracleError> {
    let m = g.edge_count();
    if m == 0 {
        return Err(OracleError::EdgelessInput);
    }
    let (l, _) = coline(g);
    let mut best = 1;
    for p in 1..m {
        if contains_power_ham_cycle(&l, p) {
            best = p + 1;
        } else {
            break;
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphcore::{add_dominating_vertex, build_named, NamedGraph};

    fn named(s: &str) -> Graph {
        build_named(&s.parse::<NamedGraph>().unwrap()).unwrap()
    }

    fn co(s: &str) -> Graph {
        coline(&named(s)).0
    }

    /// Longest cycle length by walking every simple cycle from its minimum vertex.
    fn brute_longest(g: &Graph) -> usize {
        fn walk(g: &Graph, s: usize, v: usize, seen: u64, len: usize, best: &mut usize) {
            if len >= 3 && g.has_edge(v, s) {
                *best = (*best).max(len);
            }
            for w in bits(g.neighbors(v) & !seen) {
                if w > s {
                    walk(g, s, w, seen | 1 << w, len + 1, best);
                }
            }
        }
        let mut best = 0;
        for s in 0..g.order() {
            walk(g, s, s, 1 << s, 1, &mut best);
        }
        best
    }

    #[test]
    fn petersen_is_not_hamiltonian_but_traceable() {
        let p = co("K5");
        assert!(hamiltonian_cycle(&p).is_none());
        let path = hamiltonian_path(&p).unwrap();
        assert!(path.is_spanning_in(&p));
        let c = longest_cycle(&p).unwrap();
        assert!(c.is_valid_in(&p));
        assert_eq!(c.len(), 9);
        assert_eq!(brute_longest(&p), 9);
    }

    #[test]
    fn small_cycle_cases() {
        let c5 = named("C5");
        let h = hamiltonian_cycle(&c5).unwrap();
        assert!(h.is_spanning_in(&c5) && h.closed);
        let prism = co("C6");
        assert!(hamiltonian_cycle(&prism).unwrap().is_spanning_in(&prism));
        assert!(longest_cycle(&named("K1,4")).is_none());
        assert!(longest_cycle(&named("P5")).is_none());
        assert!(hamiltonian_cycle(&Graph::complete(2)).is_none());
    }

    #[test]
    fn path_cases() {
        assert!(hamiltonian_path(&Graph::new(2)).is_none());
        assert!(hamiltonian_path(&co("K3oK1")).is_none());
        assert_eq!(hamiltonian_path(&Graph::new(1)).unwrap().vertices, vec![0]);
        assert!(hamiltonian_path(&Graph::new(0)).is_none());
    }

    #[test]
    fn coline_of_h3_longest_cycle_misses_one_vertex() {
        let l = co("H3");
        assert_eq!(l.order(), 7);
        assert!(hamiltonian_cycle(&l).is_none());
        assert_eq!(longest_cycle(&l).unwrap().len(), 6);
        assert_eq!(brute_longest(&l), 6);
    }

    #[test]
    fn longest_cycle_matches_brute_force() {
        let mut cases = vec![named("Petersen")];
        for s in ["H1", "H2", "K4-", "F5", "K3u2K2", "C4uK2", "K3oK1", "K5"] {
            cases.push(named(s));
            cases.push(co(s));
        }
        for (i, g) in cases.iter().enumerate() {
            let got = longest_cycle(g).map_or(0, |c| {
                assert!(c.is_valid_in(g));
                c.len()
            });
            assert_eq!(got, brute_longest(g), "case {i}");
        }
    }

    #[test]
    fn power_cycles() {
        assert!(contains_power_ham_cycle(&Graph::complete(5), 2));
        assert!(!contains_power_ham_cycle(&named("Petersen"), 1));
        assert!(contains_power_ham_cycle(&co("C6"), 1));
        // square of C7 contains itself but not its cube
        let sq = crate::graphcore::graph_power(&named("C7"), 2);
        assert!(contains_power_ham_cycle(&sq, 2));
        assert!(!contains_power_ham_cycle(&sq, 3));
        let shuffled = sq.relabel(&[3, 6, 0, 2, 5, 1, 4]);
        assert!(contains_power_ham_cycle(&shuffled, 2));
    }

    #[test]
    fn cms_examples() {
        assert_eq!(cms_exact(&Graph::complete(5)).unwrap(), 1);
        assert!(cms_exact(&named("C6")).unwrap() >= 2);
        assert_eq!(cms_exact(&Graph::complete(2)).unwrap(), 1);
        assert_eq!(cms_exact(&Graph::new(3)), Err(OracleError::EdgelessInput));
        // 4K2: co is K4, every window of edges is a matching
        assert_eq!(cms_exact(&named("4K2")).unwrap(), 4);
    }

    #[test]
    fn traceable_iff_star_extension_hamiltonian_small() {
        for s in ["K5", "K3oK1", "H1", "C6", "P4", "K1,3", "C4uK2", "K4-"] {
            let l = co(s);
            assert_eq!(
                hamiltonian_path(&l).is_some(),
                hamiltonian_cycle(&add_dominating_vertex(&l)).is_some(),
                "{s}"
            );
        }
    }
}
