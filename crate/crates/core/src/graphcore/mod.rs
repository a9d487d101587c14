//! Simple undirected graphs on dense vertex indices and the constructions
//! needed to talk about coline graphs: complement, line graph, coline graph,
//! disjoint union, dominating-vertex extension and graph powers.
//!
//! Adjacency is stored as one `u64` bitmask row per vertex, so a [`Graph`]
//! holds at most [`MAX_VERTICES`] vertices. Every exhaustive routine in this
//! crate is exponential long before that bound matters.

mod enumerate;
mod named;
mod ops;

pub use enumerate::{binomial, for_each_mask, for_each_mask_with_top, EdgeSpace};

pub use named::{build_named, named, NamedGraph, NamedGraphError};
pub use ops::{
    add_dominating_vertex, basic_stats, coline, complement, disjoint_union, graph_power,
    line_graph, BasicStats,
};

use std::fmt;

/// Largest vertex count a [`Graph`] can hold.
pub const MAX_VERTICES: usize = 64;

/// Iterate the set bits of a mask, lowest first.
#[inline]
pub fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

/// Mask with the lowest `n` bits set.
#[inline]
pub fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    ///
    /// Panics if `n` exceeds [`MAX_VERTICES`].
    pub fn new(n: usize) -> Self {
        assert!(
            n <= MAX_VERTICES,
            "graph with {n} vertices exceeds the {MAX_VERTICES}-vertex limit"
        );
        Graph { n, adj: vec![0; n] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// Build from adjacency rows. Rows must be symmetric and loop-free.
    pub fn from_rows(rows: Vec<u64>) -> Self {
        let n = rows.len();
        assert!(
            n <= MAX_VERTICES,
            "graph with {n} vertices exceeds the {MAX_VERTICES}-vertex limit"
        );
        let g = Graph { n, adj: rows };
        debug_assert!(g.is_well_formed());
        g
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        let all = full_mask(n);
        for v in 0..n {
            g.adj[v] = all & !(1u64 << v);
        }
        g
    }

    /// Add the edge `uv`. Adding an existing edge is a no-op.
    ///
    /// Panics on a self-loop or an out-of-range endpoint.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "edge ({u},{v}) out of range for n={}", self.n);
        assert!(u != v, "self-loop at vertex {u}");
        self.adj[u] |= 1u64 << v;
        self.adj[v] |= 1u64 << u;
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        if u < self.n && v < self.n {
            self.adj[u] &= !(1u64 << v);
            self.adj[v] &= !(1u64 << u);
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    /// Neighbourhood of `v` as a bitmask.
    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn vertex_mask(&self) -> u64 {
        full_mask(self.n)
    }

    /// Edges in lexicographic order of `(u, v)` with `u < v`.
    pub fn edges(&self) -> EdgeList {
        let mut edges = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in bits(self.adj[u] >> (u + 1)) {
                edges.push((u, u + 1 + v));
            }
        }
        EdgeList(edges)
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * self.n.saturating_sub(1) / 2
    }

    /// Connected components of the subgraph induced by `within`, each as a
    /// bitmask, ordered by their lowest vertex.
    pub fn components_within(&self, within: u64) -> Vec<u64> {
        let mut out = Vec::new();
        let mut rest = within & self.vertex_mask();
        while rest != 0 {
            let comp = self.reach(rest & rest.wrapping_neg(), within);
            out.push(comp);
            rest &= !comp;
        }
        out
    }

    /// Number of components of the subgraph induced by `within`.
    pub fn count_components_within(&self, within: u64) -> usize {
        let mut count = 0;
        let mut rest = within & self.vertex_mask();
        while rest != 0 {
            let comp = self.reach(rest & rest.wrapping_neg(), within);
            count += 1;
            rest &= !comp;
        }
        count
    }

    /// Vertices reachable from `seed` inside `within`.
    #[inline]
    pub fn reach(&self, seed: u64, within: u64) -> u64 {
        let mut seen = seed & within;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        self.components_within(self.vertex_mask())
            .into_iter()
            .map(|c| bits(c).collect())
            .collect()
    }

    pub fn component_count(&self) -> usize {
        self.count_components_within(self.vertex_mask())
    }

    /// Connected with at least one vertex.
    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.reach(1, self.vertex_mask()) == self.vertex_mask()
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.adj[v] == 0).collect()
    }

    /// Subgraph induced by the vertices in `keep`, relabelled densely in
    /// increasing order of the original indices.
    pub fn induced(&self, keep: u64) -> Graph {
        let keep = keep & self.vertex_mask();
        let old: Vec<usize> = bits(keep).collect();
        let mut index = [usize::MAX; MAX_VERTICES];
        for (i, &v) in old.iter().enumerate() {
            index[v] = i;
        }
        let mut rows = vec![0u64; old.len()];
        for (i, &v) in old.iter().enumerate() {
            for w in bits(self.adj[v] & keep) {
                rows[i] |= 1u64 << index[w];
            }
        }
        Graph { n: old.len(), adj: rows }
    }

    /// Drop isolated vertices. The coline graph only sees the edge set, so
    /// this never changes it.
    pub fn strip_isolated(&self) -> Graph {
        let keep = (0..self.n)
            .filter(|&v| self.adj[v] != 0)
            .fold(0u64, |m, v| m | 1u64 << v);
        self.induced(keep)
    }

    /// Relabel so that old vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph::new(self.n);
        for v in 0..self.n {
            for w in bits(self.adj[v]) {
                g.adj[perm[v]] |= 1u64 << perm[w];
            }
        }
        g
    }

    /// Whether `mask` is an independent set.
    pub fn is_independent(&self, mask: u64) -> bool {
        bits(mask).all(|v| self.adj[v] & mask == 0)
    }

    fn is_well_formed(&self) -> bool {
        (0..self.n).all(|v| {
            self.adj[v] >> v & 1 == 0
                && self.adj[v] & !self.vertex_mask() == 0
                && bits(self.adj[v]).all(|w| self.adj[w] >> v & 1 == 1)
        })
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges().as_slice())
    }
}

/// Edges of a root graph in lexicographic order. Position `i` is the
/// identity of vertex `i` in the line graph and in the coline graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct EdgeList(Vec<(usize, usize)>);

impl EdgeList {
    pub fn as_slice(&self) -> &[(usize, usize)] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, index: usize) -> Option<(usize, usize)> {
        self.0.get(index).copied()
    }

    pub fn index_of(&self, u: usize, v: usize) -> Option<usize> {
        let key = if u < v { (u, v) } else { (v, u) };
        self.0.binary_search(&key).ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = &(usize, usize)> {
        self.0.iter()
    }

    /// Whether edges `i` and `j` share an endpoint.
    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        let (a, b) = self.0[i];
        let (c, d) = self.0[j];
        i != j && (a == c || a == d || b == c || b == d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_count_is_half_degree_sum() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]);
        assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.edge_count());
        assert_eq!(g.edge_count(), 5);
    }

    #[test]
    fn edges_sorted_lexicographically() {
        let g = Graph::from_edges(4, &[(3, 2), (1, 0), (0, 3)]);
        assert_eq!(g.edges().as_slice(), &[(0, 1), (0, 3), (2, 3)]);
        assert_eq!(g.edges().index_of(3, 0), Some(1));
    }

    #[test]
    #[should_panic(expected = "self-loop")]
    fn rejects_loops() {
        Graph::new(3).add_edge(1, 1);
    }

    #[test]
    fn strip_isolated_keeps_edge_structure() {
        let g = Graph::from_edges(6, &[(1, 3), (3, 5)]);
        let s = g.strip_isolated();
        assert_eq!(s.order(), 3);
        assert_eq!(s.edges().as_slice(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn components_of_union() {
        let g = Graph::from_edges(6, &[(0, 1), (2, 3), (3, 4)]);
        assert_eq!(g.components(), vec![vec![0, 1], vec![2, 3, 4], vec![5]]);
        assert!(!g.is_connected());
        assert_eq!(g.count_components_within(0b111100), 2);
    }
}
