use super::Graph;

/// The `C(n, 2)` vertex pairs of `0..n` in lexicographic order; bit `i` of
/// an edge mask selects pair `i`.
#[derive(Clone, Debug)]
pub struct EdgeSpace {
    n: usize,
    pairs: Vec<(usize, usize)>,
}

impl EdgeSpace {
    /// Panics unless `n <= 11` (the pair count must fit a `u64` mask).
    pub fn new(n: usize) -> Self {
        assert!(n <= 11, "edge masks support at most 11 vertices");
        let pairs = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        EdgeSpace { n, pairs }
    }

    pub fn vertices(&self) -> usize {
        self.n
    }

    pub fn pair_count(&self) -> usize {
        self.pairs.len()
    }

    pub fn pair(&self, i: usize) -> (usize, usize) {
        self.pairs[i]
    }

    pub fn graph(&self, mask: u64) -> Graph {
        let mut g = Graph::new(self.n);
        for i in super::bits(mask) {
            let (u, v) = self.pairs[i];
            g.add_edge(u, v);
        }
        g
    }

    /// Whether vertex degrees are non-increasing in label order. Every
    /// isomorphism class has such a labelling, and isolated vertices then
    /// sit at the end.
    #[inline]
    pub fn is_degree_ordered(&self, mask: u64) -> bool {
        let mut deg = [0u8; 12];
        for i in super::bits(mask) {
            let (u, v) = self.pairs[i];
            deg[u] += 1;
            deg[v] += 1;
        }
        deg[..self.n].windows(2).all(|w| w[0] >= w[1])
    }
}

/// Binomial coefficient, saturating.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u64) / (i + 1) as u64;
    }
    acc
}

/// Call `f` on every `k`-subset of the lowest `total` bits whose highest
/// set bit is `top`, in increasing numeric order. `k = 0` yields the empty
/// set once (with `top` ignored).
pub fn for_each_mask_with_top(total: usize, k: usize, top: usize, mut f: impl FnMut(u64)) {
    if k == 0 {
        f(0);
        return;
    }
    if top >= total || top + 1 < k {
        return;
    }
    let high = 1u64 << top;
    let lower = k - 1;
    if lower == 0 {
        f(high);
        return;
    }
    let limit = high;
    let mut s: u64 = (1u64 << lower) - 1;
    while s < limit {
        f(s | high);
        let c = s & s.wrapping_neg();
        let r = s + c;
        s = (((r ^ s) >> 2) / c) | r;
    }
}

/// Every `k`-subset of the lowest `total` bits, in increasing numeric order.
pub fn for_each_mask(total: usize, k: usize, mut f: impl FnMut(u64)) {
    if k == 0 {
        f(0);
        return;
    }
    for top in k - 1..total {
        for_each_mask_with_top(total, k, top, &mut f);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(28, 10), 13_123_110);
        assert_eq!(binomial(5, 0), 1);
        assert_eq!(binomial(3, 4), 0);
    }

    #[test]
    fn mask_counts_match_binomials() {
        for total in 0..10 {
            for k in 0..=total {
                let mut count = 0;
                let mut last = None;
                for_each_mask(total, k, |m| {
                    assert_eq!(m.count_ones() as usize, k);
                    assert!(last.is_none_or(|l| m > l));
                    last = Some(m);
                    count += 1;
                });
                assert_eq!(count, binomial(total, k), "{total} {k}");
            }
        }
    }

    #[test]
    fn pair_order_is_lexicographic() {
        let s = EdgeSpace::new(4);
        assert_eq!(s.pair_count(), 6);
        assert_eq!(s.pair(0), (0, 1));
        assert_eq!(s.pair(3), (1, 2));
        assert_eq!(s.graph(0b100001).edges().as_slice(), &[(0, 1), (2, 3)]);
    }

    #[test]
    fn degree_order_filter() {
        let s = EdgeSpace::new(4);
        // star centred at 0 is ordered, star centred at 3 is not
        assert!(s.is_degree_ordered(0b000111));
        assert!(!s.is_degree_ordered(0b110100));
    }
}
