use super::{bits, EdgeList, Graph};

pub fn complement(g: &Graph) -> Graph {
    let all = g.vertex_mask();
    let rows = (0..g.order())
        .map(|v| all & !g.neighbors(v) & !(1u64 << v))
        .collect();
    Graph::from_rows(rows)
}

/// Line graph of `g`. Vertex `i` of the result is edge `i` of the returned
/// [`EdgeList`].
pub fn line_graph(g: &Graph) -> (Graph, EdgeList) {
    let edges = g.edges();
    let m = edges.len();
    let mut l = Graph::new(m);
    for i in 0..m {
        for j in i + 1..m {
            if edges.adjacent(i, j) {
                l.add_edge(i, j);
            }
        }
    }
    (l, edges)
}

/// Coline graph `co(g)`: the edges of `g`, two of them adjacent when they
/// share no endpoint.
pub fn coline(g: &Graph) -> (Graph, EdgeList) {
    let edges = g.edges();
    let m = edges.len();
    // incident[v] = edge indices touching v
    let mut incident = vec![0u64; g.order()];
    for (i, &(u, v)) in edges.iter().enumerate() {
        incident[u] |= 1u64 << i;
        incident[v] |= 1u64 << i;
    }
    let all = super::full_mask(m);
    let rows = edges
        .iter()
        .map(|&(u, v)| all & !(incident[u] | incident[v]))
        .collect();
    (Graph::from_rows(rows), edges)
}

/// Vertices of `g1` keep their labels; `g2`'s are shifted by `g1.order()`.
pub fn disjoint_union(g1: &Graph, g2: &Graph) -> Graph {
    let shift = g1.order();
    let mut rows: Vec<u64> = g1.rows().to_vec();
    rows.extend(g2.rows().iter().map(|r| r << shift));
    Graph::from_rows(rows)
}

/// `g` plus a new vertex (index `g.order()`) adjacent to every other vertex.
pub fn add_dominating_vertex(g: &Graph) -> Graph {
    let n = g.order();
    let mut out = Graph::new(n + 1);
    for v in 0..n {
        for w in bits(g.neighbors(v)) {
            out.add_edge(v, w);
        }
        out.add_edge(v, n);
    }
    out
}

/// `k`-th power: `uv` adjacent iff `0 < dist(u, v) <= k`.
pub fn graph_power(g: &Graph, k: usize) -> Graph {
    assert!(k >= 1, "graph power needs k >= 1");
    let rows = (0..g.order())
        .map(|v| {
            let mut ball = 1u64 << v;
            for _ in 0..k {
                let mut grown = ball;
                for w in bits(ball) {
                    grown |= g.neighbors(w);
                }
                if grown == ball {
                    break;
                }
                ball = grown;
            }
            ball & !(1u64 << v)
        })
        .collect();
    Graph::from_rows(rows)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasicStats {
    pub edges: usize,
    pub max_degree: usize,
    pub degrees: Vec<usize>,
    pub components: Vec<Vec<usize>>,
}

pub fn basic_stats(g: &Graph) -> BasicStats {
    BasicStats {
        edges: g.edge_count(),
        max_degree: g.max_degree(),
        degrees: g.degrees(),
        components: g.components(),
    }
}
