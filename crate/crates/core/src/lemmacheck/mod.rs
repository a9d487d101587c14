//! Runtime checks of structural properties every longest cycle has.
//!
//! Fix a longest cycle `C` of a graph `L` with an orientation, and write
//! `x⁺`, `x⁻` for the successor and predecessor of `x` on `C`. For each
//! component `H` of `L - V(C)` and each vertex `x` off the cycle, several
//! local configurations would let one splice `H` or `x` into `C` and get a
//! longer cycle. The checkers here search for those configurations
//! exhaustively; on a genuine longest cycle they find none. Each violation
//! carries its witnesses and, when the splice succeeds, the longer cycle.
//!
//! Statements that depend on the orientation are checked for both.

use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::graphcore::{bits, coline, Graph};
use crate::oracle::{is_tough, longest_cycle, CycleOrPath};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LemmaError {
    #[error("host graph has no cycle")]
    NoCycle,
    #[error("the given cycle is not a cycle of the host graph")]
    InvalidCycle,
    #[error("host graph is not the coline graph of the given graph")]
    HostMismatch,
    #[error("coline graph is not tough, so components off a longest cycle need not be trivial")]
    NotTough,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Lemma {
    /// `x ∈ N(H)` implies `x⁺, x⁻ ∉ N(H)`.
    NeighborGaps,
    /// For `x, y ∈ N(H)` no `x⁺y⁺`-path has all internal vertices off `C`.
    NoCrossingPaths,
    /// `N(H)⁺ ∪ {x}` is independent for every `x ∈ V(H)`.
    IndependentSets,
    /// For neighbours `x_i ≺ x_j ⪯ x_k` of an off-cycle vertex, either none
    /// of `x_i⁺x_j, x_i⁻x_j, x_i⁺x_k, x_i⁻x_k` is an edge, or `x_j⁻x_k⁺` is not.
    CommonArg,
    /// For `ww⁺` on the arc `x_i → x_j`, not both `wz` and `w⁺z'` are edges,
    /// where `{z, z'} = {x_i⁻, x_j⁺}`.
    NonXyEdges,
    /// In a tough coline graph every component off a longest cycle is a
    /// single vertex.
    TrivialComponents,
}

impl fmt::Display for Lemma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Lemma::NeighborGaps => "neighbor-gaps",
            Lemma::NoCrossingPaths => "no-crossing-paths",
            Lemma::IndependentSets => "independent-sets",
            Lemma::CommonArg => "common-arg",
            Lemma::NonXyEdges => "non-xy-edges",
            Lemma::TrivialComponents => "trivial-components",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Orientation {
    Forward,
    Reverse,
}

/// Which form of the common-argument statement fired: `j < k`, or the
/// boundary case `j = k` where the tested pair is `x_j⁻x_j⁺`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CommonArgForm {
    General,
    Boundary,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub lemma: Lemma,
    pub orientation: Orientation,
    pub detail: String,
    /// The vertices named in `detail`, in the order they appear there.
    pub witness: Vec<usize>,
    pub form: Option<CommonArgForm>,
    /// A cycle longer than the given one, built by splicing along the
    /// witness; present whenever that splice is valid in the host.
    pub longer_cycle: Option<Vec<usize>>,
}

/// A cycle of a host graph together with the components left off it and
/// their attachment sets.
#[derive(Clone, Debug)]
pub struct LongestCycleContext {
    pub host: Graph,
    pub cycle: CycleOrPath,
    /// Set when the cycle came from the longest-cycle oracle.
    pub certified_longest: bool,
    /// Components of `host - V(cycle)`, as vertex masks.
    pub off_cycle_components: Vec<u64>,
    /// `N(H)` for each component, a subset of the cycle.
    pub neighbor_sets: Vec<u64>,
}

impl LongestCycleContext {
    /// A longest cycle of `host` from the oracle.
    pub fn longest(host: &Graph) -> Result<Self, LemmaError> {
        let cycle = longest_cycle(host).ok_or(LemmaError::NoCycle)?;
        let mut ctx = Self::with_cycle(host, cycle)?;
        ctx.certified_longest = true;
        Ok(ctx)
    }

    /// Any cycle of `host`; used for negative controls.
    pub fn with_cycle(host: &Graph, cycle: CycleOrPath) -> Result<Self, LemmaError> {
        if !cycle.closed || !cycle.is_valid_in(host) {
            return Err(LemmaError::InvalidCycle);
        }
        let off = host.vertex_mask() & !cycle.mask();
        let off_cycle_components = host.components_within(off);
        let neighbor_sets = off_cycle_components
            .iter()
            .map(|&h| bits(h).fold(0u64, |acc, v| acc | host.neighbors(v)) & !h)
            .collect();
        Ok(LongestCycleContext {
            host: host.clone(),
            cycle,
            certified_longest: false,
            off_cycle_components,
            neighbor_sets,
        })
    }

    fn off_cycle(&self) -> u64 {
        self.host.vertex_mask() & !self.cycle.mask()
    }

    fn oriented(&self, orientation: Orientation) -> Oriented<'_> {
        let mut seq = self.cycle.vertices.clone();
        if orientation == Orientation::Reverse {
            seq.reverse();
        }
        let mut pos = vec![usize::MAX; self.host.order()];
        for (i, &v) in seq.iter().enumerate() {
            pos[v] = i;
        }
        Oriented {
            ctx: self,
            orientation,
            seq,
            pos,
        }
    }
}

/// The cycle read in one orientation.
struct Oriented<'a> {
    ctx: &'a LongestCycleContext,
    orientation: Orientation,
    seq: Vec<usize>,
    pos: Vec<usize>,
}

impl Oriented<'_> {
    fn len(&self) -> usize {
        self.seq.len()
    }

    fn succ(&self, v: usize) -> usize {
        self.seq[(self.pos[v] + 1) % self.len()]
    }

    fn pred(&self, v: usize) -> usize {
        self.seq[(self.pos[v] + self.len() - 1) % self.len()]
    }

    /// Vertices from `a` forward to `b`, both included.
    fn fwd(&self, a: usize, b: usize) -> Vec<usize> {
        let steps = (self.pos[b] + self.len() - self.pos[a]) % self.len();
        (0..=steps).map(|i| self.seq[(self.pos[a] + i) % self.len()]).collect()
    }

    /// Vertices from `a` backward to `b`, both included.
    fn back(&self, a: usize, b: usize) -> Vec<usize> {
        let mut v = self.fwd(b, a);
        v.reverse();
        v
    }

    /// Cycle vertices adjacent to `x`, in cycle order from the start.
    fn attachments(&self, x: usize) -> Vec<usize> {
        let nbrs = self.ctx.host.neighbors(x);
        self.seq.iter().copied().filter(|&v| nbrs >> v & 1 == 1).collect()
    }

    /// Whether `b` lies strictly after `a` and no later than `c`, going
    /// forward from `a`.
    fn between(&self, a: usize, b: usize, c: usize) -> bool {
        let n = self.len();
        let d = |u: usize| (self.pos[u] + n - self.pos[a]) % n;
        b != a && d(b) <= d(c)
    }

    fn has(&self, u: usize, v: usize) -> bool {
        u != v && self.ctx.host.has_edge(u, v)
    }

    /// Keep `candidate` only if it is a valid cycle longer than this one.
    fn longer(&self, candidate: Vec<usize>) -> Option<Vec<usize>> {
        let c = CycleOrPath::cycle(candidate);
        (c.len() > self.len() && c.is_valid_in(&self.ctx.host)).then_some(c.vertices)
    }

    fn violation(
        &self,
        lemma: Lemma,
        detail: String,
        witness: Vec<usize>,
        longer: Option<Vec<usize>>,
    ) -> Violation {
        Violation {
            lemma,
            orientation: self.orientation,
            detail,
            witness,
            form: None,
            longer_cycle: longer,
        }
    }
}

/// Shortest `a`-`b` path whose internal vertices lie in `within`; with
/// `direct` false the path needs at least one internal vertex.
fn path_through(g: &Graph, a: usize, b: usize, within: u64, direct: bool) -> Option<Vec<usize>> {
    if direct && g.has_edge(a, b) {
        return Some(vec![a, b]);
    }
    let mut parent = vec![usize::MAX; g.order()];
    let mut seen = 1u64 << a;
    let mut queue = VecDeque::from([a]);
    while let Some(v) = queue.pop_front() {
        let allowed = if v == a { within & !(1u64 << b) } else { within | 1u64 << b };
        for w in bits(g.neighbors(v) & allowed & !seen) {
            seen |= 1u64 << w;
            parent[w] = v;
            if w == b {
                let mut path = vec![b];
                let mut u = b;
                while u != a {
                    u = parent[u];
                    path.push(u);
                }
                path.reverse();
                return Some(path);
            }
            queue.push_back(w);
        }
    }
    None
}

const BOTH: [Orientation; 2] = [Orientation::Forward, Orientation::Reverse];

/// `x ∈ N(H)` never has `x⁺ ∈ N(H)` (the `x⁻` case is the reverse
/// orientation).
pub fn check_neighbor_gaps(ctx: &LongestCycleContext) -> Vec<Violation> {
    let mut out = Vec::new();
    for o in BOTH.map(|o| ctx.oriented(o)) {
        for (&h, &nh) in ctx.off_cycle_components.iter().zip(&ctx.neighbor_sets) {
            for x in bits(nh) {
                let xp = o.succ(x);
                if nh >> xp & 1 == 0 {
                    continue;
                }
                let longer = path_through(&ctx.host, x, xp, h, false).and_then(|p| {
                    let mut c = p;
                    c.extend(o.fwd(o.succ(xp), o.pred(x)));
                    o.longer(c)
                });
                out.push(o.violation(
                    Lemma::NeighborGaps,
                    format!("{x} and its successor {xp} both attach to component {h:#x}"),
                    vec![x, xp],
                    longer,
                ));
            }
        }
    }
    out
}

/// For distinct `x, y ∈ N(H)` there is no `x⁺y⁺`-path through vertices off
/// the cycle. Such a path exists exactly when `x⁺y⁺` is an edge or some
/// off-cycle component touches both.
pub fn check_no_crossing_paths(ctx: &LongestCycleContext) -> Vec<Violation> {
    let mut out = Vec::new();
    let off = ctx.off_cycle();
    for o in BOTH.map(|o| ctx.oriented(o)) {
        for (&h, &nh) in ctx.off_cycle_components.iter().zip(&ctx.neighbor_sets) {
            let attach: Vec<usize> = bits(nh).collect();
            for (a, &x) in attach.iter().enumerate() {
                for &y in &attach[a + 1..] {
                    let (xp, yp) = (o.succ(x), o.succ(y));
                    if xp == yp {
                        continue;
                    }
                    let Some(p) = path_through(&ctx.host, xp, yp, off, true) else {
                        continue;
                    };
                    let longer = path_through(&ctx.host, x, y, h, false).and_then(|pxy| {
                        let mut c = pxy;
                        c.extend(o.back(o.pred(y), xp));
                        c.extend(&p[1..]);
                        c.extend(o.fwd(o.succ(yp), o.pred(x)));
                        o.longer(c)
                    });
                    out.push(o.violation(
                        Lemma::NoCrossingPaths,
                        format!(
                            "{x}, {y} attach to component {h:#x} and their successors {xp}, {yp} are joined by {p:?}"
                        ),
                        vec![x, y, xp, yp],
                        longer,
                    ));
                }
            }
        }
    }
    out
}

/// `N(H)⁺ ∪ {x}` is independent for every `x` in `H`.
pub fn check_independent_sets(ctx: &LongestCycleContext) -> Vec<Violation> {
    let mut out = Vec::new();
    for o in BOTH.map(|o| ctx.oriented(o)) {
        for (&h, &nh) in ctx.off_cycle_components.iter().zip(&ctx.neighbor_sets) {
            let succs = bits(nh).fold(0u64, |acc, z| acc | 1u64 << o.succ(z));
            for x in bits(h) {
                let set = succs | 1u64 << x;
                if ctx.host.is_independent(set) {
                    continue;
                }
                let edge = bits(set)
                    .flat_map(|u| bits(ctx.host.neighbors(u) & set).map(move |v| (u, v)))
                    .find(|&(u, v)| u < v)
                    .expect("a dependent set has an edge");
                out.push(o.violation(
                    Lemma::IndependentSets,
                    format!("N(H)+ ∪ {{{x}}} for component {h:#x} contains the edge {}-{}", edge.0, edge.1),
                    vec![x, edge.0, edge.1],
                    None,
                ));
            }
        }
    }
    out
}

/// For each off-cycle `x` with cycle neighbours `x_1, …, x_d`, every
/// `x_i ≺ x_j ⪯ x_k` with `x_i ≠ x_k`: if `x_j⁻x_k⁺` is an edge then none of
/// `x_i⁺x_j, x_i⁻x_j, x_i⁺x_k, x_i⁻x_k` is.
pub fn check_common_arg(ctx: &LongestCycleContext) -> Vec<Violation> {
    let mut out = Vec::new();
    for o in BOTH.map(|o| ctx.oriented(o)) {
        for x in bits(ctx.off_cycle()) {
            let xs = o.attachments(x);
            for &xi in &xs {
                for &xk in &xs {
                    if xk == xi {
                        continue;
                    }
                    for &xj in xs.iter().filter(|&&xj| o.between(xi, xj, xk)) {
                        let (jm, kp) = (o.pred(xj), o.succ(xk));
                        if !o.has(jm, kp) {
                            continue;
                        }
                        let (ip, im) = (o.succ(xi), o.pred(xi));
                        let splices: [(bool, &str, Vec<Vec<usize>>); 4] = [
                            (o.has(im, xj), "x_i-x_j", vec![o.fwd(xi, jm), o.fwd(kp, im), o.fwd(xj, xk)]),
                            (o.has(im, xk), "x_i-x_k", vec![o.fwd(xi, jm), o.fwd(kp, im), o.back(xk, xj)]),
                            (o.has(ip, xj), "x_i+x_j", vec![o.back(xi, kp), o.back(jm, ip), o.fwd(xj, xk)]),
                            (o.has(ip, xk), "x_i+x_k", vec![o.back(xi, kp), o.back(jm, ip), o.back(xk, xj)]),
                        ];
                        for (fires, label, parts) in splices {
                            if !fires {
                                continue;
                            }
                            let mut c = vec![x];
                            c.extend(parts.into_iter().flatten());
                            let form = if xj == xk { CommonArgForm::Boundary } else { CommonArgForm::General };
                            let mut v = o.violation(
                                Lemma::CommonArg,
                                format!(
                                    "off-cycle {x}, (x_i, x_j, x_k) = ({xi}, {xj}, {xk}): {label} and x_j-x_k+ = {jm}-{kp} are both edges"
                                ),
                                vec![x, xi, xj, xk],
                                o.longer(c),
                            );
                            v.form = Some(form);
                            out.push(v);
                        }
                    }
                }
            }
        }
    }
    out
}

/// For each off-cycle `x`, ordered pair `x_i ≠ x_j` of its cycle neighbours
/// and arc edge `ww⁺` of `x_i → x_j`: not both `wz` and `w⁺z'` are edges for
/// `{z, z'} = {x_i⁻, x_j⁺}`.
pub fn check_non_xy_edges(ctx: &LongestCycleContext) -> Vec<Violation> {
    let mut out = Vec::new();
    for o in BOTH.map(|o| ctx.oriented(o)) {
        for x in bits(ctx.off_cycle()) {
            let xs = o.attachments(x);
            for &xi in &xs {
                for &xj in xs.iter().filter(|&&xj| xj != xi) {
                    let (im, jp) = (o.pred(xi), o.succ(xj));
                    let arc = o.fwd(xi, xj);
                    for pair in arc.windows(2) {
                        let (w, wp) = (pair[0], pair[1]);
                        for (z, zz, crossed) in [(im, jp, false), (jp, im, true)] {
                            if !(o.has(w, z) && o.has(wp, zz)) {
                                continue;
                            }
                            let middle = if crossed { o.fwd(jp, im) } else { o.back(im, jp) };
                            let mut c = vec![x];
                            c.extend(o.fwd(xi, w));
                            c.extend(middle);
                            c.extend(o.fwd(wp, xj));
                            out.push(o.violation(
                                Lemma::NonXyEdges,
                                format!(
                                    "off-cycle {x}, (x_i, x_j) = ({xi}, {xj}), w = {w}: {w}-{z} and {wp}-{zz} are both edges"
                                ),
                                vec![x, xi, xj, w, wp, z, zz],
                                o.longer(c),
                            ));
                        }
                    }
                }
            }
        }
    }
    out
}

/// Every off-cycle component is a single vertex. Applies only when the host
/// is the coline graph of `g` and is tough.
pub fn check_trivial_components(
    ctx: &LongestCycleContext,
    g: &Graph,
) -> Result<Vec<Violation>, LemmaError> {
    if g.edge_count() > 64 || coline(g).0 != ctx.host {
        return Err(LemmaError::HostMismatch);
    }
    if !is_tough(&ctx.host).tough {
        return Err(LemmaError::NotTough);
    }
    let o = ctx.oriented(Orientation::Forward);
    Ok(ctx
        .off_cycle_components
        .iter()
        .filter(|h| h.count_ones() > 1)
        .map(|&h| {
            o.violation(
                Lemma::TrivialComponents,
                format!("component {h:#x} has {} vertices", h.count_ones()),
                bits(h).collect(),
                None,
            )
        })
        .collect())
}

/// Violations of every checker that applies. The trivial-components check
/// runs only when `g` is given; its precondition errors are returned.
pub fn check_all(
    ctx: &LongestCycleContext,
    g: Option<&Graph>,
) -> Result<Vec<Violation>, LemmaError> {
    let mut out = check_neighbor_gaps(ctx);
    out.extend(check_no_crossing_paths(ctx));
    out.extend(check_independent_sets(ctx));
    out.extend(check_common_arg(ctx));
    out.extend(check_non_xy_edges(ctx));
    if let Some(g) = g {
        out.extend(check_trivial_components(ctx, g)?);
    }
    Ok(out)
}

/// A short cycle on which some checker must fire, and which checkers.
#[derive(Clone, Debug)]
pub struct NegativeControl {
    pub name: &'static str,
    pub host: Graph,
    /// The graph whose coline graph is `host`, when there is one.
    pub root: Option<Graph>,
    pub cycle: CycleOrPath,
    pub fires: Vec<Lemma>,
}

/// Hand-built non-longest cycles, together covering every checker.
pub fn negative_controls() -> Vec<NegativeControl> {
    // the prism (isomorphic to co(C6)): triangles 0 1 2 and 3 4 5, rungs i, i + 3
    let prism = Graph::from_edges(
        6,
        &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)],
    );
    let c6 = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5)]);
    vec![
        NegativeControl {
            name: "prism, square 0 1 4 3",
            host: prism.clone(),
            root: None,
            cycle: CycleOrPath::cycle(vec![0, 1, 4, 3]),
            fires: vec![Lemma::NeighborGaps, Lemma::NoCrossingPaths, Lemma::IndependentSets],
        },
        NegativeControl {
            name: "K5, square 0 1 2 3",
            host: Graph::complete(5),
            root: None,
            cycle: CycleOrPath::cycle(vec![0, 1, 2, 3]),
            fires: vec![Lemma::CommonArg, Lemma::NonXyEdges],
        },
        NegativeControl {
            // vertices 0, 3, 5 are the edges 01, 23, 45 of C6
            name: "co(C6), triangle 0 3 5",
            host: coline(&c6).0,
            root: Some(c6),
            cycle: CycleOrPath::cycle(vec![0, 3, 5]),
            fires: vec![Lemma::TrivialComponents],
        },
    ]
}
