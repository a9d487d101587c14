use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::graphcore::{coline, for_each_mask_with_top, Graph, EdgeSpace};

use super::{canonical_form, is_isomorphic, CanonicalForm};

/// Largest root size the exhaustive search will enumerate.
pub const ROOT_SEARCH_LIMIT: usize = 8;

#[derive(Clone, Debug)]
pub struct RootSearch {
    /// One representative per isomorphism class, without isolated vertices,
    /// ordered by canonical form.
    pub roots: Vec<Graph>,
    /// The requested bound exceeded [`ROOT_SEARCH_LIMIT`] and was clamped.
    pub partial: bool,
}

/// All graphs `G` without isolated vertices on at most `max_vertices`
/// vertices with `co(G)` isomorphic to `l`, up to isomorphism.
pub fn find_roots(l: &Graph, max_vertices: usize) -> RootSearch {
    let partial = max_vertices > ROOT_SEARCH_LIMIT;
    let n = max_vertices.min(ROOT_SEARCH_LIMIT);
    let m = l.order();
    if m == 0 {
        return RootSearch { roots: vec![Graph::new(0)], partial };
    }
    let space = EdgeSpace::new(n);
    let total = space.pair_count();
    if m > total {
        return RootSearch { roots: vec![], partial };
    }
    let mut target_degrees = l.degrees();
    target_degrees.sort_unstable();

    let found: Vec<(CanonicalForm, Graph)> = (m - 1..total)
        .into_par_iter()
        .flat_map_iter(|top| {
            let mut local = Vec::new();
            for_each_mask_with_top(total, m, top, |mask| {
                if !space.is_degree_ordered(mask) {
                    return;
                }
                let g = space.graph(mask);
                // degree of edge uv in co(G) is m + 1 - deg u - deg v
                let mut co_degrees: Vec<usize> = g
                    .edges()
                    .iter()
                    .map(|&(u, v)| m + 1 - g.degree(u) - g.degree(v))
                    .collect();
                co_degrees.sort_unstable();
                if co_degrees != target_degrees {
                    return;
                }
                if is_isomorphic(&coline(&g).0, l).is_some() {
                    let root = g.strip_isolated();
                    local.push((canonical_form(&root), root));
                }
            });
            local
        })
        .collect();
    let unique: BTreeMap<CanonicalForm, Graph> = found.into_iter().collect();
    RootSearch {
        roots: unique.into_values().collect(),
        partial,
    }
}
