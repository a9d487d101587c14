//! Recover the graphs G with co(G) isomorphic to a given graph. The
//! Petersen graph has the single root K5; C5 is its own root.
//!
//! ```text
//! cargo run --release --example roots -- [GRAPH6]
//! ```

use coline::graph6;
use coline::graphcore::{coline, named};
use coline::oracle::{find_roots, is_isomorphic, ROOT_SEARCH_LIMIT};

fn main() {
    let targets = match std::env::args().nth(1) {
        Some(s) => vec![(s.clone(), graph6::parse(&s).expect("valid graph6"))],
        None => ["Petersen", "C5", "K3oK1", "C6"]
            .map(|n| (n.to_string(), named(n).unwrap()))
            .to_vec(),
    };
    for (label, l) in targets {
        let search = find_roots(&l, ROOT_SEARCH_LIMIT);
        let roots: Vec<String> = search.roots.iter().map(graph6::emit).collect();
        println!("{label}: roots {roots:?}{}", if search.partial { " (partial)" } else { "" });
        for r in &search.roots {
            assert!(is_isomorphic(&coline(r).0, &l).is_some());
        }
    }
}
