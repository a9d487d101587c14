//! Traceability reduces to Hamiltonicity: L has a Hamiltonian path exactly
//! when L plus a dominating vertex has a Hamiltonian cycle, and for
//! L = co(G) that graph is co(G ∪ K2). The toughness analogue is pseudo
//! toughness.
//!
//! ```text
//! cargo run --release --example trace_bridge
//! ```

use coline::characterize::{decide_coline_tough, decide_coline_traceable, is_pseudo_tough};
use coline::graphcore::{add_dominating_vertex, coline, disjoint_union, named};
use coline::oracle::{hamiltonian_cycle, hamiltonian_path, is_isomorphic};

fn main() {
    let k2 = named("K2").unwrap();
    for name in ["K3oK1", "K3uP3", "K1,3", "P5", "C4", "K4"] {
        let g = named(name).unwrap();
        let l = coline(&g).0;
        let star = add_dominating_vertex(&l);
        let gk2 = disjoint_union(&g, &k2);
        let same = is_isomorphic(&star, &coline(&gk2).0).is_some();
        let path = hamiltonian_path(&l).is_some();
        let cycle = hamiltonian_cycle(&star).is_some();
        let trace = decide_coline_traceable(&g).map(|d| d.holds);
        let pseudo = is_pseudo_tough(&l);
        let tough_star = decide_coline_tough(&gk2).map(|d| d.holds);
        println!(
            "{name:>6}: L* ≅ co(G∪K2) {same}; path(L) {path} cycle(L*) {cycle} decided {trace:?}; pseudo-tough {pseudo} vs co(G∪K2) tough {tough_star:?}"
        );
        assert_eq!(path, cycle);
    }
}
