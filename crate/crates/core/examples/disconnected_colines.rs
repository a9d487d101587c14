//! When is co(G) disconnected? Only for stars, the triangle-plus-edge
//! type, C4, F_k, K4- and K4. Prints each case with its component count
//! and, for stars, the number of isolated coline vertices.
//!
//! ```text
//! cargo run --release --example disconnected_colines
//! ```

use coline::characterize::classify_disconnected_coline;
use coline::graphcore::{coline, named};

fn main() {
    for name in ["K1,3", "K1,6", "K3uK2", "F3", "F5", "C4", "K4-", "K4", "P5", "K3uP3"] {
        let g = named(name).unwrap();
        let class = classify_disconnected_coline(&g);
        let l = coline(&g).0;
        let rho = class.rho.map_or(String::from("-"), |r| r.to_string());
        println!(
            "{name:>6}: case {:<12} components {} (oracle {}) rho {rho} prediction holds: {}",
            class.case.to_string(),
            class.component_count,
            l.component_count(),
            class.matches_prediction(g.edge_count()),
        );
    }
}
