//! Cyclic matching sequenceability: the largest k such that the edges of G
//! can be cyclically ordered with every k consecutive edges a matching.
//! co(G) is Hamiltonian exactly when cms(G) >= 2.
//!
//! ```text
//! cargo run --release --example cms
//! ```

use coline::characterize::decide_coline_hamiltonian;
use coline::graphcore::named;
use coline::oracle::cms_exact;

fn main() {
    for name in ["K5", "K3uK3", "C7", "2K3", "K3uP3", "C4uK2", "P7", "4K2", "H1"] {
        let g = named(name).unwrap();
        let cms = cms_exact(&g).unwrap();
        let ham = decide_coline_hamiltonian(&g).map(|d| d.holds);
        println!("{name:>6}: cms {cms}, co(G) hamiltonian {ham:?}");
        if let Ok(h) = ham {
            assert_eq!(cms >= 2, h);
        }
    }
}
