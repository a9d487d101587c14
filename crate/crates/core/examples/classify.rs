//! Decide toughness, Hamiltonicity and traceability of co(G) for a few
//! graphs, showing which clause decided each negative verdict.
//!
//! ```text
//! cargo run --release --example classify -- [NAME...]
//! ```

use coline::characterize::{classify_graph, Catalog, Verdict};
use coline::graphcore::named;

fn show<C: std::fmt::Display>(label: &str, v: &Verdict<C>) -> String {
    match v {
        Verdict::Decided(d) => match &d.clause {
            Some(c) => format!("{label}=no [{c}]"),
            None => format!("{label}=yes"),
        },
        Verdict::OutOfScope { .. } => format!("{label}=n/a"),
    }
}

fn main() {
    let mut names: Vec<String> = std::env::args().skip(1).collect();
    if names.is_empty() {
        names = ["K1,4", "C6", "K3uP3", "C4uK2", "K3oK1", "H2", "K6", "P7", "2K3"]
            .map(String::from)
            .to_vec();
    }
    let catalog = Catalog::global().expect("embedded catalog loads");
    for name in &names {
        let g = match named(name) {
            Ok(g) => g,
            Err(e) => {
                eprintln!("{name}: {e}");
                continue;
            }
        };
        let r = classify_graph(catalog, &g, g.edge_count() <= 12).expect("classification");
        let agree = r.oracle.as_ref().map_or("unchecked", |o| if o.agrees() { "oracle agrees" } else { "ORACLE DISAGREES" });
        println!(
            "{name:>6} m={:<2} Δ={} {} {} {} {}  ({agree})",
            r.m,
            r.max_degree,
            show("tough", &r.tough),
            show("ham", &r.hamiltonian),
            show("wu-meng", &r.wu_meng),
            show("trace", &r.traceable),
        );
    }
}
