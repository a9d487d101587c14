//! The Petersen graph is co(K5): 1-tough, not Hamiltonian, yet traceable.
//! The decision procedure and the exact oracles agree on all three.
//!
//! ```text
//! cargo run --release --example petersen
//! ```

use coline::characterize::{
    decide_coline_hamiltonian, decide_coline_tough, decide_coline_traceable,
};
use coline::graphcore::{coline, named};
use coline::oracle::{hamiltonian_cycle, hamiltonian_path, is_isomorphic, is_tough};

fn main() {
    let k5 = named("K5").unwrap();
    let (petersen, edges) = coline(&k5);
    println!("co(K5) has {} vertices and {} edges", petersen.order(), petersen.edge_count());
    println!("isomorphic to Petersen: {}", is_isomorphic(&petersen, &named("Petersen").unwrap()).is_some());
    for (i, (u, v)) in edges.iter().enumerate() {
        print!("{i}={u}{v} ");
    }
    println!();

    let tough = decide_coline_tough(&k5).unwrap();
    let ham = decide_coline_hamiltonian(&k5).unwrap();
    let trace = decide_coline_traceable(&k5).unwrap();
    println!("decided: tough {} hamiltonian {} ({:?}) traceable {}",
        tough.holds, ham.holds, ham.clause.map(|c| c.to_string()), trace.holds);

    let oracle_tough = is_tough(&petersen).tough;
    let cycle = hamiltonian_cycle(&petersen);
    let path = hamiltonian_path(&petersen);
    println!("oracle:  tough {oracle_tough} hamiltonian {} traceable {}", cycle.is_some(), path.is_some());
    if let Some(p) = path {
        println!("hamiltonian path: {:?}", p.vertices);
    }
    assert_eq!((tough.holds, ham.holds, trace.holds), (oracle_tough, false, true));
}
