//! Read and write graphs: graph6 strings, edge-list files and named
//! graphs, with canonical forms for isomorphism-invariant ids.
//!
//! ```text
//! cargo run --release --example graph6_io
//! ```

use coline::cli::{format_edge_list, parse_edge_list};
use coline::graph6;
use coline::graphcore::named;
use coline::oracle::canonical_form;

fn main() {
    let h2 = named("H2").unwrap();
    let text = graph6::emit(&h2);
    let back = graph6::parse(&text).unwrap();
    assert_eq!(back, h2);
    println!("H2 as graph6: {text}, canonical {}", canonical_form(&h2));

    let file = format_edge_list(&h2);
    println!("edge list:\n{file}");
    let parsed = parse_edge_list("# triangle with a tail\n0 1\n1 2\n0 2\n2 3\n").unwrap();
    println!("parsed K3+: canonical {} (named K3+: {})", canonical_form(&parsed), canonical_form(&named("K3+").unwrap()));

    match parse_edge_list("0 1\n1 1\n") {
        Ok(_) => unreachable!(),
        Err(e) => println!("rejected: {e}"),
    }
}
