//! Hamiltonicity, toughness and traceability of coline graphs.
//!
//! The coline graph `co(G)` of a graph `G` has the edges of `G` as vertices,
//! two of them adjacent exactly when they share no endpoint. This crate
//! decides, from `G` alone, whether `co(G)` is tough, Hamiltonian or
//! traceable, and backs every decision with exact brute-force oracles and an
//! exhaustive sweep over small graphs.
//!
//! * [`graphcore`]: the graph type and constructions (complement, line
//!   graph, coline graph, unions, graph powers, named graphs).
//! * [`oracle`]: exact searches (Hamiltonian cycles and paths, longest
//!   cycles, toughness, isomorphism, canonical forms, subgraph embedding,
//!   root finding, cyclic matching sequenceability).
//! * [`characterize`]: the polynomial-time decisions and exception catalogs.
//! * [`lemmacheck`]: runtime verifiers for structural properties of longest
//!   cycles.
//! * [`sweep`]: the exhaustive enumeration harness.
//! * [`cli`]: command implementations behind the `coline` binary.

pub mod characterize;
pub mod cli;
pub mod graph6;
pub mod graphcore;
pub mod lemmacheck;
pub mod oracle;
pub mod sweep;

pub use graphcore::Graph;
