//! Exact exponential-time reference algorithms. Every characterization in
//! [`crate::characterize`] is checked against these.
//!
//! Cycle searches and toughness stay fast up to about 16 vertices. Root
//! search enumerates roots on at most 8 vertices.

mod canon;
mod cycles;
mod embed;
mod iso;
mod roots;
mod tough;

pub use canon::{canonical_form, canonical_labeling, CanonicalForm};
pub use cycles::{
    cms_exact, contains_power_ham_cycle, hamiltonian_cycle, hamiltonian_path, longest_cycle,
    CycleOrPath,
};
pub use embed::{contains_subgraph, find_embedding, is_induced_free};
pub use iso::{is_isomorphic, IsoCertificate};
pub use roots::{find_roots, RootSearch, ROOT_SEARCH_LIMIT};
pub use tough::{is_tough, vertex_connectivity, ToughnessResult, ToughnessWitness};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("the input graph has no edges")]
    EdgelessInput,
}
