//! Polynomial-time decisions about `co(G)`, read off `G` itself.
//!
//! Toughness, Hamiltonicity and traceability of a coline graph are decided
//! from the edge count, the maximum degree and small exception lists. The
//! exception lists live in a [`Catalog`] generated once by the exhaustive
//! sweep and embedded in the crate.

mod catalog;
mod classify;
mod decide;
mod report;

pub use catalog::{
    Catalog, CatalogError, CATALOG_ENV, CATALOG_FORMAT_VERSION, NAMED, TOUGH_EXCEPTION_COUNT,
    TRACE_EXCEPTION_COUNT, WU_MENG_COUNT,
};
pub use classify::{classify_disconnected_coline, is_type_a, rho, ColineCase, ColineClass};
pub use decide::{
    decide_coline_hamiltonian, decide_coline_hamiltonian_with, decide_coline_tough,
    decide_coline_tough_with, decide_coline_traceable, decide_coline_traceable_with,
    decide_wu_meng, degree_clause_fires, is_pseudo_tough, is_wu_meng_exception, Decision,
    HamClause, ToughClause, TraceClause, WuMengClause,
};
pub use report::{
    classify_graph, DecisionReport, OracleCheck, Verdict, ORACLE_VERTEX_LIMIT, SWEPT_RANGE,
};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CharacterizeError {
    #[error("{what} is decided only for graphs with at least {need} edges (this one has {m})")]
    OutOfScope {
        what: &'static str,
        need: usize,
        m: usize,
    },
    #[error("coline graph has {vertices} vertices, more than the oracle limit of {limit}")]
    TooLargeToVerify { vertices: usize, limit: usize },
    #[error(transparent)]
    Catalog(#[from] CatalogError),
}
