//! Construction, checking, exact counting and exhaustive extremal search for
//! `K_s`-saturated graphs.
//!
//! The split graph `S(n, q)` (a `q`-clique joined to `n - q` independent
//! vertices) is the extremal construction throughout: `S(n, s-2)` is
//! `K_s`-saturated and minimises edges, cliques and `k`-matchings among
//! `K_s`-saturated graphs in the ranges this crate can check.

pub mod bits;
pub mod canon;
pub mod construct;
pub mod count;
pub mod counting;
pub mod error;
pub mod formulas;
pub mod graph;
pub mod graph6;
pub mod saturation;
pub mod search;
pub mod verify;

pub use canon::{are_isomorphic, canonical_certificate, canonical_form, CanonicalCertificate};
pub use construct::{join, make_split, SplitParams};
pub use count::Count;
pub use counting::{
    count_cliques, count_indep_sets, count_m2_via_degrees, count_matchings, count_matchings_with, matching_number,
    MotifKind, MotifSpec, Pivot,
};
pub use error::{Error, Result};
pub use graph::{Graph, MAX_VERTICES};
pub use graph6::{from_graph6, to_graph6};
pub use saturation::{check_saturation, contains_clique, creates_clique_on_addition, SaturationReport};
pub use search::{
    enumerate_saturated, enumerate_saturated_certificates, extremal_count, extremal_over, probe_conjecture,
    random_saturated, ExtremalResult, Mode, ProbeRow, SearchBudget, EXHAUSTIVE_MAX_N,
};
pub use verify::{verify_theorem, Theorem, VerifyRow};
