//! Bicriteria-approximate shortcut sets and transitive-closure spanners
//! for directed graphs.
//!
//! Given a promise that some `(s, d)` shortcut exists, the solvers return a
//! verified `(α_S·s, α_D·d)` one: reachable pairs are split into β-thick
//! pairs settled by randomized hub/chain sampling and β-thin pairs settled
//! by LP rounding over critical-set covering constraints. All randomized
//! components are Las Vegas — outputs are re-verified before being
//! returned, and infeasibility comes with an exact certificate.

pub mod bits;
pub mod decompose;
pub mod error;
pub mod gen;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod pipeline;
pub mod thick;
pub mod thin;

pub use error::{Error, Result};
pub use graph::{
    bounded_dist, build_graph, scc_condense, transitive_reduction, verify_shortcut,
    verify_tc_spanner, DiGraph, PairSet, Report, ShortcutSet, Violation,
};
pub use pipeline::{
    approx_shortcut, approx_shortcut_dag, approx_shortcut_dag_traced, approx_tc_spanner,
    combined_size_cap, compute_beta, shortcut_from_tcspanner, DagSolution, Solution, SolveParams,
};
pub use thick::{
    classify_pairs, local_graph_size, settle_thick, universal_shortcut, Regime, ThickConfig,
    DEFAULT_MAX_RETRIES,
};
pub use thin::{
    cut_or_round, decompose_critical, is_critical, lp_feasible, minimal_critical_set, settle_thin,
    settle_thin_traced, ConstraintPool, CriticalSet, CutOrRound, FractionalSolution, ThinParams,
};
