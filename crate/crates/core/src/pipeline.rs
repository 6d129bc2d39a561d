//! Top-level solvers: β selection, thick/thin assembly for DAGs, the SCC
//! wrapper for general digraphs, and the shortcut ↔ TC-spanner reductions.
//!
//! Every public solver verifies its output against the advertised bound
//! before returning — callers never see an unverified set.

use crate::error::{Error, Result};
use crate::graph::{
    scc_condense, transitive_reduction, verify_shortcut, verify_tc_spanner, DiGraph, ShortcutSet,
};
use crate::thick::{
    log2n, settle_thick, universal_shortcut, Regime, ThickConfig, DEFAULT_MAX_RETRIES,
};
use crate::thin::{settle_thin_traced, ThinEvent, ThinParams};

/// Exponent for the large-diameter fallback trigger: when `α_D·d ≥ n^0.45`
/// the β = 1 universal construction is used instead of the main algorithm.
pub const FALLBACK_EXPONENT: f64 = 0.45;

#[derive(Debug, Clone, Copy)]
pub struct SolveParams {
    /// Promised shortcut budget; must be at least `n`.
    pub s: usize,
    /// Promised target diameter; at least 1.
    pub d: usize,
    /// Diameter slack `α_D ≥ 1`.
    pub alpha_d: usize,
    pub seed: u64,
    pub max_retries: u32,
}

impl SolveParams {
    pub fn new(s: usize, d: usize, alpha_d: usize, seed: u64) -> Self {
        SolveParams {
            s,
            d,
            alpha_d,
            seed,
            max_retries: DEFAULT_MAX_RETRIES,
        }
    }

    pub fn bound(&self) -> usize {
        self.alpha_d * self.d
    }
}

/// `β = clamp(n / (d·√(s·α_D)), 1, n)`.
pub fn compute_beta(n: usize, s: usize, d: usize, alpha_d: usize) -> f64 {
    let raw = n as f64 / (d as f64 * ((s * alpha_d) as f64).sqrt());
    raw.clamp(1.0, n as f64)
}

/// The size cap `999·n²·log²n/(β·(α_D d)²) + n⌈log n⌉ + 1000·log²n·(β/α_D)·s`
/// at the β the solver would pick — the assertable bound for accepted runs.
pub fn combined_size_cap(n: usize, s: usize, d: usize, alpha_d: usize) -> f64 {
    let beta = compute_beta(n, s, d, alpha_d);
    let bound = (alpha_d * d) as f64;
    let lg = log2n(n);
    let f1 = crate::thick::CHAIN_CONSTANT * (n * n) as f64 * lg * lg / (beta * bound * bound)
        + (n as f64) * lg.ceil();
    let f2 = crate::thin::SIZE_CAP_CONSTANT * lg * lg * beta / alpha_d as f64 * s as f64;
    f1 + f2
}

/// Outcome of a DAG solve, with the pieces broken out for reporting.
#[derive(Debug, Clone)]
pub struct DagSolution {
    pub edges: ShortcutSet,
    pub f1_size: usize,
    pub f2_size: usize,
    pub beta: f64,
    pub regime: Regime,
    pub retries: u32,
}

pub fn approx_shortcut_dag(g: &DiGraph, p: &SolveParams) -> Result<DagSolution> {
    approx_shortcut_dag_traced(g, p, &mut Vec::new())
}

/// As [`approx_shortcut_dag`], additionally recording every LP/rounding
/// step of the thin settler.
pub fn approx_shortcut_dag_traced(
    g: &DiGraph,
    p: &SolveParams,
    trace: &mut Vec<ThinEvent>,
) -> Result<DagSolution> {
    if !g.is_dag() {
        return Err(Error::NotADag);
    }
    let n = g.n();
    if p.s < n {
        return Err(Error::BadParams(format!(
            "budget s = {} must be at least n = {n}",
            p.s
        )));
    }
    if p.d == 0 || p.alpha_d == 0 {
        return Err(Error::BadParams("d and alpha_d must be at least 1".into()));
    }
    let bound = p.bound();
    let beta = compute_beta(n, p.s, p.d, p.alpha_d);

    if g.diameter() <= bound {
        let cfg = ThickConfig::new(n, beta, p.alpha_d, p.d, p.seed);
        return Ok(DagSolution {
            edges: ShortcutSet::new(g),
            f1_size: 0,
            f2_size: 0,
            beta,
            regime: cfg.regime,
            retries: 0,
        });
    }

    if bound >= 2 && (bound as f64) >= (n as f64).powf(FALLBACK_EXPONENT) {
        let (edges, retries) = universal_shortcut(g, bound, p.seed)?;
        let report = verify_shortcut(g, &edges, bound);
        if !report.valid {
            return Err(Error::VerificationFailed(format!("{report:?}")));
        }
        return Ok(DagSolution {
            f1_size: edges.len(),
            f2_size: 0,
            edges,
            beta: 1.0,
            regime: Regime::UniversalFallback,
            retries,
        });
    }

    let mut cfg = ThickConfig::new(n, beta, p.alpha_d, p.d, p.seed);
    cfg.max_retries = p.max_retries;
    let (f1, thick_retries) = settle_thick(g, &cfg)?;
    let thin_params = ThinParams {
        s: p.s,
        d: p.d,
        alpha_d: p.alpha_d,
        beta,
        seed: p.seed ^ 0x9e37_79b9_7f4a_7c15,
        max_retries: p.max_retries,
    };
    let (f2, thin_stats) = settle_thin_traced(g, &thin_params, trace)?;
    let mut edges = f1.clone();
    edges.union_with(&f2);
    let report = verify_shortcut(g, &edges, bound);
    if !report.valid {
        return Err(Error::VerificationFailed(format!("{report:?}")));
    }
    Ok(DagSolution {
        f1_size: f1.len(),
        f2_size: f2.len(),
        edges,
        beta,
        regime: cfg.regime,
        retries: thick_retries + thin_stats.retries,
    })
}

/// General-digraph solution: the condensation solve plus the SCC lift.
#[derive(Debug, Clone)]
pub struct Solution {
    pub edges: ShortcutSet,
    /// Star edges wiring each nontrivial SCC through its center — the only
    /// overhead beyond the (lifted) condensation solution; at most `2n`.
    pub star_edges: usize,
    /// Center-to-center images of condensation edges (base and shortcut).
    pub lifted_edges: usize,
    /// The solve on the condensation (the graph itself when it is a DAG).
    pub dag: DagSolution,
    /// Bound the output was verified at: `α_D·d` for DAGs, else `3·α_D·d`.
    pub verified_bound: usize,
}

pub fn approx_shortcut(g: &DiGraph, p: &SolveParams) -> Result<Solution> {
    if p.s < g.n() {
        return Err(Error::BadParams(format!(
            "budget s = {} must be at least n = {}",
            p.s,
            g.n()
        )));
    }
    if g.is_dag() {
        let dag = approx_shortcut_dag(g, p)?;
        return Ok(Solution {
            edges: dag.edges.clone(),
            star_edges: 0,
            lifted_edges: dag.edges.len(),
            verified_bound: p.bound(),
            dag,
        });
    }
    let (cond, comp_of, reps) = scc_condense(g);
    let dag = approx_shortcut_dag(&cond, p)?;

    // Lift: star edges inside each nontrivial SCC, plus a center-to-center
    // edge for every edge of the solved condensation graph. Star edges make
    // every vertex 1 hop from its center; center edges make every
    // condensation hop cost 1, so a condensation path of length L becomes
    // at most L + 2 ≤ 3·α_D·d hops in g.
    let mut edges = ShortcutSet::new(g);
    let mut star_edges = 0;
    for v in 0..g.n() {
        let c = reps[comp_of[v]];
        if v != c {
            for e in [(c, v), (v, c)] {
                if !g.has_edge(e.0, e.1) && !edges.contains(&e) {
                    edges.insert(e);
                    star_edges += 1;
                }
            }
        }
    }
    let mut lifted_edges = 0;
    let cond_edges = cond.edges().iter().copied().chain(dag.edges.iter());
    for (a, b) in cond_edges {
        let e = (reps[a], reps[b]);
        if !g.has_edge(e.0, e.1) && !edges.contains(&e) {
            edges.insert(e);
            lifted_edges += 1;
        }
    }
    let verified_bound = 3 * p.bound();
    let report = verify_shortcut(g, &edges, verified_bound);
    if !report.valid {
        return Err(Error::VerificationFailed(format!("{report:?}")));
    }
    Ok(Solution {
        edges,
        star_edges,
        lifted_edges,
        dag,
        verified_bound,
    })
}

/// TC spanner by reduction: shortcut the transitive reduction and union.
/// `|reduction| > s` proves no (s, d) TC spanner exists at all.
pub fn approx_tc_spanner(g: &DiGraph, p: &SolveParams) -> Result<Vec<(usize, usize)>> {
    if !g.is_dag() {
        return Err(Error::NotADag);
    }
    let red = transitive_reduction(g)?;
    if red.m() > p.s {
        return Err(Error::PromiseViolated(format!(
            "transitive reduction has {} edges > budget {}; every TC spanner contains it",
            red.m(),
            p.s
        )));
    }
    let dag = approx_shortcut_dag(&red, p)?;
    let mut h: Vec<(usize, usize)> = red.edges().to_vec();
    h.extend(dag.edges.iter());
    h.sort_unstable();
    h.dedup();
    let report = verify_tc_spanner(g, &h, p.bound());
    if !report.valid {
        return Err(Error::VerificationFailed(format!("{report:?}")));
    }
    Ok(h)
}

/// Shortcut via a TC-spanner call with budget `2s` (valid when `s ≥ m`):
/// the spanner minus the base edges is a `(2α_S·s, α_D·d)` shortcut.
pub fn shortcut_from_tcspanner(g: &DiGraph, p: &SolveParams) -> Result<ShortcutSet> {
    if p.s < g.m() {
        return Err(Error::BadBudget { s: p.s, m: g.m() });
    }
    let doubled = SolveParams {
        s: (2 * p.s).max(g.n()),
        ..*p
    };
    let h = approx_tc_spanner(g, &doubled)?;
    let f = ShortcutSet::from_edges(g, h.into_iter().filter(|&(u, v)| !g.has_edge(u, v)));
    let report = verify_shortcut(g, &f, p.bound());
    if !report.valid {
        return Err(Error::VerificationFailed(format!("{report:?}")));
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::{gen_path, gen_random_dag};
    use crate::graph::build_graph;

    #[test]
    fn beta_formula() {
        // n = 100, s = 100, d = 2, α_D = 1: 100/(2·10) = 5
        assert!((compute_beta(100, 100, 2, 1) - 5.0).abs() < 1e-12);
        // clamped below at 1
        assert_eq!(compute_beta(10, 1000, 10, 4), 1.0);
    }

    #[test]
    fn path_at_diameter_is_empty() {
        let g = gen_path(10);
        let p = SolveParams::new(10, g.diameter(), 1, 0);
        let sol = approx_shortcut_dag(&g, &p).unwrap();
        assert!(sol.edges.is_empty());
    }

    #[test]
    fn path32_d4_verified() {
        let g = gen_path(32);
        let p = SolveParams::new(32, 4, 2, 0);
        let sol = approx_shortcut_dag(&g, &p).unwrap();
        assert!(verify_shortcut(&g, &sol.edges, 8).valid);
        assert!((sol.edges.len() as f64) <= combined_size_cap(32, 32, 4, 2));
    }

    #[test]
    fn small_budget_rejected() {
        let g = gen_path(10);
        let p = SolveParams::new(9, 2, 1, 0);
        assert!(matches!(
            approx_shortcut_dag(&g, &p),
            Err(Error::BadParams(_))
        ));
    }

    #[test]
    fn strongly_connected_star_only() {
        let edges: Vec<_> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        let g = build_graph(6, &edges).unwrap();
        let p = SolveParams::new(6, 1, 1, 0);
        let sol = approx_shortcut(&g, &p).unwrap();
        assert!(verify_shortcut(&g, &sol.edges, 3).valid);
        assert!(sol.star_edges <= 2 * 6);
    }

    #[test]
    fn two_bridged_cycles_within_three() {
        let g = build_graph(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)]).unwrap();
        let p = SolveParams::new(6, 1, 1, 0);
        let sol = approx_shortcut(&g, &p).unwrap();
        assert_eq!(sol.verified_bound, 3);
        assert!(verify_shortcut(&g, &sol.edges, 3).valid);
    }

    #[test]
    fn dag_input_matches_dag_solver() {
        let g = gen_random_dag(20, 0.15, 3);
        let p = SolveParams::new(20, 2, 2, 5);
        let a = approx_shortcut(&g, &p).unwrap();
        let b = approx_shortcut_dag(&g, &p).unwrap();
        assert_eq!(a.star_edges, 0);
        assert_eq!(
            a.edges.iter().collect::<Vec<_>>(),
            b.edges.iter().collect::<Vec<_>>()
        );
    }

    #[test]
    fn tc_spanner_low_diameter_is_reduction() {
        // complete DAG on 4 vertices; its reduction is the path, which at
        // d = 3 already meets the bound, so H is exactly the reduction
        let g = build_graph(4, &[(0, 1), (0, 2), (0, 3), (1, 3), (1, 2), (2, 3)]).unwrap();
        let p = SolveParams::new(4, 3, 1, 0);
        let h = approx_tc_spanner(&g, &p).unwrap();
        let red = transitive_reduction(&g).unwrap();
        assert_eq!(h, red.edges().to_vec());
    }

    #[test]
    fn tc_spanner_path9_d2() {
        let g = gen_path(9);
        let p = SolveParams::new(9, 2, 1, 0);
        let h = approx_tc_spanner(&g, &p).unwrap();
        assert!(verify_tc_spanner(&g, &h, 2).valid);
    }

    #[test]
    fn tc_spanner_promise_violation() {
        // complete bipartite DAG: the reduction is all 24 edges, above the
        // n-sized budget
        let mut edges = Vec::new();
        for u in 0..4 {
            for v in 4..10 {
                edges.push((u, v));
            }
        }
        let dense = build_graph(10, &edges).unwrap();
        let p3 = SolveParams::new(10, 1, 1, 0);
        assert!(matches!(
            approx_tc_spanner(&dense, &p3),
            Err(Error::PromiseViolated(_))
        ));
    }

    #[test]
    fn shortcut_from_tcspanner_path8() {
        let g = gen_path(8);
        let p = SolveParams::new(g.m(), 2, 1, 0);
        let f = shortcut_from_tcspanner(&g, &p).unwrap();
        assert!(verify_shortcut(&g, &f, 2).valid);
    }

    #[test]
    fn shortcut_from_tcspanner_rejects_small_budget() {
        let g = gen_path(8);
        let p = SolveParams::new(g.m() - 1, 2, 1, 0);
        assert!(matches!(
            shortcut_from_tcspanner(&g, &p),
            Err(Error::BadBudget { .. })
        ));
    }

    #[test]
    fn deterministic_per_seed() {
        let g = gen_random_dag(40, 0.08, 7);
        let p = SolveParams::new(40, 2, 2, 99);
        let a = approx_shortcut_dag(&g, &p).unwrap();
        let b = approx_shortcut_dag(&g, &p).unwrap();
        assert_eq!(
            a.edges.iter().collect::<Vec<_>>(),
            b.edges.iter().collect::<Vec<_>>()
        );
    }
}
