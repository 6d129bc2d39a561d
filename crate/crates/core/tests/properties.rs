//! Randomized structural properties over arbitrary digraphs and DAGs.

use proptest::prelude::*;
use shortcut_forge::{
    approx_shortcut, build_graph, scc_condense, transitive_reduction, verify_shortcut, DiGraph,
    SolveParams,
};

/// Arbitrary digraph on up to `max_n` vertices (may contain cycles).
fn digraph(max_n: usize) -> impl Strategy<Value = DiGraph> {
    (2..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))
            .collect();
        let cap = (3 * n).min(pairs.len());
        proptest::sample::subsequence(pairs, 0..=cap)
            .prop_map(move |edges| build_graph(n, &edges).expect("in-range edges"))
    })
}

/// Arbitrary DAG: same, but only forward edges under the identity order.
fn dag(max_n: usize) -> impl Strategy<Value = DiGraph> {
    (2..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        let cap = (3 * n).min(pairs.len());
        proptest::sample::subsequence(pairs, 0..=cap)
            .prop_map(move |edges| build_graph(n, &edges).expect("in-range edges"))
    })
}

proptest! {
    #[test]
    fn transitive_reduction_preserves_closure(g in dag(9)) {
        let red = transitive_reduction(&g).unwrap();
        for u in 0..g.n() {
            for v in 0..g.n() {
                prop_assert_eq!(g.reach(u, v), red.reach(u, v), "pair ({}, {})", u, v);
            }
        }
        prop_assert!(red.m() <= g.m());
    }

    #[test]
    fn condensation_is_a_dag_and_preserves_reachability(g in digraph(9)) {
        let (cond, comp_of, reps) = scc_condense(&g);
        prop_assert!(cond.is_dag());
        prop_assert_eq!(reps.len(), cond.n());
        for u in 0..g.n() {
            for v in 0..g.n() {
                // Same-component pairs collapse to a single vertex, and
                // reachability here is over distinct pairs only.
                if comp_of[u] != comp_of[v] {
                    prop_assert_eq!(g.reach(u, v), cond.reach(comp_of[u], comp_of[v]));
                }
            }
        }
    }

    #[test]
    fn solver_output_verifies_on_any_digraph(
        g in digraph(9),
        d in 1usize..4,
        alpha_d in 1usize..3,
        seed in 0u64..4,
    ) {
        let p = SolveParams::new(g.n() * g.n(), d, alpha_d, seed);
        match approx_shortcut(&g, &p) {
            Ok(sol) => {
                let report = verify_shortcut(&g, &sol.edges, sol.verified_bound);
                prop_assert!(report.valid, "violation: {:?}", report.violation);
            }
            // A certified budget shortfall is an acceptable answer; anything
            // else is a solver bug at these generous budgets.
            Err(shortcut_forge::Error::Infeasible { .. }) => {}
            Err(e) => return Err(TestCaseError::fail(format!("solver error: {e}"))),
        }
    }
}
