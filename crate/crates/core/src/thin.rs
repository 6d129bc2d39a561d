//! Thin-pair settling via the critical-set covering LP.
//!
//! A k-critical set for a witness pair is a set of closure edges whose
//! removal from `E^T` pushes the pair's distance above k. Feasible shortcut
//! sets must hit every minimal critical set, which yields a covering LP over
//! candidate edges `E^T \ E`. The driver alternates an exact LP solve over
//! the pooled constraints with the randomized Cut-or-Round step that either
//! rounds the fractional point into a valid `F2` or extracts a violated
//! constraint.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{DiGraph, PairSet, ShortcutSet};
use crate::thick::{classify_pairs, first_unsettled, log2n, DEFAULT_MAX_RETRIES};

/// Sampling inflation constant for Cut-or-Round.
pub const ROUND_CONSTANT: f64 = 500.0;
/// Acceptance cap constant for the rounded set size.
pub const SIZE_CAP_CONSTANT: f64 = 1000.0;

pub type EdgeSet = BTreeSet<(usize, usize)>;

/// A set of closure edges (disjoint from `E`) whose removal from `E^T`
/// leaves the witness pair farther apart than `bound`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriticalSet {
    pub edges: EdgeSet,
    pub witness: (usize, usize),
    pub bound: usize,
}

/// Fractional point over candidate edges; entries absent from `x` are 0.
#[derive(Debug, Clone)]
pub struct FractionalSolution {
    pub x: BTreeMap<(usize, usize), f64>,
    pub budget: f64,
}

impl FractionalSolution {
    pub fn zero(budget: f64) -> Self {
        FractionalSolution {
            x: BTreeMap::new(),
            budget,
        }
    }

    pub fn value(&self, e: &(usize, usize)) -> f64 {
        self.x.get(e).copied().unwrap_or(0.0)
    }

    pub fn total(&self) -> f64 {
        self.x.values().sum()
    }

    pub fn mass<'a>(&self, edges: impl IntoIterator<Item = &'a (usize, usize)>) -> f64 {
        edges.into_iter().map(|e| self.value(e)).sum()
    }
}

/// Accumulated covering constraints; every member is revalidated on insert.
#[derive(Debug, Clone, Default)]
pub struct ConstraintPool {
    constraints: Vec<CriticalSet>,
}

impl ConstraintPool {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.constraints.len()
    }

    pub fn is_empty(&self) -> bool {
        self.constraints.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &CriticalSet> {
        self.constraints.iter()
    }

    /// Inserts after re-checking criticality, minimality and disjointness
    /// from `E`.
    pub fn insert(&mut self, g: &DiGraph, cs: CriticalSet) -> Result<()> {
        // A re-derived edge set means some LP point failed to cover a pooled
        // row; surface that instead of letting the driver loop on it.
        if self.constraints.iter().any(|c| c.edges == cs.edges) {
            return Err(Error::PreconditionViolated(
                "constraint already pooled".into(),
            ));
        }
        let (u, v) = cs.witness;
        if !is_critical(g, &cs.edges, u, v, cs.bound)? {
            return Err(Error::PreconditionViolated(format!(
                "set is not {}-critical for ({u}, {v})",
                cs.bound
            )));
        }
        for e in &cs.edges {
            if g.has_edge(e.0, e.1) {
                return Err(Error::PreconditionViolated(format!(
                    "critical set contains base edge ({}, {})",
                    e.0, e.1
                )));
            }
            let mut without = cs.edges.clone();
            without.remove(e);
            if is_critical(g, &without, u, v, cs.bound)? {
                return Err(Error::PreconditionViolated(format!(
                    "critical set not minimal: ({}, {}) is redundant",
                    e.0, e.1
                )));
            }
        }
        self.constraints.push(cs);
        Ok(())
    }

    /// Debug dump, one constraint per line: `k u v : e1 e2 ...`.
    pub fn dump(&self) -> String {
        use std::fmt::Write;
        let mut out = String::new();
        for c in &self.constraints {
            write!(out, "{} {} {} :", c.bound, c.witness.0, c.witness.1).unwrap();
            for &(a, b) in &c.edges {
                write!(out, " {a},{b}").unwrap();
            }
            out.push('\n');
        }
        out
    }
}

/// BFS distances from `src` in the closure graph minus `removed`, truncated
/// at `limit` hops. `dist[src] = 0`.
fn closure_dists_without(g: &DiGraph, removed: &EdgeSet, src: usize, limit: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.n()];
    dist[src] = 0;
    let mut frontier = vec![src];
    let mut d = 0;
    let closure = g.closure_out();
    while !frontier.is_empty() && d < limit {
        d += 1;
        let mut next = Vec::new();
        for &u in &frontier {
            for &v in &closure[u] {
                if dist[v] == usize::MAX && !removed.contains(&(u, v)) {
                    dist[v] = d;
                    next.push(v);
                }
            }
        }
        frontier = next;
    }
    dist
}

/// True iff `E^T \ a` contains no `u → v` path of length at most `k`.
pub fn is_critical(g: &DiGraph, a: &EdgeSet, u: usize, v: usize, k: usize) -> Result<bool> {
    if !g.reach(u, v) {
        return Err(Error::NotReachable(u, v));
    }
    let dist = closure_dists_without(g, a, u, k);
    Ok(dist[v] == usize::MAX || dist[v] > k)
}

/// Extracts a minimal k-critical set for `(u, v)`, disjoint from
/// `E ∪ protected`. Requires the pair to be unsettled at `k` by
/// `E ∪ protected`.
pub fn minimal_critical_set(
    g: &DiGraph,
    u: usize,
    v: usize,
    k: usize,
    protected: &ShortcutSet,
) -> Result<CriticalSet> {
    if !g.reach(u, v) {
        return Err(Error::NotReachable(u, v));
    }
    if crate::graph::bounded_dist(g, protected, u, v, k).is_some() {
        return Err(Error::PreconditionViolated(format!(
            "({u}, {v}) is already within {k} hops of E ∪ protected"
        )));
    }
    // Candidate edges live inside the witness pair's local graph: every
    // u → v path stays there.
    let mut local: Vec<usize> = g.desc(u).intersection(g.anc(v));
    if !local.contains(&u) {
        local.push(u);
    }
    if !local.contains(&v) {
        local.push(v);
    }
    let local: HashSet<usize> = local.into_iter().collect();
    let mut a: EdgeSet = EdgeSet::new();
    for &w in &local {
        for &z in &g.closure_out()[w] {
            if local.contains(&z) && !g.has_edge(w, z) && !protected.contains(&(w, z)) {
                a.insert((w, z));
            }
        }
    }
    debug_assert!(is_critical(g, &a, u, v, k)?);
    // Greedy pruning in sorted edge order.
    let candidates: Vec<(usize, usize)> = a.iter().copied().collect();
    for e in candidates {
        a.remove(&e);
        if !is_critical(g, &a, u, v, k)? {
            a.insert(e);
        }
    }
    Ok(CriticalSet {
        edges: a,
        witness: (u, v),
        bound: k,
    })
}

/// Splits an `(α_D·d)`-critical set into distance batches and converts the
/// lightest batch into a minimal d-critical set whose fractional mass stays
/// below 1.
pub fn decompose_critical(
    g: &DiGraph,
    aprime: &CriticalSet,
    x: &FractionalSolution,
    d: usize,
    alpha_d: usize,
) -> Result<CriticalSet> {
    if !g.is_dag() {
        return Err(Error::NotADag);
    }
    let mass = x.mass(aprime.edges.iter());
    if mass >= alpha_d as f64 / 9.0 {
        return Err(Error::PreconditionViolated(format!(
            "critical-set mass {mass} is not below alpha_d/9"
        )));
    }
    if aprime.bound != alpha_d * d {
        return Err(Error::PreconditionViolated(format!(
            "expected a {}-critical set, got bound {}",
            alpha_d * d,
            aprime.bound
        )));
    }
    let batches = alpha_d / 2;
    if batches == 0 {
        return Err(Error::PreconditionViolated(
            "batch decomposition needs alpha_d >= 2".into(),
        ));
    }
    if d == 1 {
        // A 1-critical set for (u, v) is any set containing the closure edge
        // (u, v) itself, so the min-mass edge of A' is already a minimal
        // 1-critical singleton. The batch construction below needs batches
        // spanning more than d layers and does not apply here.
        let (mass, e) = aprime
            .edges
            .iter()
            .map(|&e| (x.value(&e), e))
            .min_by(|a, b| a.partial_cmp(b).expect("finite masses"))
            .expect("critical sets are nonempty");
        if mass >= 1.0 {
            return Err(Error::PreconditionViolated(format!(
                "lightest edge of the critical set has mass {mass} >= 1"
            )));
        }
        return Ok(CriticalSet {
            edges: EdgeSet::from([e]),
            witness: e,
            bound: 1,
        });
    }
    let (s, t) = aprime.witness;
    if !is_critical(g, &aprime.edges, s, t, aprime.bound)? {
        return Err(Error::PreconditionViolated(format!(
            "input set is not {}-critical for ({s}, {t})",
            aprime.bound
        )));
    }
    // Shortest-path layers from s in E^T \ A'. The witness sits beyond
    // layer α_D·d, so all layers up to it are nonempty.
    let dist = closure_dists_without(g, &aprime.edges, s, alpha_d * d + 1);
    let in_layer_range =
        |w: usize, lo: usize, hi: usize| dist[w] != usize::MAX && dist[w] >= lo && dist[w] <= hi;

    let mut best: Option<(f64, usize, EdgeSet)> = None;
    for i in 1..=batches {
        let lo = 2 * (i - 1) * d;
        let hi = 2 * i * d - 1;
        let batch: EdgeSet = aprime
            .edges
            .iter()
            .copied()
            .filter(|&(a, b)| in_layer_range(a, lo, hi) || in_layer_range(b, lo, hi))
            .collect();
        let m = x.mass(batch.iter());
        if best.as_ref().is_none_or(|(bm, _, _)| m < *bm - 1e-12) {
            best = Some((m, i, batch));
        }
    }
    let (batch_mass, i, batch) = best.expect("at least one batch");
    debug_assert!(batch_mass < 1.0);
    let lo = 2 * (i - 1) * d;
    let hi = 2 * i * d - 1;

    // Witness pair: a source-layer vertex with a closure edge into the last
    // batch layer and no closure edge to another such vertex, paired with
    // the smallest end-layer vertex it reaches.
    let l_lo: Vec<usize> = (0..g.n()).filter(|&w| dist[w] == lo).collect();
    let l_hi: Vec<usize> = (0..g.n()).filter(|&w| dist[w] == hi).collect();
    let s_set: Vec<usize> = l_lo
        .iter()
        .copied()
        .filter(|&w| l_hi.iter().any(|&z| g.reach(w, z)))
        .collect();
    let u = s_set
        .iter()
        .copied()
        .find(|&w| !s_set.iter().any(|&w2| w2 != w && g.reach(w, w2)))
        .ok_or_else(|| {
            Error::PreconditionViolated("batch has no sink in its source layer".into())
        })?;
    let v = l_hi
        .iter()
        .copied()
        .find(|&z| g.reach(u, z))
        .expect("u was chosen with a closure edge into the end layer");

    let mut a = batch;
    if !is_critical(g, &a, u, v, d)? {
        return Err(Error::PreconditionViolated(format!(
            "batch {i} is not {d}-critical for ({u}, {v})"
        )));
    }
    let candidates: Vec<(usize, usize)> = a.iter().copied().collect();
    for e in candidates {
        a.remove(&e);
        if !is_critical(g, &a, u, v, d)? {
            a.insert(e);
        }
    }
    Ok(CriticalSet {
        edges: a,
        witness: (u, v),
        bound: d,
    })
}

/// Outcome of one Cut-or-Round invocation.
#[derive(Debug, Clone)]
pub enum CutOrRound {
    Rounded(ShortcutSet),
    Violated(CriticalSet),
    Fail(FailReason),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FailReason {
    /// The rounded set settled everything but blew the size cap.
    TooLarge,
    /// The extracted critical set carried too much fractional mass.
    HeavyCritical,
}

/// Randomized rounding with inflated probabilities; either returns a set
/// settling all thin pairs at `α_D·d`, or a violated covering constraint at
/// bound `d`, or a (rare) failure.
#[allow(clippy::too_many_arguments)]
pub fn cut_or_round(
    g: &DiGraph,
    x: &FractionalSolution,
    thin: &PairSet,
    d: usize,
    alpha_d: usize,
    beta: f64,
    seed: u64,
) -> Result<CutOrRound> {
    let n = g.n();
    let factor = ROUND_CONSTANT * log2n(n) * beta / alpha_d as f64;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut f2 = ShortcutSet::new(g);
    for (&e, &xe) in &x.x {
        let p = (factor * xe).min(1.0);
        if p > 0.0 && rng.gen::<f64>() < p {
            debug_assert!(g.reach(e.0, e.1) && !g.has_edge(e.0, e.1));
            f2.insert(e);
        }
    }
    let bound = alpha_d * d;
    match first_unsettled(g, &f2, thin, bound) {
        None => {
            let cap = SIZE_CAP_CONSTANT * log2n(n).powi(2) * beta / alpha_d as f64 * x.budget;
            if (f2.len() as f64) <= cap {
                Ok(CutOrRound::Rounded(f2))
            } else {
                Ok(CutOrRound::Fail(FailReason::TooLarge))
            }
        }
        Some((u, v)) => {
            let aprime = minimal_critical_set(g, u, v, bound, &f2)?;
            let mass = x.mass(aprime.edges.iter());
            if mass < alpha_d as f64 / 9.0 {
                let a = if alpha_d == 1 {
                    aprime
                } else {
                    decompose_critical(g, &aprime, x, d, alpha_d)?
                };
                debug_assert!(x.mass(a.edges.iter()) < 1.0);
                Ok(CutOrRound::Violated(a))
            } else {
                Ok(CutOrRound::Fail(FailReason::HeavyCritical))
            }
        }
    }
}

/// Exact feasibility over the pooled constraints: a nonnegative point with
/// mass at least 1 on every pooled set and total at most `budget`, or an
/// infeasibility certificate (the pooled sets themselves).
pub fn lp_feasible(pool: &ConstraintPool, budget: f64) -> Result<FractionalSolution> {
    if pool.is_empty() {
        return Ok(FractionalSolution::zero(budget));
    }
    // Union of constraint edges; everything else stays 0.
    let mut edge_index: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for c in pool.iter() {
        for &e in &c.edges {
            let next = edge_index.len();
            edge_index.entry(e).or_insert(next);
        }
    }
    // Invert the index map: `edges[j]` must be the edge with LP column j,
    // which is insertion order, not the map's sorted key order.
    let mut edges = vec![(0usize, 0usize); edge_index.len()];
    for (&e, &j) in &edge_index {
        edges[j] = e;
    }
    let rows: Vec<Vec<usize>> = pool
        .iter()
        .map(|c| c.edges.iter().map(|e| edge_index[e]).collect())
        .collect();
    // Minimize total mass subject to the covering constraints by solving
    // the dual packing LP with a dense simplex; the optimal duals of the
    // packing problem are the covering point.
    let (min_mass, mut x_vals) = solve_covering(&rows, edges.len());
    // Guarantee the covering constraints exactly (>= 1) despite float
    // round-off, then re-check the budget.
    let mut worst = f64::INFINITY;
    for row in &rows {
        let m: f64 = row.iter().map(|&j| x_vals[j]).sum();
        worst = worst.min(m);
    }
    if worst < 1.0 && worst > 0.0 {
        for v in x_vals.iter_mut() {
            *v /= worst;
        }
    }
    let total: f64 = x_vals.iter().sum();
    if total > budget * (1.0 + 1e-9) + 1e-9 {
        return Err(Error::Infeasible {
            budget,
            min_mass: min_mass.max(total),
            pool: pool.clone(),
        });
    }
    let mut x = BTreeMap::new();
    for (e, &v) in edges.iter().zip(&x_vals) {
        if v > 0.0 {
            x.insert(*e, v);
        }
    }
    Ok(FractionalSolution { x, budget })
}

/// Minimum-mass fractional covering of the given rows (edge-index lists)
/// over `nvars` variables. Returns (optimal value, point). Solved through
/// the dual packing LP with Bland's rule, so the result is deterministic.
#[allow(clippy::needless_range_loop, clippy::while_let_loop)]
fn solve_covering(rows: &[Vec<usize>], nvars: usize) -> (f64, Vec<f64>) {
    let p = rows.len(); // structural packing variables
    let m = nvars; // one packing constraint per edge
    let ncols = p + m;
    // tableau[m][ncols + 1]; slack basis.
    let mut t = vec![vec![0.0f64; ncols + 1]; m + 1];
    for (j, row) in rows.iter().enumerate() {
        for &e in row {
            t[e][j] = 1.0;
        }
    }
    for e in 0..m {
        t[e][p + e] = 1.0;
        t[e][ncols] = 1.0;
    }
    for j in 0..p {
        t[m][j] = -1.0; // maximize sum of packing variables
    }
    let mut basis: Vec<usize> = (p..ncols).collect();
    let eps = 1e-12;
    loop {
        // Bland: entering = smallest column with a negative objective entry.
        let Some(enter) = (0..ncols).find(|&j| t[m][j] < -eps) else {
            break;
        };
        let mut leave: Option<usize> = None;
        let mut best_ratio = f64::INFINITY;
        for i in 0..m {
            if t[i][enter] > eps {
                let ratio = t[i][ncols] / t[i][enter];
                let better = ratio < best_ratio - eps
                    || (ratio < best_ratio + eps && leave.is_none_or(|l| basis[i] < basis[l]));
                if better {
                    best_ratio = ratio;
                    leave = Some(i);
                }
            }
        }
        let Some(li) = leave else {
            // Unbounded packing cannot happen: each variable is capped by
            // its constraint rows (every critical set is nonempty).
            break;
        };
        let piv = t[li][enter];
        for v in t[li].iter_mut() {
            *v /= piv;
        }
        for i in 0..=m {
            if i != li {
                let f = t[i][enter];
                if f != 0.0 {
                    for j in 0..=ncols {
                        t[i][j] -= f * t[li][j];
                    }
                }
            }
        }
        basis[li] = enter;
    }
    let value = t[m][ncols];
    let x: Vec<f64> = (0..m).map(|e| t[m][p + e].max(0.0)).collect();
    (value, x)
}

#[derive(Debug, Clone)]
pub struct ThinParams {
    pub s: usize,
    pub d: usize,
    pub alpha_d: usize,
    pub beta: f64,
    pub seed: u64,
    pub max_retries: u32,
}

impl ThinParams {
    pub fn new(s: usize, d: usize, alpha_d: usize, beta: f64, seed: u64) -> Self {
        ThinParams {
            s,
            d,
            alpha_d,
            beta,
            seed,
            max_retries: DEFAULT_MAX_RETRIES,
        }
    }
}

/// One LP/rounding step as seen by the driver, kept for auditing.
#[derive(Debug, Clone)]
pub struct ThinEvent {
    pub x: FractionalSolution,
    pub outcome: ThinOutcome,
}

#[derive(Debug, Clone)]
pub enum ThinOutcome {
    Rounded { size: usize },
    Violated(CriticalSet),
    Fail(FailReason),
}

#[derive(Debug, Clone, Default)]
pub struct ThinStats {
    pub retries: u32,
    pub constraints: usize,
}

/// Cutting-plane driver: settles all β-thin pairs within `α_D·d` hops or
/// certifies that no (s, d) solution exists.
pub fn settle_thin(g: &DiGraph, params: &ThinParams) -> Result<(ShortcutSet, ThinStats)> {
    settle_thin_traced(g, params, &mut Vec::new())
}

pub fn settle_thin_traced(
    g: &DiGraph,
    params: &ThinParams,
    trace: &mut Vec<ThinEvent>,
) -> Result<(ShortcutSet, ThinStats)> {
    if !g.is_dag() {
        return Err(Error::NotADag);
    }
    let n = g.n();
    if params.s < n {
        return Err(Error::BadParams(format!(
            "budget s = {} must be at least n = {n}",
            params.s
        )));
    }
    if params.d == 0 {
        return Err(Error::BadParams(
            "target diameter must be at least 1".into(),
        ));
    }
    let bound = params.alpha_d * params.d;
    let (_, thin) = classify_pairs(g, params.beta);
    let mut stats = ThinStats::default();
    let empty = ShortcutSet::new(g);
    if first_unsettled(g, &empty, &thin, bound).is_none() {
        return Ok((empty, stats));
    }

    let cap = 4 * n * n;
    let mut pool = ConstraintPool::new();
    let mut seed_counter: u64 = 0;
    loop {
        let x = lp_feasible(&pool, params.s as f64)?;
        let mut advanced = false;
        for _ in 0..params.max_retries {
            let r = cut_or_round(
                g,
                &x,
                &thin,
                params.d,
                params.alpha_d,
                params.beta,
                params.seed.wrapping_add(seed_counter),
            )?;
            seed_counter += 1;
            match r {
                CutOrRound::Rounded(f2) => {
                    trace.push(ThinEvent {
                        x: x.clone(),
                        outcome: ThinOutcome::Rounded { size: f2.len() },
                    });
                    debug_assert!(first_unsettled(g, &f2, &thin, bound).is_none());
                    stats.constraints = pool.len();
                    return Ok((f2, stats));
                }
                CutOrRound::Violated(a) => {
                    let mass = x.mass(a.edges.iter());
                    if mass >= 1.0 {
                        return Err(Error::PreconditionViolated(format!(
                            "violated constraint carries mass {mass} >= 1"
                        )));
                    }
                    if a.bound != params.d {
                        return Err(Error::PreconditionViolated(format!(
                            "pooled constraint has bound {}, expected {}",
                            a.bound, params.d
                        )));
                    }
                    trace.push(ThinEvent {
                        x: x.clone(),
                        outcome: ThinOutcome::Violated(a.clone()),
                    });
                    pool.insert(g, a)?;
                    advanced = true;
                    break;
                }
                CutOrRound::Fail(reason) => {
                    trace.push(ThinEvent {
                        x: x.clone(),
                        outcome: ThinOutcome::Fail(reason),
                    });
                    stats.retries += 1;
                }
            }
        }
        if !advanced {
            return Err(Error::RetryExhausted(params.max_retries));
        }
        if pool.len() > cap {
            return Err(Error::IterationCapExceeded(cap));
        }
    }
}
