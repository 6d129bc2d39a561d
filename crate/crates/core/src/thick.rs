//! Thick-pair settling: classify reachable pairs by local-graph size and
//! build the edge set `F1` that brings every thick pair within the target
//! hop bound.
//!
//! Regimes:
//! * `Unit` — bound 1: connect every thick pair directly.
//! * `SmallLog` — bound at most `4·log₂n`: sample `(n/β)·log₂n` hub
//!   vertices and wire each to everything it reaches or is reached by;
//!   thick pairs end at distance 2.
//! * `General` — chain/antichain decomposition with per-chain 2-shortcuts
//!   plus sampled hub-to-chain edges.
//! * `UniversalFallback` — the general construction at `β = 1`, used in
//!   place of the cited n^{1/3} universal tradeoff for large bounds. It is
//!   weaker for intermediate bounds; see the README.
//!
//! Construction is Las Vegas: every returned set has been verified against
//! the thick pairs, resampling with `seed+1, seed+2, ...` on failure.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::decompose::{chain_antichain_decompose, chain_consecutive_fill, path_two_shortcut};
use crate::error::{Error, Result};
use crate::graph::{DiGraph, PairSet, ShortcutSet};

pub const DEFAULT_MAX_RETRIES: u32 = 50;
/// Threshold multiplier separating the small-log and general regimes.
pub const C_LOG: f64 = 4.0;
/// Hub-sample constant (`9 log n · n / β` hubs).
pub const HUB_CONSTANT: f64 = 9.0;
/// Chain-sample constant (`999 log n · n / (α_D d)²` chains).
pub const CHAIN_CONSTANT: f64 = 999.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    Unit,
    SmallLog,
    General,
    UniversalFallback,
}

impl Regime {
    pub fn name(self) -> &'static str {
        match self {
            Regime::Unit => "unit",
            Regime::SmallLog => "small_log",
            Regime::General => "general",
            Regime::UniversalFallback => "universal_fallback",
        }
    }
}

/// log₂n clamped to at least 1.
pub fn log2n(n: usize) -> f64 {
    (n.max(2) as f64).log2().max(1.0)
}

#[derive(Debug, Clone)]
pub struct ThickConfig {
    pub beta: f64,
    pub alpha_d: usize,
    pub d: usize,
    pub seed: u64,
    pub regime: Regime,
    pub max_retries: u32,
}

impl ThickConfig {
    /// Picks the regime from the effective bound `α_D·d`.
    pub fn new(n: usize, beta: f64, alpha_d: usize, d: usize, seed: u64) -> Self {
        let bound = alpha_d * d;
        let regime = if bound <= 1 {
            Regime::Unit
        } else if (bound as f64) <= C_LOG * log2n(n) {
            Regime::SmallLog
        } else {
            Regime::General
        };
        ThickConfig {
            beta: beta.max(1.0),
            alpha_d,
            d,
            seed,
            regime,
            max_retries: DEFAULT_MAX_RETRIES,
        }
    }

    pub fn bound(&self) -> usize {
        self.alpha_d * self.d
    }
}

/// `|V^{u,v}|`: vertices on at least one `u → v` path, including the
/// endpoints.
pub fn local_graph_size(g: &DiGraph, u: usize, v: usize) -> Result<usize> {
    if !g.reach(u, v) {
        return Err(Error::NotReachable(u, v));
    }
    let du = g.desc(u);
    let av = g.anc(v);
    let mut count = du.intersection_count(av);
    if !(du.get(u) && av.get(u)) {
        count += 1;
    }
    if !(du.get(v) && av.get(v)) {
        count += 1;
    }
    Ok(count)
}

/// Partition of all reachable pairs into β-thick and β-thin.
pub fn classify_pairs(g: &DiGraph, beta: f64) -> (PairSet, PairSet) {
    let mut thick = PairSet::new();
    let mut thin = PairSet::new();
    for (u, v) in g.closure_edges() {
        let size = local_graph_size(g, u, v).expect("closure edge is reachable");
        if size as f64 >= beta {
            thick.insert((u, v));
        } else {
            thin.insert((u, v));
        }
    }
    (thick, thin)
}

/// First pair in `pairs` whose distance in `E ∪ extra` exceeds `bound`.
pub(crate) fn first_unsettled(
    g: &DiGraph,
    extra: &ShortcutSet,
    pairs: &PairSet,
    bound: usize,
) -> Option<(usize, usize)> {
    let mut adj = vec![Vec::new(); g.n()];
    for (u, v) in extra.iter() {
        adj[u].push(v);
    }
    let mut dist_cache: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for &(u, v) in pairs {
        let dist = dist_cache
            .entry(u)
            .or_insert_with(|| bounded_bfs(g, &adj, u, bound));
        if dist[v] == usize::MAX {
            return Some((u, v));
        }
    }
    None
}

fn bounded_bfs(g: &DiGraph, extra: &[Vec<usize>], src: usize, limit: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.n()];
    let mut frontier = vec![src];
    let mut seen = vec![false; g.n()];
    seen[src] = true;
    let mut d = 0;
    while !frontier.is_empty() && d < limit {
        d += 1;
        let mut next = Vec::new();
        for &u in &frontier {
            for &v in g.out(u).iter().chain(extra[u].iter()) {
                if !seen[v] {
                    seen[v] = true;
                    dist[v] = d;
                    next.push(v);
                }
            }
        }
        frontier = next;
    }
    dist
}

fn sample_indices(rng: &mut ChaCha8Rng, n: usize, amount: usize) -> Vec<usize> {
    let mut picked = rand::seq::index::sample(rng, n, amount.min(n)).into_vec();
    picked.sort_unstable();
    picked
}

/// Builds `F1` settling all β-thick pairs within `α_D·d` hops. Returns the
/// set together with the number of resampling retries spent.
pub fn settle_thick(g: &DiGraph, cfg: &ThickConfig) -> Result<(ShortcutSet, u32)> {
    if !g.is_dag() {
        return Err(Error::NotADag);
    }
    let n = g.n();
    let beta = cfg.beta.max(1.0);
    let bound = cfg.bound();
    let (thick, _) = classify_pairs(g, beta);

    let empty = ShortcutSet::new(g);
    if first_unsettled(g, &empty, &thick, bound).is_none() {
        return Ok((empty, 0));
    }

    if cfg.regime == Regime::Unit {
        // Bound 1 forces a direct edge per thick pair.
        let mut f1 = ShortcutSet::new(g);
        for &(u, v) in &thick {
            if !g.has_edge(u, v) {
                f1.insert((u, v));
            }
        }
        debug_assert!(first_unsettled(g, &f1, &thick, bound).is_none());
        return Ok((f1, 0));
    }

    if cfg.regime == Regime::SmallLog {
        let hubs_wanted = ((n as f64 / beta) * log2n(n)).ceil().max(1.0) as usize;
        for attempt in 0..cfg.max_retries {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(attempt as u64));
            let mut f1 = ShortcutSet::new(g);
            for u in sample_indices(&mut rng, n, hubs_wanted) {
                for v in g.anc(u).iter_ones() {
                    if v != u && !g.has_edge(v, u) {
                        f1.insert((v, u));
                    }
                }
                for v in g.desc(u).iter_ones() {
                    if v != u && !g.has_edge(u, v) {
                        f1.insert((u, v));
                    }
                }
            }
            if first_unsettled(g, &f1, &thick, bound).is_none() {
                return Ok((f1, attempt));
            }
        }
        return Err(Error::RetryExhausted(cfg.max_retries));
    }

    // General construction (also the universal fallback at β = 1).
    let k = ((8.0 * n as f64 / bound as f64).ceil() as usize).clamp(1, n);
    let decomp = chain_antichain_decompose(g, k)?;
    let mut chain_edges = ShortcutSet::new(g);
    for chain in &decomp.chains {
        let s = path_two_shortcut(g, chain)?;
        chain_edges.union_with(&s);
        chain_consecutive_fill(g, chain, &mut chain_edges);
    }

    let hubs_wanted = ((HUB_CONSTANT * log2n(n) * n as f64 / beta).ceil() as usize).min(n);
    let bound_sq = (bound * bound) as f64;
    let chains_wanted = ((CHAIN_CONSTANT * log2n(n) * n as f64 / bound_sq).ceil() as usize)
        .min((n as f64 / bound as f64).ceil() as usize)
        .max(1)
        .min(decomp.chains.len());

    for attempt in 0..cfg.max_retries {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(attempt as u64));
        let mut f1 = chain_edges.clone();
        let hubs = sample_indices(&mut rng, n, hubs_wanted);
        let chosen = if decomp.chains.is_empty() {
            Vec::new()
        } else {
            sample_indices(&mut rng, decomp.chains.len(), chains_wanted)
        };
        for &u in &hubs {
            for &ci in &chosen {
                let chain = &decomp.chains[ci];
                if let Some(&v1) = chain.iter().find(|&&w| w != u && g.reach(u, w)) {
                    if !g.has_edge(u, v1) {
                        f1.insert((u, v1));
                    }
                }
                if let Some(&v2) = chain.iter().rev().find(|&&w| w != u && g.reach(w, u)) {
                    if !g.has_edge(v2, u) {
                        f1.insert((v2, u));
                    }
                }
            }
        }
        if first_unsettled(g, &f1, &thick, bound).is_none() {
            return Ok((f1, attempt));
        }
    }
    Err(Error::RetryExhausted(cfg.max_retries))
}

/// Diameter-`target` shortcut for the whole graph: the general construction
/// with every pair treated as thick (β = 1).
pub fn universal_shortcut(g: &DiGraph, target: usize, seed: u64) -> Result<(ShortcutSet, u32)> {
    if target < 2 {
        return Err(Error::BadParams(format!(
            "universal shortcut needs a target of at least 2, got {target}"
        )));
    }
    if g.diameter() <= target {
        return Ok((ShortcutSet::new(g), 0));
    }
    let mut cfg = ThickConfig::new(g.n(), 1.0, target, 1, seed);
    if cfg.regime == Regime::General {
        cfg.regime = Regime::UniversalFallback;
    }
    settle_thick(g, &cfg)
}
