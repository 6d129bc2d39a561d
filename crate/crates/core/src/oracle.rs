//! Exponential-time exact baselines for tiny instances. These are the
//! ground truth for property tests and must never approximate: inputs over
//! budget are rejected outright.

use crate::error::{Error, Result};
use crate::graph::{bounded_dist, transitive_reduction, DiGraph, ShortcutSet};

/// Hard caps on oracle inputs.
#[derive(Debug, Clone, Copy)]
pub struct OracleBudget {
    pub max_n: usize,
    pub max_candidates: usize,
    /// Largest subset size to try; `None` searches all sizes.
    pub max_size: Option<usize>,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_n: 7,
            max_candidates: 24,
            max_size: None,
        }
    }
}

impl OracleBudget {
    fn admit(&self, n: usize, candidates: usize) -> Result<()> {
        if n > self.max_n {
            return Err(Error::BudgetExceeded(format!(
                "n = {n} exceeds cap {}",
                self.max_n
            )));
        }
        if candidates > self.max_candidates {
            return Err(Error::BudgetExceeded(format!(
                "{candidates} candidate edges exceed cap {}",
                self.max_candidates
            )));
        }
        Ok(())
    }
}

/// Visits k-subsets of `0..n` in lexicographic order; stops early when the
/// visitor returns `Some`.
fn combinations<T>(n: usize, k: usize, mut visit: impl FnMut(&[usize]) -> Option<T>) -> Option<T> {
    if k > n {
        return None;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if let Some(t) = visit(&idx) {
            return Some(t);
        }
        // advance to the next combination
        let mut i = k;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return None;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn settles_all(g: &DiGraph, extra: &ShortcutSet, d: usize) -> bool {
    for (u, v) in g.closure_edges() {
        if bounded_dist(g, extra, u, v, d).is_none() {
            return false;
        }
    }
    true
}

/// Smallest k and a canonical witness: the lexicographically first
/// k-subset of `E^T \ E` bringing all reachable pairs within `d` hops.
pub fn min_shortcut_exact(
    g: &DiGraph,
    d: usize,
    budget: OracleBudget,
) -> Result<(usize, ShortcutSet)> {
    let candidates: Vec<(usize, usize)> = g
        .closure_edges()
        .into_iter()
        .filter(|&(u, v)| !g.has_edge(u, v))
        .collect();
    budget.admit(g.n(), candidates.len())?;
    let top = budget
        .max_size
        .unwrap_or(candidates.len())
        .min(candidates.len());
    for k in 0..=top {
        let found = combinations(candidates.len(), k, |idx| {
            let mut set = ShortcutSet::new(g);
            for &i in idx {
                set.insert(candidates[i]);
            }
            settles_all(g, &set, d).then_some(set)
        });
        if let Some(set) = found {
            return Ok((k, set));
        }
    }
    Err(Error::BudgetExceeded(format!(
        "no shortcut of size <= {top} reaches diameter {d}"
    )))
}

/// Minimum closure-preserving `H ⊆ E^T` with diameter at most `d`.
/// DAG-only: every Hasse edge is forced into `H`, so the search ranges
/// over the remaining closure edges by size.
pub fn min_tc_spanner_exact(
    g: &DiGraph,
    d: usize,
    budget: OracleBudget,
) -> Result<(usize, Vec<(usize, usize)>)> {
    let closure = g.closure_edges();
    budget.admit(g.n(), closure.len())?;
    let reduction = transitive_reduction(g)?;
    let forced: Vec<(usize, usize)> = reduction.edges().to_vec();
    let optional: Vec<(usize, usize)> = closure
        .iter()
        .copied()
        .filter(|e| !reduction.has_edge(e.0, e.1))
        .collect();
    // H ⊇ reduction already preserves the closure; only the diameter
    // constraint drives the search.
    for k in 0..=optional.len() {
        let found = combinations(optional.len(), k, |idx| {
            let mut h: Vec<(usize, usize)> = forced.clone();
            h.extend(idx.iter().map(|&i| optional[i]));
            let within = {
                let hg = crate::graph::build_graph(g.n(), &h).expect("closure edges are valid");
                let empty = ShortcutSet::detached(std::iter::empty());
                g.closure_edges()
                    .into_iter()
                    .all(|(u, v)| bounded_dist(&hg, &empty, u, v, d).is_some())
            };
            within.then_some(h)
        });
        if let Some(mut h) = found {
            h.sort_unstable();
            return Ok((h.len(), h));
        }
    }
    unreachable!("H = E^T has diameter 1");
}

/// True iff some shortcut of size at most `s` reaches diameter `d`.
pub fn exists_shortcut(g: &DiGraph, s: usize, d: usize, budget: OracleBudget) -> Result<bool> {
    let capped = OracleBudget {
        max_size: Some(s.min(budget.max_size.unwrap_or(usize::MAX))),
        ..budget
    };
    match min_shortcut_exact(g, d, capped) {
        Ok((k, _)) => Ok(k <= s),
        Err(Error::BudgetExceeded(msg)) if msg.starts_with("no shortcut") => Ok(false),
        Err(e) => Err(e),
    }
}
