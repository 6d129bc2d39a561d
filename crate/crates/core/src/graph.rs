//! Directed-graph substrate: adjacency, reachability bitsets, SCC
//! condensation, transitive reduction and distance/diameter verification.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use crate::bits::BitRow;
use crate::error::{Error, Result};

/// Directed unweighted graph over dense vertex indices `[0, n)`.
///
/// Immutable after construction. Reachability bitsets and closure adjacency
/// are computed once on first use and cached, so graph values can be shared
/// read-only across workers.
#[derive(Debug, Clone)]
pub struct DiGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    out_adj: Vec<Vec<usize>>,
    in_adj: Vec<Vec<usize>>,
    id: u64,
    reach: OnceLock<Vec<BitRow>>,
    reach_in: OnceLock<Vec<BitRow>>,
    closure_out: OnceLock<Vec<Vec<usize>>>,
    topo: OnceLock<Option<Vec<usize>>>,
    diam: OnceLock<usize>,
}

/// Builds a graph from an edge list. Duplicates are dropped; adjacency is
/// sorted so iteration order is deterministic.
pub fn build_graph(n: usize, edge_list: &[(usize, usize)]) -> Result<DiGraph> {
    let mut set = BTreeSet::new();
    for &(u, v) in edge_list {
        if u >= n {
            return Err(Error::IndexOutOfRange(u, n));
        }
        if v >= n {
            return Err(Error::IndexOutOfRange(v, n));
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        set.insert((u, v));
    }
    let edges: Vec<(usize, usize)> = set.into_iter().collect();
    let mut out_adj = vec![Vec::new(); n];
    let mut in_adj = vec![Vec::new(); n];
    for &(u, v) in &edges {
        out_adj[u].push(v);
        in_adj[v].push(u);
    }
    for l in in_adj.iter_mut() {
        l.sort_unstable();
    }
    // out_adj is already sorted because the edge set is.
    let id = fnv_id(n, &edges);
    Ok(DiGraph {
        n,
        edges,
        out_adj,
        in_adj,
        id,
        reach: OnceLock::new(),
        reach_in: OnceLock::new(),
        closure_out: OnceLock::new(),
        topo: OnceLock::new(),
        diam: OnceLock::new(),
    })
}

fn fnv_id(n: usize, edges: &[(usize, usize)]) -> u64 {
    let mut h: u64 = 0xcbf29ce484222325;
    let mut mix = |x: u64| {
        h ^= x;
        h = h.wrapping_mul(0x100000001b3);
    };
    mix(n as u64);
    for &(u, v) in edges {
        mix(u as u64);
        mix(v as u64);
    }
    h
}

impl DiGraph {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn out(&self, u: usize) -> &[usize] {
        &self.out_adj[u]
    }

    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.in_adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.out_adj[u].binary_search(&v).is_ok()
    }

    /// Topological order, or `None` if the graph has a cycle.
    pub fn topo_order(&self) -> Option<&[usize]> {
        self.topo
            .get_or_init(|| {
                let mut indeg: Vec<usize> = (0..self.n).map(|v| self.in_adj[v].len()).collect();
                let mut queue: BTreeSet<usize> = (0..self.n).filter(|&v| indeg[v] == 0).collect();
                let mut order = Vec::with_capacity(self.n);
                while let Some(&u) = queue.iter().next() {
                    queue.remove(&u);
                    order.push(u);
                    for &v in &self.out_adj[u] {
                        indeg[v] -= 1;
                        if indeg[v] == 0 {
                            queue.insert(v);
                        }
                    }
                }
                if order.len() == self.n {
                    Some(order)
                } else {
                    None
                }
            })
            .as_deref()
    }

    pub fn is_dag(&self) -> bool {
        self.topo_order().is_some()
    }

    /// Per-vertex descendant bitsets: `desc(u)` has bit `v` set iff a
    /// directed path of length >= 1 runs from `u` to `v`. Bit `u` itself is
    /// set only when `u` lies on a cycle.
    pub fn desc(&self, u: usize) -> &BitRow {
        &self.reach_rows()[u]
    }

    /// Ancestor bitsets: bit `u` of `anc(v)` iff `reach(u, v)`.
    pub fn anc(&self, v: usize) -> &BitRow {
        &self.reach_in_rows()[v]
    }

    pub fn reach(&self, u: usize, v: usize) -> bool {
        self.desc(u).get(v)
    }

    fn reach_rows(&self) -> &Vec<BitRow> {
        self.reach.get_or_init(|| {
            if let Some(order) = self.topo_order() {
                // DAG: one bitset union pass in reverse topological order.
                let order = order.to_vec();
                let mut rows = vec![BitRow::new(self.n); self.n];
                for &u in order.iter().rev() {
                    let mut row = BitRow::new(self.n);
                    for &v in &self.out_adj[u] {
                        row.set(v);
                        row.or_with(&rows[v]);
                    }
                    rows[u] = row;
                }
                rows
            } else {
                (0..self.n).map(|u| self.bfs_reach(u)).collect()
            }
        })
    }

    fn bfs_reach(&self, src: usize) -> BitRow {
        let mut row = BitRow::new(self.n);
        let mut stack = vec![src];
        // src itself is marked only if re-entered through an edge.
        let mut seen = vec![false; self.n];
        while let Some(u) = stack.pop() {
            for &v in &self.out_adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    row.set(v);
                    stack.push(v);
                }
            }
        }
        row
    }

    fn reach_in_rows(&self) -> &Vec<BitRow> {
        self.reach_in.get_or_init(|| {
            let rows = self.reach_rows();
            let mut t = vec![BitRow::new(self.n); self.n];
            for (u, row) in rows.iter().enumerate() {
                for v in row.iter_ones() {
                    t[v].set(u);
                }
            }
            t
        })
    }

    /// Edges of the transitive closure `E^T` (ordered pairs of distinct
    /// vertices joined by a path of length >= 1), ascending.
    pub fn closure_edges(&self) -> Vec<(usize, usize)> {
        let rows = self.reach_rows();
        let mut out = Vec::new();
        for (u, row) in rows.iter().enumerate() {
            for v in row.iter_ones() {
                if v != u {
                    out.push((u, v));
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Closure out-adjacency (self-pairs excluded), sorted per vertex.
    pub fn closure_out(&self) -> &Vec<Vec<usize>> {
        self.closure_out.get_or_init(|| {
            let rows = self.reach_rows();
            (0..self.n)
                .map(|u| rows[u].iter_ones().filter(|&v| v != u).collect())
                .collect()
        })
    }

    /// All reachable ordered pairs of distinct vertices.
    pub fn reachable_pairs(&self) -> PairSet {
        self.closure_edges().into_iter().collect()
    }

    /// Maximum distance over reachable pairs of distinct vertices; 0 when no
    /// such pair exists.
    pub fn diameter(&self) -> usize {
        *self.diam.get_or_init(|| {
            let empty = Vec::new();
            let mut worst = 0;
            for u in 0..self.n {
                let dist = bfs_dists(self.n, &self.out_adj, &empty, u, usize::MAX);
                for v in self.desc(u).iter_ones() {
                    if v != u {
                        worst = worst.max(dist[v]);
                    }
                }
            }
            worst
        })
    }
}

/// BFS distances from `src` in the base adjacency plus `extra` adjacency,
/// truncated at `limit`. Unvisited entries stay `usize::MAX`.
fn bfs_dists(
    n: usize,
    adj: &[Vec<usize>],
    extra: &[Vec<usize>],
    src: usize,
    limit: usize,
) -> Vec<usize> {
    let mut dist = vec![usize::MAX; n];
    let mut frontier = vec![src];
    dist[src] = 0;
    let mut d = 0;
    while !frontier.is_empty() && d < limit {
        d += 1;
        let mut next = Vec::new();
        for &u in &frontier {
            let nbrs = adj[u].iter().chain(extra.get(u).map_or(&[][..], |e| e));
            for &v in nbrs {
                if dist[v] == usize::MAX {
                    dist[v] = d;
                    next.push(v);
                }
            }
        }
        frontier = next;
    }
    dist
}

fn extra_adj(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    for (u, v) in edges {
        adj[u].push(v);
    }
    for l in adj.iter_mut() {
        l.sort_unstable();
        l.dedup();
    }
    adj
}

/// A set of transitive-closure edges extending a base graph.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ShortcutSet {
    edges: BTreeSet<(usize, usize)>,
    base_graph_id: Option<u64>,
}

impl ShortcutSet {
    pub fn new(base: &DiGraph) -> Self {
        ShortcutSet {
            edges: BTreeSet::new(),
            base_graph_id: Some(base.id()),
        }
    }

    pub fn from_edges(base: &DiGraph, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        ShortcutSet {
            edges: edges.into_iter().collect(),
            base_graph_id: Some(base.id()),
        }
    }

    /// A set loaded from a file or built without a known base graph.
    pub fn detached(edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        ShortcutSet {
            edges: edges.into_iter().collect(),
            base_graph_id: None,
        }
    }

    pub fn base_graph_id(&self) -> Option<u64> {
        self.base_graph_id
    }

    pub fn insert(&mut self, e: (usize, usize)) {
        self.edges.insert(e);
    }

    pub fn contains(&self, e: &(usize, usize)) -> bool {
        self.edges.contains(e)
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn union_with(&mut self, other: &ShortcutSet) {
        self.edges.extend(other.iter());
    }
}

/// Ordered reachable vertex pairs.
pub type PairSet = BTreeSet<(usize, usize)>;

/// Why a verification failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// The set was built against a different base graph.
    BaseMismatch,
    /// An edge is not in the transitive closure ("not in closure").
    EdgeNotInClosure((usize, usize)),
    /// A shortcut edge already belongs to the base edge set.
    EdgeInBase((usize, usize)),
    /// Closure of the candidate spanner differs from the base closure.
    ClosureMismatch((usize, usize)),
    /// A reachable pair exceeds the hop bound (`None` = unreachable).
    DistanceExceeded {
        pair: (usize, usize),
        dist: Option<usize>,
    },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::BaseMismatch => write!(f, "base graph mismatch"),
            Violation::EdgeNotInClosure((u, v)) => write!(f, "edge ({u}, {v}) not in closure"),
            Violation::EdgeInBase((u, v)) => write!(f, "edge ({u}, {v}) already in base"),
            Violation::ClosureMismatch((u, v)) => write!(f, "closure mismatch at ({u}, {v})"),
            Violation::DistanceExceeded { pair: (u, v), dist } => match dist {
                Some(d) => write!(f, "pair ({u}, {v}) at distance {d}"),
                None => write!(f, "pair ({u}, {v}) unreachable"),
            },
        }
    }
}

/// Verification outcome. `worst_pair`/`worst_dist` name the largest distance
/// seen over reachable pairs (even on valid runs).
#[derive(Debug, Clone)]
pub struct Report {
    pub valid: bool,
    pub violation: Option<Violation>,
    pub worst_pair: Option<(usize, usize)>,
    pub worst_dist: Option<usize>,
    pub size: usize,
}

impl Report {
    fn invalid(violation: Violation, size: usize) -> Self {
        Report {
            valid: false,
            violation: Some(violation),
            worst_pair: None,
            worst_dist: None,
            size,
        }
    }
}

/// Truncated BFS distance from `u` to `v` in `E ∪ extra`; `None` when the
/// distance exceeds `limit`.
pub fn bounded_dist(
    g: &DiGraph,
    extra: &ShortcutSet,
    u: usize,
    v: usize,
    limit: usize,
) -> Option<usize> {
    let adj = extra_adj(g.n(), extra.iter());
    let dist = bfs_dists(g.n(), &g.out_adj, &adj, u, limit);
    if u == v {
        return None; // self-distance is not part of the diameter convention
    }
    if dist[v] == usize::MAX {
        None
    } else {
        Some(dist[v])
    }
}

/// Checks that `f ⊆ E^T \ E` and that every reachable pair of distinct
/// vertices is within `d` hops in `E ∪ f`.
pub fn verify_shortcut(g: &DiGraph, f: &ShortcutSet, d: usize) -> Report {
    if let Some(id) = f.base_graph_id() {
        if id != g.id() {
            return Report::invalid(Violation::BaseMismatch, f.len());
        }
    }
    for (u, v) in f.iter() {
        if u >= g.n() || v >= g.n() || u == v || !g.reach(u, v) {
            return Report::invalid(Violation::EdgeNotInClosure((u, v)), f.len());
        }
        if g.has_edge(u, v) {
            return Report::invalid(Violation::EdgeInBase((u, v)), f.len());
        }
    }
    let adj = extra_adj(g.n(), f.iter());
    let mut worst: Option<((usize, usize), usize)> = None;
    for u in 0..g.n() {
        let targets: Vec<usize> = g.desc(u).iter_ones().filter(|&v| v != u).collect();
        if targets.is_empty() {
            continue;
        }
        let dist = bfs_dists(g.n(), &g.out_adj, &adj, u, usize::MAX);
        for v in targets {
            let dv = dist[v];
            debug_assert!(dv != usize::MAX, "shortcut edges stay within the closure");
            if worst.is_none_or(|(_, w)| dv > w) {
                worst = Some(((u, v), dv));
            }
        }
    }
    match worst {
        Some((pair, w)) if w > d => Report {
            valid: false,
            violation: Some(Violation::DistanceExceeded {
                pair,
                dist: Some(w),
            }),
            worst_pair: Some(pair),
            worst_dist: Some(w),
            size: f.len(),
        },
        Some((pair, w)) => Report {
            valid: true,
            violation: None,
            worst_pair: Some(pair),
            worst_dist: Some(w),
            size: f.len(),
        },
        None => Report {
            valid: true,
            violation: None,
            worst_pair: None,
            worst_dist: None,
            size: f.len(),
        },
    }
}

/// Checks that `h ⊆ E^T`, that `h` has the same transitive closure as `g`,
/// and that every reachable pair of `g` is within `d` hops inside `h`.
pub fn verify_tc_spanner(g: &DiGraph, h: &[(usize, usize)], d: usize) -> Report {
    for &(u, v) in h {
        if u >= g.n() || v >= g.n() || u == v || !g.reach(u, v) {
            return Report::invalid(Violation::EdgeNotInClosure((u, v)), h.len());
        }
    }
    let hg = match build_graph(g.n(), h) {
        Ok(hg) => hg,
        Err(_) => return Report::invalid(Violation::EdgeNotInClosure(h[0]), h.len()),
    };
    for u in 0..g.n() {
        if g.desc(u) != hg.desc(u) {
            let v = g
                .desc(u)
                .iter_ones()
                .find(|&v| !hg.desc(u).get(v))
                .or_else(|| hg.desc(u).iter_ones().find(|&v| !g.desc(u).get(v)))
                .unwrap();
            return Report::invalid(Violation::ClosureMismatch((u, v)), h.len());
        }
    }
    let mut worst: Option<((usize, usize), usize)> = None;
    for u in 0..g.n() {
        let targets: Vec<usize> = g.desc(u).iter_ones().filter(|&v| v != u).collect();
        if targets.is_empty() {
            continue;
        }
        let dist = bfs_dists(hg.n(), &hg.out_adj, &[], u, usize::MAX);
        for v in targets {
            let dv = dist[v];
            if worst.is_none_or(|(_, w)| dv > w) {
                worst = Some(((u, v), dv));
            }
        }
    }
    match worst {
        Some((pair, w)) if w > d => Report {
            valid: false,
            violation: Some(Violation::DistanceExceeded {
                pair,
                dist: if w == usize::MAX { None } else { Some(w) },
            }),
            worst_pair: Some(pair),
            worst_dist: Some(w),
            size: h.len(),
        },
        Some((pair, w)) => Report {
            valid: true,
            violation: None,
            worst_pair: Some(pair),
            worst_dist: Some(w),
            size: h.len(),
        },
        None => Report {
            valid: true,
            violation: None,
            worst_pair: None,
            worst_dist: None,
            size: h.len(),
        },
    }
}

/// Contracts strongly connected components. Returns the condensation DAG, the
/// vertex-to-component map and each component's representative ("center",
/// the minimum-index member). Components are numbered by ascending
/// representative.
pub fn scc_condense(g: &DiGraph) -> (DiGraph, Vec<usize>, Vec<usize>) {
    let sccs = tarjan_sccs(g);
    // sccs: list of components, members sorted. Sort by representative.
    let mut comps: Vec<Vec<usize>> = sccs;
    comps.sort_by_key(|c| c[0]);
    let mut comp_of = vec![0; g.n()];
    let mut reps = Vec::with_capacity(comps.len());
    for (ci, comp) in comps.iter().enumerate() {
        reps.push(comp[0]);
        for &v in comp {
            comp_of[v] = ci;
        }
    }
    let mut dag_edges = BTreeSet::new();
    for &(u, v) in g.edges() {
        let (cu, cv) = (comp_of[u], comp_of[v]);
        if cu != cv {
            dag_edges.insert((cu, cv));
        }
    }
    let dag_edges: Vec<_> = dag_edges.into_iter().collect();
    let dag = build_graph(comps.len(), &dag_edges).expect("condensation indices are dense");
    debug_assert!(dag.is_dag());
    (dag, comp_of, reps)
}

fn tarjan_sccs(g: &DiGraph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut index = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut next_index = 0;
    let mut sccs = Vec::new();
    // Iterative DFS with explicit call frames.
    for root in 0..n {
        if index[root] != usize::MAX {
            continue;
        }
        let mut frames: Vec<(usize, usize)> = vec![(root, 0)];
        while let Some(&mut (v, ref mut ei)) = frames.last_mut() {
            if *ei == 0 {
                index[v] = next_index;
                low[v] = next_index;
                next_index += 1;
                stack.push(v);
                on_stack[v] = true;
            }
            if *ei < g.out(v).len() {
                let w = g.out(v)[*ei];
                *ei += 1;
                if index[w] == usize::MAX {
                    frames.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                if low[v] == index[v] {
                    let mut comp = Vec::new();
                    loop {
                        let w = stack.pop().unwrap();
                        on_stack[w] = false;
                        comp.push(w);
                        if w == v {
                            break;
                        }
                    }
                    comp.sort_unstable();
                    sccs.push(comp);
                }
                frames.pop();
                if let Some(&mut (p, _)) = frames.last_mut() {
                    low[p] = low[p].min(low[v]);
                }
            }
        }
    }
    sccs
}

/// Unique minimum closure-preserving subgraph of a DAG (its Hasse diagram):
/// keep `(u, v) ∈ E^T` exactly when no intermediate `w` has `u → w → v`.
pub fn transitive_reduction(g: &DiGraph) -> Result<DiGraph> {
    if !g.is_dag() {
        return Err(Error::NotADag);
    }
    let mut kept = Vec::new();
    for (u, v) in g.closure_edges() {
        if g.desc(u).intersection_count(g.anc(v)) == 0 {
            kept.push((u, v));
        }
    }
    build_graph(g.n(), &kept)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> DiGraph {
        let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        build_graph(n, &edges).unwrap()
    }

    #[test]
    fn build_dedup_and_errors() {
        let g = build_graph(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(g.m(), 2);
        let g = build_graph(2, &[(0, 1), (0, 1)]).unwrap();
        assert_eq!(g.m(), 1);
        assert!(matches!(build_graph(2, &[(0, 0)]), Err(Error::SelfLoop(0))));
        assert!(matches!(
            build_graph(2, &[(0, 2)]),
            Err(Error::IndexOutOfRange(2, 2))
        ));
    }

    #[test]
    fn closure_of_chain() {
        let g = path(3);
        assert_eq!(g.closure_edges(), vec![(0, 1), (0, 2), (1, 2)]);
        let g = build_graph(4, &[]).unwrap();
        assert!(g.closure_edges().is_empty());
    }

    #[test]
    fn closure_of_cycle_excludes_self_pairs_but_records_self_reach() {
        let g = build_graph(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        let et = g.closure_edges();
        assert_eq!(et.len(), 6);
        assert!(et.iter().all(|&(u, v)| u != v));
        for v in 0..3 {
            assert!(g.reach(v, v));
        }
    }

    #[test]
    fn scc_condense_cycle_plus_tail() {
        let g = build_graph(4, &[(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap();
        let (dag, comp_of, reps) = scc_condense(&g);
        assert_eq!(dag.n(), 2);
        assert_eq!(dag.m(), 1);
        assert_eq!(comp_of[0], comp_of[1]);
        assert_eq!(comp_of[1], comp_of[2]);
        assert_ne!(comp_of[0], comp_of[3]);
        assert_eq!(reps[comp_of[0]], 0);
        assert_eq!(reps[comp_of[3]], 3);
    }

    #[test]
    fn scc_condense_dag_is_identity_like() {
        let g = path(4);
        let (dag, comp_of, _) = scc_condense(&g);
        assert_eq!(dag.n(), 4);
        assert_eq!(dag.m(), 3);
        for (v, &c) in comp_of.iter().enumerate() {
            assert_eq!(c, v);
        }
    }

    #[test]
    fn scc_condense_two_two_cycles() {
        let g = build_graph(4, &[(0, 1), (1, 0), (2, 3), (3, 2), (1, 2)]).unwrap();
        let (dag, _, _) = scc_condense(&g);
        assert_eq!(dag.n(), 2);
        assert_eq!(dag.m(), 1);
    }

    #[test]
    fn reduction_drops_chord() {
        let g = build_graph(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let r = transitive_reduction(&g).unwrap();
        assert_eq!(r.edges(), &[(0, 1), (1, 2)]);
        let empty = build_graph(4, &[]).unwrap();
        assert_eq!(transitive_reduction(&empty).unwrap().m(), 0);
    }

    #[test]
    fn reduction_requires_dag() {
        let g = build_graph(2, &[(0, 1), (1, 0)]).unwrap();
        assert!(matches!(transitive_reduction(&g), Err(Error::NotADag)));
    }

    #[test]
    fn bounded_dist_truncates() {
        let g = path(3);
        let none = ShortcutSet::new(&g);
        assert_eq!(bounded_dist(&g, &none, 0, 2, 2), Some(2));
        let f = ShortcutSet::from_edges(&g, [(0, 2)]);
        assert_eq!(bounded_dist(&g, &f, 0, 2, 1), Some(1));
        assert_eq!(bounded_dist(&g, &none, 0, 2, 1), None);
    }

    #[test]
    fn verify_shortcut_path5() {
        let g = path(5);
        let f = ShortcutSet::from_edges(&g, [(0, 4), (0, 2), (2, 4)]);
        let r = verify_shortcut(&g, &f, 2);
        assert!(r.valid, "{:?}", r.violation);
        assert_eq!(r.size, 3);
    }

    #[test]
    fn verify_shortcut_rejects_non_closure_edge() {
        let g = path(3);
        let f = ShortcutSet::from_edges(&g, [(2, 0)]);
        let r = verify_shortcut(&g, &f, 10);
        assert!(!r.valid);
        assert_eq!(r.violation, Some(Violation::EdgeNotInClosure((2, 0))));
    }

    #[test]
    fn empty_shortcut_at_diameter_is_valid() {
        let g = path(6);
        assert_eq!(g.diameter(), 5);
        let r = verify_shortcut(&g, &ShortcutSet::new(&g), g.diameter());
        assert!(r.valid);
        assert_eq!(r.worst_dist, Some(5));
    }

    #[test]
    fn verify_tc_spanner_cases() {
        let g = path(4);
        let et = g.closure_edges();
        assert!(verify_tc_spanner(&g, &et, 1).valid);
        let missing: Vec<_> = et.iter().copied().filter(|&e| e != (0, 1)).collect();
        let r = verify_tc_spanner(&g, &missing, 3);
        assert!(!r.valid);
        assert!(matches!(r.violation, Some(Violation::ClosureMismatch(_))));
        let red = transitive_reduction(&g).unwrap();
        assert!(verify_tc_spanner(&g, red.edges(), 3).valid);
    }

    #[test]
    fn scc_reach_composition() {
        let g = build_graph(6, &[(0, 1), (1, 0), (1, 2), (2, 3), (3, 4), (4, 3), (2, 5)]).unwrap();
        let (dag, comp_of, _) = scc_condense(&g);
        for u in 0..6 {
            for v in 0..6 {
                if u == v {
                    continue;
                }
                let lifted = comp_of[u] == comp_of[v] || dag.reach(comp_of[u], comp_of[v]);
                assert_eq!(g.reach(u, v), lifted, "pair ({u}, {v})");
            }
        }
    }
}
