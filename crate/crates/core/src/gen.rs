//! Instance factories: random DAGs, paths, layered DAGs, and the
//! LabelCover graph with its canonical-shortcut certificate.

use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{build_graph, DiGraph, ShortcutSet};

/// Random DAG on `{0..n}` with each edge `(i, j)`, `i < j`, present
/// independently with probability `edge_prob`.
pub fn gen_random_dag(n: usize, edge_prob: f64, seed: u64) -> DiGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen::<f64>() < edge_prob {
                edges.push((i, j));
            }
        }
    }
    build_graph(n, &edges).expect("forward edges cannot be invalid")
}

/// Path graph `0 → 1 → … → n−1`.
pub fn gen_path(n: usize) -> DiGraph {
    let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    build_graph(n, &edges).expect("path edges cannot be invalid")
}

/// Layered random DAG: `n` vertices split into `layers` near-even
/// contiguous layers, edges only between consecutive layers, each present
/// with probability `edge_prob`.
pub fn gen_layered(n: usize, layers: usize, edge_prob: f64, seed: u64) -> DiGraph {
    assert!(layers >= 1 && n >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut bounds = Vec::with_capacity(layers + 1);
    for l in 0..=layers {
        bounds.push(l * n / layers);
    }
    let mut edges = Vec::new();
    for l in 0..layers.saturating_sub(1) {
        for u in bounds[l]..bounds[l + 1] {
            for v in bounds[l + 1]..bounds[l + 2] {
                if rng.gen::<f64>() < edge_prob {
                    edges.push((u, v));
                }
            }
        }
    }
    build_graph(n, &edges).expect("layered edges cannot be invalid")
}

/// A bipartite constraint instance: sides of size `delta`, label set
/// `{1..=labels}`, constraint edges `e_lc ⊆ [Δ]×[Δ]` (1-based) and one
/// nonempty acceptable-pair relation per edge.
#[derive(Debug, Clone)]
pub struct LabelCoverInstance {
    pub delta: usize,
    pub labels: usize,
    pub e_lc: BTreeSet<(usize, usize)>,
    pub pi: BTreeMap<(usize, usize), BTreeSet<(usize, usize)>>,
}

impl LabelCoverInstance {
    pub fn new(
        delta: usize,
        labels: usize,
        e_lc: BTreeSet<(usize, usize)>,
        pi: BTreeMap<(usize, usize), BTreeSet<(usize, usize)>>,
    ) -> Result<Self> {
        if delta == 0 || labels == 0 {
            return Err(Error::BadParams("delta and labels must be positive".into()));
        }
        for &(i, ip) in &e_lc {
            if i == 0 || i > delta || ip == 0 || ip > delta {
                return Err(Error::BadParams(format!(
                    "constraint edge ({i}, {ip}) outside [1, {delta}]²"
                )));
            }
            let rel = pi
                .get(&(i, ip))
                .ok_or_else(|| Error::BadParams(format!("missing relation for ({i}, {ip})")))?;
            if rel.is_empty() {
                return Err(Error::BadParams(format!("empty relation for ({i}, {ip})")));
            }
            for &(j, jp) in rel {
                if j == 0 || j > labels || jp == 0 || jp > labels {
                    return Err(Error::BadParams(format!(
                        "label pair ({j}, {jp}) outside [1, {labels}]²"
                    )));
                }
            }
        }
        if pi.keys().any(|e| !e_lc.contains(e)) {
            return Err(Error::BadParams("relation for a non-edge".into()));
        }
        Ok(LabelCoverInstance {
            delta,
            labels,
            e_lc,
            pi,
        })
    }

    /// True iff the labeling (1-based labels per side) covers every edge.
    pub fn covers(&self, psi_a: &[usize], psi_b: &[usize]) -> bool {
        self.e_lc
            .iter()
            .all(|&(i, ip)| self.pi[&(i, ip)].contains(&(psi_a[i - 1], psi_b[ip - 1])))
    }
}

/// A labeling per side, 1-based labels.
pub type Labeling = (Vec<usize>, Vec<usize>);

/// Random instance; with `satisfiable`, a covering labeling is planted
/// first and returned alongside.
pub fn gen_labelcover_instance(
    delta: usize,
    labels: usize,
    density: f64,
    seed: u64,
    satisfiable: bool,
) -> Result<(LabelCoverInstance, Option<Labeling>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let planted = if satisfiable {
        let psi_a: Vec<usize> = (0..delta).map(|_| rng.gen_range(1..=labels)).collect();
        let psi_b: Vec<usize> = (0..delta).map(|_| rng.gen_range(1..=labels)).collect();
        Some((psi_a, psi_b))
    } else {
        None
    };
    let mut e_lc = BTreeSet::new();
    let mut pi = BTreeMap::new();
    for i in 1..=delta {
        for ip in 1..=delta {
            if rng.gen::<f64>() >= density {
                continue;
            }
            let mut rel: BTreeSet<(usize, usize)> = BTreeSet::new();
            for j in 1..=labels {
                for jp in 1..=labels {
                    if rng.gen::<f64>() < 0.5 {
                        rel.insert((j, jp));
                    }
                }
            }
            if let Some((psi_a, psi_b)) = &planted {
                rel.insert((psi_a[i - 1], psi_b[ip - 1]));
            } else if rel.is_empty() {
                let j = rng.gen_range(1..=labels);
                let jp = rng.gen_range(1..=labels);
                rel.insert((j, jp));
            }
            e_lc.insert((i, ip));
            pi.insert((i, ip), rel);
        }
    }
    Ok((LabelCoverInstance::new(delta, labels, e_lc, pi)?, planted))
}

/// The LabelCover graph together with its symbolic vertex names.
///
/// Accessors use the same 1-based indices as the instance: `i ∈ [Δ]`,
/// `j ∈ [|L|]`, `k ∈ [ρ−1]` for path interiors.
#[derive(Debug, Clone)]
pub struct LabelCoverGraph {
    pub graph: DiGraph,
    pub delta: usize,
    pub labels: usize,
    pub rho: usize,
    pub names: Vec<String>,
}

impl LabelCoverGraph {
    pub fn a(&self, i: usize) -> usize {
        i - 1
    }

    pub fn b(&self, i: usize) -> usize {
        self.delta + (i - 1)
    }

    pub fn alpha(&self, i: usize, j: usize) -> usize {
        2 * self.delta + (i - 1) * self.labels + (j - 1)
    }

    pub fn beta(&self, i: usize, j: usize) -> usize {
        2 * self.delta + self.delta * self.labels + (i - 1) * self.labels + (j - 1)
    }

    pub fn a_interior(&self, i: usize, j: usize, k: usize) -> usize {
        2 * self.delta
            + 2 * self.delta * self.labels
            + ((i - 1) * self.labels + (j - 1)) * (self.rho - 1)
            + (k - 1)
    }

    pub fn b_interior(&self, i: usize, j: usize, k: usize) -> usize {
        self.a_interior(i, j, k) + self.delta * self.labels * (self.rho - 1)
    }
}

/// Builds `G_{I,ρ}`: the bipartite label layer in the middle, a length-ρ
/// path from each `a^(i)` to each of its label vertices, a length-ρ path
/// from each `β_j^(i)` into `b^(i)`, and the return edges back to `a^(i)` /
/// out of `b^(i)`. The return edges make the graph cyclic by design.
pub fn gen_labelcover_graph(inst: &LabelCoverInstance, rho: usize) -> Result<LabelCoverGraph> {
    if rho < 2 {
        return Err(Error::BadRho(rho));
    }
    let (delta, labels) = (inst.delta, inst.labels);
    let n = 2 * delta + 2 * delta * labels + 2 * delta * labels * (rho - 1);
    let skeleton = LabelCoverGraph {
        graph: build_graph(1, &[]).unwrap(),
        delta,
        labels,
        rho,
        names: Vec::new(),
    };
    let lc = &skeleton;
    let mut edges = Vec::new();
    for i in 1..=delta {
        for j in 1..=labels {
            edges.push((lc.a(i), lc.a_interior(i, j, 1)));
            for k in 1..rho - 1 {
                edges.push((lc.a_interior(i, j, k), lc.a_interior(i, j, k + 1)));
            }
            edges.push((lc.a_interior(i, j, rho - 1), lc.alpha(i, j)));

            edges.push((lc.beta(i, j), lc.b_interior(i, j, 1)));
            for k in 1..rho - 1 {
                edges.push((lc.b_interior(i, j, k), lc.b_interior(i, j, k + 1)));
            }
            edges.push((lc.b_interior(i, j, rho - 1), lc.b(i)));

            edges.push((lc.alpha(i, j), lc.a(i)));
            edges.push((lc.b(i), lc.beta(i, j)));
            for k in 1..=rho - 1 {
                edges.push((lc.a_interior(i, j, k), lc.a(i)));
                edges.push((lc.b(i), lc.b_interior(i, j, k)));
            }
        }
    }
    for &(i, ip) in &inst.e_lc {
        for &(j, jp) in &inst.pi[&(i, ip)] {
            edges.push((lc.alpha(i, j), lc.beta(ip, jp)));
        }
    }
    let graph = build_graph(n, &edges)?;
    let mut names = vec![String::new(); n];
    for i in 1..=delta {
        names[lc.a(i)] = format!("a({i})");
        names[lc.b(i)] = format!("b({i})");
        for j in 1..=labels {
            names[lc.alpha(i, j)] = format!("alpha({i},{j})");
            names[lc.beta(i, j)] = format!("beta({i},{j})");
            for k in 1..=rho - 1 {
                names[lc.a_interior(i, j, k)] = format!("ahat({i},{j},{k})");
                names[lc.b_interior(i, j, k)] = format!("bhat({i},{j},{k})");
            }
        }
    }
    Ok(LabelCoverGraph {
        graph,
        delta,
        labels,
        rho,
        names,
    })
}

/// The 2Δ-edge certificate from a labeling: `(a^(i), α_{ψA(i)}^(i))` and
/// `(β_{ψB(i)}^(i), b^(i))` for every `i`.
pub fn canonical_shortcut(
    lc: &LabelCoverGraph,
    psi_a: &[usize],
    psi_b: &[usize],
) -> Result<ShortcutSet> {
    if psi_a.len() != lc.delta || psi_b.len() != lc.delta {
        return Err(Error::BadParams(format!(
            "labeling must assign all {} vertices per side",
            lc.delta
        )));
    }
    for &j in psi_a.iter().chain(psi_b) {
        if j == 0 || j > lc.labels {
            return Err(Error::BadParams(format!(
                "label {j} outside [1, {}]",
                lc.labels
            )));
        }
    }
    let mut set = ShortcutSet::new(&lc.graph);
    for i in 1..=lc.delta {
        set.insert((lc.a(i), lc.alpha(i, psi_a[i - 1])));
        set.insert((lc.beta(i, psi_b[i - 1]), lc.b(i)));
    }
    Ok(set)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::bounded_dist;

    #[test]
    fn random_dag_extremes_and_determinism() {
        assert_eq!(gen_random_dag(6, 0.0, 1).m(), 0);
        assert_eq!(gen_random_dag(6, 1.0, 1).m(), 15);
        let a = gen_random_dag(20, 0.1, 42);
        let b = gen_random_dag(20, 0.1, 42);
        assert_eq!(a.edges(), b.edges());
    }

    #[test]
    fn path_basics() {
        assert_eq!(gen_path(1).m(), 0);
        assert_eq!(gen_path(5).diameter(), 4);
    }

    #[test]
    fn layered_edges_cross_consecutive_layers() {
        let g = gen_layered(30, 5, 0.3, 7);
        let layer = |v: usize| v * 5 / 30;
        for &(u, v) in g.edges() {
            assert_eq!(layer(u) + 1, layer(v), "edge ({u}, {v})");
        }
        assert!(g.is_dag());
    }

    fn figure_instance() -> LabelCoverInstance {
        // Δ = |L| = 3, single constraint edge (2,2) with a 3-pair relation
        let e_lc: BTreeSet<_> = [(2, 2)].into_iter().collect();
        let pi: BTreeMap<_, _> = [(
            (2, 2),
            [(1, 2), (2, 3), (3, 1)]
                .into_iter()
                .collect::<BTreeSet<_>>(),
        )]
        .into_iter()
        .collect();
        LabelCoverInstance::new(3, 3, e_lc, pi).unwrap()
    }

    #[test]
    fn figure_instance_counts() {
        let lc = gen_labelcover_graph(&figure_instance(), 4).unwrap();
        let (delta, labels, rho) = (3, 3, 4);
        assert_eq!(
            lc.graph.n(),
            2 * delta + 2 * delta * labels + 2 * delta * labels * (rho - 1)
        );
        // middle layer carries exactly the three relation edges
        let middle = lc
            .graph
            .edges()
            .iter()
            .filter(|&&(u, v)| {
                (2 * delta..2 * delta + delta * labels).contains(&u)
                    && (2 * delta + delta * labels..2 * delta + 2 * delta * labels).contains(&v)
            })
            .count();
        assert_eq!(middle, 3);
    }

    #[test]
    fn empty_relation_rejected() {
        let e_lc: BTreeSet<_> = [(1, 1)].into_iter().collect();
        let pi: BTreeMap<_, _> = [((1, 1), BTreeSet::new())].into_iter().collect();
        assert!(LabelCoverInstance::new(2, 2, e_lc, pi).is_err());
    }

    #[test]
    fn bad_rho_rejected() {
        assert!(matches!(
            gen_labelcover_graph(&figure_instance(), 1),
            Err(Error::BadRho(1))
        ));
    }

    #[test]
    fn covering_labeling_gives_distance_three() {
        let inst = figure_instance();
        let lc = gen_labelcover_graph(&inst, 4).unwrap();
        // ψA(2) = 1, ψB(2) = 2 covers the lone edge via (1,2) ∈ π
        let psi_a = [1, 1, 1];
        let psi_b = [2, 2, 2];
        assert!(inst.covers(&psi_a, &psi_b));
        let f = canonical_shortcut(&lc, &psi_a, &psi_b).unwrap();
        assert_eq!(f.len(), 2 * 3);
        let d = bounded_dist(&lc.graph, &f, lc.a(2), lc.b(2), 3);
        assert_eq!(d, Some(3));
    }

    #[test]
    fn planted_instance_is_covered() {
        let (inst, planted) = gen_labelcover_instance(4, 3, 0.5, 9, true).unwrap();
        let (psi_a, psi_b) = planted.unwrap();
        assert!(inst.covers(&psi_a, &psi_b));
    }

    #[test]
    fn shortcut_edges_avoid_base_edges() {
        let lc = gen_labelcover_graph(&figure_instance(), 4).unwrap();
        let f = canonical_shortcut(&lc, &[1, 2, 3], &[3, 2, 1]).unwrap();
        for (u, v) in f.iter() {
            assert!(!lc.graph.has_edge(u, v));
            assert!(lc.graph.reach(u, v));
        }
    }
}
