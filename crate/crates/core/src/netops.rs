//! Graph analysis and sub-network machinery: degree extraction, largest
//! connected component, exact average shortest path by BFS from every node,
//! uniform node subsampling with orphan removal, and the degree law of a
//! subsampled network via the PGF transform and via binomial thinning.

use std::collections::VecDeque;

use rand::Rng;
use rayon::prelude::*;

use crate::dist::DegreeDistribution;
use crate::error::{Error, Result};
use crate::graph::{DegreeSequence, Graph};
use crate::scalar::Real;

/// Per-node degrees; errors if any node is isolated (callers must subsample
/// or take a component first).
pub fn degrees(graph: &Graph) -> Result<DegreeSequence> {
    let mut out = Vec::with_capacity(graph.node_count());
    for u in 0..graph.node_count() {
        let d = graph.degree(u);
        if d == 0 {
            return Err(Error::domain(format!("node {u} has degree 0")));
        }
        out.push(d as u64);
    }
    Ok(DegreeSequence::from_raw(out))
}

/// Largest connected component with its relabeling map.
#[derive(Debug, Clone)]
pub struct LccResult {
    pub graph: Graph,
    /// `node_map[new_id] = old_id`, ascending.
    pub node_map: Vec<u32>,
}

/// Induced subgraph on the largest component; ties broken by the smallest
/// contained node id. Nodes are relabeled to 0..m-1 preserving id order.
pub fn largest_connected_component(graph: &Graph) -> LccResult {
    let n = graph.node_count();
    let mut component = vec![u32::MAX; n];
    let mut best: Option<(usize, u32, u32)> = None; // (size, min_id, label)
    let mut label = 0u32;
    for start in 0..n {
        if component[start] != u32::MAX {
            continue;
        }
        let mut size = 0usize;
        let mut queue = VecDeque::new();
        component[start] = label;
        queue.push_back(start as u32);
        while let Some(u) = queue.pop_front() {
            size += 1;
            for &v in graph.neighbors(u as usize) {
                if component[v as usize] == u32::MAX {
                    component[v as usize] = label;
                    queue.push_back(v);
                }
            }
        }
        // `start` is the smallest id in its component (scan order)
        let candidate = (size, start as u32, label);
        best = match best {
            None => Some(candidate),
            Some(cur) => {
                if size > cur.0 || (size == cur.0 && (start as u32) < cur.1) {
                    Some(candidate)
                } else {
                    Some(cur)
                }
            }
        };
        label += 1;
    }
    let Some((size, _, winner)) = best else {
        return LccResult {
            graph: Graph::empty(0),
            node_map: Vec::new(),
        };
    };
    let node_map: Vec<u32> = (0..n as u32)
        .filter(|&u| component[u as usize] == winner)
        .collect();
    let mut dense = vec![u32::MAX; n];
    for (new, &old) in node_map.iter().enumerate() {
        dense[old as usize] = new as u32;
    }
    let mut edges = Vec::new();
    for &old in &node_map {
        for &v in graph.neighbors(old as usize) {
            if v > old {
                edges.push((dense[old as usize], dense[v as usize]));
            }
        }
    }
    let graph = Graph::from_edges(size, &edges).expect("induced subgraph is simple");
    LccResult { graph, node_map }
}

/// Sum of BFS distances from `source` to every reachable node, plus the
/// number of nodes reached.
fn bfs_distance_sum(graph: &Graph, source: u32) -> (u64, usize) {
    let n = graph.node_count();
    let mut dist = vec![u32::MAX; n];
    let mut queue = VecDeque::new();
    dist[source as usize] = 0;
    queue.push_back(source);
    let mut total = 0u64;
    let mut reached = 0usize;
    while let Some(u) = queue.pop_front() {
        let du = dist[u as usize];
        total += du as u64;
        reached += 1;
        for &v in graph.neighbors(u as usize) {
            if dist[v as usize] == u32::MAX {
                dist[v as usize] = du + 1;
                queue.push_back(v);
            }
        }
    }
    (total, reached)
}

/// Mean shortest-path distance over all unordered node pairs, by BFS from
/// every node (in parallel). Errors on disconnected input.
pub fn average_shortest_path(graph: &Graph) -> Result<f64> {
    let n = graph.node_count();
    if n <= 1 {
        return Ok(0.0);
    }
    let results: Vec<(u64, usize)> = (0..n as u32)
        .into_par_iter()
        .map(|s| bfs_distance_sum(graph, s))
        .collect();
    let mut total = 0u64;
    for &(sum, reached) in &results {
        if reached != n {
            return Err(Error::Disconnected);
        }
        total += sum;
    }
    // ordered pairs double-count; n(n-1) ordered pairs in total
    Ok(total as f64 / (n as f64 * (n as f64 - 1.0)))
}

/// Outcome of uniform node subsampling.
#[derive(Debug, Clone)]
pub struct SubsampleReport {
    /// Sampling probability used.
    pub p: f64,
    /// Nodes kept by the coin flips, before orphan removal.
    pub kept_nodes: usize,
    /// Kept nodes discarded because their induced degree was zero.
    pub orphans_removed: usize,
    /// Induced subgraph on the kept, non-orphan nodes, relabeled densely.
    pub subgraph: Graph,
    /// `node_map[new_id] = old_id`, ascending.
    pub node_map: Vec<u32>,
}

/// Keep each node independently with probability p, induce the subgraph, and
/// delete zero-degree nodes.
pub fn node_subsample<R: Rng + ?Sized>(
    graph: &Graph,
    p: f64,
    rng: &mut R,
) -> Result<SubsampleReport> {
    if !(p > 0.0 && p <= 1.0) {
        return Err(Error::domain(format!(
            "sampling probability must be in (0, 1], got {p}"
        )));
    }
    let n = graph.node_count();
    let kept: Vec<bool> = (0..n).map(|_| rng.gen::<f64>() < p).collect();
    let kept_nodes = kept.iter().filter(|&&k| k).count();
    let survivors: Vec<u32> = (0..n as u32)
        .filter(|&u| {
            kept[u as usize]
                && graph
                    .neighbors(u as usize)
                    .iter()
                    .any(|&v| kept[v as usize])
        })
        .collect();
    let orphans_removed = kept_nodes - survivors.len();
    let mut dense = vec![u32::MAX; n];
    for (new, &old) in survivors.iter().enumerate() {
        dense[old as usize] = new as u32;
    }
    let mut edges = Vec::new();
    for &old in &survivors {
        for &v in graph.neighbors(old as usize) {
            if v > old && dense[v as usize] != u32::MAX {
                edges.push((dense[old as usize], dense[v as usize]));
            }
        }
    }
    let subgraph = Graph::from_edges(survivors.len(), &edges).expect("induced subgraph is simple");
    Ok(SubsampleReport {
        p,
        kept_nodes,
        orphans_removed,
        subgraph,
        node_map: survivors,
    })
}

/// PGF of the sub-network degree law after keeping nodes with probability p
/// and discarding orphans: [G(1 - p(1-s)) - G(1-p)] / [1 - G(1-p)].
/// This zero-truncated form satisfies result(0) = 0 and result(1) = 1.
pub fn subsampled_pgf<F: Real>(dist: &DegreeDistribution<F>, p: F, s: F) -> Result<F> {
    if !(p > F::zero() && p <= F::one()) {
        return Err(Error::domain(format!("p must be in (0, 1], got {p}")));
    }
    if !(s >= F::zero() && s <= F::one()) {
        return Err(Error::domain(format!("s must be in [0, 1], got {s}")));
    }
    let g_at_q = dist.pgf(F::one() - p)?;
    let den = F::one() - g_at_q;
    if den <= F::zero() {
        return Err(Error::Numerical(
            "degenerate subsampling: G(1-p) = 1 leaves no surviving mass".into(),
        ));
    }
    let num = dist.pgf(F::one() - p * (F::one() - s))? - g_at_q;
    Ok(num / den)
}

/// Sub-network pmf by binomial thinning conditioned on survival:
/// P*[d* = k] = sum_{j>=k} p(j) C(j,k) p^k (1-p)^(j-k) / (1 - sum_j p(j)(1-p)^j),
/// with the series truncated under a certified 1e-10 tail bound.
pub fn subsampled_pmf<F: Real>(dist: &DegreeDistribution<F>, p: F, k: u64) -> Result<F> {
    if k < 1 {
        return Err(Error::domain("subsampled_pmf requires k >= 1"));
    }
    if !(p > F::zero() && p <= F::one()) {
        return Err(Error::domain(format!("p must be in (0, 1], got {p}")));
    }
    if p == F::one() {
        return dist.pmf(k);
    }
    let q = F::one() - p;
    let den = F::one() - dist.pgf(q)?;
    if den <= F::zero() {
        return Err(Error::Numerical(
            "degenerate subsampling: G(1-p) = 1 leaves no surviving mass".into(),
        ));
    }
    let tol = F::c(1e-12);
    let mut num = F::zero();
    // w_j = C(j, k) p^k q^(j-k), starting at w_k = p^k
    let mut w = p.powf(F::from_count(k));
    let mut prev_ccdf = dist.ccdf(k - 1);
    let mut j = k;
    loop {
        let cur_ccdf = dist.ccdf(j);
        let pmf_j = (prev_ccdf - cur_ccdf).max(F::zero());
        num = num + pmf_j * w;
        let w_next = w * q * F::from_count(j + 1) / F::from_count(j + 1 - k);
        // past the binomial peak the weights decrease geometrically
        if j >= 2 * k + 16 {
            let ratio = q * F::from_count(j + 2) / F::from_count(j + 2 - k);
            if ratio < F::one() {
                let geo = w_next / (F::one() - ratio);
                if geo.min(w_next * cur_ccdf / (F::one() - ratio)) < tol {
                    break;
                }
            }
        }
        prev_ccdf = cur_ccdf;
        w = w_next;
        j += 1;
        if j > k + 100_000_000 {
            return Err(Error::Numerical(
                "subsampled_pmf series did not converge".into(),
            ));
        }
    }
    Ok(num / den)
}
