//! Random simple graphs with a prescribed degree law: graphicality checking,
//! degree-sequence sampling with parity repair, and the erased configuration
//! model.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::dist::{DegreeDistribution, Sampler};
use crate::error::{Error, Result};
use crate::graph::{DegreeSequence, Graph};
use crate::scalar::Real;

/// Erdős-Gallai test: a non-negative integer sequence is the degree sequence
/// of some simple graph iff the sum is even and, on the non-increasing sort,
/// sum_{i<=k} d_i <= k(k-1) + sum_{i>k} min(d_i, k) for every k.
pub fn erdos_gallai_check(degrees: &[u64]) -> bool {
    let n = degrees.len();
    if n == 0 {
        return true;
    }
    let mut d: Vec<u64> = degrees.to_vec();
    d.sort_unstable_by(|a, b| b.cmp(a));
    if d[0] as usize >= n {
        return false; // a simple graph caps degrees at n-1
    }
    let total: u64 = d.iter().sum();
    if total % 2 != 0 {
        return false;
    }
    // prefix[k] = sum of the k largest; suffix[i] = sum of d[i..]
    let mut prefix = vec![0u64; n + 1];
    for (i, &v) in d.iter().enumerate() {
        prefix[i + 1] = prefix[i] + v;
    }
    for k in 1..=n {
        let ku = k as u64;
        // first index with d[i] <= k (d sorted descending)
        let split = d.partition_point(|&v| v > ku);
        let j = split.max(k);
        let min_sum = ku * ((j - k) as u64) + (prefix[n] - prefix[j]);
        if prefix[k] > ku * (ku - 1) + min_sum {
            return false;
        }
    }
    true
}

/// Diagnostics from degree-sequence sampling.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, serde::Serialize)]
pub struct GenerationReport {
    /// Whole-sequence attempts until the Erdős-Gallai check passed.
    pub attempts: usize,
    /// Redraws of the last entry to repair an odd sum.
    pub parity_redraws: u64,
    /// Redraws of single entries that exceeded the n-1 degree cap.
    pub cap_redraws: u64,
}

const MAX_ATTEMPTS: usize = 100;
const MAX_PARITY_REDRAWS: usize = 64;
const MAX_CAP_REDRAWS: usize = 1000;

/// Draw n i.i.d. degrees from `dist` (capped at n-1, redrawing), repair an
/// odd sum by redrawing the last entry, and retry the whole sequence until
/// the Erdős-Gallai check passes.
pub fn sample_degree_sequence<F: Real, R: Rng + ?Sized>(
    dist: &DegreeDistribution<F>,
    n: usize,
    rng: &mut R,
) -> Result<(DegreeSequence, GenerationReport)> {
    if n < 2 {
        return Err(Error::domain("sample_degree_sequence requires n >= 2"));
    }
    let cap = (n - 1) as u64;
    let sampler = Sampler::new(dist);
    let mut report = GenerationReport::default();

    let draw_capped = |rng: &mut R, report: &mut GenerationReport| -> Result<u64> {
        for _ in 0..MAX_CAP_REDRAWS {
            let d = sampler.draw(rng)?;
            if d <= cap {
                return Ok(d);
            }
            report.cap_redraws += 1;
        }
        Err(Error::Generation(format!(
            "degree draws keep exceeding the simple-graph cap n-1 = {cap}"
        )))
    };

    for attempt in 1..=MAX_ATTEMPTS {
        report.attempts = attempt;
        let mut degrees: Vec<u64> = Vec::with_capacity(n);
        for _ in 0..n {
            degrees.push(draw_capped(rng, &mut report)?);
        }
        let mut sum: u64 = degrees.iter().sum();
        if sum % 2 != 0 {
            let mut repaired = false;
            for _ in 0..MAX_PARITY_REDRAWS {
                let last = degrees[n - 1];
                let fresh = draw_capped(rng, &mut report)?;
                report.parity_redraws += 1;
                sum = sum - last + fresh;
                degrees[n - 1] = fresh;
                if sum % 2 == 0 {
                    repaired = true;
                    break;
                }
            }
            if !repaired {
                continue; // e.g. a point mass on an odd degree with odd n
            }
        }
        if erdos_gallai_check(&degrees) {
            return Ok((DegreeSequence::from_raw(degrees), report));
        }
    }
    Err(Error::Generation(format!(
        "no graphical sequence within {MAX_ATTEMPTS} attempts (n = {n})"
    )))
}

/// Stubs erased while simplifying the pairing.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, serde::Serialize)]
pub struct ConfigModelReport {
    pub self_loops_removed: u64,
    pub multi_edges_removed: u64,
}

/// Erased configuration model: give node i d_i stubs, shuffle uniformly, pair
/// consecutively, then drop self-loops and collapse multi-edges. Realized
/// degrees can fall below the sequence only through that erasure.
pub fn configuration_model<R: Rng + ?Sized>(
    seq: &DegreeSequence,
    rng: &mut R,
) -> Result<(Graph, ConfigModelReport)> {
    if !erdos_gallai_check(seq.as_slice()) {
        return Err(Error::domain(
            "degree sequence is not graphical (Erdős-Gallai check failed)",
        ));
    }
    let n = seq.len();
    if n > u32::MAX as usize {
        return Err(Error::domain("too many nodes for u32 node ids"));
    }
    let total: u64 = seq.sum();
    let mut stubs: Vec<u32> = Vec::with_capacity(total as usize);
    for (node, &d) in seq.iter().enumerate() {
        for _ in 0..d {
            stubs.push(node as u32);
        }
    }
    stubs.shuffle(rng);
    let edges: Vec<(u32, u32)> = stubs.chunks_exact(2).map(|p| (p[0], p[1])).collect();
    let (graph, counts) = Graph::from_edges_cleaning(n, edges)?;
    Ok((
        graph,
        ConfigModelReport {
            self_loops_removed: counts.self_loops,
            multi_edges_removed: counts.duplicates,
        },
    ))
}
