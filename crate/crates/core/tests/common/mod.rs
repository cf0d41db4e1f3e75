//! Shared test oracles, kept independent of the implementation paths they
//! check: brute-force graph algorithms, alternative samplers, and classical
//! test statistics.

#![allow(dead_code)]

pub mod hp;

use heavytail::graph::Graph;
use heavytail::special::chi_square_sf;
use rand::Rng;

/// Havel-Hakimi reduction: repeatedly connect the highest-degree node to the
/// next-highest ones. Decides graphicality independently of the
/// Erdős-Gallai inequalities.
pub fn havel_hakimi(seq: &[u64]) -> bool {
    let mut d: Vec<i64> = seq.iter().map(|&x| x as i64).collect();
    loop {
        d.sort_unstable_by(|a, b| b.cmp(a));
        if d.is_empty() || d[0] == 0 {
            return true;
        }
        let k = d[0] as usize;
        if k > d.len() - 1 {
            return false;
        }
        d.remove(0);
        for item in d.iter_mut().take(k) {
            *item -= 1;
            if *item < 0 {
                return false;
            }
        }
    }
}

/// All-pairs shortest paths by Floyd-Warshall; None when disconnected.
pub fn asp_floyd_warshall(g: &Graph) -> Option<f64> {
    let n = g.node_count();
    if n <= 1 {
        return Some(0.0);
    }
    const INF: u64 = u64::MAX / 4;
    let mut dist = vec![vec![INF; n]; n];
    for u in 0..n {
        dist[u][u] = 0;
        for &v in g.neighbors(u) {
            dist[u][v as usize] = 1;
        }
    }
    for k in 0..n {
        for i in 0..n {
            let dik = dist[i][k];
            if dik == INF {
                continue;
            }
            for j in 0..n {
                let alt = dik + dist[k][j];
                if alt < dist[i][j] {
                    dist[i][j] = alt;
                }
            }
        }
    }
    let mut total = 0u64;
    for i in 0..n {
        for j in (i + 1)..n {
            if dist[i][j] >= INF {
                return None;
            }
            total += dist[i][j];
        }
    }
    Some(total as f64 / (n as f64 * (n as f64 - 1.0) / 2.0))
}

/// Standard normal via the polar method.
pub fn sample_normal<R: Rng>(rng: &mut R) -> f64 {
    loop {
        let u: f64 = rng.gen::<f64>() * 2.0 - 1.0;
        let v: f64 = rng.gen::<f64>() * 2.0 - 1.0;
        let s = u * u + v * v;
        if s > 0.0 && s < 1.0 {
            return u * (-2.0 * s.ln() / s).sqrt();
        }
    }
}

/// Gamma(shape, rate) by Marsaglia-Tsang, with the boost for shape < 1.
pub fn sample_gamma<R: Rng>(shape: f64, rate: f64, rng: &mut R) -> f64 {
    assert!(shape > 0.0 && rate > 0.0);
    if shape < 1.0 {
        let boost = rng.gen::<f64>().powf(1.0 / shape);
        return sample_gamma(shape + 1.0, rate, rng) * boost;
    }
    let d = shape - 1.0 / 3.0;
    let c = 1.0 / (9.0 * d).sqrt();
    loop {
        let x = sample_normal(rng);
        let v = (1.0 + c * x).powi(3);
        if v <= 0.0 {
            continue;
        }
        let u: f64 = rng.gen();
        if u < 1.0 - 0.0331 * x.powi(4) || u.ln() < 0.5 * x * x + d * (1.0 - v + v.ln()) {
            return d * v / rate;
        }
    }
}

/// Counts of each value 1..=cells, with everything above folded into the
/// last cell.
pub fn histogram_cells(values: &[u64], cells: usize) -> Vec<u64> {
    let mut counts = vec![0u64; cells];
    for &v in values {
        let idx = (v as usize).min(cells) - 1;
        counts[idx] += 1;
    }
    counts
}

/// Two-sample chi-square homogeneity test; returns the p-value. Cells where
/// both samples are empty are skipped.
pub fn two_sample_chisq_pvalue(a: &[u64], b: &[u64]) -> f64 {
    assert_eq!(a.len(), b.len());
    let n1: u64 = a.iter().sum();
    let n2: u64 = b.iter().sum();
    let k1 = (n2 as f64 / n1 as f64).sqrt();
    let k2 = (n1 as f64 / n2 as f64).sqrt();
    let mut stat = 0.0;
    let mut used = 0usize;
    for (&x, &y) in a.iter().zip(b) {
        if x + y == 0 {
            continue;
        }
        let diff = k1 * x as f64 - k2 * y as f64;
        stat += diff * diff / (x + y) as f64;
        used += 1;
    }
    chi_square_sf(stat, (used - 1) as f64)
}

/// Goodness-of-fit chi-square of observed counts against cell probabilities;
/// returns the p-value with df = cells - 1.
pub fn gof_chisq_pvalue(counts: &[u64], probs: &[f64]) -> f64 {
    assert_eq!(counts.len(), probs.len());
    let n: u64 = counts.iter().sum();
    let mut stat = 0.0;
    for (&c, &p) in counts.iter().zip(probs) {
        let expected = n as f64 * p;
        assert!(expected > 0.0, "cell with zero expected count");
        let diff = c as f64 - expected;
        stat += diff * diff / expected;
    }
    chi_square_sf(stat, (counts.len() - 1) as f64)
}

/// Median of a slice (not in place).
pub fn median(values: &[f64]) -> f64 {
    let mut v: Vec<f64> = values.to_vec();
    v.sort_by(|a, b| a.partial_cmp(b).expect("finite"));
    let n = v.len();
    if n % 2 == 1 {
        v[n / 2]
    } else {
        0.5 * (v[n / 2 - 1] + v[n / 2])
    }
}

/// Interquartile range.
pub fn iqr(values: &[f64]) -> f64 {
    let mut v: Vec<f64> = values.to_vec();
    v.sort_by(|a, b| a.partial_cmp(b).expect("finite"));
    let q = |p: f64| {
        let pos = p * (v.len() - 1) as f64;
        let lo = pos.floor() as usize;
        let hi = pos.ceil() as usize;
        v[lo] + (pos - lo as f64) * (v[hi] - v[lo])
    };
    q(0.75) - q(0.25)
}
