//! Degree-class binning with the >= 10-count grouping rule and the
//! chi-square distance between a binned sample and a model distribution.

use crate::dist::DegreeDistribution;
use crate::error::{Error, Result};
use crate::graph::DegreeSequence;
use crate::scalar::Real;

pub const DEFAULT_MIN_BIN_COUNT: u64 = 10;

/// One degree class [k_lo, k_hi] with its observed count.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bin {
    pub k_lo: u64,
    pub k_hi: u64,
    pub count: u64,
}

/// Consecutive degree classes covering 1..=max_degree with total count n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinnedHistogram {
    bins: Vec<Bin>,
    n: u64,
}

impl BinnedHistogram {
    pub fn new(bins: Vec<Bin>) -> Result<Self> {
        if bins.is_empty() {
            return Err(Error::domain("histogram needs at least one bin"));
        }
        if bins[0].k_lo != 1 {
            return Err(Error::domain("first bin must start at degree 1"));
        }
        let mut n = 0u64;
        for w in bins.windows(2) {
            if w[1].k_lo != w[0].k_hi + 1 {
                return Err(Error::domain(
                    "bins must be consecutive and non-overlapping",
                ));
            }
        }
        for b in &bins {
            if b.k_hi < b.k_lo {
                return Err(Error::domain("bin upper edge below lower edge"));
            }
            n += b.count;
        }
        Ok(BinnedHistogram { bins, n })
    }

    pub fn bins(&self) -> &[Bin] {
        &self.bins
    }

    pub fn n(&self) -> u64 {
        self.n
    }
}

/// Greedy left-to-right grouping of consecutive degree values 1..=max, closing
/// a bin as soon as its accumulated count reaches `min_count`; a trailing
/// group below `min_count` is merged into the previous bin.
pub fn bin_histogram(degrees: &DegreeSequence, min_count: u64) -> Result<BinnedHistogram> {
    if degrees.is_empty() {
        return Err(Error::domain("cannot bin an empty degree sequence"));
    }
    let max = degrees.max().expect("non-empty");
    let mut counts = vec![0u64; max as usize + 1];
    for &d in degrees.iter() {
        counts[d as usize] += 1;
    }
    let mut bins: Vec<Bin> = Vec::new();
    let mut k_lo = 1u64;
    let mut acc = 0u64;
    for k in 1..=max {
        acc += counts[k as usize];
        if acc >= min_count {
            bins.push(Bin {
                k_lo,
                k_hi: k,
                count: acc,
            });
            k_lo = k + 1;
            acc = 0;
        }
    }
    if k_lo <= max {
        // trailing group below min_count
        match bins.last_mut() {
            Some(last) => {
                last.k_hi = max;
                last.count += acc;
            }
            None => bins.push(Bin {
                k_lo: 1,
                k_hi: max,
                count: acc,
            }),
        }
    }
    BinnedHistogram::new(bins)
}

/// Chi-square distance Q = sum_j (n p_j - n_j)^2 / (n p_j) between the model
/// and the binned counts, with p_j = F(k_hi) - F(k_lo - 1) and the last bin
/// extended to +infinity so the p_j sum to 1. Returns +infinity when any
/// model bin probability is non-positive, as an infeasibility sentinel for
/// the optimizer.
pub fn chisq_stat<F: Real>(dist: &DegreeDistribution<F>, hist: &BinnedHistogram) -> F {
    let n = F::from_count(hist.n());
    let last = hist.bins().len() - 1;
    let mut q = F::zero();
    for (j, bin) in hist.bins().iter().enumerate() {
        // F(hi) - F(lo - 1) = ccdf(lo - 1) - ccdf(hi)
        let p = if j == last {
            dist.ccdf(bin.k_lo - 1)
        } else {
            dist.ccdf(bin.k_lo - 1) - dist.ccdf(bin.k_hi)
        };
        if !(p > F::zero()) || !p.is_finite() {
            return F::infinity();
        }
        let expected = n * p;
        let diff = expected - F::from_count(bin.count);
        q = q + diff * diff / expected;
    }
    q
}

#[cfg(test)]
mod tests {
    use super::*;

    fn degrees_from_counts(counts: &[(u64, u64)]) -> DegreeSequence {
        let mut v = Vec::new();
        for &(k, c) in counts {
            v.extend(std::iter::repeat(k).take(c as usize));
        }
        DegreeSequence::new(v).unwrap()
    }

    #[test]
    fn greedy_grouping_traced_by_hand() {
        // counts n1=25, n2=7, n3=4, n4=12 -> bins {1}(25), {2,3}(11), {4}(12)
        let deg = degrees_from_counts(&[(1, 25), (2, 7), (3, 4), (4, 12)]);
        let hist = bin_histogram(&deg, 10).unwrap();
        assert_eq!(
            hist.bins(),
            &[
                Bin {
                    k_lo: 1,
                    k_hi: 1,
                    count: 25
                },
                Bin {
                    k_lo: 2,
                    k_hi: 3,
                    count: 11
                },
                Bin {
                    k_lo: 4,
                    k_hi: 4,
                    count: 12
                },
            ]
        );
        assert_eq!(hist.n(), 48);
    }

    #[test]
    fn single_class() {
        let deg = degrees_from_counts(&[(1, 100)]);
        let hist = bin_histogram(&deg, 10).unwrap();
        assert_eq!(
            hist.bins(),
            &[Bin {
                k_lo: 1,
                k_hi: 1,
                count: 100
            }]
        );
    }

    #[test]
    fn trailing_merge() {
        // counts n1=12, n2=3 -> {1,2}(15)
        let deg = degrees_from_counts(&[(1, 12), (2, 3)]);
        let hist = bin_histogram(&deg, 10).unwrap();
        assert_eq!(
            hist.bins(),
            &[Bin {
                k_lo: 1,
                k_hi: 2,
                count: 15
            }]
        );
    }

    #[test]
    fn undersized_total_yields_single_bin() {
        let deg = degrees_from_counts(&[(2, 3), (5, 2)]);
        let hist = bin_histogram(&deg, 10).unwrap();
        assert_eq!(
            hist.bins(),
            &[Bin {
                k_lo: 1,
                k_hi: 5,
                count: 5
            }]
        );
    }

    #[test]
    fn counts_partition_and_sum() {
        let deg = degrees_from_counts(&[(1, 7), (2, 2), (3, 9), (7, 30), (9, 1)]);
        let hist = bin_histogram(&deg, 10).unwrap();
        assert_eq!(hist.n(), 49);
        assert_eq!(hist.bins().first().unwrap().k_lo, 1);
        assert_eq!(hist.bins().last().unwrap().k_hi, 9);
        for w in hist.bins().windows(2) {
            assert_eq!(w[1].k_lo, w[0].k_hi + 1);
        }
        let all_but_last_ok = hist.bins()[..hist.bins().len() - 1]
            .iter()
            .all(|b| b.count >= 10);
        assert!(all_but_last_ok);
    }

    #[test]
    fn chisq_hand_values() {
        let d: DegreeDistribution = DegreeDistribution::pareto(1.0).unwrap();
        // bins {1}(10), {2..inf}(10) with n=20: p1 = p2 = 1/2 -> Q = 0
        let hist = BinnedHistogram::new(vec![
            Bin {
                k_lo: 1,
                k_hi: 1,
                count: 10,
            },
            Bin {
                k_lo: 2,
                k_hi: 2,
                count: 10,
            },
        ])
        .unwrap();
        assert!(chisq_stat(&d, &hist).abs() < 1e-12);
        // counts (12, 8): Q = (10-12)^2/10 + (10-8)^2/10 = 0.8
        let hist = BinnedHistogram::new(vec![
            Bin {
                k_lo: 1,
                k_hi: 1,
                count: 12,
            },
            Bin {
                k_lo: 2,
                k_hi: 2,
                count: 8,
            },
        ])
        .unwrap();
        assert!((chisq_stat(&d, &hist) - 0.8).abs() < 1e-12);
    }

    #[test]
    fn chisq_single_bin_is_zero_for_any_dist() {
        let hist = BinnedHistogram::new(vec![Bin {
            k_lo: 1,
            k_hi: 14,
            count: 33,
        }])
        .unwrap();
        let dists: [DegreeDistribution; 3] = [
            DegreeDistribution::pareto(0.8).unwrap(),
            DegreeDistribution::zipf(2.2).unwrap(),
            DegreeDistribution::epd(1.0, -1.0, 0.5).unwrap(),
        ];
        for dist in dists {
            assert!(chisq_stat(&dist, &hist).abs() < 1e-12);
        }
    }

    #[test]
    fn histogram_validation() {
        assert!(BinnedHistogram::new(vec![]).is_err());
        assert!(BinnedHistogram::new(vec![Bin {
            k_lo: 2,
            k_hi: 3,
            count: 5
        }])
        .is_err());
        assert!(BinnedHistogram::new(vec![
            Bin {
                k_lo: 1,
                k_hi: 2,
                count: 5
            },
            Bin {
                k_lo: 4,
                k_hi: 5,
                count: 5
            },
        ])
        .is_err());
    }
}
