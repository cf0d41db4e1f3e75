//! Hill estimators and the continuous power-law MLE.

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Hill plot data: the top-k Hill estimate for a grid of k values.
#[derive(Debug, Clone, PartialEq)]
pub struct HillCurve<F: Real = f64> {
    /// (k, xi_hat) ordered by k.
    pub points: Vec<(usize, F)>,
}

fn validate<F: Real>(samples: &[F], min_len: usize) -> Result<()> {
    if samples.len() < min_len {
        return Err(Error::domain(format!(
            "need at least {min_len} samples, got {}",
            samples.len()
        )));
    }
    if samples.iter().any(|x| !(*x >= F::one()) || !x.is_finite()) {
        return Err(Error::domain("samples must be finite and >= 1"));
    }
    Ok(())
}

/// Full-sample Hill estimate: mean of log samples minus the log minimum.
pub fn hill<F: Real>(samples: &[F]) -> Result<F> {
    validate(samples, 2)?;
    let n = F::from_count(samples.len() as u64);
    let mut sum = F::zero();
    let mut min = F::infinity();
    for &x in samples {
        sum = sum + x.ln();
        min = min.min(x);
    }
    Ok(sum / n - min.ln())
}

/// Top-k Hill estimate on the sorted sample:
/// (1/k) sum_{i=n-k+1..n} ln x_(i) - ln x_(n-k).
pub fn hill_top_k<F: Real>(samples: &[F], k: usize) -> Result<F> {
    validate(samples, 2)?;
    let n = samples.len();
    if k < 1 || k > n - 1 {
        return Err(Error::domain(format!(
            "k must be in 1..=n-1, got {k} with n={n}"
        )));
    }
    let mut sorted = samples.to_vec();
    sorted.sort_unstable_by(|a, b| a.partial_cmp(b).expect("finite"));
    let mut sum = F::zero();
    for &x in &sorted[n - k..] {
        sum = sum + x.ln();
    }
    Ok(sum / F::from_count(k as u64) - sorted[n - k - 1].ln())
}

/// Hill estimates for k = 2..n-1, decimated to about 5000 grid points when
/// n > 10^4.
pub fn hill_plot<F: Real>(samples: &[F]) -> Result<HillCurve<F>> {
    validate(samples, 3)?;
    let n = samples.len();
    let mut sorted = samples.to_vec();
    sorted.sort_unstable_by(|a, b| a.partial_cmp(b).expect("finite"));
    // suffix log sums: logs[i] = sum of ln over sorted[i..]
    let mut suffix = vec![F::zero(); n + 1];
    for i in (0..n).rev() {
        suffix[i] = suffix[i + 1] + sorted[i].ln();
    }
    let total = n - 2; // number of k values
    let step = if total > 10_000 {
        total.div_ceil(5_000)
    } else {
        1
    };
    let mut points = Vec::new();
    let mut k = 2usize;
    while k <= n - 1 {
        let xi = suffix[n - k] / F::from_count(k as u64) - sorted[n - k - 1].ln();
        points.push((k, xi));
        if k == n - 1 {
            break;
        }
        k = (k + step).min(n - 1);
    }
    Ok(HillCurve { points })
}

/// Continuous power-law MLE: alpha_hat = 1 + n / sum(ln x_i).
pub fn mle_continuous_alpha<F: Real>(samples: &[F]) -> Result<F> {
    validate(samples, 1)?;
    let mut logsum = F::zero();
    for &x in samples {
        logsum = logsum + x.ln();
    }
    if logsum <= F::zero() {
        return Err(Error::domain("all samples equal 1: log-sum is zero"));
    }
    Ok(F::one() + F::from_count(samples.len() as u64) / logsum)
}
