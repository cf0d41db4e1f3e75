//! Parameter fitting by minimum chi-square and discrete maximum likelihood.
//!
//! The simplex search runs in an unconstrained space: xi = exp(a),
//! sigma = exp(b), tau = -exp(c), delta through a logistic map onto
//! (max(-1, 1/tau) + eps, 10], mixture weight through a logistic map onto
//! (0, 1). Infeasible parameter combinations surface as +infinity objective
//! values. Starts come from the Hill pilot estimate with five deterministic
//! jittered restarts; the best objective wins, ties broken by iteration
//! count.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::dist::{DegreeDistribution, Family};
use crate::error::{Error, Result};
use crate::graph::DegreeSequence;
use crate::optim::{nelder_mead, NelderMeadOptions};
use crate::scalar::Real;

use super::binning::{bin_histogram, chisq_stat, BinnedHistogram, DEFAULT_MIN_BIN_COUNT};
use super::hill::hill;

const RESTARTS: usize = 5;
const JITTER_SEED: u64 = 0x9E37_79B9_7F4A_7C15;
const DELTA_MAX: f64 = 10.0;
const DELTA_EPS: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FitMethod {
    Chisq,
    Mle,
}

impl FitMethod {
    pub fn name(self) -> &'static str {
        match self {
            FitMethod::Chisq => "chisq",
            FitMethod::Mle => "mle",
        }
    }
}

impl std::str::FromStr for FitMethod {
    type Err = Error;
    fn from_str(s: &str) -> Result<FitMethod> {
        match s {
            "chisq" => Ok(FitMethod::Chisq),
            "mle" => Ok(FitMethod::Mle),
            other => Err(Error::domain(format!("unknown fit method `{other}`"))),
        }
    }
}

/// A fitted distribution with its minimized objective and diagnostics.
/// Serializes as {family, params, method, objective, converged, iterations}.
#[derive(Debug, Clone, Serialize)]
pub struct FitResult<F: Real = f64> {
    #[serde(flatten)]
    pub dist: DegreeDistribution<F>,
    pub method: FitMethod,
    pub objective: F,
    pub converged: bool,
    pub iterations: usize,
    #[serde(skip)]
    pub bins: Option<BinnedHistogram>,
}

fn logistic<F: Real>(v: F) -> F {
    F::one() / (F::one() + (-v).exp())
}

fn logit<F: Real>(p: F) -> F {
    (p / (F::one() - p)).ln()
}

fn family_dim(family: Family) -> Result<usize> {
    Ok(match family {
        Family::Zipf => 1,
        Family::Pareto => 1,
        Family::Gpd => 2,
        Family::Epd => 3,
        Family::Mixture => 3,
        Family::Shifted => {
            return Err(Error::domain("fitting the shifted family is not supported"))
        }
    })
}

fn decode<F: Real>(family: Family, v: &[F]) -> Result<DegreeDistribution<F>> {
    match family {
        Family::Zipf => DegreeDistribution::zipf(F::one() + v[0].exp()),
        Family::Pareto => DegreeDistribution::pareto(v[0].exp()),
        Family::Gpd => DegreeDistribution::gpd(v[1].exp(), v[0].exp()),
        Family::Epd => {
            let xi = v[0].exp();
            let tau = -v[1].exp();
            let lower = (-F::one()).max(F::one() / tau) + F::c(DELTA_EPS);
            let delta = lower + (F::c(DELTA_MAX) - lower) * logistic(v[2]);
            DegreeDistribution::epd(xi, tau, delta)
        }
        Family::Mixture => {
            let c1 = logistic(v[2]);
            DegreeDistribution::mixture(c1, v[0].exp(), F::one() - c1, v[1].exp())
        }
        Family::Shifted => unreachable!("rejected by family_dim"),
    }
}

/// Unconstrained starting point from the Hill pilot estimate on the degrees.
fn starting_point<F: Real>(family: Family, degrees: &DegreeSequence) -> Vec<F> {
    let values: Vec<F> = degrees.iter().map(|&d| F::from_count(d)).collect();
    let pilot = hill(&values).unwrap_or_else(|_| F::c(0.5));
    let xi0 = pilot.max(F::c(0.05)).min(F::c(20.0));
    let mean_degree = F::from_count(degrees.sum()) / F::from_count(degrees.len() as u64);
    match family {
        Family::Zipf => vec![(F::one() / xi0).ln()], // alpha0 = 1 + 1/xi0
        Family::Pareto => vec![xi0.ln()],
        Family::Gpd => vec![xi0.ln(), mean_degree.ln()],
        Family::Epd => {
            // tau0 = -1, delta0 = 0.1 mapped through the logistic box
            let tau0 = -F::one();
            let lower = (-F::one()).max(F::one() / tau0) + F::c(DELTA_EPS);
            let frac = (F::c(0.1) - lower) / (F::c(DELTA_MAX) - lower);
            vec![xi0.ln(), F::zero(), logit(frac)]
        }
        Family::Mixture => {
            let g1 = F::one() / xi0;
            vec![g1.ln(), (g1 + F::one()).ln(), F::zero()]
        }
        Family::Shifted => unreachable!(),
    }
}

fn run_fit<F: Real>(
    family: Family,
    degrees: &DegreeSequence,
    method: FitMethod,
    mut objective: impl FnMut(&DegreeDistribution<F>) -> F,
    bins: Option<BinnedHistogram>,
) -> Result<FitResult<F>> {
    family_dim(family)?;
    let x0 = starting_point::<F>(family, degrees);
    let mut jitter_rng = ChaCha8Rng::seed_from_u64(JITTER_SEED);
    let opts = NelderMeadOptions::default();

    let mut best: Option<(F, usize, Vec<F>, bool)> = None;
    for restart in 0..RESTARTS {
        let start: Vec<F> = if restart == 0 {
            x0.clone()
        } else {
            x0.iter()
                .map(|&v| v + F::c(jitter_rng.gen_range(-0.5..0.5)))
                .collect()
        };
        let mut eval = |v: &[F]| match decode::<F>(family, v) {
            Ok(dist) => objective(&dist),
            Err(_) => F::infinity(),
        };
        if !eval(&start).is_finite() {
            continue;
        }
        let out = match nelder_mead(&mut eval, &start, &opts) {
            Ok(out) => out,
            Err(_) => continue,
        };
        let better = match &best {
            None => true,
            Some((val, iters, _, _)) => {
                out.value < *val || (out.value == *val && out.iterations < *iters)
            }
        };
        if better {
            best = Some((out.value, out.iterations, out.x, out.converged));
        }
    }
    let (value, iterations, x, converged) = best
        .ok_or_else(|| Error::Numerical("every restart started infeasible; cannot fit".into()))?;
    Ok(FitResult {
        dist: decode(family, &x)?,
        method,
        objective: value,
        converged,
        iterations,
        bins,
    })
}

/// Minimum chi-square fit on the >= 10-count binned histogram.
pub fn fit_chisq<F: Real>(family: Family, degrees: &DegreeSequence) -> Result<FitResult<F>> {
    if degrees.len() < 30 {
        return Err(Error::domain(format!(
            "chi-square fitting needs at least 30 degrees, got {}",
            degrees.len()
        )));
    }
    let hist = bin_histogram(degrees, DEFAULT_MIN_BIN_COUNT)?;
    let objective = |dist: &DegreeDistribution<F>| chisq_stat(dist, &hist);
    run_fit(
        family,
        degrees,
        FitMethod::Chisq,
        objective,
        Some(hist.clone()),
    )
}

/// Discrete maximum likelihood: minimizes -sum log pmf(d_i).
pub fn fit_mle_discrete<F: Real>(family: Family, degrees: &DegreeSequence) -> Result<FitResult<F>> {
    if degrees.len() < 10 {
        return Err(Error::domain(format!(
            "maximum-likelihood fitting needs at least 10 degrees, got {}",
            degrees.len()
        )));
    }
    // collapse to (degree, count) so the objective cost scales with the
    // number of distinct degrees
    let mut sorted: Vec<u64> = degrees.as_slice().to_vec();
    sorted.sort_unstable();
    let mut counts: Vec<(u64, u64)> = Vec::new();
    for &d in &sorted {
        match counts.last_mut() {
            Some((k, c)) if *k == d => *c += 1,
            _ => counts.push((d, 1)),
        }
    }
    let objective = move |dist: &DegreeDistribution<F>| {
        let mut nll = F::zero();
        for &(k, c) in &counts {
            let p = match dist.pmf(k) {
                Ok(p) => p,
                Err(_) => return F::infinity(),
            };
            if !(p > F::zero()) || !p.is_finite() {
                return F::infinity();
            }
            nll = nll - F::from_count(c) * p.ln();
        }
        nll
    };
    run_fit(family, degrees, FitMethod::Mle, objective, None)
}
