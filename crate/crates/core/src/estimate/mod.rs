//! Tail-index and parameter estimation: Hill estimators and Hill plots,
//! continuous power-law maximum likelihood, the >= 10-count binning rule with
//! the minimum chi-square objective, and discrete maximum likelihood, all
//! driven by the simplex optimizer with constraint-respecting
//! reparameterization.

mod binning;
mod continuous;
mod fit;
mod hill;

pub use binning::{bin_histogram, chisq_stat, Bin, BinnedHistogram, DEFAULT_MIN_BIN_COUNT};
pub use continuous::{sample_epd_continuous, sample_pareto_continuous};
pub use fit::{fit_chisq, fit_mle_discrete, FitMethod, FitResult};
pub use hill::{hill, hill_plot, hill_top_k, mle_continuous_alpha, HillCurve};
