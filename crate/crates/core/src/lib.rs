//! Discrete heavy-tailed degree distributions, tail-index estimation, random
//! graph generation with prescribed degree laws, sub-network analysis via
//! probability-generating functions, and seeded Monte Carlo experiment
//! harnesses.
//!
//! The numeric core (special functions, distributions, estimators, the
//! optimizer) is generic over the [`Real`] scalar trait; `f64`-concrete type
//! aliases live at the crate root and public generic types default to `f64`.

// `!(x > 0)`-style guards double as NaN rejection; `x <= 0` would not
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod dist;
pub mod error;
pub mod estimate;
pub mod experiments;
pub mod graph;
pub mod netgen;
pub mod netops;
pub mod optim;
pub mod scalar;
pub mod seeding;
pub mod special;

pub use dist::{DegreeDistribution, Family, Sampler};
pub use error::{Error, Result};
pub use estimate::{BinnedHistogram, FitMethod, FitResult, HillCurve};
pub use graph::{DegreeSequence, Graph};
pub use scalar::Real;

/// `f64` concrete aliases for the generic core types.
pub type DegreeDistribution64 = dist::DegreeDistribution<f64>;
pub type FitResult64 = estimate::FitResult<f64>;
pub type HillCurve64 = estimate::HillCurve<f64>;

/// `f32` concrete aliases (reduced accuracy; the documented tolerances
/// assume `f64`).
pub type DegreeDistribution32 = dist::DegreeDistribution<f32>;
pub type FitResult32 = estimate::FitResult<f32>;
pub type HillCurve32 = estimate::HillCurve<f32>;
