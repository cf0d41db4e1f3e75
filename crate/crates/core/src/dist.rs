//! Discrete heavy-tail degree distributions: Zipf, strict Pareto, generalized
//! Pareto, extended Pareto, two-Pareto mixtures, and shifted variants, under
//! one tagged union with exact pmf/ccdf/quantile/mean/PGF evaluation and
//! seeded inverse-transform sampling.
//!
//! Discretization conventions: the Pareto, extended-Pareto, and mixture
//! families discretize their survival by flooring, p(k) = S(k) - S(k+1) with
//! P[D > k] = S(k+1); the generalized Pareto keeps the ceiling convention
//! p(k) = S(k-1) - S(k) with P[D > k] = S(k), which is well defined because
//! its survival has support x >= 0. Under these conventions EPD with
//! delta = 0 coincides with the strict Pareto term by term, and
//! d-GPD(sigma=1, xi=1) coincides with d-Pareto(xi=1) exactly.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::DegreeSequence;
use crate::scalar::Real;
use crate::special::{hurwitz_zeta, polylog, zeta_tail};

/// Distribution family tags, used by the fitting routines and the CLI.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Zipf,
    Pareto,
    Gpd,
    Epd,
    Mixture,
    Shifted,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Zipf => "zipf",
            Family::Pareto => "pareto",
            Family::Gpd => "gpd",
            Family::Epd => "epd",
            Family::Mixture => "mixture",
            Family::Shifted => "shifted",
        }
    }
}

impl std::str::FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Family> {
        match s {
            "zipf" => Ok(Family::Zipf),
            "pareto" => Ok(Family::Pareto),
            "gpd" => Ok(Family::Gpd),
            "epd" => Ok(Family::Epd),
            "mixture" => Ok(Family::Mixture),
            "shifted" => Ok(Family::Shifted),
            other => Err(Error::domain(format!("unknown family `{other}`"))),
        }
    }
}

/// Zipf exponent alpha > 1; p(k) = k^(-alpha) / zeta(alpha).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawZipf<F>")]
pub struct ZipfParams<F: Real> {
    alpha: F,
    #[serde(skip_serializing)]
    #[serde(default = "F::nan")]
    zeta_alpha: F,
}

#[derive(Deserialize)]
struct RawZipf<F> {
    alpha: F,
}

impl<F: Real> TryFrom<RawZipf<F>> for ZipfParams<F> {
    type Error = Error;
    fn try_from(raw: RawZipf<F>) -> Result<Self> {
        ZipfParams::new(raw.alpha)
    }
}

impl<F: Real> ZipfParams<F> {
    pub fn new(alpha: F) -> Result<Self> {
        if !alpha.is_finite() || !(alpha > F::one()) {
            return Err(Error::param(
                "alpha",
                format!("must be finite and > 1, got {alpha}"),
            ));
        }
        Ok(ZipfParams {
            alpha,
            zeta_alpha: zeta_tail(alpha, 1),
        })
    }

    pub fn alpha(&self) -> F {
        self.alpha
    }

    pub fn zeta_alpha(&self) -> F {
        self.zeta_alpha
    }
}

/// Strict Pareto tail index xi > 0; survival S(x) = x^(-1/xi) on x >= 1.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawPareto<F>")]
pub struct DParetoParams<F: Real> {
    xi: F,
}

#[derive(Deserialize)]
struct RawPareto<F> {
    xi: F,
}

impl<F: Real> TryFrom<RawPareto<F>> for DParetoParams<F> {
    type Error = Error;
    fn try_from(raw: RawPareto<F>) -> Result<Self> {
        DParetoParams::new(raw.xi)
    }
}

impl<F: Real> DParetoParams<F> {
    pub fn new(xi: F) -> Result<Self> {
        if !xi.is_finite() || !(xi > F::zero()) {
            return Err(Error::param(
                "xi",
                format!("must be finite and > 0, got {xi}"),
            ));
        }
        Ok(DParetoParams { xi })
    }

    pub fn xi(&self) -> F {
        self.xi
    }
}

/// Generalized Pareto scale sigma > 0 and tail index xi > 0;
/// survival S(x) = (1 + xi x / sigma)^(-1/xi) on x >= 0.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawGpd<F>")]
pub struct DGpdParams<F: Real> {
    sigma: F,
    xi: F,
}

#[derive(Deserialize)]
struct RawGpd<F> {
    sigma: F,
    xi: F,
}

impl<F: Real> TryFrom<RawGpd<F>> for DGpdParams<F> {
    type Error = Error;
    fn try_from(raw: RawGpd<F>) -> Result<Self> {
        DGpdParams::new(raw.sigma, raw.xi)
    }
}

impl<F: Real> DGpdParams<F> {
    pub fn new(sigma: F, xi: F) -> Result<Self> {
        if !sigma.is_finite() || !(sigma > F::zero()) {
            return Err(Error::param(
                "sigma",
                format!("must be finite and > 0, got {sigma}"),
            ));
        }
        if !xi.is_finite() || !(xi > F::zero()) {
            return Err(Error::param(
                "xi",
                format!("must be finite and > 0, got {xi}"),
            ));
        }
        Ok(DGpdParams { sigma, xi })
    }

    pub fn sigma(&self) -> F {
        self.sigma
    }

    pub fn xi(&self) -> F {
        self.xi
    }
}

/// Extended Pareto: tail index xi > 0, second-order exponent tau <= 0, and
/// perturbation delta > max(-1, 1/tau); survival
/// S(x) = [x (1 + delta - delta x^tau)]^(-1/xi) on x >= 1.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawEpd<F>")]
pub struct DEpdParams<F: Real> {
    xi: F,
    tau: F,
    delta: F,
}

#[derive(Deserialize)]
struct RawEpd<F> {
    xi: F,
    tau: F,
    delta: F,
}

impl<F: Real> TryFrom<RawEpd<F>> for DEpdParams<F> {
    type Error = Error;
    fn try_from(raw: RawEpd<F>) -> Result<Self> {
        DEpdParams::new(raw.xi, raw.tau, raw.delta)
    }
}

impl<F: Real> DEpdParams<F> {
    pub fn new(xi: F, tau: F, delta: F) -> Result<Self> {
        if !xi.is_finite() || !(xi > F::zero()) {
            return Err(Error::param(
                "xi",
                format!("must be finite and > 0, got {xi}"),
            ));
        }
        if !tau.is_finite() || !(tau <= F::zero()) {
            return Err(Error::param(
                "tau",
                format!("must be finite and <= 0, got {tau}"),
            ));
        }
        let lower = if tau == F::zero() {
            -F::one()
        } else {
            (-F::one()).max(F::one() / tau)
        };
        if !delta.is_finite() || !(delta > lower) {
            return Err(Error::param(
                "delta",
                format!("must be finite and > max(-1, 1/tau) = {lower}, got {delta}"),
            ));
        }
        let params = DEpdParams { xi, tau, delta };
        // The admissible region makes the mapped survival strictly decreasing,
        // but powf rounding can still misbehave at extreme parameters; verify
        // on a grid of k = 1..=64 plus log-spaced points up to 1e6.
        let mut prev = params.survival_base(F::one());
        if !(prev > F::zero()) {
            return Err(Error::param("delta", "survival base not positive at x = 1"));
        }
        let check = |x: F, prev: &mut F| -> bool {
            let cur = params.survival_base(x);
            let ok = cur.is_finite() && cur > *prev;
            *prev = cur;
            ok
        };
        for k in 2..=64u64 {
            if !check(F::from_count(k), &mut prev) {
                return Err(Error::param("tau", "survival is not strictly decreasing"));
            }
        }
        let mut x = F::c(64.0);
        while x < F::c(1e6) {
            x = x * F::c(1.2);
            if !check(x, &mut prev) {
                return Err(Error::param("tau", "survival is not strictly decreasing"));
            }
        }
        Ok(params)
    }

    /// x (1 + delta - delta x^tau), the quantity raised to -1/xi.
    pub(crate) fn survival_base(&self, x: F) -> F {
        x * (F::one() + self.delta - self.delta * x.powf(self.tau))
    }

    pub(crate) fn survival(&self, x: F) -> F {
        self.survival_base(x).powf(-F::one() / self.xi)
    }

    pub fn xi(&self) -> F {
        self.xi
    }

    pub fn tau(&self) -> F {
        self.tau
    }

    pub fn delta(&self) -> F {
        self.delta
    }
}

/// Hall-class mixture of two strict Paretos:
/// S(x) = c1 x^(-gamma1) + c2 x^(-gamma2) with c1 + c2 = 1.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawMixture<F>")]
pub struct MixtureParams<F: Real> {
    c1: F,
    gamma1: F,
    c2: F,
    gamma2: F,
}

#[derive(Deserialize)]
struct RawMixture<F> {
    c1: F,
    gamma1: F,
    c2: F,
    gamma2: F,
}

impl<F: Real> TryFrom<RawMixture<F>> for MixtureParams<F> {
    type Error = Error;
    fn try_from(raw: RawMixture<F>) -> Result<Self> {
        MixtureParams::new(raw.c1, raw.gamma1, raw.c2, raw.gamma2)
    }
}

impl<F: Real> MixtureParams<F> {
    pub fn new(c1: F, gamma1: F, c2: F, gamma2: F) -> Result<Self> {
        for (name, v) in [("c1", c1), ("c2", c2)] {
            if !v.is_finite() || v < F::zero() {
                return Err(Error::param(
                    name,
                    format!("must be finite and >= 0, got {v}"),
                ));
            }
        }
        if (c1 + c2 - F::one()).abs() > F::c(1e-9) {
            return Err(Error::param(
                "c1",
                format!("weights must sum to 1, got {}", c1 + c2),
            ));
        }
        for (name, v) in [("gamma1", gamma1), ("gamma2", gamma2)] {
            if !v.is_finite() || !(v > F::zero()) {
                return Err(Error::param(
                    name,
                    format!("must be finite and > 0, got {v}"),
                ));
            }
        }
        // store the exact complement so that S(1) = 1 exactly
        Ok(MixtureParams {
            c1,
            gamma1,
            c2: F::one() - c1,
            gamma2,
        })
    }

    fn survival(&self, x: F) -> F {
        self.c1 * x.powf(-self.gamma1) + self.c2 * x.powf(-self.gamma2)
    }

    pub fn c1(&self) -> F {
        self.c1
    }

    pub fn gamma1(&self) -> F {
        self.gamma1
    }

    pub fn c2(&self) -> F {
        self.c2
    }

    pub fn gamma2(&self) -> F {
        self.gamma2
    }
}

/// Shift by u: D has this law iff D - u has the inner law. No nested shifts.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(
    try_from = "RawShifted<F>",
    bound(deserialize = "F: Real + serde::de::DeserializeOwned")
)]
pub struct ShiftedParams<F: Real> {
    u: u64,
    inner: Box<DegreeDistribution<F>>,
}

#[derive(Deserialize)]
#[serde(bound(deserialize = "F: Real + serde::de::DeserializeOwned"))]
struct RawShifted<F: Real> {
    u: u64,
    inner: Box<DegreeDistribution<F>>,
}

impl<F: Real> TryFrom<RawShifted<F>> for ShiftedParams<F> {
    type Error = Error;
    fn try_from(raw: RawShifted<F>) -> Result<Self> {
        ShiftedParams::new(raw.u, *raw.inner)
    }
}

impl<F: Real> ShiftedParams<F> {
    pub fn new(u: u64, inner: DegreeDistribution<F>) -> Result<Self> {
        if matches!(inner, DegreeDistribution::Shifted(_)) {
            return Err(Error::param("inner", "nested shifts are not allowed"));
        }
        Ok(ShiftedParams {
            u,
            inner: Box::new(inner),
        })
    }

    pub fn shift(&self) -> u64 {
        self.u
    }

    pub fn inner(&self) -> &DegreeDistribution<F> {
        &self.inner
    }
}

/// Tagged union over the heavy-tail degree families. Serializes as
/// `{"family": ..., "params": {...}}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(
    tag = "family",
    content = "params",
    rename_all = "lowercase",
    bound(deserialize = "F: Real + serde::de::DeserializeOwned")
)]
pub enum DegreeDistribution<F: Real = f64> {
    Zipf(ZipfParams<F>),
    Pareto(DParetoParams<F>),
    Gpd(DGpdParams<F>),
    Epd(DEpdParams<F>),
    Mixture(MixtureParams<F>),
    Shifted(ShiftedParams<F>),
}

impl<F: Real> DegreeDistribution<F> {
    pub fn zipf(alpha: F) -> Result<Self> {
        Ok(DegreeDistribution::Zipf(ZipfParams::new(alpha)?))
    }

    pub fn pareto(xi: F) -> Result<Self> {
        Ok(DegreeDistribution::Pareto(DParetoParams::new(xi)?))
    }

    pub fn gpd(sigma: F, xi: F) -> Result<Self> {
        Ok(DegreeDistribution::Gpd(DGpdParams::new(sigma, xi)?))
    }

    pub fn epd(xi: F, tau: F, delta: F) -> Result<Self> {
        Ok(DegreeDistribution::Epd(DEpdParams::new(xi, tau, delta)?))
    }

    pub fn mixture(c1: F, gamma1: F, c2: F, gamma2: F) -> Result<Self> {
        Ok(DegreeDistribution::Mixture(MixtureParams::new(
            c1, gamma1, c2, gamma2,
        )?))
    }

    pub fn shifted(u: u64, inner: DegreeDistribution<F>) -> Result<Self> {
        Ok(DegreeDistribution::Shifted(ShiftedParams::new(u, inner)?))
    }

    pub fn family(&self) -> Family {
        match self {
            DegreeDistribution::Zipf(_) => Family::Zipf,
            DegreeDistribution::Pareto(_) => Family::Pareto,
            DegreeDistribution::Gpd(_) => Family::Gpd,
            DegreeDistribution::Epd(_) => Family::Epd,
            DegreeDistribution::Mixture(_) => Family::Mixture,
            DegreeDistribution::Shifted(_) => Family::Shifted,
        }
    }

    /// Extreme-value tail index of the family (for Zipf via xi = 1/(alpha-1)).
    pub fn tail_index(&self) -> F {
        match self {
            DegreeDistribution::Zipf(p) => F::one() / (p.alpha - F::one()),
            DegreeDistribution::Pareto(p) => p.xi,
            DegreeDistribution::Gpd(p) => p.xi,
            DegreeDistribution::Epd(p) => p.xi,
            DegreeDistribution::Mixture(p) => {
                let g = if p.c1 == F::zero() {
                    p.gamma2
                } else if p.c2 == F::zero() {
                    p.gamma1
                } else {
                    p.gamma1.min(p.gamma2)
                };
                F::one() / g
            }
            DegreeDistribution::Shifted(p) => p.inner.tail_index(),
        }
    }

    /// P[D > k]. Non-increasing in k with ccdf(0) = 1.
    pub fn ccdf(&self, k: u64) -> F {
        if k == 0 {
            return F::one();
        }
        let kp1 = k.saturating_add(1);
        match self {
            DegreeDistribution::Zipf(p) => zeta_tail(p.alpha, kp1) / p.zeta_alpha,
            DegreeDistribution::Pareto(p) => F::from_count(kp1).powf(-F::one() / p.xi),
            DegreeDistribution::Gpd(p) => {
                (F::one() + p.xi * F::from_count(k) / p.sigma).powf(-F::one() / p.xi)
            }
            DegreeDistribution::Epd(p) => p.survival(F::from_count(kp1)),
            DegreeDistribution::Mixture(p) => p.survival(F::from_count(kp1)),
            DegreeDistribution::Shifted(p) => {
                if k < p.u {
                    F::one()
                } else {
                    p.inner.ccdf(k - p.u)
                }
            }
        }
    }

    /// P[D = k] for k >= 1; equals ccdf(k-1) - ccdf(k).
    pub fn pmf(&self, k: u64) -> Result<F> {
        if k < 1 {
            return Err(Error::domain("pmf requires k >= 1"));
        }
        Ok(match self {
            DegreeDistribution::Zipf(p) => F::from_count(k).powf(-p.alpha) / p.zeta_alpha,
            DegreeDistribution::Shifted(p) => {
                if k <= p.u {
                    F::zero()
                } else {
                    p.inner.pmf(k - p.u)?
                }
            }
            // powf is faithfully rounded but not guaranteed monotone; clamp
            // stray negatives from the survival difference
            _ => (self.ccdf(k - 1) - self.ccdf(k)).max(F::zero()),
        })
    }

    /// Smallest k >= 1 with P[D <= k] >= q, for q in [0, 1).
    pub fn quantile(&self, q: F) -> Result<u64> {
        if !(q >= F::zero() && q < F::one()) {
            return Err(Error::domain(format!(
                "quantile requires 0 <= q < 1, got {q}"
            )));
        }
        self.quantile_from(1, q)
    }

    /// Smallest k >= lo with cdf(k) >= q; assumes cdf(lo - 1) < q when lo > 1.
    fn quantile_from(&self, lo: u64, q: F) -> Result<u64> {
        let cdf = |k: u64| F::one() - self.ccdf(k);
        if cdf(lo) >= q {
            return Ok(lo);
        }
        let mut lo = lo;
        let mut hi = lo.saturating_mul(2);
        loop {
            if hi > (1u64 << 62) {
                return Err(Error::Numerical("quantile search exceeded 2^62".into()));
            }
            if cdf(hi) >= q {
                break;
            }
            lo = hi;
            hi *= 2;
        }
        // invariant: cdf(lo) < q <= cdf(hi)
        while hi - lo > 1 {
            let mid = lo + (hi - lo) / 2;
            if cdf(mid) >= q {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        Ok(hi)
    }

    /// n i.i.d. draws by inverse transform; deterministic given the stream.
    pub fn sample<R: Rng + ?Sized>(&self, n: usize, rng: &mut R) -> Result<DegreeSequence> {
        if n < 1 {
            return Err(Error::domain("sample requires n >= 1"));
        }
        let sampler = Sampler::new(self);
        let mut out = Vec::with_capacity(n);
        for _ in 0..n {
            out.push(sampler.draw(rng)?);
        }
        Ok(DegreeSequence::from_raw(out))
    }

    /// E[D]; +infinity when the first-order tail index implies divergence.
    pub fn mean(&self) -> F {
        let one = F::one();
        match self {
            DegreeDistribution::Zipf(p) => {
                if p.alpha <= F::c(2.0) {
                    F::infinity()
                } else {
                    zeta_tail(p.alpha - one, 1) / p.zeta_alpha
                }
            }
            DegreeDistribution::Pareto(p) => {
                if p.xi >= one {
                    F::infinity()
                } else {
                    zeta_tail(one / p.xi, 1)
                }
            }
            DegreeDistribution::Gpd(p) => {
                if p.xi >= one {
                    F::infinity()
                } else {
                    let a = p.sigma / p.xi;
                    a.powf(one / p.xi) * hurwitz_zeta(one / p.xi, a).expect("valid hurwitz args")
                }
            }
            DegreeDistribution::Epd(p) => {
                if p.xi >= one {
                    F::infinity()
                } else {
                    epd_mean(p)
                }
            }
            DegreeDistribution::Mixture(p) => {
                let diverges =
                    (p.c1 > F::zero() && p.gamma1 <= one) || (p.c2 > F::zero() && p.gamma2 <= one);
                if diverges {
                    F::infinity()
                } else {
                    let mut m = F::zero();
                    if p.c1 > F::zero() {
                        m = m + p.c1 * zeta_tail(p.gamma1, 1);
                    }
                    if p.c2 > F::zero() {
                        m = m + p.c2 * zeta_tail(p.gamma2, 1);
                    }
                    m
                }
            }
            DegreeDistribution::Shifted(p) => F::from_count(p.u) + p.inner.mean(),
        }
    }

    /// Probability-generating function G(s) = E[s^D] for s in [0, 1].
    pub fn pgf(&self, s: F) -> Result<F> {
        if !(s >= F::zero() && s <= F::one()) {
            return Err(Error::domain(format!("pgf requires 0 <= s <= 1, got {s}")));
        }
        if s == F::zero() {
            return Ok(F::zero()); // no mass at degree 0
        }
        if s == F::one() {
            return Ok(F::one());
        }
        match self {
            DegreeDistribution::Zipf(p) => Ok(polylog(p.alpha, s)? / p.zeta_alpha),
            DegreeDistribution::Shifted(p) => Ok(s.powf(F::from_count(p.u)) * p.inner.pgf(s)?),
            _ => {
                // truncated series with certified tail <= s^(K+1) * ccdf(K)
                let tol = F::c(1e-10);
                let mut sum = F::zero();
                let mut spow = F::one();
                let mut prev_ccdf = F::one(); // ccdf(0)
                let mut k = 1u64;
                loop {
                    spow = spow * s;
                    let cur_ccdf = self.ccdf(k);
                    sum = sum + (prev_ccdf - cur_ccdf).max(F::zero()) * spow;
                    let bound = spow * s * cur_ccdf;
                    if bound < tol {
                        return Ok(sum);
                    }
                    prev_ccdf = cur_ccdf;
                    k += 1;
                    if k > (1 << 25) {
                        return Err(Error::Numerical(
                            "pgf series tail bound not certified (s too close to 1)".into(),
                        ));
                    }
                }
            }
        }
    }
}

/// Binomial-series evaluation of the EPD mean via
/// S(x) = (1+delta)^(-1/xi) x^(-1/xi) (1 - beta x^tau)^(-1/xi),
/// summing zeta tails of exponents 1/xi - j tau.
fn epd_mean<F: Real>(p: &DEpdParams<F>) -> F {
    let one = F::one();
    let s0 = one / p.xi;
    if p.delta == F::zero() || p.tau == F::zero() {
        return zeta_tail(s0, 1);
    }
    let beta = p.delta / (one + p.delta);
    let ratio_target = F::c(2.0) * beta.abs() * (one + s0);
    let start = if ratio_target >= one {
        ratio_target.powf(-one / p.tau).ceil()
    } else {
        F::one()
    };
    let m = (start.f64() as u64).clamp(32, 1 << 20);
    let mf = F::from_count(m);
    if beta.abs() * mf.powf(p.tau) >= one {
        // expansion will not converge at feasible m; fall back to a bracket
        return epd_mean_bracket(p, s0);
    }
    let mut direct = F::zero();
    for x in 1..m {
        direct = direct + p.survival(F::from_count(x));
    }
    let scale = (one + p.delta).powf(-s0);
    let mut tail = F::zero();
    let mut b = F::one();
    for j in 0..400u64 {
        let jf = F::from_count(j);
        let term = b * zeta_tail(s0 - jf * p.tau, m);
        tail = tail + term;
        if term.abs() < F::c(1e-16) * (direct + scale * tail.abs()).max(one) {
            break;
        }
        b = b * beta * (s0 + jf) / (jf + one);
    }
    direct + scale * tail
}

/// Best-effort bracket for pathological (tau near 0, large |beta|) corners:
/// midpoint of rigorous lower/upper envelopes of the survival tail.
fn epd_mean_bracket<F: Real>(p: &DEpdParams<F>, s0: F) -> F {
    let k_cut = 1u64 << 21;
    let mut direct = F::zero();
    for x in 1..k_cut {
        direct = direct + p.survival(F::from_count(x));
    }
    let kf = F::from_count(k_cut);
    let base_lo = F::one() + p.delta - p.delta * kf.powf(p.tau);
    let env_hi = base_lo.min(F::one() + p.delta).powf(-s0);
    let env_lo = base_lo.max(F::one() + p.delta).powf(-s0);
    let tail = zeta_tail(s0, k_cut);
    direct + (env_lo + env_hi) * F::c(0.5) * tail
}

/// Reusable inverse-transform sampler with a cached cdf table for the bulk
/// and quantile search for the tail. Draws are identical to
/// `DegreeDistribution::quantile` applied to a uniform variate.
pub struct Sampler<'a, F: Real> {
    dist: &'a DegreeDistribution<F>,
    cdf: Vec<F>,
}

impl<'a, F: Real> Sampler<'a, F> {
    pub fn new(dist: &'a DegreeDistribution<F>) -> Self {
        let mut cdf = Vec::with_capacity(256);
        let limit = F::one() - F::c(1e-7);
        for k in 1..=65_536u64 {
            let v = F::one() - dist.ccdf(k);
            cdf.push(v);
            if v >= limit {
                break;
            }
        }
        Sampler { dist, cdf }
    }

    pub fn draw<R: Rng + ?Sized>(&self, rng: &mut R) -> Result<u64> {
        let u = F::c(rng.gen::<f64>());
        let idx = self.cdf.partition_point(|&c| c < u);
        if idx < self.cdf.len() {
            Ok(idx as u64 + 1)
        } else {
            self.dist.quantile_from(self.cdf.len() as u64 + 1, u)
        }
    }
}
