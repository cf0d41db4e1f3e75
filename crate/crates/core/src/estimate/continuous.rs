//! Continuous Pareto-type samplers used to exercise the Hill estimators.

use rand::Rng;

use crate::dist::DEpdParams;
use crate::error::Result;
use crate::scalar::Real;

/// n draws from the continuous strict Pareto with survival x^(-1/xi), x >= 1.
pub fn sample_pareto_continuous<F: Real, R: Rng + ?Sized>(xi: F, n: usize, rng: &mut R) -> Vec<F> {
    (0..n)
        .map(|_| {
            let u = F::one() - F::c(rng.gen::<f64>()); // (0, 1]
            u.powf(-xi)
        })
        .collect()
}

/// n draws from the continuous extended Pareto with survival
/// [x (1 + delta - delta x^tau)]^(-1/xi), x >= 1, by inverting the survival
/// with a safeguarded Newton iteration.
pub fn sample_epd_continuous<F: Real, R: Rng + ?Sized>(
    xi: F,
    tau: F,
    delta: F,
    n: usize,
    rng: &mut R,
) -> Result<Vec<F>> {
    let params = DEpdParams::new(xi, tau, delta)?;
    let one = F::one();
    let mut out = Vec::with_capacity(n);
    for _ in 0..n {
        let u = one - F::c(rng.gen::<f64>()); // (0, 1]
        let target = u.powf(-xi); // solve g(x) = u^(-xi), g increasing, g(1) = 1
        let mut lo = one;
        let mut hi = if delta >= F::zero() {
            target
        } else {
            target / (one + delta)
        }
        .max(one);
        let mut x = (lo + hi) * F::c(0.5);
        for _ in 0..60 {
            let g = params.survival_base(x);
            if g > target {
                hi = x;
            } else {
                lo = x;
            }
            // g'(x) = 1 + delta - delta (1 + tau) x^tau
            let gp = one + delta - delta * (one + tau) * x.powf(tau);
            let step = (g - target) / gp;
            if step.abs() <= x * F::c(1e-15) || (hi - lo) / hi < F::c(1e-14) {
                break;
            }
            let next = x - step;
            x = if next > lo && next < hi {
                next
            } else {
                (lo + hi) * F::c(0.5)
            };
        }
        out.push(x.max(one));
    }
    Ok(out)
}
