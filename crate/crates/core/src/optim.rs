//! Derivative-free simplex minimization (Nelder-Mead) with reflection,
//! expansion, contraction, and shrink coefficients (1, 2, 0.5, 0.5).
//! Objectives may return +infinity as an infeasibility sentinel.

use crate::error::{Error, Result};
use crate::scalar::Real;

#[derive(Debug, Clone)]
pub struct NelderMeadOptions<F: Real = f64> {
    pub max_iterations: usize,
    /// Stop when the max pairwise L-inf distance between vertices drops below this.
    pub diameter_tol: F,
    /// Stop when f(worst) - f(best) drops below this.
    pub spread_tol: F,
    /// Per-coordinate displacement used to build the initial simplex.
    pub initial_step: F,
}

impl<F: Real> Default for NelderMeadOptions<F> {
    fn default() -> Self {
        NelderMeadOptions {
            max_iterations: 2000,
            diameter_tol: F::c(1e-8),
            spread_tol: F::c(1e-10),
            initial_step: F::c(0.25),
        }
    }
}

#[derive(Debug, Clone)]
pub struct OptimOutcome<F: Real = f64> {
    pub x: Vec<F>,
    pub value: F,
    pub converged: bool,
    pub iterations: usize,
}

/// Minimize `f` starting from `x0`. `f` must be finite at `x0`; elsewhere it
/// may return +infinity (or NaN, treated as +infinity) to mark infeasible
/// points.
pub fn nelder_mead<F: Real>(
    mut f: impl FnMut(&[F]) -> F,
    x0: &[F],
    opts: &NelderMeadOptions<F>,
) -> Result<OptimOutcome<F>> {
    let dim = x0.len();
    if dim == 0 {
        return Err(Error::domain("nelder_mead requires at least one dimension"));
    }
    let mut eval = |x: &[F]| -> F {
        let v = f(x);
        if v.is_nan() {
            F::infinity()
        } else {
            v
        }
    };
    let f0 = eval(x0);
    if !f0.is_finite() {
        return Err(Error::domain(
            "objective must be finite at the starting point",
        ));
    }

    let (alpha, gamma, rho, sigma) = (F::one(), F::c(2.0), F::c(0.5), F::c(0.5));

    let mut simplex: Vec<Vec<F>> = Vec::with_capacity(dim + 1);
    let mut values: Vec<F> = Vec::with_capacity(dim + 1);
    simplex.push(x0.to_vec());
    values.push(f0);
    for i in 0..dim {
        let mut p = x0.to_vec();
        let step = if p[i].abs() > F::c(1e-8) {
            p[i].abs() * opts.initial_step
        } else {
            opts.initial_step
        };
        p[i] = p[i] + step;
        values.push(eval(&p));
        simplex.push(p);
    }

    let mut iterations = 0;
    let mut converged = false;
    while iterations < opts.max_iterations {
        // order: best first
        let mut order: Vec<usize> = (0..=dim).collect();
        order.sort_by(|&a, &b| {
            values[a]
                .partial_cmp(&values[b])
                .unwrap_or(std::cmp::Ordering::Equal)
        });
        let best = order[0];
        let worst = order[dim];
        let second_worst = order[dim - 1];

        let spread = values[worst] - values[best];
        let mut diameter = F::zero();
        for i in 0..dim {
            for j in (i + 1)..=dim {
                for d in 0..dim {
                    diameter = diameter.max((simplex[order[i]][d] - simplex[order[j]][d]).abs());
                }
            }
        }
        if diameter < opts.diameter_tol || (spread.is_finite() && spread < opts.spread_tol) {
            converged = true;
            break;
        }
        iterations += 1;

        let mut centroid = vec![F::zero(); dim];
        for &idx in order.iter().take(dim) {
            for d in 0..dim {
                centroid[d] = centroid[d] + simplex[idx][d];
            }
        }
        let nf = F::from_count(dim as u64);
        for c in centroid.iter_mut() {
            *c = *c / nf;
        }

        let lerp = |from: &[F], to: &[F], t: F| -> Vec<F> {
            from.iter()
                .zip(to)
                .map(|(&a, &b)| a + t * (b - a))
                .collect()
        };

        // reflection: centroid + alpha (centroid - worst)
        let reflected = lerp(&centroid, &simplex[worst], -alpha);
        let f_ref = eval(&reflected);
        if f_ref < values[second_worst] && f_ref >= values[best] {
            simplex[worst] = reflected;
            values[worst] = f_ref;
            continue;
        }

        if f_ref < values[best] {
            // expansion: centroid + gamma (reflected - centroid)
            let expanded = lerp(&centroid, &reflected, gamma);
            let f_exp = eval(&expanded);
            if f_exp < f_ref {
                simplex[worst] = expanded;
                values[worst] = f_exp;
            } else {
                simplex[worst] = reflected;
                values[worst] = f_ref;
            }
            continue;
        }

        // contraction toward the worst vertex
        let contracted = lerp(&centroid, &simplex[worst], rho);
        let f_con = eval(&contracted);
        if f_con < values[worst] {
            simplex[worst] = contracted;
            values[worst] = f_con;
            continue;
        }

        // shrink everything toward the best vertex
        let best_point = simplex[best].clone();
        for &idx in order.iter().skip(1) {
            simplex[idx] = lerp(&best_point, &simplex[idx], sigma);
            values[idx] = eval(&simplex[idx]);
        }
    }

    let mut best = 0;
    for i in 1..=dim {
        if values[i] < values[best] {
            best = i;
        }
    }
    Ok(OptimOutcome {
        x: simplex.swap_remove(best),
        value: values[best],
        converged,
        iterations,
    })
}
