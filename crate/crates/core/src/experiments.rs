//! Seeded Monte Carlo harnesses: average shortest path versus the
//! second-order exponent, estimator calibration across families and methods,
//! and the sub-network tail study. Every harness derives one independent
//! stream per (grid point, replicate), so outputs are bit-identical across
//! runs and replicate r never changes when the replicate count grows.

use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dist::{DegreeDistribution, Family};
use crate::error::{Error, Result};
use crate::estimate::{fit_chisq, fit_mle_discrete, FitMethod, FitResult};
use crate::netgen::{configuration_model, sample_degree_sequence};
use crate::netops::{average_shortest_path, degrees, largest_connected_component, node_subsample};
use crate::seeding::{derive_seed, seeded_rng};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CommonConfig {
    pub n_nodes: usize,
    pub n_replicates: usize,
    pub seed: u64,
    #[serde(default = "default_band_level")]
    pub band_level: f64,
}

fn default_band_level() -> f64 {
    0.90
}

impl CommonConfig {
    pub fn validate(&self) -> Result<()> {
        if self.n_nodes < 10 {
            return Err(Error::domain("n_nodes must be at least 10"));
        }
        if self.n_replicates < 2 {
            return Err(Error::domain("n_replicates must be at least 2"));
        }
        if !(self.band_level > 0.0 && self.band_level < 1.0) {
            return Err(Error::domain("band_level must lie in (0, 1)"));
        }
        Ok(())
    }
}

/// Linear-interpolation empirical quantile (R type 7) on sorted data.
fn quantile_sorted(sorted: &[f64], q: f64) -> f64 {
    let n = sorted.len();
    if n == 1 {
        return sorted[0];
    }
    let pos = q * (n - 1) as f64;
    let lo = pos.floor() as usize;
    let hi = pos.ceil() as usize;
    let frac = pos - lo as f64;
    sorted[lo] + frac * (sorted[hi] - sorted[lo])
}

fn median(values: &mut Vec<f64>) -> f64 {
    values.sort_by(|a, b| a.partial_cmp(b).expect("finite"));
    quantile_sorted(values, 0.5)
}

/// Per-grid-point mean with an empirical quantile band.
#[derive(Debug, Clone, Serialize)]
pub struct CurveWithBand {
    pub x: Vec<f64>,
    pub mean: Vec<f64>,
    pub lo: Vec<f64>,
    pub hi: Vec<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub replicates: Option<Vec<Vec<f64>>>,
}

// ---------------------------------------------------------------------------
// average shortest path vs tau
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AspVsTauConfig {
    #[serde(flatten)]
    pub common: CommonConfig,
    #[serde(default = "default_xi")]
    pub xi: f64,
    #[serde(default = "default_delta")]
    pub delta: f64,
    #[serde(default = "default_tau_grid")]
    pub tau_grid: Vec<f64>,
    #[serde(default)]
    pub keep_replicates: bool,
}

fn default_xi() -> f64 {
    1.15
}

fn default_delta() -> f64 {
    0.5
}

fn default_tau_grid() -> Vec<f64> {
    (0..=10).map(|i| -0.5 * i as f64).collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct AspRow {
    pub tau: f64,
    pub replicate: usize,
    pub ok: bool,
    pub asp: f64,
    pub lcc_nodes: usize,
    pub lcc_fraction: f64,
    pub gen_attempts: usize,
    pub erased_edges: u64,
}

#[derive(Debug, Clone)]
pub struct AspVsTauResult {
    pub config: AspVsTauConfig,
    pub curve: CurveWithBand,
    pub rows: Vec<AspRow>,
}

/// One replicate of the ASP pipeline: generate, take the LCC, measure.
fn asp_replicate(
    cfg: &AspVsTauConfig,
    tau: f64,
    seed: u64,
) -> Result<(f64, usize, f64, usize, u64)> {
    let mut rng = seeded_rng(seed);
    let dist = DegreeDistribution::epd(cfg.xi, tau, cfg.delta)?;
    let (seq, gen_report) = sample_degree_sequence(&dist, cfg.common.n_nodes, &mut rng)?;
    let (graph, cm_report) = configuration_model(&seq, &mut rng)?;
    let lcc = largest_connected_component(&graph);
    let asp = average_shortest_path(&lcc.graph)?;
    let fraction = lcc.graph.node_count() as f64 / cfg.common.n_nodes as f64;
    Ok((
        asp,
        lcc.graph.node_count(),
        fraction,
        gen_report.attempts,
        cm_report.self_loops_removed + cm_report.multi_edges_removed,
    ))
}

pub fn asp_vs_tau(cfg: &AspVsTauConfig) -> Result<AspVsTauResult> {
    cfg.common.validate()?;
    if cfg.tau_grid.is_empty() {
        return Err(Error::domain("tau grid must not be empty"));
    }
    let mut rows = Vec::new();
    let mut curve = CurveWithBand {
        x: Vec::new(),
        mean: Vec::new(),
        lo: Vec::new(),
        hi: Vec::new(),
        replicates: cfg.keep_replicates.then(Vec::new),
    };
    for (t_idx, &tau) in cfg.tau_grid.iter().enumerate() {
        let reps: Vec<(usize, Result<(f64, usize, f64, usize, u64)>)> =
            (0..cfg.common.n_replicates)
                .into_par_iter()
                .map(|r| {
                    let seed = derive_seed(cfg.common.seed, t_idx as u64, r as u64);
                    (r, asp_replicate(cfg, tau, seed))
                })
                .collect();
        let mut values = Vec::new();
        for (r, outcome) in reps {
            match outcome {
                Ok((asp, lcc_nodes, fraction, attempts, erased)) => {
                    values.push(asp);
                    rows.push(AspRow {
                        tau,
                        replicate: r,
                        ok: true,
                        asp,
                        lcc_nodes,
                        lcc_fraction: fraction,
                        gen_attempts: attempts,
                        erased_edges: erased,
                    });
                }
                Err(_) => rows.push(AspRow {
                    tau,
                    replicate: r,
                    ok: false,
                    asp: f64::NAN,
                    lcc_nodes: 0,
                    lcc_fraction: 0.0,
                    gen_attempts: 0,
                    erased_edges: 0,
                }),
            }
        }
        if values.len() * 2 < cfg.common.n_replicates {
            return Err(Error::Generation(format!(
                "tau = {tau}: only {} of {} replicates generated",
                values.len(),
                cfg.common.n_replicates
            )));
        }
        values.sort_by(|a, b| a.partial_cmp(b).expect("finite"));
        let alpha = (1.0 - cfg.common.band_level) / 2.0;
        curve.x.push(tau);
        curve
            .mean
            .push(values.iter().sum::<f64>() / values.len() as f64);
        curve.lo.push(quantile_sorted(&values, alpha));
        curve.hi.push(quantile_sorted(&values, 1.0 - alpha));
        if let Some(mat) = curve.replicates.as_mut() {
            mat.push(values);
        }
    }
    Ok(AspVsTauResult {
        config: cfg.clone(),
        curve,
        rows,
    })
}

impl AspVsTauResult {
    pub fn rows_csv(&self) -> String {
        let mut out =
            String::from("tau,replicate,ok,asp,lcc_nodes,lcc_fraction,gen_attempts,erased_edges\n");
        for r in &self.rows {
            let asp = if r.asp.is_nan() {
                String::new()
            } else {
                r.asp.to_string()
            };
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{}\n",
                r.tau,
                r.replicate,
                r.ok,
                asp,
                r.lcc_nodes,
                r.lcc_fraction,
                r.gen_attempts,
                r.erased_edges
            ));
        }
        out
    }

    pub fn summary_csv(&self) -> String {
        let mut out = String::from("tau,n_success,n_failed,mean_asp,lo,hi\n");
        for (i, &tau) in self.curve.x.iter().enumerate() {
            let n_success = self.rows.iter().filter(|r| r.tau == tau && r.ok).count();
            let n_failed = self.rows.iter().filter(|r| r.tau == tau && !r.ok).count();
            out.push_str(&format!(
                "{},{},{},{},{},{}\n",
                tau, n_success, n_failed, self.curve.mean[i], self.curve.lo[i], self.curve.hi[i]
            ));
        }
        out
    }

    pub fn write_outputs(&self, dir: &Path) -> Result<()> {
        std::fs::create_dir_all(dir)?;
        std::fs::write(dir.join("asp_vs_tau_rows.csv"), self.rows_csv())?;
        std::fs::write(dir.join("asp_vs_tau_summary.csv"), self.summary_csv())?;
        std::fs::write(
            dir.join("asp_vs_tau_config.json"),
            serde_json::to_string_pretty(&self.config)
                .map_err(|e| Error::Numerical(e.to_string()))?,
        )?;
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// estimator calibration study
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EstimatorStudyConfig {
    #[serde(flatten)]
    pub common: CommonConfig,
}

#[derive(Debug, Clone, Serialize)]
pub struct EstimatorRow {
    pub scenario: String,
    pub family: String,
    pub method: String,
    pub replicate: usize,
    pub converged: bool,
    pub xi_hat: f64,
    pub sigma_hat: Option<f64>,
    pub tau_hat: Option<f64>,
    pub delta_hat: Option<f64>,
    pub objective: f64,
    pub iterations: usize,
}

#[derive(Debug, Clone)]
pub struct EstimatorStudyResult {
    pub config: EstimatorStudyConfig,
    pub rows: Vec<EstimatorRow>,
}

fn scenario_list() -> Vec<(String, DegreeDistribution)> {
    vec![
        (
            "pareto_xi_1.15".into(),
            DegreeDistribution::pareto(1.15).unwrap(),
        ),
        (
            "epd_tau_-1".into(),
            DegreeDistribution::epd(1.15, -1.0, 0.5).unwrap(),
        ),
        (
            "epd_tau_-1.6".into(),
            DegreeDistribution::epd(1.15, -1.6, 0.5).unwrap(),
        ),
    ]
}

fn fit_to_row(
    scenario: &str,
    family: Family,
    method: FitMethod,
    replicate: usize,
    fit: Result<FitResult>,
) -> EstimatorRow {
    match fit {
        Ok(fit) => {
            let (sigma, tau, delta) = match &fit.dist {
                DegreeDistribution::Gpd(p) => (Some(p.sigma()), None, None),
                DegreeDistribution::Epd(p) => (None, Some(p.tau()), Some(p.delta())),
                _ => (None, None, None),
            };
            EstimatorRow {
                scenario: scenario.into(),
                family: family.name().into(),
                method: method.name().into(),
                replicate,
                converged: fit.converged,
                xi_hat: fit.dist.tail_index(),
                sigma_hat: sigma,
                tau_hat: tau,
                delta_hat: delta,
                objective: fit.objective,
                iterations: fit.iterations,
            }
        }
        Err(_) => EstimatorRow {
            scenario: scenario.into(),
            family: family.name().into(),
            method: method.name().into(),
            replicate,
            converged: false,
            xi_hat: f64::NAN,
            sigma_hat: None,
            tau_hat: None,
            delta_hat: None,
            objective: f64::NAN,
            iterations: 0,
        },
    }
}

/// For each generator scenario, fit every replicate's i.i.d. degree sample
/// with the Pareto, GPD, and EPD families by both chi-square and maximum
/// likelihood, and emit every xi_hat for external boxplotting.
pub fn estimator_study(cfg: &EstimatorStudyConfig) -> Result<EstimatorStudyResult> {
    cfg.common.validate()?;
    let scenarios = scenario_list();
    let families = [Family::Pareto, Family::Gpd, Family::Epd];
    let mut rows = Vec::new();
    for (s_idx, (name, gen)) in scenarios.iter().enumerate() {
        let mut batch: Vec<Vec<EstimatorRow>> = (0..cfg.common.n_replicates)
            .into_par_iter()
            .map(|r| {
                let seed = derive_seed(cfg.common.seed, 100 + s_idx as u64, r as u64);
                let mut rng = seeded_rng(seed);
                let degrees = gen.sample(cfg.common.n_nodes, &mut rng);
                let mut out = Vec::with_capacity(6);
                for family in families {
                    let (chisq, mle) = match &degrees {
                        Ok(d) => (fit_chisq(family, d), fit_mle_discrete(family, d)),
                        Err(_) => (
                            Err(Error::Generation("sampling failed".into())),
                            Err(Error::Generation("sampling failed".into())),
                        ),
                    };
                    out.push(fit_to_row(name, family, FitMethod::Chisq, r, chisq));
                    out.push(fit_to_row(name, family, FitMethod::Mle, r, mle));
                }
                out
            })
            .collect();
        for rep_rows in batch.drain(..) {
            rows.extend(rep_rows);
        }
    }
    Ok(EstimatorStudyResult {
        config: cfg.clone(),
        rows,
    })
}

impl EstimatorStudyResult {
    pub fn rows_csv(&self) -> String {
        let mut out = String::from(
            "scenario,family,method,replicate,converged,xi_hat,sigma_hat,tau_hat,delta_hat,objective,iterations\n",
        );
        let opt = |v: Option<f64>| v.map(|x| x.to_string()).unwrap_or_default();
        for r in &self.rows {
            let xi = if r.xi_hat.is_nan() {
                String::new()
            } else {
                r.xi_hat.to_string()
            };
            let obj = if r.objective.is_nan() {
                String::new()
            } else {
                r.objective.to_string()
            };
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{},{},{},{}\n",
                r.scenario,
                r.family,
                r.method,
                r.replicate,
                r.converged,
                xi,
                opt(r.sigma_hat),
                opt(r.tau_hat),
                opt(r.delta_hat),
                obj,
                r.iterations
            ));
        }
        out
    }

    pub fn summary_csv(&self) -> String {
        let mut out =
            String::from("scenario,family,method,n,n_converged,median_xi,q25_xi,q75_xi\n");
        let mut groups: Vec<(String, String, String)> = self
            .rows
            .iter()
            .map(|r| (r.scenario.clone(), r.family.clone(), r.method.clone()))
            .collect();
        groups.sort();
        groups.dedup();
        for (scenario, family, method) in groups {
            let members: Vec<&EstimatorRow> = self
                .rows
                .iter()
                .filter(|r| r.scenario == scenario && r.family == family && r.method == method)
                .collect();
            let mut xs: Vec<f64> = members
                .iter()
                .filter(|r| r.converged && r.xi_hat.is_finite())
                .map(|r| r.xi_hat)
                .collect();
            xs.sort_by(|a, b| a.partial_cmp(b).expect("finite"));
            let (med, q25, q75) = if xs.is_empty() {
                (String::new(), String::new(), String::new())
            } else {
                (
                    quantile_sorted(&xs, 0.5).to_string(),
                    quantile_sorted(&xs, 0.25).to_string(),
                    quantile_sorted(&xs, 0.75).to_string(),
                )
            };
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{}\n",
                scenario,
                family,
                method,
                members.len(),
                members.iter().filter(|r| r.converged).count(),
                med,
                q25,
                q75
            ));
        }
        out
    }

    pub fn write_outputs(&self, dir: &Path) -> Result<()> {
        std::fs::create_dir_all(dir)?;
        std::fs::write(dir.join("estimators_rows.csv"), self.rows_csv())?;
        std::fs::write(dir.join("estimators_summary.csv"), self.summary_csv())?;
        std::fs::write(
            dir.join("estimators_config.json"),
            serde_json::to_string_pretty(&self.config)
                .map_err(|e| Error::Numerical(e.to_string()))?,
        )?;
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// sub-network tail study
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SubnetTailConfig {
    #[serde(flatten)]
    pub common: CommonConfig,
    #[serde(default = "default_parent")]
    pub parent: DegreeDistribution,
    #[serde(default = "default_p_grid")]
    pub p_grid: Vec<f64>,
}

fn default_parent() -> DegreeDistribution {
    DegreeDistribution::pareto(1.15).unwrap()
}

fn default_p_grid() -> Vec<f64> {
    vec![0.25, 0.5, 0.75]
}

#[derive(Debug, Clone, Serialize)]
pub struct SubnetRow {
    pub p: f64,
    pub replicate: usize,
    pub ok: bool,
    pub converged: bool,
    pub xi_hat: f64,
    pub tau_hat: f64,
    pub delta_hat: f64,
    pub subnet_nodes: usize,
    pub orphans_removed: usize,
}

#[derive(Debug, Clone)]
pub struct SubnetTailResult {
    pub config: SubnetTailConfig,
    pub rows: Vec<SubnetRow>,
}

/// Generate a parent graph per replicate, subsample nodes at each p, and fit
/// the EPD to the sub-network degrees by maximum likelihood.
pub fn subnet_tail_study(cfg: &SubnetTailConfig) -> Result<SubnetTailResult> {
    cfg.common.validate()?;
    if cfg.p_grid.iter().any(|&p| !(p > 0.0 && p <= 1.0)) {
        return Err(Error::domain("every p must lie in (0, 1]"));
    }
    let replicate_rows: Vec<Vec<SubnetRow>> = (0..cfg.common.n_replicates)
        .into_par_iter()
        .map(|r| {
            let seed = derive_seed(cfg.common.seed, 200, r as u64);
            let mut rng = seeded_rng(seed);
            let parent = (|| -> Result<_> {
                let (seq, _) = sample_degree_sequence(&cfg.parent, cfg.common.n_nodes, &mut rng)?;
                let (graph, _) = configuration_model(&seq, &mut rng)?;
                Ok(graph)
            })();
            let mut rows = Vec::new();
            for (p_idx, &p) in cfg.p_grid.iter().enumerate() {
                let row = match &parent {
                    Err(_) => SubnetRow {
                        p,
                        replicate: r,
                        ok: false,
                        converged: false,
                        xi_hat: f64::NAN,
                        tau_hat: f64::NAN,
                        delta_hat: f64::NAN,
                        subnet_nodes: 0,
                        orphans_removed: 0,
                    },
                    Ok(graph) => {
                        let sub_seed = derive_seed(cfg.common.seed, 300 + p_idx as u64, r as u64);
                        let mut sub_rng = seeded_rng(sub_seed);
                        match node_subsample(graph, p, &mut sub_rng)
                            .and_then(|rep| Ok((degrees(&rep.subgraph)?, rep)))
                            .and_then(|(deg, rep)| {
                                let fit: FitResult = fit_mle_discrete(Family::Epd, &deg)?;
                                Ok((fit, rep))
                            }) {
                            Ok((fit, rep)) => {
                                let (xi, tau, delta) = match &fit.dist {
                                    DegreeDistribution::Epd(p) => (p.xi(), p.tau(), p.delta()),
                                    _ => unreachable!("EPD family requested"),
                                };
                                SubnetRow {
                                    p,
                                    replicate: r,
                                    ok: true,
                                    converged: fit.converged,
                                    xi_hat: xi,
                                    tau_hat: tau,
                                    delta_hat: delta,
                                    subnet_nodes: rep.subgraph.node_count(),
                                    orphans_removed: rep.orphans_removed,
                                }
                            }
                            Err(_) => SubnetRow {
                                p,
                                replicate: r,
                                ok: false,
                                converged: false,
                                xi_hat: f64::NAN,
                                tau_hat: f64::NAN,
                                delta_hat: f64::NAN,
                                subnet_nodes: 0,
                                orphans_removed: 0,
                            },
                        }
                    }
                };
                rows.push(row);
            }
            rows
        })
        .collect();
    let mut rows: Vec<SubnetRow> = replicate_rows.into_iter().flatten().collect();
    rows.sort_by(|a, b| {
        a.p.partial_cmp(&b.p)
            .expect("finite")
            .then(a.replicate.cmp(&b.replicate))
    });
    for &p in &cfg.p_grid {
        let ok = rows.iter().filter(|r| r.p == p && r.ok).count();
        if ok * 2 < cfg.common.n_replicates {
            return Err(Error::Generation(format!(
                "p = {p}: only {ok} of {} replicates completed",
                cfg.common.n_replicates
            )));
        }
    }
    Ok(SubnetTailResult {
        config: cfg.clone(),
        rows,
    })
}

impl SubnetTailResult {
    pub fn rows_csv(&self) -> String {
        let mut out = String::from(
            "p,replicate,ok,converged,xi_hat,tau_hat,delta_hat,subnet_nodes,orphans_removed\n",
        );
        let fmt = |v: f64| {
            if v.is_nan() {
                String::new()
            } else {
                v.to_string()
            }
        };
        for r in &self.rows {
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{},{}\n",
                r.p,
                r.replicate,
                r.ok,
                r.converged,
                fmt(r.xi_hat),
                fmt(r.tau_hat),
                fmt(r.delta_hat),
                r.subnet_nodes,
                r.orphans_removed
            ));
        }
        out
    }

    pub fn summary_csv(&self) -> String {
        let mut out = String::from("p,n,n_converged,median_xi,median_tau,share_tau_negative\n");
        let mut ps: Vec<f64> = self.rows.iter().map(|r| r.p).collect();
        ps.sort_by(|a, b| a.partial_cmp(b).expect("finite"));
        ps.dedup();
        for p in ps {
            let members: Vec<&SubnetRow> = self.rows.iter().filter(|r| r.p == p).collect();
            let converged: Vec<&&SubnetRow> =
                members.iter().filter(|r| r.ok && r.converged).collect();
            let mut xis: Vec<f64> = converged.iter().map(|r| r.xi_hat).collect();
            let mut taus: Vec<f64> = converged.iter().map(|r| r.tau_hat).collect();
            let share_neg = if converged.is_empty() {
                String::new()
            } else {
                (taus.iter().filter(|&&t| t < 0.0).count() as f64 / taus.len() as f64).to_string()
            };
            let (med_xi, med_tau) = if converged.is_empty() {
                (String::new(), String::new())
            } else {
                (median(&mut xis).to_string(), median(&mut taus).to_string())
            };
            out.push_str(&format!(
                "{},{},{},{},{},{}\n",
                p,
                members.len(),
                converged.len(),
                med_xi,
                med_tau,
                share_neg
            ));
        }
        out
    }

    pub fn write_outputs(&self, dir: &Path) -> Result<()> {
        std::fs::create_dir_all(dir)?;
        std::fs::write(dir.join("subnet_tail_rows.csv"), self.rows_csv())?;
        std::fs::write(dir.join("subnet_tail_summary.csv"), self.summary_csv())?;
        std::fs::write(
            dir.join("subnet_tail_config.json"),
            serde_json::to_string_pretty(&self.config)
                .map_err(|e| Error::Numerical(e.to_string()))?,
        )?;
        Ok(())
    }
}
