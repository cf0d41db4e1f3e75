//! Command-line front end: ingest SNAP edge lists and degree files, run
//! fits/generation/subsampling/metrics/experiments, and emit JSON/CSV.
//!
//! Exit codes: 0 success, 1 usage error, 2 data error, 3 numerical failure.

use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use heavytail::dist::DegreeDistribution;
use heavytail::error::Error;
use heavytail::estimate::{fit_chisq, fit_mle_discrete, hill_plot, FitResult};
use heavytail::experiments::{
    asp_vs_tau, estimator_study, subnet_tail_study, AspVsTauConfig, EstimatorStudyConfig,
    SubnetTailConfig,
};
use heavytail::graph::{parse_edge_list, read_degrees, DegreeSequence, Graph};
use heavytail::netgen::{configuration_model, sample_degree_sequence};
use heavytail::netops::{
    average_shortest_path, degrees, largest_connected_component, node_subsample,
};
use heavytail::seeding::seeded_rng;
use heavytail::Family;

#[derive(Parser)]
#[command(
    name = "heavytail",
    version,
    about = "Heavy-tail degree distributions: fitting, graph generation, subsampling, and experiments"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Fit a degree-distribution family to an edge list or degree file
    Fit(FitArgs),
    /// Generate a random simple graph with a prescribed degree law
    Generate(GenerateArgs),
    /// Keep each node with probability p and induce the subgraph
    Subsample(SubsampleArgs),
    /// Graph metrics: average shortest path, LCC, degrees, Hill plot
    Metrics(MetricsArgs),
    /// Run a seeded Monte Carlo experiment from a JSON config
    Experiment(ExperimentArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum InputKind {
    Edges,
    Degrees,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Zipf,
    Pareto,
    Gpd,
    Epd,
    Mixture,
}

impl FamilyArg {
    fn to_family(self) -> Family {
        match self {
            FamilyArg::Zipf => Family::Zipf,
            FamilyArg::Pareto => Family::Pareto,
            FamilyArg::Gpd => Family::Gpd,
            FamilyArg::Epd => Family::Epd,
            FamilyArg::Mixture => Family::Mixture,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Mle,
    Chisq,
}

#[derive(Args)]
struct FitArgs {
    /// Input file path
    #[arg(long)]
    input: PathBuf,
    /// Whether the input is an edge list or one degree per line
    #[arg(long, value_enum, default_value = "edges")]
    input_kind: InputKind,
    #[arg(long, value_enum)]
    family: FamilyArg,
    #[arg(long, value_enum, default_value = "mle")]
    method: MethodArg,
    /// Where to write the fit result JSON
    #[arg(long)]
    output: PathBuf,
    /// Optional CSV of (k, empirical ccdf, fitted ccdf) for log-log plots
    #[arg(long)]
    curve: Option<PathBuf>,
}

#[derive(Args)]
struct GenerateArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    /// Tail index xi (pareto, gpd, epd)
    #[arg(long)]
    xi: Option<f64>,
    /// Zipf exponent alpha
    #[arg(long)]
    alpha: Option<f64>,
    /// GPD scale sigma
    #[arg(long)]
    sigma: Option<f64>,
    /// EPD second-order exponent tau (<= 0)
    #[arg(long, allow_hyphen_values = true)]
    tau: Option<f64>,
    /// EPD perturbation delta
    #[arg(long, allow_hyphen_values = true)]
    delta: Option<f64>,
    /// Mixture weight of the first component
    #[arg(long)]
    c1: Option<f64>,
    /// Mixture exponents
    #[arg(long)]
    gamma1: Option<f64>,
    #[arg(long)]
    gamma2: Option<f64>,
    /// Shift the law upward by this many degrees
    #[arg(long, default_value_t = 0)]
    shift: u64,
    /// Number of nodes
    #[arg(long)]
    n: usize,
    #[arg(long)]
    seed: u64,
    /// Edge-list output path
    #[arg(long)]
    output: PathBuf,
    /// Optional JSON generation report
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Args)]
struct SubsampleArgs {
    #[arg(long)]
    input: PathBuf,
    /// Keep probability in (0, 1]
    #[arg(long)]
    p: f64,
    #[arg(long)]
    seed: u64,
    /// Subgraph edge-list output path
    #[arg(long)]
    output: PathBuf,
    /// Optional JSON subsample report
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Metric {
    Asp,
    Lcc,
    Degrees,
    Hillplot,
}

#[derive(Args)]
struct MetricsArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum)]
    which: Metric,
    /// For asp: restrict to the largest connected component first
    #[arg(long)]
    lcc: bool,
    /// Output path (stdout when omitted)
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExperimentName {
    AspVsTau,
    Estimators,
    SubnetTail,
}

#[derive(Args)]
struct ExperimentArgs {
    #[arg(long, value_enum)]
    name: ExperimentName,
    /// JSON config file
    #[arg(long)]
    config: PathBuf,
    #[arg(long)]
    output_dir: PathBuf,
}

fn main() -> ExitCode {
    configure_threads();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Fit(args) => cmd_fit(args),
        Command::Generate(args) => cmd_generate(args),
        Command::Subsample(args) => cmd_subsample(args),
        Command::Metrics(args) => cmd_metrics(args),
        Command::Experiment(args) => cmd_experiment(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code(&err))
        }
    }
}

fn configure_threads() {
    if let Ok(value) = std::env::var("HEAVYTAIL_THREADS") {
        if let Ok(threads) = value.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build_global();
        }
    }
}

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::InvalidParameter { .. } | Error::Domain(_) => 1,
        Error::Parse { .. } | Error::Io(_) | Error::Disconnected => 2,
        Error::Generation(_) | Error::Numerical(_) => 3,
    }
}

fn open_input(path: &Path) -> Result<BufReader<File>, Error> {
    Ok(BufReader::new(File::open(path)?))
}

fn load_degrees(path: &Path, kind: InputKind) -> Result<DegreeSequence, Error> {
    match kind {
        InputKind::Degrees => read_degrees(open_input(path)?),
        InputKind::Edges => {
            let parsed = parse_edge_list(open_input(path)?)?;
            degrees(&parsed.graph)
        }
    }
}

fn load_graph(path: &Path) -> Result<Graph, Error> {
    Ok(parse_edge_list(open_input(path)?)?.graph)
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<(), Error> {
    let json = serde_json::to_string_pretty(value)
        .map_err(|e| Error::Numerical(format!("JSON serialization failed: {e}")))?;
    std::fs::write(path, json + "\n")?;
    Ok(())
}

fn cmd_fit(args: FitArgs) -> Result<(), Error> {
    let degrees = load_degrees(&args.input, args.input_kind)?;
    let family = args.family.to_family();
    let fit: FitResult = match args.method {
        MethodArg::Mle => fit_mle_discrete(family, &degrees)?,
        MethodArg::Chisq => fit_chisq(family, &degrees)?,
    };
    write_json(&args.output, &fit)?;
    if let Some(curve_path) = &args.curve {
        let n = degrees.len() as f64;
        let max_degree = degrees.max().expect("non-empty");
        let mut sorted: Vec<u64> = degrees.as_slice().to_vec();
        sorted.sort_unstable();
        let mut out = BufWriter::new(File::create(curve_path)?);
        writeln!(out, "k,empirical_ccdf,fitted_ccdf")?;
        for k in 1..=max_degree {
            let above = sorted.len() - sorted.partition_point(|&d| d <= k);
            writeln!(out, "{},{},{}", k, above as f64 / n, fit.dist.ccdf(k))?;
        }
        out.flush()?;
    }
    println!(
        "fitted {} by {}: objective {:.6}, converged {}",
        fit.dist.family().name(),
        fit.method.name(),
        fit.objective,
        fit.converged
    );
    Ok(())
}

fn build_distribution(args: &GenerateArgs) -> Result<DegreeDistribution, Error> {
    let need = |name: &'static str, v: Option<f64>| {
        v.ok_or(Error::InvalidParameter {
            name,
            reason: "required for this family".into(),
        })
    };
    let base = match args.family {
        FamilyArg::Zipf => DegreeDistribution::zipf(need("alpha", args.alpha)?)?,
        FamilyArg::Pareto => DegreeDistribution::pareto(need("xi", args.xi)?)?,
        FamilyArg::Gpd => {
            DegreeDistribution::gpd(need("sigma", args.sigma)?, need("xi", args.xi)?)?
        }
        FamilyArg::Epd => DegreeDistribution::epd(
            need("xi", args.xi)?,
            need("tau", args.tau)?,
            need("delta", args.delta)?,
        )?,
        FamilyArg::Mixture => {
            let c1 = need("c1", args.c1)?;
            DegreeDistribution::mixture(
                c1,
                need("gamma1", args.gamma1)?,
                1.0 - c1,
                need("gamma2", args.gamma2)?,
            )?
        }
    };
    if args.shift > 0 {
        DegreeDistribution::shifted(args.shift, base)
    } else {
        Ok(base)
    }
}

#[derive(Serialize)]
struct GenerateReport {
    dist: DegreeDistribution,
    n: usize,
    seed: u64,
    attempts: usize,
    parity_redraws: u64,
    cap_redraws: u64,
    self_loops_removed: u64,
    multi_edges_removed: u64,
    nodes: usize,
    edges: usize,
}

fn cmd_generate(args: GenerateArgs) -> Result<(), Error> {
    let dist = build_distribution(&args)?;
    let mut rng = seeded_rng(args.seed);
    let (seq, gen_report) = sample_degree_sequence(&dist, args.n, &mut rng)?;
    let (graph, cm_report) = configuration_model(&seq, &mut rng)?;
    let mut out = BufWriter::new(File::create(&args.output)?);
    graph.write_edge_list(&mut out)?;
    out.flush()?;
    let report = GenerateReport {
        dist,
        n: args.n,
        seed: args.seed,
        attempts: gen_report.attempts,
        parity_redraws: gen_report.parity_redraws,
        cap_redraws: gen_report.cap_redraws,
        self_loops_removed: cm_report.self_loops_removed,
        multi_edges_removed: cm_report.multi_edges_removed,
        nodes: graph.node_count(),
        edges: graph.edge_count(),
    };
    if let Some(path) = &args.report {
        write_json(path, &report)?;
    }
    println!(
        "generated {} nodes, {} edges (attempts {}, erased {} self-loops, {} multi-edges)",
        report.nodes,
        report.edges,
        report.attempts,
        report.self_loops_removed,
        report.multi_edges_removed
    );
    Ok(())
}

#[derive(Serialize)]
struct SubsampleJson {
    p: f64,
    seed: u64,
    kept_nodes: usize,
    orphans_removed: usize,
    nodes: usize,
    edges: usize,
}

fn cmd_subsample(args: SubsampleArgs) -> Result<(), Error> {
    let graph = load_graph(&args.input)?;
    let mut rng = seeded_rng(args.seed);
    let report = node_subsample(&graph, args.p, &mut rng)?;
    let mut out = BufWriter::new(File::create(&args.output)?);
    report.subgraph.write_edge_list(&mut out)?;
    out.flush()?;
    let json = SubsampleJson {
        p: args.p,
        seed: args.seed,
        kept_nodes: report.kept_nodes,
        orphans_removed: report.orphans_removed,
        nodes: report.subgraph.node_count(),
        edges: report.subgraph.edge_count(),
    };
    if let Some(path) = &args.report {
        write_json(path, &json)?;
    }
    println!(
        "kept {} nodes ({} orphans removed); subgraph has {} nodes, {} edges",
        json.kept_nodes, json.orphans_removed, json.nodes, json.edges
    );
    Ok(())
}

fn write_or_print(output: Option<&Path>, content: &str) -> Result<(), Error> {
    match output {
        Some(path) => std::fs::write(path, content)?,
        None => print!("{content}"),
    }
    Ok(())
}

fn cmd_metrics(args: MetricsArgs) -> Result<(), Error> {
    let graph = load_graph(&args.input)?;
    match args.which {
        Metric::Asp => {
            let (target, lcc_nodes) = if args.lcc {
                let lcc = largest_connected_component(&graph);
                let nodes = lcc.graph.node_count();
                (lcc.graph, Some(nodes))
            } else {
                (graph, None)
            };
            let asp = average_shortest_path(&target)?;
            let mut json = serde_json::json!({ "asp": asp, "nodes": target.node_count() });
            if let Some(n) = lcc_nodes {
                json["lcc_nodes"] = n.into();
            }
            write_or_print(args.output.as_deref(), &format!("{json}\n"))?;
        }
        Metric::Lcc => {
            let lcc = largest_connected_component(&graph);
            let json = serde_json::json!({
                "nodes": lcc.graph.node_count(),
                "edges": lcc.graph.edge_count(),
                "fraction": lcc.graph.node_count() as f64 / graph.node_count() as f64,
            });
            write_or_print(args.output.as_deref(), &format!("{json}\n"))?;
        }
        Metric::Degrees => {
            let deg = degrees(&graph)?;
            let mut content = String::new();
            for d in deg.iter() {
                content.push_str(&format!("{d}\n"));
            }
            write_or_print(args.output.as_deref(), &content)?;
        }
        Metric::Hillplot => {
            let deg = degrees(&graph)?;
            let curve = hill_plot(&deg.to_f64())?;
            let mut content = String::from("k,xi_hat\n");
            for &(k, xi) in &curve.points {
                content.push_str(&format!("{k},{xi}\n"));
            }
            write_or_print(args.output.as_deref(), &content)?;
        }
    }
    Ok(())
}

fn cmd_experiment(args: ExperimentArgs) -> Result<(), Error> {
    let text = std::fs::read_to_string(&args.config)?;
    let parse_err = |e: serde_json::Error| Error::Domain(format!("invalid experiment config: {e}"));
    std::fs::create_dir_all(&args.output_dir)?;
    match args.name {
        ExperimentName::AspVsTau => {
            let cfg: AspVsTauConfig = serde_json::from_str(&text).map_err(parse_err)?;
            let result = asp_vs_tau(&cfg)?;
            result.write_outputs(&args.output_dir)?;
        }
        ExperimentName::Estimators => {
            let cfg: EstimatorStudyConfig = serde_json::from_str(&text).map_err(parse_err)?;
            let result = estimator_study(&cfg)?;
            result.write_outputs(&args.output_dir)?;
        }
        ExperimentName::SubnetTail => {
            let cfg: SubnetTailConfig = serde_json::from_str(&text).map_err(parse_err)?;
            let result = subnet_tail_study(&cfg)?;
            result.write_outputs(&args.output_dir)?;
        }
    }
    println!(
        "experiment outputs written to {}",
        args.output_dir.display()
    );
    Ok(())
}
