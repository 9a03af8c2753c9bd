use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use qcoh::experiments::{
    self, inspect, named_state, parse_list, parse_measures, reference, state_from_file,
    ExperimentConfig, ExperimentKind, ExperimentOutput, ExperimentResult, Preset,
};
use qcoh::{QcohError, Result};

#[derive(Parser)]
#[command(name = "qcoh", version, about = "Coherence, mixedness and coherence-distribution experiments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a Monte Carlo or closed-form experiment and write CSV plus a JSON sidecar.
    Run(Box<RunArgs>),
    /// Print every measure for one state.
    Inspect(StateArgs),
}

#[derive(Args)]
struct RunArgs {
    /// tradeoff_histograms | additivity_table | dicke_curves | single_state
    experiment: String,
    /// Qubit counts, e.g. `3,4,5` or `3-5`.
    #[arg(long)]
    qubits: Option<String>,
    /// Ranks, e.g. `1-4`.
    #[arg(long)]
    ranks: Option<String>,
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    /// CSV output path; the sidecar goes next to it as `<stem>.meta.json`.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    pivot: Option<usize>,
    #[arg(long)]
    bins: Option<usize>,
    /// paper (2e4 samples) or ci (2e3 samples).
    #[arg(long)]
    preset: Option<String>,
    /// Flat key=value file; command-line flags take precedence.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Worker threads (0 = all cores).
    #[arg(long)]
    workers: Option<usize>,
    /// Measure descriptors, e.g. `l1,l1^2,cr`.
    #[arg(long)]
    measures: Option<String>,
    #[command(flatten)]
    state: StateArgs,
}

#[derive(Args)]
struct StateArgs {
    /// eq11 | mcs:<d> | dicke:<n>,<r> | ghzx:<n>,<p> | mixed:<d>
    #[arg(long, conflicts_with = "state_file")]
    state: Option<String>,
    /// Text file: dimension, then d*d lines of `re im`.
    #[arg(long)]
    state_file: Option<PathBuf>,
    /// Validation tolerance for file input.
    #[arg(long, default_value_t = qcoh::states::STATE_TOL)]
    tol: f64,
    /// Pivot qubit for the additivity section.
    #[arg(long = "state-pivot", id = "state_pivot", default_value_t = 0)]
    state_pivot: usize,
}

fn build_config(a: &RunArgs) -> Result<ExperimentConfig> {
    let kind: ExperimentKind = a.experiment.parse()?;
    let mut cfg = match &a.config {
        Some(p) => ExperimentConfig::from_file(p, kind)?,
        None => ExperimentConfig::defaults(kind),
    };
    if cfg.experiment != kind {
        return Err(QcohError::Config(format!(
            "config file names {}, command line names {kind}",
            cfg.experiment
        )));
    }
    if let Some(p) = &a.preset {
        cfg = cfg.with_preset(p.parse::<Preset>()?);
    }
    if let Some(q) = &a.qubits {
        cfg.n_qubits = parse_list(q)?;
    }
    if let Some(r) = &a.ranks {
        cfg.ranks = parse_list(r)?;
    }
    if let Some(m) = &a.measures {
        cfg.measures = parse_measures(m)?;
    }
    cfg.samples = a.samples.unwrap_or(cfg.samples);
    cfg.seed = a.seed.unwrap_or(cfg.seed);
    cfg.bins = a.bins.unwrap_or(cfg.bins);
    cfg.pivot = a.pivot.unwrap_or(cfg.pivot);
    cfg.workers = a.workers.unwrap_or(cfg.workers);
    if a.out.is_some() {
        cfg.out.clone_from(&a.out);
    }
    cfg.validate()?;
    Ok(cfg)
}

// Goes to stderr so stdout stays pure CSV when no --out is given.
fn summarize(out: &ExperimentOutput) {
    match &out.result {
        ExperimentResult::Table(cells) => {
            for c in reference::compare(cells) {
                eprintln!("{}", c.diagnostic(out.metadata.samples));
            }
        }
        ExperimentResult::Histograms(hs) => {
            for h in hs {
                eprintln!(
                    "panel ({}) rank {} n={}: max {:.4}, fraction above 1: {:.4}",
                    h.panel.letter(),
                    h.rank,
                    h.n_qubits,
                    h.max_value,
                    h.exceed_fraction()
                );
            }
        }
        ExperimentResult::Dicke(rows) => {
            let worst = rows.iter().map(|r| (r.closed - r.direct).abs()).fold(0.0, f64::max);
            eprintln!("{} Dicke rows, max |closed - direct| = {worst:.2e}", rows.len());
        }
    }
    eprintln!("wall time {:.2} s", out.metadata.wall_time_s);
}

fn run_inspect(s: &StateArgs) -> Result<()> {
    let (label, rho) = match (&s.state, &s.state_file) {
        (Some(name), None) => (name.clone(), named_state(name)?),
        (None, Some(path)) => (path.display().to_string(), state_from_file(path, s.tol)?),
        _ => return Err(QcohError::Config("give exactly one of --state or --state-file".into())),
    };
    print!("{}", inspect(&label, &rho, s.state_pivot)?);
    Ok(())
}

fn run_experiment(a: &RunArgs) -> Result<()> {
    if a.experiment.parse::<ExperimentKind>()? == ExperimentKind::SingleState {
        return run_inspect(&a.state);
    }
    let cfg = build_config(a)?;
    for note in cfg.extensions() {
        eprintln!("note: {note}");
    }
    let out = experiments::run(&cfg)?;
    match &cfg.out {
        Some(path) => {
            let side = out.write(path)?;
            eprintln!("wrote {} and {}", path.display(), side.display());
        }
        None => print!("{}", out.to_csv()),
    }
    summarize(&out);
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let res = match &cli.command {
        Command::Run(a) => run_experiment(a),
        Command::Inspect(s) => run_inspect(s),
    };
    match res {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
