use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use problms::algorithms::{list_algorithms, AlgorithmSpec};
use problms::experiment::{run_experiment, ExperimentConfig};
use problms::synth::{self, RegressorKind};
use problms::Error;

/// Probabilistic LMS experiment runner.
#[derive(Parser)]
#[command(name = "problms", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a Monte Carlo experiment and write CSV and SVG reports.
    Run {
        /// Experiment config file.
        #[arg(long)]
        config: PathBuf,
        /// Output directory (overrides `out` in the config).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Master seed (overrides `seed` in the config).
        #[arg(long)]
        seed: Option<u64>,
        /// Worker threads; results do not depend on this.
        #[arg(long)]
        workers: Option<usize>,
        /// Algorithm spec `name[:label][,key=value...]`; replaces the config's list.
        #[arg(long = "algo", value_name = "SPEC")]
        algos: Vec<String>,
    },
    /// List registered algorithms and their parameters.
    ListAlgos,
    /// Write a synthetic scenario as a tracking CSV.
    Gen {
        #[arg(long, value_enum)]
        kind: GenKind,
        #[arg(long, default_value_t = 50)]
        m: usize,
        #[arg(long, default_value_t = 20.0)]
        snr_db: f64,
        #[arg(long, default_value_t = 0.0)]
        drift_var: f64,
        #[arg(long, default_value_t = 10_000)]
        n_steps: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Regressors::Iid)]
        regressors: Regressors,
        /// Omit the truth columns.
        #[arg(long)]
        no_truth: bool,
        /// CSV file to write.
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKind {
    Stationary,
    Randomwalk,
}

#[derive(Clone, Copy, ValueEnum)]
enum Regressors {
    Iid,
    Shift,
}

fn run(cli: Cli) -> problms::Result<()> {
    match cli.command {
        Command::Run { config, out, seed, workers, algos } => {
            let mut cfg = ExperimentConfig::load(&config)?;
            if let Some(out) = out {
                cfg.out_dir = out;
            }
            if let Some(seed) = seed {
                cfg.seed = seed;
            }
            if let Some(workers) = workers {
                cfg.workers = workers;
            }
            if !algos.is_empty() {
                cfg.algorithms = algos.iter().map(|s| AlgorithmSpec::parse(s)).collect::<problms::Result<_>>()?;
            }
            cfg.validate()?;
            let results = run_experiment(&cfg)?;
            println!(
                "{} trial(s) x {} step(s), steady-state window {} -> {}",
                results.n_trials,
                results.n_steps,
                results.window,
                cfg.out_dir.display()
            );
            for a in &results.algorithms {
                let cov = a
                    .uncertainty
                    .as_ref()
                    .and_then(|u| u.overall_coverage())
                    .map_or(String::new(), |c| format!("  coverage {:.3}", c));
                println!("{:>16}  {:>10.3} dB{}", a.label, a.steady_state_db, cov);
            }
        }
        Command::ListAlgos => {
            for info in list_algorithms() {
                println!("{}  {}", info.name, info.summary);
                for p in info.params {
                    let default = p.default.map_or("scenario".to_string(), |d| d.to_string());
                    println!("    {:<14} {:<10} {}", p.name, default, p.help);
                }
            }
        }
        Command::Gen { kind, m, snr_db, drift_var, n_steps, seed, regressors, no_truth, out } => {
            let regressors = match regressors {
                Regressors::Iid => RegressorKind::Iid,
                Regressors::Shift => RegressorKind::Shift,
            };
            let mut scenario = match kind {
                GenKind::Stationary => synth::gen_stationary(m, snr_db, n_steps, seed)?,
                GenKind::Randomwalk => synth::gen_random_walk(m, snr_db, drift_var, n_steps, seed, regressors)?,
            };
            if no_truth {
                scenario.truth.clear();
            }
            synth::write_tracking_csv(&scenario, &out)?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            if matches!(e, Error::UnknownAlgorithm { .. }) {
                eprintln!("run `problms list-algos` for the registry");
            }
            ExitCode::from(if e.is_usage() { 1 } else { 2 })
        }
    }
}
