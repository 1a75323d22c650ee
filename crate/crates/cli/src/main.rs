//! `vao` — experiment runner for the optimization core.
//!
//! Subcommands:
//!   run        one experiment (algorithm x target), seeded repeats
//!   compare    several experiments from a plain-text spec file
//!   landscape  (x, y, f) grid data for a 2-D function
//!
//! Every error path exits nonzero with a single-line diagnostic on stderr.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use vao_core::experiment::{
    self, AlgorithmKind, ExperimentConfig, ProblemKind, SummaryRow, Target,
};

#[derive(Parser)]
#[command(name = "vao", version, about = "Population-based optimization experiment runner")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one algorithm against one target for a number of seeded repeats.
    Run(RunArgs),
    /// Run every experiment in a spec file under equal budgets and report a winner per target.
    Compare(CompareArgs),
    /// Emit an (x, y, f) grid over a function's default 2-D bounds.
    Landscape(LandscapeArgs),
}

#[derive(Args)]
struct RunArgs {
    /// Algorithm: vao, pso, de, or random.
    #[arg(long)]
    algo: String,
    /// Benchmark function name (mutually exclusive with --instance).
    #[arg(long)]
    function: Option<String>,
    /// Problem instance file (requires --problem).
    #[arg(long)]
    instance: Option<PathBuf>,
    /// Problem type for --instance: ed, pms, mst, hla, or cluster.
    #[arg(long)]
    problem: Option<String>,
    /// Facility count (hla) or cluster count (cluster).
    #[arg(long)]
    groups: Option<usize>,
    /// Dimensions for any-D functions.
    #[arg(long)]
    dims: Option<usize>,
    /// Uniform lower bound override (function targets; needs --upper).
    #[arg(long, allow_negative_numbers = true)]
    lower: Option<f64>,
    /// Uniform upper bound override (function targets; needs --lower).
    #[arg(long, allow_negative_numbers = true)]
    upper: Option<f64>,
    /// Population size.
    #[arg(long, default_value_t = 20)]
    pop: usize,
    /// Iterations per run.
    #[arg(long, default_value_t = 500)]
    iters: usize,
    /// Independent repeats; repeat r uses seed = --seed + r.
    #[arg(long, default_value_t = 10)]
    repeats: usize,
    /// Base seed.
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Output directory for traces, summary.csv, and timing.csv.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CompareArgs {
    /// Spec file: blank-line separated `key = value` experiment blocks.
    #[arg(long)]
    spec: PathBuf,
    /// Optional path for the merged comparison CSV.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct LandscapeArgs {
    /// Function name (must be 2-D-evaluable).
    #[arg(long)]
    function: String,
    /// Grid resolution per axis.
    #[arg(long, default_value_t = 64)]
    res: usize,
    /// Output CSV file (stdout when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
}

fn run_config(args: &RunArgs) -> anyhow::Result<ExperimentConfig> {
    let algorithm: AlgorithmKind = args.algo.parse()?;
    let target = match (&args.function, &args.instance, &args.problem) {
        (Some(name), None, None) => Target::Function {
            name: name.clone(),
            dimensions: args.dims,
        },
        (None, Some(path), Some(problem)) => Target::Instance {
            path: path.clone(),
            problem: problem.parse::<ProblemKind>()?,
            groups: args.groups,
        },
        (None, Some(_), None) => anyhow::bail!("--instance requires --problem"),
        _ => anyhow::bail!("give either --function NAME or --instance PATH --problem KIND"),
    };
    let bounds_override = match (args.lower, args.upper) {
        (Some(lo), Some(hi)) => Some((lo, hi)),
        (None, None) => None,
        _ => anyhow::bail!("--lower and --upper must be given together"),
    };
    Ok(ExperimentConfig {
        algorithm,
        target,
        bounds_override,
        population: args.pop,
        iterations: args.iters,
        repeats: args.repeats,
        base_seed: args.seed,
        out_dir: args.out.clone(),
    })
}

fn cmd_run(args: &RunArgs) -> anyhow::Result<()> {
    let config = run_config(args)?;
    let outcome = experiment::run_experiment(&config)?;
    println!("{}", SummaryRow::CSV_HEADER);
    println!("{}", outcome.summary.to_csv_row());
    Ok(())
}

fn cmd_compare(args: &CompareArgs) -> anyhow::Result<()> {
    let text = std::fs::read_to_string(&args.spec)
        .map_err(|e| anyhow::anyhow!("cannot read spec `{}`: {e}", args.spec.display()))?;
    let configs = experiment::parse_spec(&text)?;
    let table = experiment::compare(&configs)?;
    let csv = table.to_csv();
    match &args.out {
        Some(path) => std::fs::write(path, &csv)?,
        None => print!("{csv}"),
    }
    Ok(())
}

fn cmd_landscape(args: &LandscapeArgs) -> anyhow::Result<()> {
    let grid = experiment::landscape_grid(&args.function, args.res)?;
    let csv = experiment::landscape_csv(&grid);
    match &args.out {
        Some(path) => std::fs::write(path, &csv)?,
        None => print!("{csv}"),
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Run(args) => cmd_run(args),
        Command::Compare(args) => cmd_compare(args),
        Command::Landscape(args) => cmd_landscape(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
