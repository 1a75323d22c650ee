//! Experiment harness: resolves a target (benchmark function or problem
//! instance) into an objective plus search space, runs seeded repeats of an
//! algorithm, aggregates avg/std, and writes diff-friendly artifacts:
//! JSON-lines traces and CSV summaries. Wall times go to a separate timing
//! file so everything else is byte-identical across reruns.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde_json::json;

use crate::baselines::{de_optimize, pso_optimize, random_search, DeParams, PsoParams};
use crate::error::{Error, Result};
use crate::functions::{self, TestFunction};
use crate::objective::{CostFunction, RunResult};
use crate::problems::{ClusterInstance, EdInstance, HlaInstance, MstInstance, PmsInstance};
use crate::space::SearchSpace;
use crate::vao::{vao_optimize, VaoParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlgorithmKind {
    Vao,
    Pso,
    De,
    Random,
}

impl AlgorithmKind {
    pub fn name(&self) -> &'static str {
        match self {
            AlgorithmKind::Vao => "vao",
            AlgorithmKind::Pso => "pso",
            AlgorithmKind::De => "de",
            AlgorithmKind::Random => "random",
        }
    }
}

impl FromStr for AlgorithmKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "vao" => Ok(AlgorithmKind::Vao),
            "pso" => Ok(AlgorithmKind::Pso),
            "de" => Ok(AlgorithmKind::De),
            "random" => Ok(AlgorithmKind::Random),
            other => Err(Error::Config(format!(
                "unknown algorithm `{other}`; valid options: vao, pso, de, random"
            ))),
        }
    }
}

impl fmt::Display for AlgorithmKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProblemKind {
    Ed,
    Pms,
    Mst,
    Hla,
    Cluster,
}

impl FromStr for ProblemKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ed" => Ok(ProblemKind::Ed),
            "pms" => Ok(ProblemKind::Pms),
            "mst" => Ok(ProblemKind::Mst),
            "hla" => Ok(ProblemKind::Hla),
            "cluster" => Ok(ProblemKind::Cluster),
            other => Err(Error::Config(format!(
                "unknown problem `{other}`; valid options: ed, pms, mst, hla, cluster"
            ))),
        }
    }
}

impl ProblemKind {
    pub fn name(&self) -> &'static str {
        match self {
            ProblemKind::Ed => "ed",
            ProblemKind::Pms => "pms",
            ProblemKind::Mst => "mst",
            ProblemKind::Hla => "hla",
            ProblemKind::Cluster => "cluster",
        }
    }
}

#[derive(Debug, Clone)]
pub enum Target {
    Function {
        name: String,
        dimensions: Option<usize>,
    },
    Instance {
        path: PathBuf,
        problem: ProblemKind,
        /// Facility count for HLA, cluster count for clustering.
        groups: Option<usize>,
    },
}

/// An objective the harness owns, so instances outlive the run.
pub enum ResolvedObjective {
    Function(&'static TestFunction),
    Ed(EdInstance),
    Pms(PmsInstance),
    Mst(MstInstance),
    Hla(HlaInstance),
    Cluster(ClusterInstance),
}

impl CostFunction for ResolvedObjective {
    fn cost(&self, x: &[f64]) -> f64 {
        match self {
            ResolvedObjective::Function(f) => (f.eval)(x),
            ResolvedObjective::Ed(inst) => inst.evaluate(x).map(|e| e.cost).unwrap_or(f64::NAN),
            ResolvedObjective::Pms(inst) => inst.cmax(&inst.decode(x)) as f64,
            ResolvedObjective::Mst(inst) => inst.decode_and_cost(x).1,
            ResolvedObjective::Hla(inst) => inst.cost_of(&inst.decode(x)),
            ResolvedObjective::Cluster(inst) => match inst.decode(x) {
                Ok(centers) => inst.cost_of_centers(&centers),
                Err(_) => f64::NAN,
            },
        }
    }
}

pub struct ResolvedTarget {
    pub label: String,
    pub objective: ResolvedObjective,
    pub space: SearchSpace,
}

#[derive(Debug, Clone)]
pub struct ExperimentConfig {
    pub algorithm: AlgorithmKind,
    pub target: Target,
    /// Uniform bound override for function targets.
    pub bounds_override: Option<(f64, f64)>,
    pub population: usize,
    pub iterations: usize,
    pub repeats: usize,
    pub base_seed: u64,
    pub out_dir: Option<PathBuf>,
}

impl ExperimentConfig {
    pub fn validate(&self) -> Result<()> {
        if self.repeats == 0 {
            return Err(Error::Config("repeats must be at least 1".into()));
        }
        if self.population == 0 {
            return Err(Error::Config("population must be at least 1".into()));
        }
        Ok(())
    }

    /// Seed for repeat r is base_seed + r.
    pub fn seeds(&self) -> Vec<u64> {
        (0..self.repeats as u64).map(|r| self.base_seed + r).collect()
    }

    pub fn resolve_target(&self) -> Result<ResolvedTarget> {
        match &self.target {
            Target::Function { name, dimensions } => {
                let f = functions::lookup(name)?;
                let dim = f.default_dimension(*dimensions);
                let space = match self.bounds_override {
                    Some((lo, hi)) => SearchSpace::uniform(dim, lo, hi)?,
                    None => f.default_space(dim)?,
                };
                Ok(ResolvedTarget {
                    label: f.name.to_string(),
                    objective: ResolvedObjective::Function(f),
                    space,
                })
            }
            Target::Instance { path, problem, groups } => {
                let text = fs::read_to_string(path).map_err(|e| {
                    Error::Config(format!("cannot read instance `{}`: {e}", path.display()))
                })?;
                let label = format!(
                    "{}:{}",
                    problem.name(),
                    path.file_stem().map_or_else(
                        || path.display().to_string(),
                        |s| s.to_string_lossy().into_owned()
                    )
                );
                let (objective, space) = match problem {
                    ProblemKind::Ed => {
                        let inst = EdInstance::parse(&text)?;
                        let space = inst.space();
                        (ResolvedObjective::Ed(inst), space)
                    }
                    ProblemKind::Pms => {
                        let inst = PmsInstance::parse(&text)?;
                        let space = inst.space();
                        (ResolvedObjective::Pms(inst), space)
                    }
                    ProblemKind::Mst => {
                        let inst = MstInstance::parse(&text)?;
                        let space = inst.space();
                        (ResolvedObjective::Mst(inst), space)
                    }
                    ProblemKind::Hla => {
                        let inst = HlaInstance::parse(&text, groups.unwrap_or(4))?;
                        let space = inst.space();
                        (ResolvedObjective::Hla(inst), space)
                    }
                    ProblemKind::Cluster => {
                        let inst = ClusterInstance::parse_csv(&text, groups.unwrap_or(3))?;
                        let space = inst.space();
                        (ResolvedObjective::Cluster(inst), space)
                    }
                };
                Ok(ResolvedTarget { label, objective, space })
            }
        }
    }
}

#[derive(Debug, Clone)]
pub struct SummaryRow {
    pub target: String,
    pub algorithm: AlgorithmKind,
    pub avg_best_cost: f64,
    pub std_best_cost: f64,
    pub avg_runtime_s: f64,
    pub repeats: usize,
    pub seeds: Vec<u64>,
}

impl SummaryRow {
    pub const CSV_HEADER: &'static str =
        "target,algorithm,avg_best_cost,std_best_cost,repeats,seeds";

    /// Deterministic CSV row (runtime intentionally excluded; see timing.csv).
    pub fn to_csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{}",
            self.target,
            self.algorithm,
            self.avg_best_cost,
            self.std_best_cost,
            self.repeats,
            self.seeds
                .iter()
                .map(u64::to_string)
                .collect::<Vec<_>>()
                .join("+")
        )
    }
}

/// Mean and sample standard deviation (0 for a single repeat).
pub fn mean_and_std(values: &[f64]) -> (f64, f64) {
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    if values.len() < 2 {
        return (mean, 0.0);
    }
    let var = values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / (n - 1.0);
    (mean, var.sqrt())
}

pub fn run_single(
    algorithm: AlgorithmKind,
    objective: &dyn CostFunction,
    space: &SearchSpace,
    population: usize,
    iterations: usize,
    seed: u64,
) -> Result<RunResult> {
    match algorithm {
        AlgorithmKind::Vao => vao_optimize(
            objective,
            space,
            &VaoParams {
                population_size: population,
                iterations,
                seed,
                ..VaoParams::default()
            },
        ),
        AlgorithmKind::Pso => pso_optimize(
            objective,
            space,
            &PsoParams {
                population_size: population,
                iterations,
                seed,
                ..PsoParams::default()
            },
        ),
        AlgorithmKind::De => de_optimize(
            objective,
            space,
            &DeParams {
                population_size: population,
                iterations,
                seed,
                ..DeParams::default()
            },
        ),
        AlgorithmKind::Random => random_search(
            objective,
            space,
            (population * iterations) as u64,
            population as u64,
            seed,
        ),
    }
}

pub struct ExperimentOutcome {
    pub summary: SummaryRow,
    pub runs: Vec<RunResult>,
}

/// Executes `repeats` seeded runs; when `out_dir` is set, writes one
/// JSON-lines trace per run, a deterministic `summary.csv`, and a
/// `timing.csv` holding wall times.
pub fn run_experiment(config: &ExperimentConfig) -> Result<ExperimentOutcome> {
    config.validate()?;
    let target = config.resolve_target()?;
    let mut runs = Vec::with_capacity(config.repeats);
    for seed in config.seeds() {
        runs.push(run_single(
            config.algorithm,
            &target.objective,
            &target.space,
            config.population,
            config.iterations,
            seed,
        )?);
    }
    let finals: Vec<f64> = runs.iter().map(|r| r.alpha_cost).collect();
    let (avg, std) = mean_and_std(&finals);
    let avg_runtime_s =
        runs.iter().map(|r| r.elapsed.as_secs_f64()).sum::<f64>() / runs.len() as f64;
    let summary = SummaryRow {
        target: target.label.clone(),
        algorithm: config.algorithm,
        avg_best_cost: avg,
        std_best_cost: std,
        avg_runtime_s,
        repeats: config.repeats,
        seeds: config.seeds(),
    };

    if let Some(dir) = &config.out_dir {
        fs::create_dir_all(dir)?;
        for run in &runs {
            write_trace(dir, &summary, run)?;
        }
        let summary_path = dir.join("summary.csv");
        fs::write(
            &summary_path,
            format!("{}\n{}\n", SummaryRow::CSV_HEADER, summary.to_csv_row()),
        )?;
        fs::write(
            dir.join("timing.csv"),
            format!(
                "target,algorithm,avg_runtime_s\n{},{},{}\n",
                summary.target, summary.algorithm, avg_runtime_s
            ),
        )?;
    }

    Ok(ExperimentOutcome { summary, runs })
}

fn trace_file_name(summary: &SummaryRow, seed: u64) -> String {
    format!(
        "trace_{}_{}_seed{}.jsonl",
        summary.algorithm,
        summary.target.replace([':', '/', '\\'], "_"),
        seed
    )
}

fn write_trace(dir: &Path, summary: &SummaryRow, run: &RunResult) -> Result<()> {
    let mut lines = Vec::with_capacity(run.best_cost_trace.len() + 1);
    lines.push(
        json!({
            "algorithm": summary.algorithm.name(),
            "target": summary.target,
            "seed": run.seed,
            "alpha_cost": run.alpha_cost,
            "alpha_position": run.alpha_position,
            "evaluations": run.evaluations,
        })
        .to_string(),
    );
    for (t, cost) in run.best_cost_trace.iter().enumerate() {
        lines.push(json!({"iteration": t, "best_cost": cost}).to_string());
    }
    fs::write(dir.join(trace_file_name(summary, run.seed)), lines.join("\n") + "\n")?;
    Ok(())
}

/// Final best cost per seed, parsed back out of a trace file.
pub fn read_trace_alpha(path: &Path) -> Result<(u64, f64)> {
    let text = fs::read_to_string(path)?;
    let header: serde_json::Value = serde_json::from_str(
        text.lines()
            .next()
            .ok_or_else(|| Error::Parse("empty trace file".into()))?,
    )
    .map_err(|e| Error::Parse(format!("bad trace header: {e}")))?;
    let seed = header["seed"]
        .as_u64()
        .ok_or_else(|| Error::Parse("trace header missing seed".into()))?;
    let alpha = header["alpha_cost"]
        .as_f64()
        .ok_or_else(|| Error::Parse("trace header missing alpha_cost".into()))?;
    Ok((seed, alpha))
}

#[derive(Debug)]
pub struct ComparisonTable {
    pub rows: Vec<SummaryRow>,
    /// Winning algorithm per target (lowest average best cost).
    pub winners: Vec<(String, AlgorithmKind)>,
}

impl ComparisonTable {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("target,algorithm,avg_best_cost,std_best_cost,repeats,seeds,winner\n");
        for row in &self.rows {
            let winner = self
                .winners
                .iter()
                .find(|(t, _)| *t == row.target)
                .map(|(_, a)| a.name())
                .unwrap_or("");
            out.push_str(&format!("{},{}\n", row.to_csv_row(), winner));
        }
        out
    }
}

/// Runs each config and merges the summaries. Refuses mismatched budgets:
/// every config must share population, iterations, and repeats.
pub fn compare(configs: &[ExperimentConfig]) -> Result<ComparisonTable> {
    if configs.len() < 2 {
        return Err(Error::Config("compare needs at least 2 experiments".into()));
    }
    let frame = (configs[0].population, configs[0].iterations, configs[0].repeats);
    for c in configs {
        if (c.population, c.iterations, c.repeats) != frame {
            return Err(Error::Config(
                "unequal evaluation budgets: all compared experiments must share population, iterations, and repeats"
                    .into(),
            ));
        }
    }
    let mut rows = Vec::with_capacity(configs.len());
    for config in configs {
        rows.push(run_experiment(config)?.summary);
    }
    let mut winners: Vec<(String, AlgorithmKind)> = Vec::new();
    for row in &rows {
        match winners.iter_mut().find(|(t, _)| *t == row.target) {
            Some(entry) => {
                let current = rows
                    .iter()
                    .find(|r| r.target == entry.0 && r.algorithm == entry.1)
                    .expect("winner row exists");
                if row.avg_best_cost < current.avg_best_cost {
                    entry.1 = row.algorithm;
                }
            }
            None => winners.push((row.target.clone(), row.algorithm)),
        }
    }
    Ok(ComparisonTable { rows, winners })
}

/// Uniform (x, y, f) grid over a 2-D-evaluable function's default bounds.
/// Resolution 1 samples the box center.
pub fn landscape_grid(name: &str, resolution: usize) -> Result<Vec<(f64, f64, f64)>> {
    if resolution == 0 {
        return Err(Error::Config("resolution must be at least 1".into()));
    }
    let f = functions::lookup(name)?;
    if !f.arity.accepts(2) {
        return Err(Error::Config(format!(
            "`{name}` is not evaluable in 2 dimensions"
        )));
    }
    let space = f.default_space(2)?;
    let coords = |d: usize| -> Vec<f64> {
        if resolution == 1 {
            vec![0.5 * (space.lower()[d] + space.upper()[d])]
        } else {
            (0..resolution)
                .map(|i| {
                    space.lower()[d]
                        + space.range(d) * i as f64 / (resolution - 1) as f64
                })
                .collect()
        }
    };
    let xs = coords(0);
    let ys = coords(1);
    let mut grid = Vec::with_capacity(xs.len() * ys.len());
    for &y in &ys {
        for &x in &xs {
            grid.push((x, y, (f.eval)(&[x, y])));
        }
    }
    Ok(grid)
}

pub fn landscape_csv(grid: &[(f64, f64, f64)]) -> String {
    let mut out = String::from("x,y,f\n");
    for (x, y, v) in grid {
        out.push_str(&format!("{x},{y},{v}\n"));
    }
    out
}

/// Plain-text key-value experiment spec: one experiment per blank-line
/// separated block, `key = value` lines. Keys mirror the CLI flags:
/// algo, function, instance, problem, groups, dims, lower, upper, pop,
/// iters, repeats, seed, out.
pub fn parse_spec(text: &str) -> Result<Vec<ExperimentConfig>> {
    let mut configs = Vec::new();
    for block in text.split("\n\n") {
        let mut algo = None;
        let mut function = None;
        let mut instance = None;
        let mut problem = None;
        let mut groups = None;
        let mut dims = None;
        let mut lower = None;
        let mut upper = None;
        let mut pop = 20usize;
        let mut iters = 500usize;
        let mut repeats = 10usize;
        let mut seed = 1u64;
        let mut out = None;
        let mut any = false;
        for line in block.lines().map(str::trim) {
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            any = true;
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected `key = value`, got `{line}`")))?;
            let (key, value) = (key.trim(), value.trim());
            let parse_num = |v: &str| -> Result<usize> {
                v.parse()
                    .map_err(|e| Error::Parse(format!("bad value for `{key}`: {e}")))
            };
            match key {
                "algo" => algo = Some(value.parse::<AlgorithmKind>()?),
                "function" => function = Some(value.to_string()),
                "instance" => instance = Some(PathBuf::from(value)),
                "problem" => problem = Some(value.parse::<ProblemKind>()?),
                "groups" => groups = Some(parse_num(value)?),
                "dims" => dims = Some(parse_num(value)?),
                "lower" => {
                    lower = Some(value.parse::<f64>().map_err(|e| {
                        Error::Parse(format!("bad value for `lower`: {e}"))
                    })?)
                }
                "upper" => {
                    upper = Some(value.parse::<f64>().map_err(|e| {
                        Error::Parse(format!("bad value for `upper`: {e}"))
                    })?)
                }
                "pop" => pop = parse_num(value)?,
                "iters" => iters = parse_num(value)?,
                "repeats" => repeats = parse_num(value)?,
                "seed" => {
                    seed = value
                        .parse()
                        .map_err(|e| Error::Parse(format!("bad value for `seed`: {e}")))?
                }
                "out" => out = Some(PathBuf::from(value)),
                other => return Err(Error::Parse(format!("unknown key `{other}`"))),
            }
        }
        if !any {
            continue;
        }
        let algorithm =
            algo.ok_or_else(|| Error::Parse("experiment block missing `algo`".into()))?;
        let target = match (function, instance, problem) {
            (Some(name), None, None) => Target::Function {
                name,
                dimensions: dims,
            },
            (None, Some(path), Some(problem)) => Target::Instance { path, problem, groups },
            _ => {
                return Err(Error::Parse(
                    "each experiment needs either `function` or `instance` + `problem`".into(),
                ))
            }
        };
        let bounds_override = match (lower, upper) {
            (Some(lo), Some(hi)) => Some((lo, hi)),
            (None, None) => None,
            _ => return Err(Error::Parse("`lower` and `upper` must be given together".into())),
        };
        configs.push(ExperimentConfig {
            algorithm,
            target,
            bounds_override,
            population: pop,
            iterations: iters,
            repeats,
            base_seed: seed,
            out_dir: out,
        });
    }
    Ok(configs)
}
