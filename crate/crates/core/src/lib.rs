//! Population-based optimization core: the Victoria Amazonica Optimization
//! (VAO) algorithm, PSO / DE / random-search baselines, a 24-function
//! benchmark registry, applied-problem adapters (economic dispatch, parallel
//! machine scheduling, minimum spanning tree, hub location-allocation,
//! clustering), and an experiment harness with deterministic artifacts.

pub mod baselines;
pub mod error;
pub mod experiment;
pub mod functions;
pub mod objective;
pub mod problems;
pub mod space;
pub mod vao;

pub use baselines::{de_optimize, pso_optimize, random_search, DeParams, PsoParams};
pub use error::{Error, Result};
pub use experiment::{
    compare, landscape_csv, landscape_grid, parse_spec, run_experiment, AlgorithmKind,
    ExperimentConfig, ProblemKind, SummaryRow, Target,
};
pub use functions::{registry, TestFunction};
pub use objective::{CostFunction, CountingCost, RunResult};
pub use problems::{ClusterInstance, EdInstance, HlaInstance, MstInstance, PmsInstance, Schedule};
pub use space::SearchSpace;
pub use vao::{vao_optimize, VaoParams};
