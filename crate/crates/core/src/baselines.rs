//! PSO and DE baselines plus plain random search, all sharing the same run
//! contract as the VAO optimizer: seeded determinism, elitist best tracking,
//! monotone traces, clamped positions, exact evaluation accounting.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::objective::{CostFunction, CountingCost, RunResult};
use crate::space::SearchSpace;

#[derive(Debug, Clone)]
pub struct PsoParams {
    pub population_size: usize,
    pub iterations: usize,
    pub inertia_weight: f64,
    pub inertia_damping: f64,
    pub personal_coefficient: f64,
    pub global_coefficient: f64,
    /// Velocity clamp as a fraction of each dimension's range.
    pub velocity_clamp_frac: f64,
    pub seed: u64,
}

impl Default for PsoParams {
    fn default() -> Self {
        Self {
            population_size: 20,
            iterations: 500,
            inertia_weight: 1.0,
            inertia_damping: 0.99,
            personal_coefficient: 1.5,
            global_coefficient: 2.0,
            velocity_clamp_frac: 0.2,
            seed: 0,
        }
    }
}

impl PsoParams {
    fn validate(&self) -> Result<()> {
        if self.population_size == 0 {
            return Err(Error::Config("population_size must be at least 1".into()));
        }
        if self.personal_coefficient <= 0.0 || self.global_coefficient <= 0.0 {
            return Err(Error::Config("learning coefficients must be positive".into()));
        }
        if !(self.inertia_damping > 0.0 && self.inertia_damping <= 1.0) {
            return Err(Error::Config(format!(
                "inertia_damping must lie in (0, 1], got {}",
                self.inertia_damping
            )));
        }
        Ok(())
    }
}

pub fn pso_optimize(
    objective: &dyn CostFunction,
    space: &SearchSpace,
    params: &PsoParams,
) -> Result<RunResult> {
    params.validate()?;
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let counted = CountingCost::new(objective);
    let dim = space.dimension();
    let n = params.population_size;

    let mut positions: Vec<Vec<f64>> = (0..n).map(|_| space.sample(&mut rng)).collect();
    let mut velocities = vec![vec![0.0; dim]; n];
    let costs: Vec<f64> = positions.iter().map(|x| counted.cost(x)).collect();
    let mut pbest = positions.clone();
    let mut pbest_cost = costs;

    let mut gbest = 0;
    for i in 1..n {
        if pbest_cost[i] < pbest_cost[gbest] {
            gbest = i;
        }
    }
    let mut best_position = pbest[gbest].clone();
    let mut best_cost = pbest_cost[gbest];
    if !best_cost.is_finite() {
        return Err(Error::NonFiniteObjective);
    }

    let vmax: Vec<f64> = (0..dim)
        .map(|d| params.velocity_clamp_frac * space.range(d))
        .collect();

    let mut w = params.inertia_weight;
    let mut rejected = 0;
    let mut trace = Vec::with_capacity(params.iterations);
    for _ in 0..params.iterations {
        for i in 0..n {
            for d in 0..dim {
                let r1: f64 = rng.random();
                let r2: f64 = rng.random();
                let v = w * velocities[i][d]
                    + params.personal_coefficient * r1 * (pbest[i][d] - positions[i][d])
                    + params.global_coefficient * r2 * (best_position[d] - positions[i][d]);
                velocities[i][d] = v.clamp(-vmax[d], vmax[d]);
                positions[i][d] += velocities[i][d];
            }
            space.clamp(&mut positions[i]);
            let cost = counted.cost(&positions[i]);
            if !cost.is_finite() {
                rejected += 1;
                continue;
            }
            if cost < pbest_cost[i] {
                pbest[i].copy_from_slice(&positions[i]);
                pbest_cost[i] = cost;
                if cost < best_cost {
                    best_position.copy_from_slice(&positions[i]);
                    best_cost = cost;
                }
            }
        }
        w *= params.inertia_damping;
        trace.push(best_cost);
    }

    Ok(RunResult {
        best_cost_trace: trace,
        alpha_position: best_position,
        alpha_cost: best_cost,
        seed: params.seed,
        evaluations: counted.calls(),
        rejected_moves: rejected,
        elapsed: start.elapsed(),
    })
}

#[derive(Debug, Clone)]
pub struct DeParams {
    pub population_size: usize,
    pub iterations: usize,
    /// Differential weight F.
    pub differential_weight: f64,
    /// Binomial crossover rate CR.
    pub crossover_rate: f64,
    pub seed: u64,
}

impl Default for DeParams {
    fn default() -> Self {
        Self {
            population_size: 20,
            iterations: 500,
            differential_weight: 0.5,
            crossover_rate: 0.9,
            seed: 0,
        }
    }
}

impl DeParams {
    fn validate(&self) -> Result<()> {
        // rand/1 needs the target plus three distinct donors
        if self.population_size < 4 {
            return Err(Error::Config(format!(
                "rand/1/bin needs a population of at least 4, got {}",
                self.population_size
            )));
        }
        if !(self.differential_weight > 0.0 && self.differential_weight <= 2.0) {
            return Err(Error::Config(format!(
                "differential_weight must lie in (0, 2], got {}",
                self.differential_weight
            )));
        }
        if !(0.0..=1.0).contains(&self.crossover_rate) {
            return Err(Error::Config(format!(
                "crossover_rate must lie in [0, 1], got {}",
                self.crossover_rate
            )));
        }
        Ok(())
    }
}

/// rand/1/bin: mutant = x_r1 + F (x_r2 - x_r3), binomial crossover with one
/// forced dimension, greedy selection.
pub fn de_optimize(
    objective: &dyn CostFunction,
    space: &SearchSpace,
    params: &DeParams,
) -> Result<RunResult> {
    params.validate()?;
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let counted = CountingCost::new(objective);
    let dim = space.dimension();
    let n = params.population_size;

    let mut positions: Vec<Vec<f64>> = (0..n).map(|_| space.sample(&mut rng)).collect();
    let mut costs: Vec<f64> = positions.iter().map(|x| counted.cost(x)).collect();

    let mut best = 0;
    for i in 1..n {
        if costs[i] < costs[best] {
            best = i;
        }
    }
    let mut best_position = positions[best].clone();
    let mut best_cost = costs[best];
    if !best_cost.is_finite() {
        return Err(Error::NonFiniteObjective);
    }

    let mut rejected = 0;
    let mut trial = vec![0.0; dim];
    let mut trace = Vec::with_capacity(params.iterations);
    for _ in 0..params.iterations {
        for i in 0..n {
            let mut pick = || loop {
                let r = rng.random_range(0..n);
                if r != i {
                    return r;
                }
            };
            let r1 = pick();
            let r2 = loop {
                let r = pick();
                if r != r1 {
                    break r;
                }
            };
            let r3 = loop {
                let r = pick();
                if r != r1 && r != r2 {
                    break r;
                }
            };
            let forced = rng.random_range(0..dim);
            for d in 0..dim {
                trial[d] = if d == forced || rng.random::<f64>() < params.crossover_rate {
                    positions[r1][d]
                        + params.differential_weight * (positions[r2][d] - positions[r3][d])
                } else {
                    positions[i][d]
                };
            }
            space.clamp(&mut trial);
            let cost = counted.cost(&trial);
            if !cost.is_finite() {
                rejected += 1;
                continue;
            }
            if cost <= costs[i] {
                positions[i].copy_from_slice(&trial);
                costs[i] = cost;
                if cost < best_cost {
                    best_position.copy_from_slice(&trial);
                    best_cost = cost;
                }
            }
        }
        trace.push(best_cost);
    }

    Ok(RunResult {
        best_cost_trace: trace,
        alpha_position: best_position,
        alpha_cost: best_cost,
        seed: params.seed,
        evaluations: counted.calls(),
        rejected_moves: rejected,
        elapsed: start.elapsed(),
    })
}

/// Uniform random search with an exact evaluation budget. The trace has one
/// entry per block of `block` samples, so a (population, iterations) frame
/// maps onto it directly.
pub fn random_search(
    objective: &dyn CostFunction,
    space: &SearchSpace,
    budget: u64,
    block: u64,
    seed: u64,
) -> Result<RunResult> {
    if budget == 0 || block == 0 {
        return Err(Error::Config("random search needs a positive budget".into()));
    }
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let counted = CountingCost::new(objective);

    let mut best_position: Option<Vec<f64>> = None;
    let mut best_cost = f64::INFINITY;
    let mut trace = Vec::new();
    let mut sampled = 0;
    while sampled < budget {
        let in_block = block.min(budget - sampled);
        for _ in 0..in_block {
            let x = space.sample(&mut rng);
            let cost = counted.cost(&x);
            if cost.is_finite() && cost < best_cost {
                best_cost = cost;
                best_position = Some(x);
            }
        }
        sampled += in_block;
        trace.push(best_cost);
    }
    let best_position = best_position.ok_or(Error::NonFiniteObjective)?;

    Ok(RunResult {
        best_cost_trace: trace,
        alpha_position: best_position,
        alpha_cost: best_cost,
        seed,
        evaluations: counted.calls(),
        rejected_moves: 0,
        elapsed: start.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sphere(x: &[f64]) -> f64 {
        x.iter().map(|v| v * v).sum()
    }

    #[test]
    fn pso_constant_objective_flat_trace() {
        let space = SearchSpace::uniform(3, -1.0, 1.0).unwrap();
        let params = PsoParams {
            population_size: 8,
            iterations: 25,
            seed: 1,
            ..PsoParams::default()
        };
        let f = |_: &[f64]| 2.5;
        let result = pso_optimize(&f, &space, &params).unwrap();
        assert!(result.best_cost_trace.iter().all(|&c| c == 2.5));
    }

    #[test]
    fn pso_booth_converges() {
        let space = SearchSpace::uniform(2, -10.0, 10.0).unwrap();
        let booth = |x: &[f64]| crate::functions::evaluate("booth", x).unwrap();
        let mut finals: Vec<f64> = (0..10)
            .map(|s| {
                let params = PsoParams {
                    seed: s,
                    ..PsoParams::default()
                };
                pso_optimize(&booth, &space, &params).unwrap().alpha_cost
            })
            .collect();
        finals.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert!(finals[finals.len() / 2] <= 1e-3, "median {}", finals[5]);
    }

    #[test]
    fn pso_deterministic_and_monotone() {
        let space = SearchSpace::uniform(5, -10.0, 10.0).unwrap();
        let params = PsoParams {
            iterations: 100,
            seed: 7,
            ..PsoParams::default()
        };
        let f = |x: &[f64]| sphere(x);
        let a = pso_optimize(&f, &space, &params).unwrap();
        let b = pso_optimize(&f, &space, &params).unwrap();
        assert_eq!(a.best_cost_trace, b.best_cost_trace);
        assert!(a.trace_is_monotone());
    }

    #[test]
    fn de_constant_objective_flat_trace() {
        let space = SearchSpace::uniform(3, -1.0, 1.0).unwrap();
        let params = DeParams {
            population_size: 8,
            iterations: 25,
            seed: 1,
            ..DeParams::default()
        };
        let f = |_: &[f64]| -1.5;
        let result = de_optimize(&f, &space, &params).unwrap();
        assert!(result.best_cost_trace.iter().all(|&c| c == -1.5));
    }

    #[test]
    fn de_matyas_near_exact() {
        let space = SearchSpace::uniform(2, -10.0, 10.0).unwrap();
        let matyas = |x: &[f64]| crate::functions::evaluate("matyas", x).unwrap();
        let mut finals: Vec<f64> = (0..10)
            .map(|s| {
                let params = DeParams {
                    seed: s,
                    ..DeParams::default()
                };
                de_optimize(&matyas, &space, &params).unwrap().alpha_cost
            })
            .collect();
        finals.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert!(finals[finals.len() / 2] <= 1e-6, "median {}", finals[5]);
    }

    #[test]
    fn de_population_arity() {
        let space = SearchSpace::uniform(2, -1.0, 1.0).unwrap();
        let f = |x: &[f64]| sphere(x);
        let ok = DeParams {
            population_size: 4,
            iterations: 5,
            ..DeParams::default()
        };
        assert!(de_optimize(&f, &space, &ok).is_ok());
        let too_small = DeParams {
            population_size: 3,
            ..ok
        };
        assert!(matches!(
            de_optimize(&f, &space, &too_small),
            Err(Error::Config(_))
        ));
    }

    #[test]
    fn random_search_budget_is_exact() {
        let space = SearchSpace::uniform(3, -5.0, 5.0).unwrap();
        let f = |x: &[f64]| sphere(x);
        let result = random_search(&f, &space, 1234, 100, 9).unwrap();
        assert_eq!(result.evaluations, 1234);
        assert_eq!(result.best_cost_trace.len(), 13);
        assert!(result.trace_is_monotone());
    }
}
