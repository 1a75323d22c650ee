//! Victoria Amazonica Optimization: a population of "plants" compete for
//! surface area. Each plant carries an expansion score mapped from its cost,
//! a per-generation competition draw, and two drawback factors that attenuate
//! its movement. Weaker plants move toward stronger ones; a damped Gaussian
//! mutation keeps the population exploring; the best-ever plant (alpha) is
//! preserved by elitism.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};

use crate::error::{Error, Result};
use crate::objective::{CostFunction, CountingCost, RunResult};
use crate::space::SearchSpace;

pub const EXPANSION_RANGE: (f64, f64) = (10.0, 100.0);
pub const LAMBDA_RANGE: (f64, f64) = (10.0, 30.0);
pub const DRAWBACK_RANGE: (f64, f64) = (0.1, 0.3);

/// One candidate solution with its life-cycle attributes.
#[derive(Debug, Clone)]
pub struct Plant {
    pub position: Vec<f64>,
    /// Expansion strength, in [10, 100]; 100 for the current best plant.
    pub expansion: f64,
    /// Competition draw, resampled from [10, 30] each generation.
    pub intra_competition: f64,
    /// Drawback factors in [0.1, 0.3]; larger values slow the plant down.
    pub drawback_omega: f64,
    pub drawback_psi: f64,
    pub cost: f64,
}

#[derive(Debug, Clone)]
pub struct VaoParams {
    pub population_size: usize,
    pub iterations: usize,
    /// Per-dimension mutation probability at iteration zero.
    pub mutation_rate: f64,
    /// Multiplicative decay of the mutation rate per iteration.
    pub mutation_damping: f64,
    /// Mutation noise std-dev as a fraction of each dimension's range.
    pub mutation_sigma_frac: f64,
    pub attraction_base: f64,
    pub expansion_range: (f64, f64),
    pub lambda_range: (f64, f64),
    pub drawback_range: (f64, f64),
    pub seed: u64,
}

impl Default for VaoParams {
    fn default() -> Self {
        Self {
            population_size: 20,
            iterations: 500,
            mutation_rate: 0.2,
            mutation_damping: 0.99,
            mutation_sigma_frac: 0.1,
            attraction_base: 1.0,
            expansion_range: EXPANSION_RANGE,
            lambda_range: LAMBDA_RANGE,
            drawback_range: DRAWBACK_RANGE,
            seed: 0,
        }
    }
}

impl VaoParams {
    pub fn validate(&self) -> Result<()> {
        if self.population_size == 0 {
            return Err(Error::Config("population_size must be at least 1".into()));
        }
        if !(0.0..=1.0).contains(&self.mutation_rate) {
            return Err(Error::Config(format!(
                "mutation_rate must lie in [0, 1], got {}",
                self.mutation_rate
            )));
        }
        if !(self.mutation_damping > 0.0 && self.mutation_damping <= 1.0) {
            return Err(Error::Config(format!(
                "mutation_damping must lie in (0, 1], got {}",
                self.mutation_damping
            )));
        }
        for (label, (lo, hi)) in [
            ("expansion_range", self.expansion_range),
            ("lambda_range", self.lambda_range),
            ("drawback_range", self.drawback_range),
        ] {
            if !(lo < hi) {
                return Err(Error::Config(format!("{label} is empty: [{lo}, {hi}]")));
            }
        }
        Ok(())
    }
}

/// Best-ever solution, updated on every accepted evaluation.
#[derive(Debug, Clone)]
pub struct AlphaTracker {
    pub position: Vec<f64>,
    pub cost: f64,
}

impl AlphaTracker {
    fn observe(&mut self, position: &[f64], cost: f64) {
        if cost < self.cost {
            self.position.clear();
            self.position.extend_from_slice(position);
            self.cost = cost;
        }
    }
}

pub fn init_population<R: Rng>(
    space: &SearchSpace,
    params: &VaoParams,
    objective: &dyn CostFunction,
    rng: &mut R,
) -> Vec<Plant> {
    (0..params.population_size)
        .map(|_| {
            let position = space.sample(rng);
            let cost = objective.cost(&position);
            Plant {
                cost,
                position,
                expansion: rng.random_range(params.expansion_range.0..=params.expansion_range.1),
                intra_competition: rng
                    .random_range(params.lambda_range.0..=params.lambda_range.1),
                drawback_omega: rng
                    .random_range(params.drawback_range.0..=params.drawback_range.1),
                drawback_psi: rng.random_range(params.drawback_range.0..=params.drawback_range.1),
            }
        })
        .collect()
}

/// Min-max map of cost onto [10, 100]: the best plant gets 100, the worst 10.
/// A population with equal costs sits at the midpoint 55.
pub fn update_expansion(plants: &mut [Plant]) {
    let (lo, hi) = EXPANSION_RANGE;
    let best = plants.iter().map(|p| p.cost).fold(f64::INFINITY, f64::min);
    let worst = plants
        .iter()
        .map(|p| p.cost)
        .fold(f64::NEG_INFINITY, f64::max);
    let spread = worst - best;
    for plant in plants {
        plant.expansion = if spread > 0.0 && spread.is_finite() {
            // clamp: the product/quotient can round a hair past the endpoints
            (lo + (hi - lo) * (worst - plant.cost) / spread).clamp(lo, hi)
        } else {
            0.5 * (lo + hi)
        };
    }
}

/// Each dimension independently receives Gaussian noise with probability
/// `mu_t`; the result is clamped to the bounds.
pub fn hybrid_mutation<R: Rng>(
    position: &mut [f64],
    space: &SearchSpace,
    mu_t: f64,
    sigma_frac: f64,
    rng: &mut R,
) {
    if mu_t <= 0.0 {
        return;
    }
    for (d, v) in position.iter_mut().enumerate() {
        if rng.random::<f64>() < mu_t {
            let sigma = sigma_frac * space.range(d);
            let noise = Normal::new(0.0, sigma).expect("sigma is finite").sample(rng);
            *v = (*v + noise).clamp(space.lower()[d], space.upper()[d]);
        }
    }
}

/// Mutation probability at iteration `t`.
pub fn mutation_rate_at(params: &VaoParams, iteration: usize) -> f64 {
    params.mutation_rate * params.mutation_damping.powi(iteration as i32)
}

/// One generation of pairwise competition. For every ordered pair (i, j),
/// plant i moves toward plant j when j out-expands or out-competes it; the
/// step is scaled by j's normalized expansion and attenuated by i's
/// drawbacks. Every plant additionally takes one standalone mutation per
/// generation, so a lone plant still explores. Moves that evaluate to a
/// non-finite cost are rejected. Returns the number of rejected moves.
pub fn intra_competition_step<R: Rng>(
    plants: &mut [Plant],
    objective: &dyn CostFunction,
    space: &SearchSpace,
    params: &VaoParams,
    iteration: usize,
    alpha: &mut AlphaTracker,
    rng: &mut R,
) -> u64 {
    let mu_t = mutation_rate_at(params, iteration);
    let mut rejected = 0;
    // λ is redrawn once per generation to keep the pairwise ordering stochastic.
    for plant in plants.iter_mut() {
        plant.intra_competition =
            rng.random_range(params.lambda_range.0..=params.lambda_range.1);
    }
    let n = plants.len();
    let mut candidate = vec![0.0; space.dimension()];
    for i in 0..n {
        // plants arrive sorted by cost ascending; visiting targets from worst
        // to best ends every move cascade pointed at the strongest plant
        for j in (0..n).rev() {
            if i == j {
                continue;
            }
            let stronger = plants[j].expansion > plants[i].expansion
                || plants[j].intra_competition > plants[i].intra_competition;
            if !stronger {
                continue;
            }
            let u: f64 = rng.random();
            let step = params.attraction_base
                * (plants[j].expansion / EXPANSION_RANGE.1)
                * (1.0 - plants[i].drawback_omega)
                * (1.0 - plants[i].drawback_psi)
                * u;
            for d in 0..space.dimension() {
                candidate[d] =
                    plants[i].position[d] + step * (plants[j].position[d] - plants[i].position[d]);
            }
            hybrid_mutation(&mut candidate, space, mu_t, params.mutation_sigma_frac, rng);
            space.clamp(&mut candidate);
            let cost = objective.cost(&candidate);
            if cost.is_finite() {
                plants[i].position.copy_from_slice(&candidate);
                plants[i].cost = cost;
                alpha.observe(&candidate, cost);
            } else {
                rejected += 1;
            }
        }
        // one mutation pass per plant per generation; this is also the only
        // operator acting on a population of one
        candidate.copy_from_slice(&plants[i].position);
        hybrid_mutation(&mut candidate, space, mu_t, params.mutation_sigma_frac, rng);
        space.clamp(&mut candidate);
        let cost = objective.cost(&candidate);
        if cost.is_finite() {
            plants[i].position.copy_from_slice(&candidate);
            plants[i].cost = cost;
            alpha.observe(&candidate, cost);
        } else {
            rejected += 1;
        }
    }
    rejected
}

/// Stable sort by cost ascending; ties keep their relative (original) order.
fn sort_plants(plants: &mut [Plant]) {
    plants.sort_by(|a, b| a.cost.partial_cmp(&b.cost).unwrap_or(std::cmp::Ordering::Equal));
}

pub fn vao_optimize(
    objective: &dyn CostFunction,
    space: &SearchSpace,
    params: &VaoParams,
) -> Result<RunResult> {
    params.validate()?;
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let counted = CountingCost::new(objective);
    let mut plants = init_population(space, params, &counted, &mut rng);

    let mut alpha = AlphaTracker {
        position: plants[0].position.clone(),
        cost: f64::INFINITY,
    };
    for plant in &plants {
        if plant.cost.is_finite() {
            alpha.observe(&plant.position, plant.cost);
        }
    }
    if !alpha.cost.is_finite() {
        return Err(Error::NonFiniteObjective);
    }

    let mut rejected = 0;
    let mut trace = Vec::with_capacity(params.iterations);
    for t in 0..params.iterations {
        rejected +=
            intra_competition_step(&mut plants, &counted, space, params, t, &mut alpha, &mut rng);
        update_expansion(&mut plants);
        sort_plants(&mut plants);
        // elitism: if every plant drifted off the best-ever point, reinject it
        if plants[0].cost > alpha.cost {
            let worst = plants.last_mut().expect("population is nonempty");
            worst.position.copy_from_slice(&alpha.position);
            worst.cost = alpha.cost;
            update_expansion(&mut plants);
            sort_plants(&mut plants);
        }
        trace.push(alpha.cost);
    }

    Ok(RunResult {
        best_cost_trace: trace,
        alpha_position: alpha.position,
        alpha_cost: alpha.cost,
        seed: params.seed,
        evaluations: counted.calls(),
        rejected_moves: rejected,
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
    fn init_population_ranges_and_determinism() {
        let space = SearchSpace::uniform(2, -10.0, 10.0).unwrap();
        let params = VaoParams {
            population_size: 20,
            seed: 42,
            ..VaoParams::default()
        };
        let f = |x: &[f64]| sphere(x);
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        let plants = init_population(&space, &params, &f, &mut rng);
        assert_eq!(plants.len(), 20);
        for p in &plants {
            assert!(space.contains(&p.position));
            assert!((10.0..=100.0).contains(&p.expansion));
            assert!((10.0..=30.0).contains(&p.intra_competition));
            assert!((0.1..=0.3).contains(&p.drawback_omega));
            assert!((0.1..=0.3).contains(&p.drawback_psi));
            assert_eq!(p.cost, sphere(&p.position));
        }
        let mut rng2 = ChaCha8Rng::seed_from_u64(42);
        let again = init_population(&space, &params, &f, &mut rng2);
        for (a, b) in plants.iter().zip(&again) {
            assert_eq!(a.position, b.position);
            assert_eq!(a.expansion, b.expansion);
        }
    }

    #[test]
    fn init_population_degenerate_narrow_bounds() {
        let eps = 1e-9;
        let space = SearchSpace::uniform(1, 5.0, 5.0 + eps).unwrap();
        let params = VaoParams {
            population_size: 3,
            ..VaoParams::default()
        };
        let f = |x: &[f64]| x[0];
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let plants = init_population(&space, &params, &f, &mut rng);
        assert_eq!(plants.len(), 3);
        for p in &plants {
            assert!(p.position[0] >= 5.0 && p.position[0] <= 5.0 + eps);
        }
    }

    #[test]
    fn init_population_mean_matches_uniform_sampling() {
        // mean of D*n uniform[-10,10] components stays within 3 sigma of 0
        let (d, n) = (15, 20);
        let space = SearchSpace::uniform(d, -10.0, 10.0).unwrap();
        let params = VaoParams {
            population_size: n,
            seed: 7,
            ..VaoParams::default()
        };
        let f = |x: &[f64]| sphere(x);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let plants = init_population(&space, &params, &f, &mut rng);
        let total: f64 = plants
            .iter()
            .flat_map(|p| p.position.iter())
            .sum();
        let mean = total / (d * n) as f64;
        let sigma = (20.0 / 12f64.sqrt()) / ((d * n) as f64).sqrt();
        assert!(mean.abs() < 3.0 * sigma, "mean {mean} vs 3eps {}", 3.0 * sigma);
    }

    #[test]
    fn update_expansion_linear_map() {
        let mk = |costs: &[f64]| -> Vec<Plant> {
            costs
                .iter()
                .map(|&c| Plant {
                    position: vec![0.0],
                    expansion: 0.0,
                    intra_competition: 10.0,
                    drawback_omega: 0.1,
                    drawback_psi: 0.1,
                    cost: c,
                })
                .collect()
        };
        let mut plants = mk(&[1.0, 2.0, 3.0]);
        update_expansion(&mut plants);
        assert_eq!(
            plants.iter().map(|p| p.expansion).collect::<Vec<_>>(),
            vec![100.0, 55.0, 10.0]
        );

        let mut equal = mk(&[5.0, 5.0, 5.0]);
        update_expansion(&mut equal);
        assert!(equal.iter().all(|p| p.expansion == 55.0));

        // hand-evaluated: 10 + 90*(9-1)/9 = 90
        let mut mixed = mk(&[0.0, 1.0, 9.0]);
        update_expansion(&mut mixed);
        assert_eq!(mixed[0].expansion, 100.0);
        assert!((mixed[1].expansion - 90.0).abs() < 1e-12);
        assert_eq!(mixed[2].expansion, 10.0);
    }

    #[test]
    fn hybrid_mutation_zero_rate_is_identity() {
        let space = SearchSpace::uniform(5, -10.0, 10.0).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let original = space.sample(&mut rng);
        let mut x = original.clone();
        hybrid_mutation(&mut x, &space, 0.0, 0.1, &mut rng);
        assert_eq!(x, original);
    }

    #[test]
    fn hybrid_mutation_noise_scale() {
        // mu=1, sigma_frac=0.1 on range 20 => per-dimension noise sd 2.0;
        // start at the center so clamping is negligible
        let d = 10_000;
        let space = SearchSpace::uniform(d, -10.0, 10.0).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut x = vec![0.0; d];
        hybrid_mutation(&mut x, &space, 1.0, 0.1, &mut rng);
        let var = x.iter().map(|v| v * v).sum::<f64>() / (d as f64 - 1.0);
        let sd = var.sqrt();
        assert!(
            (sd - 2.0).abs() / 2.0 < 0.05,
            "sample sd {sd} not within 5% of 2.0"
        );
    }

    #[test]
    fn hybrid_mutation_respects_bounds() {
        let space = SearchSpace::uniform(50, -1.0, 1.0).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let mut x = vec![1.0; 50];
        hybrid_mutation(&mut x, &space, 1.0, 0.5, &mut rng);
        assert!(x.iter().all(|v| (-1.0..=1.0).contains(v)));
    }

    #[test]
    fn single_plant_population_still_moves() {
        let space = SearchSpace::uniform(2, -10.0, 10.0).unwrap();
        let params = VaoParams {
            population_size: 1,
            iterations: 50,
            seed: 9,
            ..VaoParams::default()
        };
        let f = |x: &[f64]| sphere(x);
        let result = vao_optimize(&f, &space, &params).unwrap();
        assert!(result.trace_is_monotone());
        // mutation alone must have changed something over 50 iterations
        assert!(result.alpha_cost < result.best_cost_trace[0] || result.best_cost_trace[0] == 0.0);
    }

    #[test]
    fn pairwise_step_moves_weak_toward_strong() {
        // phi = (100, 10), equal lambda, omega = psi = 0.1, u forced to 1:
        // step = 1 * (100/100) * 0.9 * 0.9 = 0.81 for the weak plant moving
        // toward the strong one; with u ~ U[0,1] the realized fraction is
        // step * u <= 0.81. The strong plant never moves toward the weak one.
        let step_full: f64 = 1.0 * (100.0 / 100.0) * (1.0 - 0.1) * (1.0 - 0.1);
        assert!((step_full - 0.81).abs() < 1e-12);
        // same formula against a weak target with phi_j = 10
        let step_weak_target: f64 = 1.0 * (10.0 / 100.0) * 0.9 * 0.9;
        assert!((step_weak_target - 0.081).abs() < 1e-12);

        // dynamic check: strong plant (cost 0) stays unless mutation moves it
        let space = SearchSpace::uniform(1, -10.0, 10.0).unwrap();
        let params = VaoParams {
            population_size: 2,
            iterations: 1,
            mutation_rate: 0.0,
            lambda_range: (10.0, 10.0 + 1e-12),
            seed: 1,
            ..VaoParams::default()
        };
        let f = |x: &[f64]| x[0].abs();
        let result = vao_optimize(&f, &space, &params).unwrap();
        assert!(result.trace_is_monotone());
    }

    #[test]
    fn dejong_run_improves_and_is_monotone() {
        let space = SearchSpace::uniform(2, -10.0, 10.0).unwrap();
        let params = VaoParams {
            population_size: 20,
            iterations: 100,
            seed: 42,
            ..VaoParams::default()
        };
        let f = |x: &[f64]| sphere(x);
        let result = vao_optimize(&f, &space, &params).unwrap();
        assert!(result.trace_is_monotone());
        assert!(result.alpha_cost < result.best_cost_trace[0]);
        assert_eq!(result.alpha_cost, *result.best_cost_trace.last().unwrap());
    }

    #[test]
    fn constant_objective_yields_flat_trace() {
        let space = SearchSpace::uniform(3, -1.0, 1.0).unwrap();
        let params = VaoParams {
            population_size: 5,
            iterations: 20,
            seed: 2,
            ..VaoParams::default()
        };
        let f = |_: &[f64]| 4.25;
        let result = vao_optimize(&f, &space, &params).unwrap();
        assert_eq!(result.alpha_cost, 4.25);
        assert!(result.best_cost_trace.iter().all(|&c| c == 4.25));
    }

    #[test]
    fn zero_iterations_returns_initial_best() {
        let space = SearchSpace::uniform(2, -1.0, 1.0).unwrap();
        let params = VaoParams {
            population_size: 5,
            iterations: 0,
            seed: 3,
            ..VaoParams::default()
        };
        let f = |x: &[f64]| sphere(x);
        let result = vao_optimize(&f, &space, &params).unwrap();
        assert!(result.best_cost_trace.is_empty());
        assert!(result.alpha_cost.is_finite());
    }

    #[test]
    fn all_non_finite_objective_fails_explicitly() {
        let space = SearchSpace::uniform(2, -1.0, 1.0).unwrap();
        let params = VaoParams {
            population_size: 4,
            iterations: 5,
            seed: 1,
            ..VaoParams::default()
        };
        let f = |_: &[f64]| f64::NAN;
        assert!(matches!(
            vao_optimize(&f, &space, &params),
            Err(Error::NonFiniteObjective)
        ));
    }

    #[test]
    fn non_finite_regions_are_rejected_not_fatal() {
        // objective blows up on half the space; moves into it are rejected
        let space = SearchSpace::uniform(1, -10.0, 10.0).unwrap();
        let params = VaoParams {
            population_size: 6,
            iterations: 30,
            seed: 8,
            ..VaoParams::default()
        };
        let f = |x: &[f64]| if x[0] < 0.0 { f64::NAN } else { x[0] };
        let result = vao_optimize(&f, &space, &params).unwrap();
        assert!(result.alpha_cost.is_finite());
        assert!(result.rejected_moves > 0);
    }

    #[test]
    fn determinism_bit_identical() {
        let space = SearchSpace::uniform(4, -5.0, 5.0).unwrap();
        let params = VaoParams {
            population_size: 10,
            iterations: 40,
            seed: 123,
            ..VaoParams::default()
        };
        let f = |x: &[f64]| sphere(x);
        let a = vao_optimize(&f, &space, &params).unwrap();
        let b = vao_optimize(&f, &space, &params).unwrap();
        assert_eq!(a.best_cost_trace, b.best_cost_trace);
        assert_eq!(a.alpha_position, b.alpha_position);
        assert_eq!(a.evaluations, b.evaluations);
    }
}
