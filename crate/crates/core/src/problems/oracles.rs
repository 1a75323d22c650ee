//! Independent reference computations used to validate heuristic results:
//! exhaustive schedule enumeration, the LPT list heuristic, multi-restart
//! center refinement for clustering and facility placement, and plain
//! random placement baselines. These deliberately avoid the optimizer code
//! paths they are used to check.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::problems::cluster::ClusterInstance;
use crate::problems::hla::HlaInstance;
use crate::problems::mst::MstInstance;
use crate::problems::pms::PmsInstance;

pub use crate::baselines::random_search;

/// Exact MST cost by Prim on the unperturbed weights.
pub fn prim_mst(instance: &MstInstance) -> f64 {
    instance.prim_cost()
}

/// Longest-processing-time list heuristic: tasks sorted by decreasing
/// minimum (setup + processing), each placed on the machine whose completion
/// time after the placement is smallest.
pub fn lpt_schedule(instance: &PmsInstance) -> u32 {
    let m = instance.n_machines();
    let n = instance.n_tasks();
    let mut tasks: Vec<usize> = (0..n).collect();
    let load_of = |t: usize, machine: usize| instance.setup[machine][t] + instance.processing[machine][t];
    tasks.sort_by_key(|&t| std::cmp::Reverse((0..m).map(|machine| load_of(t, machine)).min()));
    let mut completion = vec![0u32; m];
    for t in tasks {
        let best = (0..m)
            .min_by_key(|&machine| completion[machine] + load_of(t, machine))
            .expect("at least one machine");
        completion[best] += load_of(t, best);
    }
    completion.into_iter().max().unwrap_or(0)
}

/// Exhaustive enumeration of machine assignments (order does not change
/// C-max under sequence-independent setups). Rejects instances with more
/// than 3^8 = 6561 assignment combinations.
pub fn brute_force_pms(instance: &PmsInstance) -> Result<u32> {
    let m = instance.n_machines();
    let n = instance.n_tasks();
    let combos = (m as u64).checked_pow(n as u32).unwrap_or(u64::MAX);
    if combos > 6561 {
        return Err(Error::Config(format!(
            "brute force limited to 3^8 assignment combinations, instance has {combos}"
        )));
    }
    let mut best = u32::MAX;
    let mut assignment = vec![0usize; n];
    loop {
        let mut completion = vec![0u32; m];
        for (t, &machine) in assignment.iter().enumerate() {
            completion[machine] += instance.setup[machine][t] + instance.processing[machine][t];
        }
        best = best.min(completion.into_iter().max().unwrap_or(0));
        // odometer increment
        let mut t = 0;
        loop {
            if t == n {
                return Ok(best);
            }
            assignment[t] += 1;
            if assignment[t] < m {
                break;
            }
            assignment[t] = 0;
            t += 1;
        }
    }
}

/// Multi-restart clustering oracle: seeded center initialization from the
/// samples, Lloyd-style reassignment, then Weiszfeld refinement of each
/// center toward its cluster's geometric median (the minimizer of the
/// sum-of-distances objective). Returns the best cost over restarts.
pub fn kmeans_restarts(instance: &ClusterInstance, restarts: usize, seed: u64) -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best = f64::INFINITY;
    for _ in 0..restarts {
        let mut centers: Vec<Vec<f64>> = (0..instance.k)
            .map(|_| instance.samples[rng.random_range(0..instance.samples.len())].clone())
            .collect();
        for _ in 0..100 {
            let labels: Vec<usize> = instance
                .samples
                .iter()
                .map(|s| nearest(s, &centers))
                .collect();
            let mut moved = 0.0;
            for (c, center) in centers.iter_mut().enumerate() {
                let members: Vec<&Vec<f64>> = instance
                    .samples
                    .iter()
                    .zip(&labels)
                    .filter(|(_, &l)| l == c)
                    .map(|(s, _)| s)
                    .collect();
                if members.is_empty() {
                    continue;
                }
                let refined = geometric_median(&members, center);
                moved += center
                    .iter()
                    .zip(&refined)
                    .map(|(a, b)| (a - b).abs())
                    .sum::<f64>();
                *center = refined;
            }
            if moved < 1e-10 {
                break;
            }
        }
        best = best.min(instance.cost_of_centers(&centers));
    }
    best
}

fn nearest(sample: &[f64], centers: &[Vec<f64>]) -> usize {
    let mut best = 0;
    let mut best_d = f64::INFINITY;
    for (c, center) in centers.iter().enumerate() {
        let d: f64 = sample
            .iter()
            .zip(center)
            .map(|(a, b)| (a - b) * (a - b))
            .sum();
        if d < best_d {
            best_d = d;
            best = c;
        }
    }
    best
}

fn geometric_median(points: &[&Vec<f64>], start: &[f64]) -> Vec<f64> {
    let mut y = start.to_vec();
    for _ in 0..200 {
        let mut num = vec![0.0; y.len()];
        let mut den = 0.0;
        for p in points {
            let d = p
                .iter()
                .zip(&y)
                .map(|(a, b)| (a - b) * (a - b))
                .sum::<f64>()
                .sqrt()
                .max(1e-12);
            for (j, &v) in p.iter().enumerate() {
                num[j] += v / d;
            }
            den += 1.0 / d;
        }
        let next: Vec<f64> = num.into_iter().map(|v| v / den).collect();
        let shift: f64 = next.iter().zip(&y).map(|(a, b)| (a - b).abs()).sum();
        y = next;
        if shift < 1e-12 {
            break;
        }
    }
    y
}

/// Warm-start facility oracle: demand-weighted clustering of the clients
/// into p groups (multi-restart), returning the HLA cost of the refined
/// facility positions.
pub fn hla_warm_start(instance: &HlaInstance, restarts: usize, seed: u64) -> f64 {
    let samples: Vec<Vec<f64>> = instance.clients.iter().map(|c| c.to_vec()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best = f64::INFINITY;
    for _ in 0..restarts {
        let mut centers: Vec<Vec<f64>> = (0..instance.n_facilities)
            .map(|_| samples[rng.random_range(0..samples.len())].clone())
            .collect();
        for _ in 0..100 {
            let labels: Vec<usize> = samples.iter().map(|s| nearest(s, &centers)).collect();
            let mut moved = 0.0;
            for (c, center) in centers.iter_mut().enumerate() {
                let members: Vec<(&Vec<f64>, f64)> = samples
                    .iter()
                    .zip(&instance.demands)
                    .zip(&labels)
                    .filter(|(_, &l)| l == c)
                    .map(|((s, &d), _)| (s, d))
                    .collect();
                if members.is_empty() {
                    continue;
                }
                let refined = weighted_geometric_median(&members, center);
                moved += center
                    .iter()
                    .zip(&refined)
                    .map(|(a, b)| (a - b).abs())
                    .sum::<f64>();
                *center = refined;
            }
            if moved < 1e-10 {
                break;
            }
        }
        let facilities: Vec<[f64; 2]> = centers.iter().map(|c| [c[0], c[1]]).collect();
        best = best.min(instance.cost_of(&facilities));
    }
    best
}

fn weighted_geometric_median(points: &[(&Vec<f64>, f64)], start: &[f64]) -> Vec<f64> {
    let mut y = start.to_vec();
    for _ in 0..200 {
        let mut num = vec![0.0; y.len()];
        let mut den = 0.0;
        for (p, w) in points {
            let d = p
                .iter()
                .zip(&y)
                .map(|(a, b)| (a - b) * (a - b))
                .sum::<f64>()
                .sqrt()
                .max(1e-12);
            for (j, &v) in p.iter().enumerate() {
                num[j] += w * v / d;
            }
            den += w / d;
        }
        let next: Vec<f64> = num.into_iter().map(|v| v / den).collect();
        let shift: f64 = next.iter().zip(&y).map(|(a, b)| (a - b).abs()).sum();
        y = next;
        if shift < 1e-12 {
            break;
        }
    }
    y
}

/// Best HLA cost over `count` uniform random placements of the facilities.
pub fn hla_best_of_random(instance: &HlaInstance, count: usize, seed: u64) -> f64 {
    let space = instance.space();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let x = space.sample(&mut rng);
            instance.cost_of(&instance.decode(&x))
        })
        .fold(f64::INFINITY, f64::min)
}
