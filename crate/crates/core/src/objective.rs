use std::cell::Cell;
use std::time::Duration;

use serde::Serialize;

/// Real-vector-to-scalar cost to be minimized.
pub trait CostFunction {
    fn cost(&self, x: &[f64]) -> f64;
}

impl<F: Fn(&[f64]) -> f64> CostFunction for F {
    fn cost(&self, x: &[f64]) -> f64 {
        self(x)
    }
}

/// Wraps an objective and counts every evaluation, so optimizers can report
/// an auditable evaluation budget.
pub struct CountingCost<'a> {
    inner: &'a dyn CostFunction,
    calls: Cell<u64>,
}

impl<'a> CountingCost<'a> {
    pub fn new(inner: &'a dyn CostFunction) -> Self {
        Self {
            inner,
            calls: Cell::new(0),
        }
    }

    pub fn calls(&self) -> u64 {
        self.calls.get()
    }
}

impl CostFunction for CountingCost<'_> {
    fn cost(&self, x: &[f64]) -> f64 {
        self.calls.set(self.calls.get() + 1);
        self.inner.cost(x)
    }
}

/// Outcome of one seeded optimization run.
#[derive(Debug, Clone, Serialize)]
pub struct RunResult {
    /// Best-so-far cost after each iteration; non-increasing by elitism.
    pub best_cost_trace: Vec<f64>,
    pub alpha_position: Vec<f64>,
    pub alpha_cost: f64,
    pub seed: u64,
    /// Exact number of objective evaluations performed.
    pub evaluations: u64,
    /// Moves discarded because the objective came back non-finite.
    pub rejected_moves: u64,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl RunResult {
    pub fn trace_is_monotone(&self) -> bool {
        self.best_cost_trace.windows(2).all(|w| w[1] <= w[0])
    }
}
