//! Hub location-allocation: place p facilities in the plane so that the
//! demand-weighted distance from every client to its nearest facility is
//! minimal. Candidate vectors are the p facility coordinates, flattened.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::objective::CostFunction;
use crate::space::SearchSpace;

#[derive(Debug, Clone)]
pub struct HlaInstance {
    pub clients: Vec<[f64; 2]>,
    pub demands: Vec<f64>,
    pub n_facilities: usize,
}

impl HlaInstance {
    pub fn new(clients: Vec<[f64; 2]>, demands: Vec<f64>, n_facilities: usize) -> Result<Self> {
        if n_facilities == 0 {
            return Err(Error::Config("need at least one facility".into()));
        }
        if n_facilities >= clients.len() {
            return Err(Error::Config(format!(
                "facility count {} must be below client count {}",
                n_facilities,
                clients.len()
            )));
        }
        if demands.len() != clients.len() || demands.iter().any(|&d| d <= 0.0) {
            return Err(Error::Config("every client needs a positive demand".into()));
        }
        Ok(Self {
            clients,
            demands,
            n_facilities,
        })
    }

    /// `n` clients uniform in [0, 100]^2 with demands uniform in [1, 100].
    pub fn seeded(n: usize, n_facilities: usize, seed: u64) -> Result<Self> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let clients: Vec<[f64; 2]> = (0..n)
            .map(|_| [rng.random_range(0.0..=100.0), rng.random_range(0.0..=100.0)])
            .collect();
        let demands = (0..n).map(|_| rng.random_range(1.0..=100.0)).collect();
        Self::new(clients, demands, n_facilities)
    }

    /// Format: one `x y demand` triple per line; the facility count is given
    /// by the caller.
    pub fn parse(text: &str, n_facilities: usize) -> Result<Self> {
        let mut clients = Vec::new();
        let mut demands = Vec::new();
        for line in text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
        {
            let vals: Vec<f64> = line
                .split_whitespace()
                .map(|t| {
                    t.parse()
                        .map_err(|e| Error::Parse(format!("bad value `{t}`: {e}")))
                })
                .collect::<Result<_>>()?;
            match vals.as_slice() {
                [x, y, d] => {
                    clients.push([*x, *y]);
                    demands.push(*d);
                }
                [x, y] => {
                    clients.push([*x, *y]);
                    demands.push(1.0);
                }
                _ => return Err(Error::Parse(format!("expected `x y [demand]`, got `{line}`"))),
            }
        }
        Self::new(clients, demands, n_facilities)
    }

    /// Bounding box of the clients, repeated per facility coordinate.
    pub fn space(&self) -> SearchSpace {
        let (mut lo_x, mut hi_x) = (f64::INFINITY, f64::NEG_INFINITY);
        let (mut lo_y, mut hi_y) = (f64::INFINITY, f64::NEG_INFINITY);
        for c in &self.clients {
            lo_x = lo_x.min(c[0]);
            hi_x = hi_x.max(c[0]);
            lo_y = lo_y.min(c[1]);
            hi_y = hi_y.max(c[1]);
        }
        let mut lower = Vec::with_capacity(2 * self.n_facilities);
        let mut upper = Vec::with_capacity(2 * self.n_facilities);
        for _ in 0..self.n_facilities {
            lower.extend([lo_x, lo_y]);
            upper.extend([hi_x, hi_y]);
        }
        SearchSpace::new(lower, upper).expect("nondegenerate client box")
    }

    /// Sum over clients of demand times distance to the nearest facility.
    pub fn cost_of(&self, facilities: &[[f64; 2]]) -> f64 {
        self.clients
            .iter()
            .zip(&self.demands)
            .map(|(c, d)| {
                let nearest = facilities
                    .iter()
                    .map(|f| ((c[0] - f[0]).powi(2) + (c[1] - f[1]).powi(2)).sqrt())
                    .fold(f64::INFINITY, f64::min);
                d * nearest
            })
            .sum()
    }

    pub fn decode(&self, x: &[f64]) -> Vec<[f64; 2]> {
        x.chunks_exact(2).map(|c| [c[0], c[1]]).collect()
    }

    pub fn objective(&self) -> impl CostFunction + '_ {
        move |x: &[f64]| self.cost_of(&self.decode(x))
    }
}
