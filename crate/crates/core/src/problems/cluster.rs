//! Clustering as continuous optimization: a candidate vector holds k cluster
//! centers, and the cost is the sum over samples of the Euclidean distance
//! to the nearest center (plain distances, not squared).

use crate::error::{Error, Result};
use crate::objective::CostFunction;
use crate::space::SearchSpace;

#[derive(Debug, Clone)]
pub struct ClusterInstance {
    pub samples: Vec<Vec<f64>>,
    pub k: usize,
}

impl ClusterInstance {
    pub fn new(samples: Vec<Vec<f64>>, k: usize) -> Result<Self> {
        if samples.is_empty() {
            return Err(Error::Config("no samples".into()));
        }
        if k == 0 || k > samples.len() {
            return Err(Error::Config(format!(
                "k = {k} must lie in [1, {}]",
                samples.len()
            )));
        }
        let d = samples[0].len();
        if d == 0 || samples.iter().any(|s| s.len() != d) {
            return Err(Error::Config("samples must share a positive dimension".into()));
        }
        Ok(Self { samples, k })
    }

    /// The bundled Iris data: 150 samples, 4 features, k = 3.
    pub fn iris() -> Self {
        Self::parse_csv(include_str!("../../data/iris.csv"), 3).expect("bundled data parses")
    }

    /// Plain CSV of features, one sample per line.
    pub fn parse_csv(text: &str, k: usize) -> Result<Self> {
        let samples = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(|line| {
                line.split(',')
                    .map(|t| {
                        t.trim()
                            .parse()
                            .map_err(|e| Error::Parse(format!("bad feature `{t}`: {e}")))
                    })
                    .collect::<Result<Vec<f64>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(samples, k)
    }

    pub fn dimension(&self) -> usize {
        self.samples[0].len()
    }

    /// Per-feature data bounding box, repeated k times.
    pub fn space(&self) -> SearchSpace {
        let d = self.dimension();
        let mut lo = vec![f64::INFINITY; d];
        let mut hi = vec![f64::NEG_INFINITY; d];
        for s in &self.samples {
            for (j, &v) in s.iter().enumerate() {
                lo[j] = lo[j].min(v);
                hi[j] = hi[j].max(v);
            }
        }
        // widen degenerate features a hair so bounds stay valid
        for j in 0..d {
            if lo[j] == hi[j] {
                hi[j] = lo[j] + 1e-9;
            }
        }
        let mut lower = Vec::with_capacity(self.k * d);
        let mut upper = Vec::with_capacity(self.k * d);
        for _ in 0..self.k {
            lower.extend_from_slice(&lo);
            upper.extend_from_slice(&hi);
        }
        SearchSpace::new(lower, upper).expect("nondegenerate data box")
    }

    pub fn cost_of_centers(&self, centers: &[Vec<f64>]) -> f64 {
        self.samples
            .iter()
            .map(|s| {
                centers
                    .iter()
                    .map(|c| {
                        s.iter()
                            .zip(c)
                            .map(|(a, b)| (a - b) * (a - b))
                            .sum::<f64>()
                            .sqrt()
                    })
                    .fold(f64::INFINITY, f64::min)
            })
            .sum()
    }

    pub fn decode(&self, x: &[f64]) -> Result<Vec<Vec<f64>>> {
        let d = self.dimension();
        if x.len() != self.k * d {
            return Err(Error::Config(format!(
                "expected {} center coordinates, got {}",
                self.k * d,
                x.len()
            )));
        }
        Ok(x.chunks_exact(d).map(<[f64]>::to_vec).collect())
    }

    pub fn objective(&self) -> impl CostFunction + '_ {
        move |x: &[f64]| match self.decode(x) {
            Ok(centers) => self.cost_of_centers(&centers),
            Err(_) => f64::NAN,
        }
    }
}
