//! Minimum spanning tree via multiplicative edge-weight perturbation: a
//! candidate vector scales each Euclidean edge weight by (1 + kappa * x_e),
//! Prim runs on the perturbed weights, and the cost is the TRUE Euclidean
//! length of the resulting tree. The zero vector reproduces the exact MST.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::objective::CostFunction;
use crate::space::SearchSpace;

pub const PERTURBATION_KAPPA: f64 = 1.0;

#[derive(Debug, Clone)]
pub struct MstInstance {
    pub points: Vec<[f64; 2]>,
    /// Symmetric Euclidean distance matrix with zero diagonal.
    weights: Vec<Vec<f64>>,
}

impl MstInstance {
    pub fn new(points: Vec<[f64; 2]>) -> Result<Self> {
        if points.len() < 2 {
            return Err(Error::Config("an MST instance needs at least 2 points".into()));
        }
        let n = points.len();
        let mut weights = vec![vec![0.0; n]; n];
        for i in 0..n {
            for j in (i + 1)..n {
                let d = ((points[i][0] - points[j][0]).powi(2)
                    + (points[i][1] - points[j][1]).powi(2))
                .sqrt();
                if d == 0.0 {
                    return Err(Error::Config(format!("points {i} and {j} coincide")));
                }
                weights[i][j] = d;
                weights[j][i] = d;
            }
        }
        Ok(Self { points, weights })
    }

    /// `n` distinct points uniform in [0, 100]^2.
    pub fn seeded(n: usize, seed: u64) -> Result<Self> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let points = (0..n)
            .map(|_| [rng.random_range(0.0..=100.0), rng.random_range(0.0..=100.0)])
            .collect();
        Self::new(points)
    }

    /// Format: one `x y` pair per line.
    pub fn parse(text: &str) -> Result<Self> {
        let points = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(|line| {
                let vals: Vec<f64> = line
                    .split_whitespace()
                    .map(|t| {
                        t.parse()
                            .map_err(|e| Error::Parse(format!("bad coordinate `{t}`: {e}")))
                    })
                    .collect::<Result<_>>()?;
                if vals.len() != 2 {
                    return Err(Error::Parse(format!("expected `x y`, got `{line}`")));
                }
                Ok([vals[0], vals[1]])
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(points)
    }

    pub fn n_points(&self) -> usize {
        self.points.len()
    }

    pub fn n_edges(&self) -> usize {
        self.n_points() * (self.n_points() - 1) / 2
    }

    pub fn weight(&self, i: usize, j: usize) -> f64 {
        self.weights[i][j]
    }

    /// Unit box, one component per undirected edge (upper-triangle order).
    pub fn space(&self) -> SearchSpace {
        SearchSpace::uniform(self.n_edges(), 0.0, 1.0).expect("valid box")
    }

    fn edge_index(&self, i: usize, j: usize) -> usize {
        // row-major upper triangle: edges (0,1), (0,2), ..., (n-2,n-1)
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        let n = self.n_points();
        i * n - i * (i + 1) / 2 + (j - i - 1)
    }

    /// Prim on the perturbed weights; returns (tree edges, true length).
    pub fn decode_and_cost(&self, x: &[f64]) -> (Vec<(usize, usize)>, f64) {
        let n = self.n_points();
        let perturbed = |i: usize, j: usize| {
            self.weights[i][j] * (1.0 + PERTURBATION_KAPPA * x[self.edge_index(i, j)])
        };
        let mut in_tree = vec![false; n];
        let mut best_dist = vec![f64::INFINITY; n];
        let mut best_from = vec![0usize; n];
        in_tree[0] = true;
        for j in 1..n {
            best_dist[j] = perturbed(0, j);
        }
        let mut edges = Vec::with_capacity(n - 1);
        let mut true_cost = 0.0;
        for _ in 1..n {
            let mut next = usize::MAX;
            for j in 0..n {
                if !in_tree[j] && (next == usize::MAX || best_dist[j] < best_dist[next]) {
                    next = j;
                }
            }
            in_tree[next] = true;
            edges.push((best_from[next], next));
            true_cost += self.weights[best_from[next]][next];
            for j in 0..n {
                if !in_tree[j] {
                    let d = perturbed(next, j);
                    if d < best_dist[j] {
                        best_dist[j] = d;
                        best_from[j] = next;
                    }
                }
            }
        }
        (edges, true_cost)
    }

    /// Exact MST cost (zero perturbation).
    pub fn prim_cost(&self) -> f64 {
        self.decode_and_cost(&vec![0.0; self.n_edges()]).1
    }

    pub fn objective(&self) -> impl CostFunction + '_ {
        move |x: &[f64]| self.decode_and_cost(x).1
    }
}

/// Union-find connectivity check used by the tree invariants.
pub fn is_spanning_tree(n: usize, edges: &[(usize, usize)]) -> bool {
    if edges.len() != n - 1 {
        return false;
    }
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, mut v: usize) -> usize {
        while parent[v] != v {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        v
    }
    for &(a, b) in edges {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra == rb {
            return false;
        }
        parent[ra] = rb;
    }
    true
}
