//! Economic load dispatch: quadratic fuel costs, Kron quadratic transmission
//! loss, and a squared penalty on the power-balance error PT - PL - PD.

use crate::error::{Error, Result};
use crate::objective::CostFunction;
use crate::space::SearchSpace;

pub const DEFAULT_PENALTY_WEIGHT: f64 = 1e4;

#[derive(Debug, Clone)]
pub struct EdInstance {
    /// Quadratic fuel cost coefficients per unit: cost = a p^2 + b p + c.
    pub cost_a: Vec<f64>,
    pub cost_b: Vec<f64>,
    pub cost_c: Vec<f64>,
    pub p_min: Vec<f64>,
    pub p_max: Vec<f64>,
    /// Symmetric loss matrix; PL = p^T B p.
    pub loss_matrix: Vec<Vec<f64>>,
    /// Power demand in megawatts.
    pub demand: f64,
    pub penalty_weight: f64,
}

/// Power balance report for one dispatch vector.
#[derive(Debug, Clone, Copy)]
pub struct EdEvaluation {
    pub cost: f64,
    pub fuel_cost: f64,
    pub total_power: f64,
    pub loss: f64,
    pub error: f64,
}

impl EdInstance {
    pub fn n_units(&self) -> usize {
        self.cost_a.len()
    }

    /// The bundled 6-unit system: unit limits Min = [100 50 80 50 50 50],
    /// Max = [500 200 300 150 200 120], PD = 1100 MW, with a classic
    /// 6-generator coefficient set and Kron loss matrix.
    pub fn six_unit_1100() -> Self {
        Self::parse(include_str!("../../data/ed6.txt")).expect("bundled instance parses")
    }

    /// Line-oriented format: one `a b c pmin pmax` line per unit, then the
    /// n x n loss matrix rows, then `PD <value>`.
    pub fn parse(text: &str) -> Result<Self> {
        let lines: Vec<&str> = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .collect();
        let pd_line = lines
            .last()
            .ok_or_else(|| Error::Parse("empty ED instance".into()))?;
        let demand: f64 = pd_line
            .strip_prefix("PD")
            .ok_or_else(|| Error::Parse("ED instance must end with `PD <value>`".into()))?
            .trim()
            .parse()
            .map_err(|e| Error::Parse(format!("bad PD value: {e}")))?;
        let body = &lines[..lines.len() - 1];
        if body.len() % 2 != 0 {
            return Err(Error::Parse(format!(
                "expected n unit lines plus n loss rows, got {} lines",
                body.len()
            )));
        }
        let n = body.len() / 2;
        let mut inst = EdInstance {
            cost_a: Vec::with_capacity(n),
            cost_b: Vec::with_capacity(n),
            cost_c: Vec::with_capacity(n),
            p_min: Vec::with_capacity(n),
            p_max: Vec::with_capacity(n),
            loss_matrix: Vec::with_capacity(n),
            demand,
            penalty_weight: DEFAULT_PENALTY_WEIGHT,
        };
        for line in &body[..n] {
            let vals = parse_floats(line)?;
            if vals.len() != 5 {
                return Err(Error::Parse(format!(
                    "unit line needs `a b c pmin pmax`, got `{line}`"
                )));
            }
            inst.cost_a.push(vals[0]);
            inst.cost_b.push(vals[1]);
            inst.cost_c.push(vals[2]);
            inst.p_min.push(vals[3]);
            inst.p_max.push(vals[4]);
        }
        for line in &body[n..] {
            let row = parse_floats(line)?;
            if row.len() != n {
                return Err(Error::Parse(format!(
                    "loss matrix row needs {n} entries, got {}",
                    row.len()
                )));
            }
            inst.loss_matrix.push(row);
        }
        inst.validate()?;
        Ok(inst)
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.n_units();
        for i in 0..n {
            if !(self.p_min[i] < self.p_max[i]) {
                return Err(Error::Config(format!(
                    "unit {i}: p_min {} must be below p_max {}",
                    self.p_min[i], self.p_max[i]
                )));
            }
        }
        if self.p_max.iter().sum::<f64>() < self.demand {
            return Err(Error::Config("total capacity below demand".into()));
        }
        for i in 0..n {
            for j in 0..n {
                if (self.loss_matrix[i][j] - self.loss_matrix[j][i]).abs() > 1e-12 {
                    return Err(Error::Config("loss matrix must be symmetric".into()));
                }
            }
        }
        Ok(())
    }

    pub fn space(&self) -> SearchSpace {
        SearchSpace::new(self.p_min.clone(), self.p_max.clone()).expect("validated bounds")
    }

    pub fn evaluate(&self, p: &[f64]) -> Result<EdEvaluation> {
        let n = self.n_units();
        if p.len() != n {
            return Err(Error::Config(format!(
                "dispatch vector has {} entries, instance has {n} units",
                p.len()
            )));
        }
        let total_power: f64 = p.iter().sum();
        let mut loss = 0.0;
        for i in 0..n {
            for j in 0..n {
                loss += p[i] * self.loss_matrix[i][j] * p[j];
            }
        }
        let error = total_power - loss - self.demand;
        let fuel_cost: f64 = (0..n)
            .map(|i| self.cost_a[i] * p[i] * p[i] + self.cost_b[i] * p[i] + self.cost_c[i])
            .sum();
        Ok(EdEvaluation {
            cost: fuel_cost + self.penalty_weight * error * error,
            fuel_cost,
            total_power,
            loss,
            error,
        })
    }

    pub fn objective(&self) -> impl CostFunction + '_ {
        move |p: &[f64]| self.evaluate(p).map(|e| e.cost).unwrap_or(f64::NAN)
    }
}

fn parse_floats(line: &str) -> Result<Vec<f64>> {
    line.split_whitespace()
        .map(|t| {
            t.parse()
                .map_err(|e| Error::Parse(format!("bad number `{t}`: {e}")))
        })
        .collect()
}
