//! Parallel machine scheduling with sequence-independent setup times,
//! minimizing the maximum machine completion time (C-max). Candidate vectors
//! are random keys: the first half picks machines, the second half orders
//! the tasks within each machine.

use crate::error::{Error, Result};
use crate::objective::CostFunction;
use crate::space::SearchSpace;

#[derive(Debug, Clone)]
pub struct PmsInstance {
    /// processing[m][t], time units.
    pub processing: Vec<Vec<u32>>,
    /// setup[m][t], paid by every task including the first on its machine.
    pub setup: Vec<Vec<u32>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Schedule {
    /// machine_of[t] = assigned machine.
    pub machine_of: Vec<usize>,
    /// Per machine, tasks in execution order.
    pub order: Vec<Vec<usize>>,
}

impl PmsInstance {
    pub fn n_machines(&self) -> usize {
        self.processing.len()
    }

    pub fn n_tasks(&self) -> usize {
        self.processing.first().map_or(0, Vec::len)
    }

    /// The bundled 3-machine, 10-task instance: processing times from the
    /// published table, setup times drawn once from [3, 9] and frozen.
    pub fn bundled_instance() -> Self {
        Self::parse(include_str!("../../data/pms10.txt")).expect("bundled instance parses")
    }

    /// Format: `machines M`, `tasks T`, `processing` followed by M rows,
    /// `setup` followed by M rows.
    pub fn parse(text: &str) -> Result<Self> {
        fn expect<'a>(
            lines: &mut impl Iterator<Item = &'a str>,
            prefix: &str,
        ) -> Result<String> {
            let line = lines
                .next()
                .ok_or_else(|| Error::Parse(format!("missing `{prefix}` line")))?;
            line.strip_prefix(prefix)
                .map(|rest| rest.trim().to_string())
                .ok_or_else(|| Error::Parse(format!("expected `{prefix}`, got `{line}`")))
        }

        fn read_matrix<'a>(
            lines: &mut impl Iterator<Item = &'a str>,
            machines: usize,
            tasks: usize,
        ) -> Result<Vec<Vec<u32>>> {
            (0..machines)
                .map(|_| {
                    let line = lines
                        .next()
                        .ok_or_else(|| Error::Parse("truncated matrix".into()))?;
                    let row: Vec<u32> = line
                        .split_whitespace()
                        .map(|t| {
                            t.parse()
                                .map_err(|e| Error::Parse(format!("bad time `{t}`: {e}")))
                        })
                        .collect::<Result<_>>()?;
                    if row.len() != tasks {
                        return Err(Error::Parse(format!(
                            "row has {} entries, expected {tasks}",
                            row.len()
                        )));
                    }
                    Ok(row)
                })
                .collect()
        }

        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let machines: usize = expect(&mut lines, "machines")?
            .parse()
            .map_err(|e| Error::Parse(format!("bad machine count: {e}")))?;
        let tasks: usize = expect(&mut lines, "tasks")?
            .parse()
            .map_err(|e| Error::Parse(format!("bad task count: {e}")))?;
        expect(&mut lines, "processing")?;
        let processing = read_matrix(&mut lines, machines, tasks)?;
        expect(&mut lines, "setup")?;
        let setup = read_matrix(&mut lines, machines, tasks)?;
        Ok(Self { processing, setup })
    }

    /// Restriction to the first `machines` x `tasks` block, for brute-force
    /// comparisons on small cases.
    pub fn sub_instance(&self, machines: usize, tasks: usize) -> Self {
        Self {
            processing: self.processing[..machines]
                .iter()
                .map(|r| r[..tasks].to_vec())
                .collect(),
            setup: self.setup[..machines]
                .iter()
                .map(|r| r[..tasks].to_vec())
                .collect(),
        }
    }

    /// Unit box, two keys per task.
    pub fn space(&self) -> SearchSpace {
        SearchSpace::uniform(2 * self.n_tasks(), 0.0, 1.0).expect("valid box")
    }

    /// Total decode: first half maps to machines by floor(x * M) (clamped),
    /// second half are sort keys for within-machine order.
    pub fn decode(&self, x: &[f64]) -> Schedule {
        let n = self.n_tasks();
        let m = self.n_machines();
        debug_assert_eq!(x.len(), 2 * n);
        let machine_of: Vec<usize> = x[..n]
            .iter()
            .map(|&v| ((v * m as f64) as usize).min(m - 1))
            .collect();
        let mut order: Vec<Vec<usize>> = vec![Vec::new(); m];
        for (t, &machine) in machine_of.iter().enumerate() {
            order[machine].push(t);
        }
        for tasks in &mut order {
            tasks.sort_by(|&a, &b| {
                x[n + a]
                    .partial_cmp(&x[n + b])
                    .unwrap_or(std::cmp::Ordering::Equal)
            });
        }
        Schedule { machine_of, order }
    }

    /// Per machine: completion = sum of (setup + processing) over its ordered
    /// tasks; C-max is the maximum over machines.
    pub fn cmax(&self, schedule: &Schedule) -> u32 {
        (0..self.n_machines())
            .map(|m| {
                schedule.order[m]
                    .iter()
                    .map(|&t| self.setup[m][t] + self.processing[m][t])
                    .sum()
            })
            .max()
            .unwrap_or(0)
    }

    pub fn objective(&self) -> impl CostFunction + '_ {
        move |x: &[f64]| self.cmax(&self.decode(x)) as f64
    }
}
