use std::collections::BTreeMap;

use serde::Serialize;

use super::plan::TargetSpec;
use super::run::TrialRow;

/// Nearest-rank order statistics.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Quantiles {
    pub min: u64,
    pub median: u64,
    pub p95: u64,
    pub max: u64,
}

impl Quantiles {
    /// `None` for an empty sample.
    pub fn nearest_rank(values: &[u64]) -> Option<Self> {
        if values.is_empty() {
            return None;
        }
        let mut v = values.to_vec();
        v.sort_unstable();
        let rank = |p: f64| v[((p * v.len() as f64).ceil() as usize).clamp(1, v.len()) - 1];
        Some(Quantiles {
            min: v[0],
            median: rank(0.5),
            p95: rank(0.95),
            max: v[v.len() - 1],
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TargetStats {
    pub target: String,
    /// Label-count threshold the target stands for.
    pub max_labels: Option<usize>,
    pub successes: u64,
    /// Over successful trials only.
    pub iterations: Option<Quantiles>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TrialStats {
    pub trials: u64,
    pub targets: Vec<TargetStats>,
    /// Trials per final feasible cardinality.
    pub best_cardinality: BTreeMap<usize, u64>,
    pub infeasible_trials: u64,
    pub wall_clock_seconds: f64,
}

impl TrialStats {
    pub(crate) fn compute(
        rows: &[TrialRow],
        targets: &[(TargetSpec, Option<usize>, String)],
        wall_clock_seconds: f64,
    ) -> Self {
        let targets = targets
            .iter()
            .map(|(spec, max_labels, label)| {
                let hits: Vec<u64> = rows
                    .iter()
                    .filter_map(|r| match spec {
                        TargetSpec::Feasible => r.iterations_to_feasible,
                        TargetSpec::Optimum => r.iterations_to_opt,
                        TargetSpec::Ratio(_) | TargetSpec::RatioLnN(_) => r.iterations_to_ratio,
                    })
                    .collect();
                TargetStats {
                    target: label.clone(),
                    max_labels: *max_labels,
                    successes: hits.len() as u64,
                    iterations: Quantiles::nearest_rank(&hits),
                }
            })
            .collect();
        let mut best_cardinality = BTreeMap::new();
        let mut infeasible_trials = 0;
        for r in rows {
            match r.best_cardinality {
                Some(c) => *best_cardinality.entry(c).or_insert(0) += 1,
                None => infeasible_trials += 1,
            }
        }
        TrialStats {
            trials: rows.len() as u64,
            targets,
            best_cardinality,
            infeasible_trials,
            wall_clock_seconds,
        }
    }

    pub fn successes(&self, target: &str) -> Option<u64> {
        self.targets
            .iter()
            .find(|t| t.target == target)
            .map(|t| t.successes)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nearest_rank_quantiles() {
        let q = Quantiles::nearest_rank(&[5, 1, 4, 2, 3]).unwrap();
        assert_eq!((q.min, q.median, q.p95, q.max), (1, 3, 5, 5));
        let v: Vec<u64> = (1..=100).collect();
        let q = Quantiles::nearest_rank(&v).unwrap();
        assert_eq!((q.median, q.p95), (50, 95));
        assert_eq!(Quantiles::nearest_rank(&[]), None);
        assert_eq!(Quantiles::nearest_rank(&[7]).unwrap().p95, 7);
    }
}
