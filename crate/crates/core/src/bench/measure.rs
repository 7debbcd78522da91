//! Relative solution-quality and running-time measures.
//!
//! Records are compared within their (instance, problem) group. The
//! solution ratio is `size / best`, where `best` is the externally known
//! optimum when supplied and otherwise the largest size in the group. The
//! time ratio is `fastest / elapsed`. Both lie in (0, 1] and the best
//! algorithm of a group scores 1.

use std::collections::HashMap;

use super::{BenchError, BenchRecord};
use crate::graph::ProblemMode;

fn group_key(r: &BenchRecord) -> (&str, ProblemMode) {
    (r.instance.as_str(), r.problem)
}

/// `solution_size / Q_max` per record, aligned with `records`.
pub fn relative_solution_measure(
    records: &[BenchRecord],
    best_known: Option<&HashMap<String, usize>>,
) -> Result<Vec<f64>, BenchError> {
    let mut best: HashMap<(&str, ProblemMode), usize> = HashMap::new();
    for r in records {
        let e = best.entry(group_key(r)).or_insert(0);
        *e = (*e).max(r.solution_size);
    }
    if let Some(known) = best_known {
        for ((instance, _), found) in best.iter_mut() {
            if let Some(&k) = known.get(*instance) {
                if k < *found {
                    return Err(BenchError::BestKnownTooSmall {
                        instance: instance.to_string(),
                        best_known: k,
                        found: *found,
                    });
                }
                *found = k;
            }
        }
    }
    Ok(records
        .iter()
        .map(|r| match best[&group_key(r)] {
            0 => 1.0,
            q => r.solution_size as f64 / q as f64,
        })
        .collect())
}

/// `T_min / elapsed` per record, aligned with `records`.
pub fn relative_time_measure(records: &[BenchRecord]) -> Vec<f64> {
    let mut fastest: HashMap<(&str, ProblemMode), u128> = HashMap::new();
    for r in records {
        let t = r.elapsed.as_nanos().max(1);
        fastest
            .entry(group_key(r))
            .and_modify(|e| *e = (*e).min(t))
            .or_insert(t);
    }
    records
        .iter()
        .map(|r| fastest[&group_key(r)] as f64 / r.elapsed.as_nanos().max(1) as f64)
        .collect()
}

/// Mean ratios of one algorithm; `problem == None` pools both modes.
#[derive(Clone, Debug, PartialEq)]
pub struct SummaryRow {
    pub algorithm: String,
    pub problem: Option<ProblemMode>,
    pub instances: usize,
    pub mean_solution: f64,
    pub mean_time: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct MeasureReport {
    /// Per-record ratios, aligned with the records they were computed from.
    pub solution: Vec<f64>,
    pub time: Vec<f64>,
    /// Per-algorithm means, per problem mode, plus pooled rows when more
    /// than one mode is present. Algorithms appear in first-seen order.
    pub summary: Vec<SummaryRow>,
}

impl MeasureReport {
    pub fn new(records: &[BenchRecord], best_known: Option<&HashMap<String, usize>>) -> Result<Self, BenchError> {
        let solution = relative_solution_measure(records, best_known)?;
        let time = relative_time_measure(records);

        let mut algorithms: Vec<&str> = Vec::new();
        let mut problems: Vec<ProblemMode> = Vec::new();
        for r in records {
            if !algorithms.contains(&r.algorithm.as_str()) {
                algorithms.push(&r.algorithm);
            }
            if !problems.contains(&r.problem) {
                problems.push(r.problem);
            }
        }
        problems.sort();
        let mut scopes: Vec<Option<ProblemMode>> = problems.iter().copied().map(Some).collect();
        if problems.len() > 1 {
            scopes.push(None);
        }

        let mut summary = Vec::new();
        for algo in &algorithms {
            for &scope in &scopes {
                let picked: Vec<usize> = records
                    .iter()
                    .enumerate()
                    .filter(|(_, r)| r.algorithm == *algo && scope.is_none_or(|p| r.problem == p))
                    .map(|(i, _)| i)
                    .collect();
                if picked.is_empty() {
                    continue;
                }
                let mean = |v: &[f64]| picked.iter().map(|&i| v[i]).sum::<f64>() / picked.len() as f64;
                summary.push(SummaryRow {
                    algorithm: algo.to_string(),
                    problem: scope,
                    instances: picked.len(),
                    mean_solution: mean(&solution),
                    mean_time: mean(&time),
                });
            }
        }
        Ok(Self {
            solution,
            time,
            summary,
        })
    }

    /// Summary row for `algorithm` in `problem` (`None` = pooled, or the
    /// only mode present).
    pub fn mean_for(&self, algorithm: &str, problem: Option<ProblemMode>) -> Option<&SummaryRow> {
        self.summary
            .iter()
            .find(|s| s.algorithm == algorithm && s.problem == problem)
            .or_else(|| {
                problem
                    .is_none()
                    .then(|| self.summary.iter().find(|s| s.algorithm == algorithm))
                    .flatten()
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::time::Duration;

    fn rec(instance: &str, algorithm: &str, size: usize, ms: u64) -> BenchRecord {
        BenchRecord {
            instance: instance.into(),
            n: 10,
            m: 20,
            problem: ProblemMode::MaxClique,
            algorithm: algorithm.into(),
            solution_size: size,
            elapsed: Duration::from_millis(ms),
        }
    }

    #[test]
    fn solution_ratios() {
        let recs = [rec("u", "a", 4, 1), rec("u", "b", 5, 2)];
        assert_eq!(relative_solution_measure(&recs, None).unwrap(), vec![0.8, 1.0]);

        let known = HashMap::from([("u".to_string(), 10)]);
        assert_eq!(relative_solution_measure(&recs, Some(&known)).unwrap(), vec![0.4, 0.5]);

        let too_small = HashMap::from([("u".to_string(), 3)]);
        assert!(matches!(
            relative_solution_measure(&recs, Some(&too_small)),
            Err(BenchError::BestKnownTooSmall {
                best_known: 3,
                found: 5,
                ..
            })
        ));

        assert_eq!(
            relative_solution_measure(&[rec("v", "a", 7, 3)], None).unwrap(),
            vec![1.0]
        );
    }

    #[test]
    fn time_ratios() {
        let recs = [rec("u", "a", 4, 1), rec("u", "b", 5, 2)];
        assert_eq!(relative_time_measure(&recs), vec![1.0, 0.5]);
        assert_eq!(relative_time_measure(&[rec("u", "a", 1, 3)]), vec![1.0]);
        assert_eq!(
            relative_time_measure(&[rec("u", "a", 1, 3), rec("u", "b", 1, 3)]),
            vec![1.0, 1.0]
        );
    }

    #[test]
    fn groups_are_per_instance_and_problem() {
        let mut mis = rec("u", "a", 2, 5);
        mis.problem = ProblemMode::MaxIndependentSet;
        let recs = [rec("u", "a", 4, 1), rec("w", "a", 2, 9), mis];
        assert_eq!(relative_solution_measure(&recs, None).unwrap(), vec![1.0, 1.0, 1.0]);
        assert_eq!(relative_time_measure(&recs), vec![1.0, 1.0, 1.0]);
    }

    #[test]
    fn summary_means() {
        let recs = [
            rec("u", "a", 4, 1),
            rec("u", "b", 5, 2),
            rec("w", "a", 5, 1),
            rec("w", "b", 5, 1),
        ];
        let report = MeasureReport::new(&recs, None).unwrap();
        assert_eq!(report.summary.len(), 2);
        let a = report.mean_for("a", None).unwrap();
        assert!((a.mean_solution - 0.9).abs() < 1e-12);
        assert_eq!(a.mean_time, 1.0);
        let b = report.mean_for("b", Some(ProblemMode::MaxClique)).unwrap();
        assert_eq!(b.mean_solution, 1.0);
        assert!((b.mean_time - 0.75).abs() < 1e-12);
    }

    #[test]
    fn pooled_rows_appear_with_two_modes() {
        let mut mis = rec("u", "a", 2, 5);
        mis.problem = ProblemMode::MaxIndependentSet;
        let report = MeasureReport::new(&[rec("u", "a", 4, 1), mis], None).unwrap();
        let scopes: Vec<_> = report.summary.iter().map(|s| s.problem).collect();
        assert_eq!(
            scopes,
            vec![Some(ProblemMode::MaxClique), Some(ProblemMode::MaxIndependentSet), None]
        );
        assert_eq!(report.mean_for("a", None).unwrap().instances, 2);
    }
}
