use rand::Rng;

use crate::error::Result;
use crate::fitness::FitnessVector;
use crate::graph::{ComponentCounter, LabeledGraph};

use super::archive::ParetoArchive;
use super::mutation::standard_mutation;
use super::record::{RunOptions, RunRecord, Termination, Tracker};

#[derive(Clone, Debug, PartialEq)]
pub struct GsemoOutcome {
    pub record: RunRecord,
    pub archive: ParetoArchive,
}

/// GSEMO on `(components, labels)`.
///
/// Each iteration picks an archive member uniformly, mutates it and offers
/// the offspring to the archive (see [`ParetoArchive::offer`]). The reported
/// best solution is the lexicographically smallest archive member, which is
/// the feasible member with fewest labels once one exists.
pub fn gsemo(g: &LabeledGraph, opts: &RunOptions) -> Result<GsemoOutcome> {
    gsemo_with_observer(g, opts, |_, _| {})
}

/// [`gsemo`], calling `observe(iteration, archive)` after every iteration.
pub fn gsemo_with_observer(
    g: &LabeledGraph,
    opts: &RunOptions,
    mut observe: impl FnMut(u64, &ParetoArchive),
) -> Result<GsemoOutcome> {
    let mut rng = opts.seed.rng();
    let x = opts.init.materialize(g, &mut rng)?;
    let mut counter = ComponentCounter::new(g.node_count());
    let fx = FitnessVector::new(counter.count_unchecked(g, x.iter()), x.len());
    let mut archive = ParetoArchive::new(x, fx);
    let mut best = fx;
    let mut tracker = Tracker::new(opts.milestones.clone());
    tracker.observe(0, best);

    let mut t = 0;
    while t < opts.budget && !opts.target_reached(best) {
        t += 1;
        let parent = rng.gen_range(0..archive.len());
        let y = standard_mutation(&archive.get(parent).solution, &mut rng);
        let fy = FitnessVector::new(counter.count_unchecked(g, y.iter()), y.len());
        if archive.offer(y, fy) {
            debug_assert_eq!(archive.check_invariants(g.label_count()), Ok(()));
            if fy.lex_cmp(&best).is_lt() {
                best = fy;
                tracker.observe(t, best);
            }
        }
        observe(t, &archive);
    }

    let entry = archive.best().clone();
    let record = RunRecord {
        algorithm: "gsemo".into(),
        seed: opts.seed,
        budget: opts.budget,
        iterations_used: t,
        best_scalar: entry.fitness.scalar(g.label_count()),
        best_fitness: entry.fitness,
        best_solution: entry.solution,
        events: tracker.into_events(),
        terminated_by: if opts.target_reached(best) {
            Termination::TargetHit
        } else {
            Termination::Budget
        },
    };
    Ok(GsemoOutcome { record, archive })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::evolutionary::ArchiveEntry;
    use crate::graph::build_graph;
    use crate::instances::{gen_g1, gen_g3};
    use crate::subset::LabelSubset;

    #[test]
    fn single_edge_archive_holds_both_pareto_points() {
        let g = build_graph(2, 1, &[(1, 2, 1)]).unwrap();
        let opts = RunOptions::new(10, 0).with_init(LabelSubset::empty(1));
        let out = gsemo(&g, &opts).unwrap();
        let mut entries = out.archive.entries().to_vec();
        entries.sort_by_key(|e| e.fitness.labels_used);
        assert_eq!(
            entries,
            vec![
                ArchiveEntry {
                    solution: LabelSubset::empty(1),
                    fitness: FitnessVector::new(2, 0)
                },
                ArchiveEntry {
                    solution: LabelSubset::full(1),
                    fitness: FitnessVector::new(1, 1)
                },
            ]
        );
        assert_eq!(out.record.best_cardinality(), Some(1));
    }

    #[test]
    fn invariants_hold_every_iteration_and_zeros_survive() {
        let g = gen_g3(2).unwrap().graph;
        let zeros = FitnessVector::new(g.node_count(), 0);
        let mut seen_zeros = false;
        gsemo_with_observer(&g, &RunOptions::new(5_000, 1), |_, a| {
            a.check_invariants(g.label_count()).unwrap();
            if a.contains_vector(zeros) {
                seen_zeros = true;
            } else {
                assert!(!seen_zeros, "all-zeros vector was evicted");
            }
        })
        .unwrap();
        assert!(seen_zeros);
    }

    #[test]
    fn deterministic_and_finds_g1_optimum() {
        let g = gen_g1(8).unwrap().graph;
        let opts = RunOptions::new(50_000, 4).with_target(2);
        let a = gsemo(&g, &opts).unwrap();
        let b = gsemo(&g, &opts).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.record.best_cardinality(), Some(2));
        assert_eq!(a.record.terminated_by, Termination::TargetHit);
    }
}
