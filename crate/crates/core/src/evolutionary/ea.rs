use std::cmp::Ordering;

use crate::error::Result;
use crate::fitness::FitnessVector;
use crate::graph::{ComponentCounter, LabeledGraph};

use super::mutation::mutate_into;
use super::record::{RunOptions, RunRecord, Termination, Tracker};

/// The (1+1) EA: mutate the single parent, keep the offspring iff its
/// fitness is strictly lower (or equal, with `accept_equal`).
///
/// Fitness is compared lexicographically on `(components, labels)`, which is
/// the order of `(c - 1) * k^2 + |X|` for every `k >= 2`. When the parent is
/// feasible an offspring with at least as many labels cannot win, so its
/// component count is not computed; the iteration is still counted.
pub fn one_plus_one_ea(g: &LabeledGraph, opts: &RunOptions) -> Result<RunRecord> {
    let mut rng = opts.seed.rng();
    let mut x = opts.init.materialize(g, &mut rng)?;
    let mut counter = ComponentCounter::new(g.node_count());
    let mut fx = FitnessVector::new(counter.count_unchecked(g, x.iter()), x.len());
    let mut tracker = Tracker::new(opts.milestones.clone());
    tracker.observe(0, fx);

    let mut y = x.clone();
    let mut t = 0;
    while t < opts.budget && !opts.target_reached(fx) {
        t += 1;
        mutate_into(&x, &mut y, &mut rng);
        let labels = y.len();
        if fx.is_feasible()
            && (labels > fx.labels_used || (labels == fx.labels_used && !opts.accept_equal))
        {
            continue;
        }
        let fy = FitnessVector::new(counter.count_unchecked(g, y.iter()), labels);
        match fy.lex_cmp(&fx) {
            Ordering::Less => {
                std::mem::swap(&mut x, &mut y);
                fx = fy;
                tracker.observe(t, fx);
            }
            Ordering::Equal if opts.accept_equal => std::mem::swap(&mut x, &mut y),
            _ => {}
        }
    }

    Ok(RunRecord {
        algorithm: "one-plus-one-ea".into(),
        seed: opts.seed,
        budget: opts.budget,
        iterations_used: t,
        best_scalar: fx.scalar(g.label_count()),
        best_fitness: fx,
        best_solution: x,
        events: tracker.into_events(),
        terminated_by: if opts.target_reached(fx) {
            Termination::TargetHit
        } else {
            Termination::Budget
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::evolutionary::{EventKind, Milestones};
    use crate::fitness::fitness_vector;
    use crate::graph::build_graph;
    use crate::instances::{gen_g1, gen_g_prime};
    use crate::subset::LabelSubset;

    #[test]
    fn single_edge_graph_connects_on_first_iteration() {
        let g = build_graph(2, 1, &[(1, 2, 1)]).unwrap();
        let opts = RunOptions::new(10, 0).with_init(LabelSubset::empty(1));
        let rec = one_plus_one_ea(&g, &opts).unwrap();
        assert_eq!(rec.best_scalar, 1);
        assert_eq!(rec.iterations_to_feasible(), Some(1));
        assert_eq!(rec.iterations_used, 10);
        assert_eq!(rec.terminated_by, Termination::Budget);
    }

    #[test]
    fn trajectory_is_monotone_and_feasibility_is_kept() {
        let bundle = gen_g1(8).unwrap();
        for seed in 0..20 {
            let opts = RunOptions::new(2_000, seed).with_milestones(Milestones {
                optimum: Some(2),
                ratio: None,
            });
            let rec = one_plus_one_ea(&bundle.graph, &opts).unwrap();
            let mut prev: Option<FitnessVector> = None;
            let mut feasible = false;
            for e in &rec.events {
                if let Some(p) = prev {
                    assert!(e.fitness.lex_cmp(&p).is_le());
                }
                feasible |= e.fitness.is_feasible();
                if feasible {
                    assert!(e.fitness.is_feasible());
                }
                prev = Some(e.fitness);
            }
            assert!(rec
                .events
                .windows(2)
                .all(|w| w[0].iteration <= w[1].iteration));
            assert_eq!(
                fitness_vector(&bundle.graph, &rec.best_solution).unwrap(),
                rec.best_fitness
            );
        }
    }

    #[test]
    fn equal_seeds_give_equal_records() {
        let g = gen_g1(10).unwrap().graph;
        let opts = RunOptions::new(5_000, 99);
        assert_eq!(
            one_plus_one_ea(&g, &opts).unwrap(),
            one_plus_one_ea(&g, &opts).unwrap()
        );
    }

    #[test]
    fn target_stops_the_run() {
        let g = gen_g1(8).unwrap().graph;
        let rec = one_plus_one_ea(&g, &RunOptions::new(1_000_000, 3).with_target(2)).unwrap();
        assert_eq!(rec.terminated_by, Termination::TargetHit);
        assert!(rec.iterations_used < 1_000_000);
        assert_eq!(rec.best_cardinality(), Some(2));
    }

    #[test]
    fn local_optimum_of_g_prime_holds_for_short_runs() {
        let b = gen_g_prime(4, 12).unwrap();
        let local = b.known_local_opts[0].solution.clone();
        let rec = one_plus_one_ea(&b.graph, &RunOptions::new(20_000, 5).with_init(local)).unwrap();
        assert_eq!(rec.improvements(), 0);
        assert!(rec
            .events
            .iter()
            .all(|e| !matches!(e.kind, EventKind::Improved)));
    }

    #[test]
    fn plateau_variant_accepts_equal_moves() {
        let g = gen_g1(6).unwrap().graph;
        let mut opts = RunOptions::new(3_000, 11).with_init(LabelSubset::full(6));
        opts.accept_equal = true;
        let rec = one_plus_one_ea(&g, &opts).unwrap();
        assert!(rec.best_fitness.is_feasible());
        assert!(rec.best_fitness.labels_used <= 6);
    }
}
