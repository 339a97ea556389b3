//! Exhaustive ground truth: the optimum label count and checks of the
//! 2-switch improvement and component-reduction properties.

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{ComponentCounter, LabeledGraph};
use crate::subset::LabelSubset;

pub const DEFAULT_K_LIMIT: usize = 24;

/// Largest `k` for which [`verify_corollary_1`] tabulates all `2^k` subsets.
pub const COROLLARY_1_K_LIMIT: usize = 14;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleResult {
    pub opt_value: usize,
    /// Lexicographically smallest optimal subset.
    pub witness: LabelSubset,
    pub subsets_examined: u64,
}

/// Enumerates subsets by increasing cardinality, each size in lexicographic
/// order, and returns the first feasible one.
pub fn brute_force_opt(g: &LabeledGraph, k_limit: Option<usize>) -> Result<OracleResult> {
    let k = g.label_count();
    let limit = k_limit.unwrap_or(DEFAULT_K_LIMIT);
    if k > limit {
        return Err(Error::TooManyLabels {
            label_count: k,
            limit,
        });
    }
    let mut counter = ComponentCounter::new(g.node_count());
    let mut examined = 0u64;
    for size in 0..=k {
        for combo in (0..k).combinations(size) {
            examined += 1;
            if counter.count_unchecked(g, combo.iter().copied()) == 1 {
                return Ok(OracleResult {
                    opt_value: size,
                    witness: LabelSubset::from_indices(k, combo),
                    subsets_examined: examined,
                });
            }
        }
    }
    unreachable!("the full label set of a valid graph is feasible")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Corollary1Report {
    pub opt_value: usize,
    pub max_label_frequency: usize,
    /// Feasible subsets above the `OPT * (b + 1) / 2` bound that were checked.
    pub checked: u64,
    /// A feasible subset above the bound with no feasible 2-switch neighbor
    /// having one or two labels fewer.
    pub counterexample: Option<LabelSubset>,
}

impl Corollary1Report {
    pub fn holds(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Checks that every feasible `x` with `|x| > OPT * (b + 1) / 2` has a
/// feasible 2-switch neighbor with `|x| - 1` or `|x| - 2` labels.
///
/// Requires `b >= 2` and `k <= 14`; feasibility of all `2^k` subsets is
/// tabulated first.
pub fn verify_corollary_1(g: &LabeledGraph) -> Result<Corollary1Report> {
    let k = g.label_count();
    if k > COROLLARY_1_K_LIMIT {
        return Err(Error::TooManyLabels {
            label_count: k,
            limit: COROLLARY_1_K_LIMIT,
        });
    }
    let b = g.max_label_frequency();
    if b < 2 {
        return Err(Error::PreconditionViolated(format!(
            "maximum label frequency is {b}, need at least 2"
        )));
    }
    let opt = brute_force_opt(g, Some(COROLLARY_1_K_LIMIT))?.opt_value;

    let mut counter = ComponentCounter::new(g.node_count());
    let feasible: Vec<bool> = (0u32..1 << k)
        .map(|mask| counter.count_unchecked(g, (0..k).filter(|i| mask >> i & 1 == 1)) == 1)
        .collect();

    let mut checked = 0;
    for mask in 0u32..1 << k {
        let size = mask.count_ones() as usize;
        if !feasible[mask as usize] || 2 * size <= opt * (b + 1) {
            continue;
        }
        checked += 1;
        if !has_smaller_2switch_neighbor(mask, k, &feasible) {
            return Ok(Corollary1Report {
                opt_value: opt,
                max_label_frequency: b,
                checked,
                counterexample: Some(LabelSubset::from_mask(k, mask as u64)),
            });
        }
    }
    Ok(Corollary1Report {
        opt_value: opt,
        max_label_frequency: b,
        checked,
        counterexample: None,
    })
}

fn has_smaller_2switch_neighbor(mask: u32, k: usize, feasible: &[bool]) -> bool {
    let inside: Vec<u32> = (0..k as u32).filter(|i| mask >> i & 1 == 1).collect();
    let outside: Vec<u32> = (0..k as u32).filter(|i| mask >> i & 1 == 0).collect();
    let ok = |m: u32| feasible[m as usize];
    if inside.iter().any(|&i| ok(mask & !(1 << i))) {
        return true;
    }
    inside.iter().tuple_combinations().any(|(&i, &j)| {
        let base = mask & !(1 << i) & !(1 << j);
        ok(base) || outside.iter().any(|&a| ok(base | 1 << a))
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HalvingReport {
    pub components_before: usize,
    pub opt_value: usize,
    /// `floor(r * (1 - 1 / (2 * OPT)))`.
    pub bound: usize,
    /// The unused label leaving the fewest components (lowest index on ties).
    pub witness: Option<usize>,
    pub components_after: usize,
}

impl HalvingReport {
    pub fn holds(&self) -> bool {
        self.witness.is_some() && self.components_after <= self.bound
    }
}

/// For `r = c(H(x)) > 2`, checks that some unused label brings the component
/// count down to at most `floor(r * (1 - 1 / (2 * OPT)))`.
pub fn verify_component_halving(
    g: &LabeledGraph,
    x: &LabelSubset,
    k_limit: Option<usize>,
) -> Result<HalvingReport> {
    g.check_width(x)?;
    let mut counter = ComponentCounter::new(g.node_count());
    let r = counter.count_unchecked(g, x.iter());
    if r <= 2 {
        return Err(Error::PreconditionViolated(format!(
            "subset leaves {r} components, need more than 2"
        )));
    }
    let opt = brute_force_opt(g, k_limit)?.opt_value;
    let bound = r * (2 * opt - 1) / (2 * opt);
    let best = x
        .complement_iter()
        .map(|l| {
            (
                counter.count_unchecked(g, x.iter().chain(std::iter::once(l))),
                l,
            )
        })
        .min();
    let (components_after, witness) = match best {
        Some((c, l)) => (c, Some(l)),
        None => (r, None),
    };
    Ok(HalvingReport {
        components_before: r,
        opt_value: opt,
        bound,
        witness,
        components_after,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_graph, component_count};
    use crate::instances::{gen_g1, gen_g3, gen_random_mlst_b};

    /// Independent minimum by include/exclude recursion over labels.
    fn recursive_opt(g: &LabeledGraph) -> usize {
        fn go(g: &LabeledGraph, i: usize, x: &mut LabelSubset, best: &mut usize) {
            if x.len() >= *best {
                return;
            }
            if component_count(g, x).unwrap() == 1 {
                *best = x.len();
                return;
            }
            if i == g.label_count() {
                return;
            }
            x.insert(i);
            go(g, i + 1, x, best);
            x.remove(i);
            go(g, i + 1, x, best);
        }
        let mut best = usize::MAX;
        go(g, 0, &mut LabelSubset::empty(g.label_count()), &mut best);
        best
    }

    #[test]
    fn known_optima() {
        let g1 = gen_g1(5).unwrap().graph;
        assert_eq!(brute_force_opt(&g1, None).unwrap().opt_value, 2);
        assert_eq!(
            brute_force_opt(&gen_g3(3).unwrap().graph, None)
                .unwrap()
                .opt_value,
            6
        );
        let single = build_graph(2, 1, &[(1, 2, 1)]).unwrap();
        let r = brute_force_opt(&single, None).unwrap();
        assert_eq!((r.opt_value, r.witness), (1, LabelSubset::full(1)));
        assert!(matches!(
            brute_force_opt(&g1, Some(4)),
            Err(Error::TooManyLabels {
                label_count: 5,
                limit: 4
            })
        ));
    }

    #[test]
    fn witness_is_minimal_and_lexicographically_first() {
        for seed in 0..40 {
            let g = gen_random_mlst_b(9, 16, 10, 2, seed).unwrap().graph;
            let r = brute_force_opt(&g, None).unwrap();
            assert_eq!(r.opt_value, recursive_opt(&g));
            assert_eq!(r.witness.len(), r.opt_value);
            assert_eq!(component_count(&g, &r.witness).unwrap(), 1);
            let first = (0..g.label_count())
                .combinations(r.opt_value)
                .find(|c| {
                    component_count(&g, &LabelSubset::from_indices(10, c.clone())).unwrap() == 1
                })
                .unwrap();
            assert_eq!(r.witness, LabelSubset::from_indices(10, first));
        }
    }

    #[test]
    fn improvement_structure_on_small_instances() {
        assert!(verify_corollary_1(&gen_g3(2).unwrap().graph)
            .unwrap()
            .holds());
        let g = gen_random_mlst_b(8, 10, 10, 2, 1).unwrap().graph;
        if g.max_label_frequency() >= 2 {
            assert!(verify_corollary_1(&g).unwrap().holds());
        }
        let single = build_graph(2, 1, &[(1, 2, 1)]).unwrap();
        assert!(matches!(
            verify_corollary_1(&single),
            Err(Error::PreconditionViolated(_))
        ));
        assert!(matches!(
            verify_corollary_1(&gen_g1(15).unwrap().graph),
            Err(Error::TooManyLabels { .. })
        ));
    }

    #[test]
    fn improvement_structure_vacuous_case() {
        // Path 1-2-3 with one label of frequency 2: OPT = 1, bound 1.5, the
        // only feasible subset has one label.
        let g = build_graph(3, 1, &[(1, 2, 1), (2, 3, 1)]).unwrap();
        let rep = verify_corollary_1(&g).unwrap();
        assert!(rep.holds());
        assert_eq!(rep.checked, 0);
    }

    #[test]
    fn halving_examples() {
        let g3 = gen_g3(2).unwrap().graph;
        let rep = verify_component_halving(&g3, &LabelSubset::empty(3), None).unwrap();
        assert!(rep.holds());
        assert_eq!(
            (rep.components_before, rep.bound, rep.components_after),
            (5, 3, 3)
        );
        let g1 = gen_g1(5).unwrap().graph;
        let rep = verify_component_halving(&g1, &LabelSubset::empty(5), None).unwrap();
        assert_eq!(
            (rep.witness, rep.components_after, rep.bound),
            (Some(4), 2, 3)
        );
        let x = LabelSubset::from_label_ids(5, &[5]).unwrap();
        assert!(matches!(
            verify_component_halving(&g1, &x, None),
            Err(Error::PreconditionViolated(_))
        ));
    }
}
