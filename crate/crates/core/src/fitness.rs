//! Scalar penalty fitness, the bi-objective vector and Pareto domination.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::{ComponentCounter, LabeledGraph};
use crate::subset::LabelSubset;

/// Scalar fitness values. Wide enough that `(n - 1) * k^2` never overflows.
pub type Fitness = u128;

/// `(c(H(X)), |X|)`, both minimized.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FitnessVector {
    pub components: usize,
    pub labels_used: usize,
}

impl FitnessVector {
    pub fn new(components: usize, labels_used: usize) -> Self {
        FitnessVector {
            components,
            labels_used,
        }
    }

    pub fn is_feasible(&self) -> bool {
        self.components == 1
    }

    /// `(c - 1) * k^2 + |X|`.
    pub fn scalar(&self, label_count: usize) -> Fitness {
        let k = label_count as Fitness;
        (self.components as Fitness - 1) * k * k + self.labels_used as Fitness
    }

    /// Lexicographic order on `(components, labels_used)`.
    ///
    /// For `k >= 2` this is exactly the order induced by [`Self::scalar`],
    /// because `|X| <= k < k^2`. For `k = 1` the scalar form ties `(2, 0)`
    /// with `(1, 1)`; the lexicographic order still prefers the connected one.
    pub fn lex_cmp(&self, other: &Self) -> Ordering {
        (self.components, self.labels_used).cmp(&(other.components, other.labels_used))
    }
}

/// `a` dominates `b`: no worse in both objectives and strictly better in one.
pub fn dominates(a: FitnessVector, b: FitnessVector) -> bool {
    (a.components < b.components && a.labels_used <= b.labels_used)
        || (a.components <= b.components && a.labels_used < b.labels_used)
}

pub fn fitness_vector(g: &LabeledGraph, x: &LabelSubset) -> Result<FitnessVector> {
    let components = ComponentCounter::new(g.node_count()).count(g, x)?;
    Ok(FitnessVector::new(components, x.len()))
}

pub fn scalar_fitness(g: &LabeledGraph, x: &LabelSubset) -> Result<Fitness> {
    Ok(fitness_vector(g, x)?.scalar(g.label_count()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{gen_g1, gen_g3, gen_random_mlst_b};
    use proptest::prelude::*;

    fn v(c: usize, l: usize) -> FitnessVector {
        FitnessVector::new(c, l)
    }

    #[test]
    fn scalar_fitness_values() {
        let g1 = gen_g1(5).unwrap().graph;
        assert_eq!(scalar_fitness(&g1, &LabelSubset::empty(5)).unwrap(), 100);
        let opt = LabelSubset::from_label_ids(5, &[3, 5]).unwrap();
        assert_eq!(scalar_fitness(&g1, &opt).unwrap(), 2);
        assert_eq!(fitness_vector(&g1, &opt).unwrap(), v(1, 2));
        assert_eq!(
            fitness_vector(&g1, &LabelSubset::empty(5)).unwrap(),
            v(5, 0)
        );

        let g3 = gen_g3(2).unwrap().graph;
        let x = LabelSubset::from_label_ids(3, &[1]).unwrap();
        assert_eq!(fitness_vector(&g3, &x).unwrap(), v(3, 1));
        assert_eq!(scalar_fitness(&g3, &x).unwrap(), 19);
    }

    #[test]
    fn domination_examples() {
        assert!(dominates(v(1, 2), v(1, 3)));
        assert!(!dominates(v(3, 5), v(3, 5)));
        assert!(!dominates(v(2, 2), v(1, 3)));
        assert!(!dominates(v(1, 3), v(2, 2)));
        assert!(dominates(v(1, 3), v(2, 3)));
    }

    #[test]
    fn single_label_scalar_ties_but_lex_order_does_not() {
        assert_eq!(v(2, 0).scalar(1), v(1, 1).scalar(1));
        assert_eq!(v(1, 1).lex_cmp(&v(2, 0)), Ordering::Less);
    }

    #[test]
    fn scalar_does_not_overflow_on_huge_inputs() {
        let f = v(usize::MAX, usize::MAX).scalar(1 << 20);
        assert!(f > u64::MAX as Fitness);
    }

    fn arb_vector() -> impl Strategy<Value = FitnessVector> {
        (1usize..8, 0usize..8).prop_map(|(c, l)| v(c, l))
    }

    proptest! {
        #[test]
        fn domination_is_a_strict_partial_order(a in arb_vector(), b in arb_vector(), c in arb_vector()) {
            prop_assert!(!dominates(a, a));
            prop_assert!(!(dominates(a, b) && dominates(b, a)));
            if dominates(a, b) && dominates(b, c) {
                prop_assert!(dominates(a, c));
            }
        }

        #[test]
        fn fewer_components_means_lower_fitness(seed in any::<u64>(), xm in any::<u64>(), ym in any::<u64>()) {
            let g = gen_random_mlst_b(10, 16, 9, 2, seed).unwrap().graph;
            let x = LabelSubset::from_mask(9, xm);
            let y = LabelSubset::from_mask(9, ym);
            let (fx, fy) = (fitness_vector(&g, &x).unwrap(), fitness_vector(&g, &y).unwrap());
            if fx.components < fy.components {
                prop_assert!(fx.scalar(9) < fy.scalar(9));
            }
            prop_assert_eq!(fx.scalar(9).cmp(&fy.scalar(9)), fx.lex_cmp(&fy));
            if fx.is_feasible() {
                prop_assert_eq!(fx.scalar(9), x.len() as Fitness);
            }
        }
    }
}
