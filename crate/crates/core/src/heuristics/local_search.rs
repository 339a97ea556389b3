use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graph::{ComponentCounter, LabeledGraph};
use crate::subset::LabelSubset;

use super::TieBreakPolicy;

/// `|x1 - x2| <= h` and `|x2 - x1| <= h`.
pub fn in_h_switch(x1: &LabelSubset, x2: &LabelSubset, h: usize) -> Result<bool> {
    if x1.width() != x2.width() {
        return Err(Error::WidthMismatch {
            expected: x1.width(),
            got: x2.width(),
        });
    }
    Ok(x1.difference_len(x2) <= h && x2.difference_len(x1) <= h)
}

/// First-improvement descent in the 2-switch neighborhood.
///
/// From the current solution `x`, candidates drop one label, then two
/// labels (pairs in lexicographic order of `order`), and for two dropped
/// labels optionally add one unused label. The first feasible candidate
/// becomes the new `x`; the search stops when none is feasible.
pub fn local_search_2switch(
    g: &LabeledGraph,
    init: &LabelSubset,
    order: TieBreakPolicy,
) -> Result<LabelSubset> {
    g.check_width(init)?;
    let mut counter = ComponentCounter::new(g.node_count());
    if counter.count_unchecked(g, init.iter()) != 1 {
        return Err(Error::InfeasibleInit);
    }
    let priority = order.order(g.label_count());
    let mut x = init.clone();
    while let Some(y) = first_smaller_neighbor(g, &x, 2, &priority, &mut counter) {
        x = y;
    }
    Ok(x)
}

/// True iff no feasible `y` with `|y| < |x|` lies in the h-switch
/// neighborhood of `x`.
pub fn is_h_switch_local_optimum(g: &LabeledGraph, x: &LabelSubset, h: usize) -> Result<bool> {
    g.check_width(x)?;
    let mut counter = ComponentCounter::new(g.node_count());
    if counter.count_unchecked(g, x.iter()) != 1 {
        return Err(Error::InfeasibleInit);
    }
    let priority: Vec<usize> = (0..g.label_count()).collect();
    Ok(first_smaller_neighbor(g, x, h, &priority, &mut counter).is_none())
}

/// Removes `r` labels and adds `a < r` labels, for `r` in `1..=h`.
fn first_smaller_neighbor(
    g: &LabeledGraph,
    x: &LabelSubset,
    h: usize,
    priority: &[usize],
    counter: &mut ComponentCounter,
) -> Option<LabelSubset> {
    let inside: Vec<usize> = priority
        .iter()
        .copied()
        .filter(|&l| x.contains(l))
        .collect();
    let outside: Vec<usize> = priority
        .iter()
        .copied()
        .filter(|&l| !x.contains(l))
        .collect();
    for r in 1..=h.min(inside.len()) {
        for removed in inside.iter().copied().combinations(r) {
            let mut base = x.clone();
            for &l in &removed {
                base.remove(l);
            }
            for a in 0..r {
                for added in outside.iter().copied().combinations(a) {
                    let mut y = base.clone();
                    for &l in &added {
                        y.insert(l);
                    }
                    if counter.count_unchecked(g, y.iter()) == 1 {
                        return Some(y);
                    }
                }
            }
        }
    }
    None
}
