use crate::dsu::DisjointSets;
use crate::graph::{ComponentCounter, LabeledGraph};
use crate::subset::LabelSubset;

use super::TieBreakPolicy;

/// Greedy MVCA: starting from no labels, repeatedly add the unused label that
/// leaves the fewest components, until the subgraph is connected.
pub fn modified_mvca(g: &LabeledGraph, tie: TieBreakPolicy) -> LabelSubset {
    let k = g.label_count();
    let order = tie.order(k);
    let mut counter = ComponentCounter::new(g.node_count());
    let mut x = LabelSubset::empty(k);
    let mut current = g.node_count();
    while current > 1 {
        let mut best: Option<(usize, usize)> = None;
        for &label in &order {
            if x.contains(label) {
                continue;
            }
            let c = counter.count_unchecked(g, x.iter().chain(std::iter::once(label)));
            if best.is_none_or(|(_, bc)| c < bc) {
                best = Some((label, c));
            }
        }
        let (label, c) = best.expect("connected input always has an unused label left");
        x.insert(label);
        current = c;
    }
    x
}

/// MVCA that contracts every component to a supernode after each round and
/// scores labels on the contracted multigraph.
///
/// Picks the same labels as [`modified_mvca`] under the same policy.
pub fn mvca_with_contraction(g: &LabeledGraph, tie: TieBreakPolicy) -> LabelSubset {
    let k = g.label_count();
    let order = tie.order(k);
    let mut x = LabelSubset::empty(k);
    let mut supernodes = g.node_count();
    // Edges between distinct supernodes, grouped by label.
    let mut by_label: Vec<Vec<(usize, usize)>> = vec![Vec::new(); k];
    for e in g.edges() {
        by_label[e.label].push((e.u, e.v));
    }
    let mut dsu = DisjointSets::new(supernodes);
    while supernodes > 1 {
        let mut best: Option<(usize, usize)> = None;
        for &label in &order {
            if x.contains(label) {
                continue;
            }
            dsu.reset(supernodes);
            for &(a, b) in &by_label[label] {
                dsu.union(a, b);
            }
            let c = dsu.components();
            if best.is_none_or(|(_, bc)| c < bc) {
                best = Some((label, c));
            }
        }
        let (label, c) = best.expect("connected input always has an unused label left");
        x.insert(label);

        dsu.reset(supernodes);
        for &(a, b) in &by_label[label] {
            dsu.union(a, b);
        }
        let ids = dsu.component_ids();
        for edges in &mut by_label {
            edges.retain_mut(|(a, b)| {
                *a = ids[*a];
                *b = ids[*b];
                a != b
            });
        }
        supernodes = c;
    }
    x
}
