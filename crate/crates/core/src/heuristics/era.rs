use crate::error::Result;
use crate::graph::LabeledGraph;
use crate::subset::LabelSubset;

use super::{SpanningTree, TieBreakPolicy};

/// Edge replacement: insert a non-tree edge and delete an edge on the cycle
/// it closes whenever that strictly reduces the tree's distinct labels.
///
/// Non-tree edges are scanned in the order given by `order`. A swap reduces
/// the label count exactly when the inserted edge's label is already on the
/// tree and the deleted edge is the last tree edge of a different label.
/// Among such cycle edges the first in `order` is deleted. Passes repeat
/// until one makes no swap. Returns the final tree's label set.
pub fn era(g: &LabeledGraph, init: &SpanningTree, order: TieBreakPolicy) -> Result<LabelSubset> {
    let tree = SpanningTree::new(g, init.edges().to_vec())?.into_edges();
    let n = g.node_count();
    let rank = order.ranks(g.edge_count());
    let scan = order.order(g.edge_count());

    let mut in_tree = vec![false; g.edge_count()];
    let mut multiplicity = vec![0usize; g.label_count()];
    for &ei in &tree {
        in_tree[ei] = true;
        multiplicity[g.edge(ei).label] += 1;
    }

    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    let rebuild = |adj: &mut Vec<Vec<usize>>, in_tree: &[bool]| {
        adj.iter_mut().for_each(Vec::clear);
        for (ei, _) in in_tree.iter().enumerate().filter(|(_, &t)| t) {
            let e = g.edge(ei);
            adj[e.u].push(ei);
            adj[e.v].push(ei);
        }
    };
    rebuild(&mut adj, &in_tree);

    loop {
        let mut swapped = false;
        for &ei in &scan {
            if in_tree[ei] {
                continue;
            }
            let e = g.edge(ei);
            if multiplicity[e.label] == 0 {
                continue;
            }
            let path = tree_path(g, &adj, e.u, e.v);
            let victim = path
                .into_iter()
                .filter(|&f| {
                    let l = g.edge(f).label;
                    l != e.label && multiplicity[l] == 1
                })
                .min_by_key(|&f| rank[f]);
            if let Some(f) = victim {
                in_tree[f] = false;
                in_tree[ei] = true;
                multiplicity[g.edge(f).label] -= 1;
                multiplicity[e.label] += 1;
                rebuild(&mut adj, &in_tree);
                swapped = true;
            }
        }
        if !swapped {
            break;
        }
    }

    Ok(LabelSubset::from_indices(
        g.label_count(),
        (0..g.label_count()).filter(|&l| multiplicity[l] > 0),
    ))
}

/// Edge indices on the tree path from `from` to `to`.
fn tree_path(g: &LabeledGraph, adj: &[Vec<usize>], from: usize, to: usize) -> Vec<usize> {
    let n = adj.len();
    let mut via = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    let mut stack = vec![from];
    seen[from] = true;
    while let Some(u) = stack.pop() {
        if u == to {
            break;
        }
        for &ei in &adj[u] {
            let e = g.edge(ei);
            let w = if e.u == u { e.v } else { e.u };
            if !seen[w] {
                seen[w] = true;
                via[w] = ei;
                stack.push(w);
            }
        }
    }
    let mut path = Vec::new();
    let mut cur = to;
    while cur != from {
        let ei = via[cur];
        path.push(ei);
        let e = g.edge(ei);
        cur = if e.u == cur { e.v } else { e.u };
    }
    path
}
