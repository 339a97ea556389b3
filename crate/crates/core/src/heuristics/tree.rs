use crate::dsu::DisjointSets;
use crate::error::{Error, Result};
use crate::graph::LabeledGraph;
use crate::subset::LabelSubset;

/// A spanning tree of a [`LabeledGraph`], as `n - 1` edge indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanningTree {
    edges: Vec<usize>,
}

impl SpanningTree {
    /// Validates that `edges` are `n - 1` distinct edge indices of `g`
    /// forming an acyclic, spanning subgraph.
    pub fn new(g: &LabeledGraph, edges: Vec<usize>) -> Result<Self> {
        let n = g.node_count();
        if edges.len() != n - 1 {
            return Err(Error::InvalidTree(format!(
                "{} edges given, a spanning tree on {n} nodes has {}",
                edges.len(),
                n - 1
            )));
        }
        let mut dsu = DisjointSets::new(n);
        for &ei in &edges {
            if ei >= g.edge_count() {
                return Err(Error::InvalidTree(format!("edge index {ei} out of range")));
            }
            let e = g.edge(ei);
            if !dsu.union(e.u, e.v) {
                return Err(Error::InvalidTree(format!(
                    "edge {ei} ({}, {}) closes a cycle",
                    e.u + 1,
                    e.v + 1
                )));
            }
        }
        Ok(SpanningTree { edges })
    }

    /// A spanning tree of `H(x)`, taking edges greedily in index order.
    pub fn from_labels(g: &LabeledGraph, x: &LabelSubset) -> Result<Self> {
        g.check_width(x)?;
        let mut dsu = DisjointSets::new(g.node_count());
        let edges: Vec<usize> = (0..g.edge_count())
            .filter(|&ei| {
                let e = g.edge(ei);
                x.contains(e.label) && dsu.union(e.u, e.v)
            })
            .collect();
        if dsu.components() > 1 {
            return Err(Error::InfeasibleInit);
        }
        Ok(SpanningTree { edges })
    }

    pub fn edges(&self) -> &[usize] {
        &self.edges
    }

    /// Distinct labels on the tree.
    pub fn labels(&self, g: &LabeledGraph) -> LabelSubset {
        LabelSubset::from_indices(
            g.label_count(),
            self.edges.iter().map(|&ei| g.edge(ei).label),
        )
    }

    pub(crate) fn into_edges(self) -> Vec<usize> {
        self.edges
    }
}
