//! Labeled graphs and label-restricted connectivity.

use std::collections::HashSet;

use crate::dsu::DisjointSets;
use crate::error::{Error, Result};
use crate::subset::LabelSubset;

/// An undirected edge with 0-based endpoints (`u < v`) and a 0-based label.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub label: usize,
}

/// An immutable, connected, simple undirected graph with one label per edge.
///
/// Construction validates every invariant, so a `LabeledGraph` value is
/// always a legal input for the solvers. Edges keep their input order; edge
/// indices are positions in that order.
#[derive(Clone, Debug)]
pub struct LabeledGraph {
    node_count: usize,
    label_count: usize,
    edges: Vec<Edge>,
    per_label: Vec<Vec<usize>>,
}

/// Validates and builds a graph from 1-based `(u, v, label)` triples.
pub fn build_graph(
    node_count: usize,
    label_count: usize,
    edges: &[(usize, usize, usize)],
) -> Result<LabeledGraph> {
    LabeledGraph::new(node_count, label_count, edges)
}

impl LabeledGraph {
    /// See [`build_graph`].
    pub fn new(
        node_count: usize,
        label_count: usize,
        edges: &[(usize, usize, usize)],
    ) -> Result<Self> {
        if node_count == 0 || label_count == 0 {
            return Err(Error::EmptyGraph {
                node_count,
                label_count,
            });
        }
        let mut seen = HashSet::with_capacity(edges.len());
        let mut out = Vec::with_capacity(edges.len());
        let mut per_label = vec![Vec::new(); label_count];
        for (idx, &(u, v, label)) in edges.iter().enumerate() {
            for node in [u, v] {
                if node == 0 || node > node_count {
                    return Err(Error::NodeOutOfRange {
                        edge: idx,
                        node,
                        node_count,
                    });
                }
            }
            if label == 0 || label > label_count {
                return Err(Error::LabelOutOfRange {
                    edge: idx,
                    label,
                    label_count,
                });
            }
            if u == v {
                return Err(Error::SelfLoop { edge: idx, node: u });
            }
            let (a, b) = (u.min(v), u.max(v));
            if !seen.insert((a, b)) {
                return Err(Error::DuplicateEdge {
                    edge: idx,
                    u: a,
                    v: b,
                });
            }
            per_label[label - 1].push(idx);
            out.push(Edge {
                u: a - 1,
                v: b - 1,
                label: label - 1,
            });
        }
        if let Some(unused) = per_label.iter().position(Vec::is_empty) {
            return Err(Error::UnusedLabel { label: unused + 1 });
        }
        let mut dsu = DisjointSets::new(node_count);
        for e in &out {
            dsu.union(e.u, e.v);
        }
        if dsu.components() > 1 {
            let root = dsu.find(0);
            let node = (0..node_count).find(|&i| dsu.find(i) != root).unwrap();
            return Err(Error::DisconnectedInput { node: node + 1 });
        }
        Ok(LabeledGraph {
            node_count,
            label_count,
            edges: out,
            per_label,
        })
    }

    /// `n`
    pub fn node_count(&self) -> usize {
        self.node_count
    }

    /// `k`
    pub fn label_count(&self) -> usize {
        self.label_count
    }

    /// `m`
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> Edge {
        self.edges[index]
    }

    /// Edge indices carrying `label` (0-based), in input order.
    pub fn label_edges(&self, label: usize) -> &[usize] {
        &self.per_label[label]
    }

    pub fn label_frequency(&self, label: usize) -> usize {
        self.per_label[label].len()
    }

    /// `b`, the largest number of edges sharing one label.
    pub fn max_label_frequency(&self) -> usize {
        self.per_label.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Edges as 1-based triples, in input order.
    pub fn to_triples(&self) -> Vec<(usize, usize, usize)> {
        self.edges
            .iter()
            .map(|e| (e.u + 1, e.v + 1, e.label + 1))
            .collect()
    }

    /// Edges sorted by `(u, v)`, the canonical order used when saving.
    pub fn canonical_edges(&self) -> Vec<Edge> {
        let mut edges = self.edges.clone();
        edges.sort_unstable();
        edges
    }

    pub(crate) fn check_width(&self, x: &LabelSubset) -> Result<()> {
        if x.width() != self.label_count {
            return Err(Error::WidthMismatch {
                expected: self.label_count,
                got: x.width(),
            });
        }
        Ok(())
    }
}

/// Two graphs are equal when they have the same sizes and the same labeled
/// edge set; input edge order does not matter.
impl PartialEq for LabeledGraph {
    fn eq(&self, other: &Self) -> bool {
        self.node_count == other.node_count
            && self.label_count == other.label_count
            && self.canonical_edges() == other.canonical_edges()
    }
}

impl Eq for LabeledGraph {}

/// Reusable scratch space for repeated component counts on graphs with up to
/// a given number of nodes. One counter per worker thread.
#[derive(Clone, Debug)]
pub struct ComponentCounter {
    dsu: DisjointSets,
}

impl ComponentCounter {
    pub fn new(node_count: usize) -> Self {
        ComponentCounter {
            dsu: DisjointSets::new(node_count),
        }
    }

    /// `c(H(x))`, the number of components of the spanning subgraph that
    /// keeps only edges whose label is in `x`.
    pub fn count(&mut self, g: &LabeledGraph, x: &LabelSubset) -> Result<usize> {
        g.check_width(x)?;
        Ok(self.count_unchecked(g, x.iter()))
    }

    pub(crate) fn count_unchecked(
        &mut self,
        g: &LabeledGraph,
        labels: impl Iterator<Item = usize>,
    ) -> usize {
        self.dsu.reset(g.node_count);
        for label in labels {
            for &ei in &g.per_label[label] {
                let e = g.edges[ei];
                if self.dsu.union(e.u, e.v) && self.dsu.components() == 1 {
                    return 1;
                }
            }
        }
        self.dsu.components()
    }

    /// Component id per node (dense, by first appearance) for `H(x)`.
    pub fn component_ids(&mut self, g: &LabeledGraph, x: &LabelSubset) -> Result<Vec<usize>> {
        g.check_width(x)?;
        self.dsu.reset(g.node_count);
        for label in x.iter() {
            for &ei in &g.per_label[label] {
                let e = g.edges[ei];
                self.dsu.union(e.u, e.v);
            }
        }
        Ok(self.dsu.component_ids())
    }
}

/// `c(H(x))`; allocates fresh scratch on each call.
pub fn component_count(g: &LabeledGraph, x: &LabelSubset) -> Result<usize> {
    ComponentCounter::new(g.node_count).count(g, x)
}

/// True iff `H(x)` is connected.
pub fn is_feasible(g: &LabeledGraph, x: &LabelSubset) -> Result<bool> {
    Ok(component_count(g, x)? == 1)
}

/// `b` for `g`.
pub fn max_label_frequency(g: &LabeledGraph) -> usize {
    g.max_label_frequency()
}
