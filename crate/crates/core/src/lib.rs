//! Minimum label spanning tree: evolutionary solvers, greedy and
//! local-search baselines, adversarial instance families, an exact oracle and
//! a seeded experiment harness.
//!
//! Ids are 1-based in files, on the command line and in error messages, and
//! 0-based in the API (`LabelSubset` bit `i` is label `i + 1`).

pub mod cli;
pub mod dsu;
pub mod error;
pub mod evolutionary;
pub mod fitness;
pub mod graph;
pub mod harness;
pub mod heuristics;
pub mod instances;
pub mod oracle;
pub mod rng;
pub mod subset;

pub use error::{Error, Result};
pub use fitness::{dominates, fitness_vector, scalar_fitness, Fitness, FitnessVector};
pub use graph::{
    build_graph, component_count, is_feasible, max_label_frequency, ComponentCounter, Edge,
    LabeledGraph,
};
pub use rng::RngSeed;
pub use subset::LabelSubset;
