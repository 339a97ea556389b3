//! Deterministic baselines: greedy MVCA (plain and contracting), 2-switch
//! local search and the edge replacement algorithm (ERA).

mod era;
mod local_search;
mod mvca;
mod tiebreak;
mod tree;

pub use era::era;
pub use local_search::{in_h_switch, is_h_switch_local_optimum, local_search_2switch};
pub use mvca::{modified_mvca, mvca_with_contraction};
pub use tiebreak::TieBreakPolicy;
pub use tree::SpanningTree;
