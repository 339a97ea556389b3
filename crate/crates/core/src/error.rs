use thiserror::Error;

/// Every failure the library reports.
///
/// Node and label ids in messages are 1-based, matching the instance file
/// format; edge positions are 0-based indices into the input edge list.
#[derive(Debug, Error)]
pub enum Error {
    #[error("edge {edge}: self-loop on node {node}")]
    SelfLoop { edge: usize, node: usize },
    #[error("edge {edge}: duplicate edge ({u}, {v})")]
    DuplicateEdge { edge: usize, u: usize, v: usize },
    #[error("edge {edge}: node {node} outside 1..={node_count}")]
    NodeOutOfRange {
        edge: usize,
        node: usize,
        node_count: usize,
    },
    #[error("edge {edge}: label {label} outside 1..={label_count}")]
    LabelOutOfRange {
        edge: usize,
        label: usize,
        label_count: usize,
    },
    #[error("label {label} is not carried by any edge")]
    UnusedLabel { label: usize },
    #[error("input graph is disconnected: node {node} is unreachable from node 1")]
    DisconnectedInput { node: usize },
    #[error(
        "graph must have at least one node and one label (got n={node_count}, k={label_count})"
    )]
    EmptyGraph {
        node_count: usize,
        label_count: usize,
    },
    #[error("label subset has width {got}, graph has {expected} labels")]
    WidthMismatch { expected: usize, got: usize },
    #[error("parameter out of range: {0}")]
    ParamOutOfRange(String),
    #[error("infeasible parameters: {0}")]
    InfeasibleParams(String),
    #[error("construction verification failed: {0}")]
    ConstructionVerificationFailed(String),
    #[error("instance has {label_count} labels, enumeration limit is {limit}")]
    TooManyLabels { label_count: usize, limit: usize },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("initial solution is not feasible")]
    InfeasibleInit,
    #[error("solution is not feasible")]
    InfeasibleSolution,
    #[error("invalid spanning tree: {0}")]
    InvalidTree(String),
    #[error("need at least {needed} points, got {got}")]
    TooFewPoints { needed: usize, got: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid experiment plan: {0}")]
    InvalidPlan(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
