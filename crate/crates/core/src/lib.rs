//! Exact solver for the maximum s-bundle problem.
//!
//! An s-bundle is a vertex set `S` whose induced subgraph has vertex
//! connectivity at least `|S| - s`. [`solve`] finds a largest one by
//! branch and bound: a lower bound from a greedy clique grown by a lazy
//! random walk, graph reduction against that bound, and a search pruned by
//! a partition upper bound.

pub mod bounds;
pub mod connectivity;
pub mod error;
pub mod graph;
pub mod io;
pub mod lower_bound;
#[cfg(feature = "oracle")]
pub mod oracle;
pub mod reduction;
pub mod search;

pub use bounds::{color_bound, partition_bound, BoundKind, Partition};
pub use connectivity::{
    can_extend, find_violation, is_s_bundle, local_connectivity, vertex_connectivity_at_least,
    Violation,
};
pub use error::{Error, Result};
pub use graph::{Graph, Vertex, VertexSet};
pub use io::{
    parse_graph, read_results, write_results, GraphFileFormat, ParsedGraph, ResultFormat,
    ResultRecord,
};
pub use lower_bound::{generate_lb, greedy_clique, ExpansionMode};
pub use reduction::{reduce, ReducedGraph};
pub use search::{solve, BoundMode, LbMode, SolverConfig, SolverResult, Variant};

/// Walk weights in double precision, as used by the solver.
pub type WalkWeights = lower_bound::WalkWeights<f64>;
/// Walk weights in single precision.
pub type WalkWeightsF32 = lower_bound::WalkWeights<f32>;
