//! Exact solvers for finding vertex sets that induce a graph with a given
//! property in many layers of a multi-layer graph, together with
//! generators for the reductions that show these problems hard.

pub mod gadgets;
pub mod graph;
pub mod matching;
pub mod mlg;
pub mod props;
pub mod solve;

pub use graph::{GraphError, MultiLayerGraph, SimpleGraph, Vertex, VertexSet};
pub use matching::{max_weight_matching, Matching, WeightedGraph};
pub use mlg::{parse_mlg, serialize_mlg, ParseError};
pub use props::{check, pi_refine, Partition, Patterns, PropertySpec};
pub use solve::{solve, Algorithm, Answer, Instance, SolveError};
