//! Solvers for the multi-layer subgraph problem: find `X` with `|X| >= k`
//! inducing a member of the property in at least `ell` layers.

mod brute;
mod hereditary;
pub mod kernel;
mod partition;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{write_one_based, MultiLayerGraph, VertexSet};
use crate::matching::matching_solve;
use crate::props::{check, PropertyError, PropertySpec, RefineError};

pub use brute::brute_force_solve;
pub use hereditary::{
    complement_hereditary_solve, hereditary_solve, nested_ramsey_bound, ramsey_bound,
    HereditaryOutcome, HereditaryPath,
};
pub use partition::{
    partition_solve, partition_solve_all_layers, partition_solve_all_layers_with,
    partition_solve_with_stats, PartitionRun, PartitionStats, ScanOrder,
};

#[derive(Debug, Error)]
pub enum SolveError {
    #[error("k must be at least 1")]
    ZeroK,
    #[error("ell = {ell} must lie in 1..={t}")]
    EllOutOfRange { ell: usize, t: usize },
    #[error(transparent)]
    Property(#[from] PropertyError),
    #[error(transparent)]
    Refine(#[from] RefineError),
    #[error("{algorithm} does not support property `{property}`")]
    Unsupported {
        algorithm: &'static str,
        property: String,
    },
    #[error("matching algorithm requires exactly 2 selected layers")]
    MatchingNeedsTwoLayers,
    #[error("layers have {0} and {1} vertices")]
    LayerSizeMismatch(usize, usize),
    #[error("vertex budget n - k is negative (k = {k} > n = {n})")]
    NegativeBudget { k: usize, n: usize },
    #[error("inconsistent hereditary case flags")]
    InconsistentCase,
    #[error("invalid witness: {0}")]
    InvalidWitness(String),
}

/// A query `(G, pi, k, ell)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    graph: MultiLayerGraph,
    pi: PropertySpec,
    k: usize,
    ell: usize,
}

impl Instance {
    /// `k > n` is accepted and simply infeasible.
    pub fn new(
        graph: MultiLayerGraph,
        pi: PropertySpec,
        k: usize,
        ell: usize,
    ) -> Result<Self, SolveError> {
        if k == 0 {
            return Err(SolveError::ZeroK);
        }
        if ell == 0 || ell > graph.t() {
            return Err(SolveError::EllOutOfRange { ell, t: graph.t() });
        }
        pi.validate()?;
        Ok(Instance { graph, pi, k, ell })
    }

    pub fn graph(&self) -> &MultiLayerGraph {
        &self.graph
    }

    pub fn pi(&self) -> &PropertySpec {
        &self.pi
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn t(&self) -> usize {
        self.graph.t()
    }

    pub fn with_k(&self, k: usize) -> Result<Self, SolveError> {
        Instance::new(self.graph.clone(), self.pi.clone(), k, self.ell)
    }

    pub fn with_ell(&self, ell: usize) -> Result<Self, SolveError> {
        Instance::new(self.graph.clone(), self.pi.clone(), self.k, ell)
    }

    pub fn into_parts(self) -> (MultiLayerGraph, PropertySpec, usize, usize) {
        (self.graph, self.pi, self.k, self.ell)
    }
}

/// Decision with its certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Answer {
    witness: Option<(VertexSet, Vec<usize>)>,
}

impl Answer {
    pub fn no() -> Self {
        Answer { witness: None }
    }

    /// A yes-answer, accepted only if `x` and `layers` certify `inst`.
    pub fn yes(inst: &Instance, x: VertexSet, mut layers: Vec<usize>) -> Result<Self, SolveError> {
        layers.sort_unstable();
        layers.dedup();
        let bad = |msg: String| Err(SolveError::InvalidWitness(msg));
        if x.len() < inst.k {
            return bad(format!("|X| = {} < k = {}", x.len(), inst.k));
        }
        if layers.len() < inst.ell {
            return bad(format!("{} layers < ell = {}", layers.len(), inst.ell));
        }
        if let Some(&v) = x.as_slice().last() {
            if v >= inst.n() {
                return bad(format!("vertex {} out of range", v + 1));
            }
        }
        for &i in &layers {
            if i >= inst.t() {
                return bad(format!("layer {} out of range", i + 1));
            }
            if !check(&inst.graph.layer(i).induced(x.as_slice()), &inst.pi) {
                return bad(format!("layer {} fails {}", i + 1, inst.pi));
            }
        }
        Ok(Answer {
            witness: Some((x, layers)),
        })
    }

    pub fn is_yes(&self) -> bool {
        self.witness.is_some()
    }

    pub fn vertices(&self) -> Option<&VertexSet> {
        self.witness.as_ref().map(|w| &w.0)
    }

    pub fn layers(&self) -> Option<&[usize]> {
        self.witness.as_ref().map(|w| w.1.as_slice())
    }

    /// Witness size, 0 for a no-answer.
    pub fn size(&self) -> usize {
        self.vertices().map_or(0, VertexSet::len)
    }
}

/// `YES`, `X: ...`, `layers: ...` with 1-based ids, or `NO`.
impl fmt::Display for Answer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.witness {
            None => f.write_str("NO"),
            Some((x, layers)) => {
                write!(f, "YES\nX: {x}\nlayers: ")?;
                write_one_based(f, layers)
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algorithm {
    Auto,
    Brute,
    Partition,
    Matching,
    SearchTree,
}

impl FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "auto" => Algorithm::Auto,
            "brute" => Algorithm::Brute,
            "partition" => Algorithm::Partition,
            "matching" => Algorithm::Matching,
            "search-tree" => Algorithm::SearchTree,
            _ => return Err(format!("unknown algorithm `{s}`")),
        })
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Algorithm::Auto => "auto",
            Algorithm::Brute => "brute",
            Algorithm::Partition => "partition",
            Algorithm::Matching => "matching",
            Algorithm::SearchTree => "search-tree",
        })
    }
}

/// The algorithm `Auto` picks for `inst`.
pub fn dispatch(inst: &Instance) -> Algorithm {
    let pi = inst.pi();
    if pi.is_complement_hereditary() {
        Algorithm::Auto
    } else if pi.is_partitionable() {
        Algorithm::Partition
    } else if *pi == PropertySpec::Matching && inst.ell() <= 2 {
        Algorithm::Matching
    } else if matches!(pi, PropertySpec::ForbiddenInduced(_)) {
        Algorithm::SearchTree
    } else {
        Algorithm::Brute
    }
}

/// Runs `algorithm` on `inst`.
pub fn solve(inst: &Instance, algorithm: Algorithm) -> Result<Answer, SolveError> {
    match algorithm {
        Algorithm::Auto => {
            if inst.k() > inst.n() {
                return Ok(Answer::no());
            }
            match dispatch(inst) {
                Algorithm::Auto => complement_hereditary_solve(inst),
                Algorithm::Matching => matching_solve(inst),
                other => solve(inst, other),
            }
        }
        Algorithm::Brute => Ok(brute_force_solve(inst)),
        Algorithm::Partition => partition_solve(inst),
        Algorithm::Matching => {
            if *inst.pi() != PropertySpec::Matching {
                return Err(SolveError::Unsupported {
                    algorithm: "matching",
                    property: inst.pi().to_string(),
                });
            }
            if inst.ell() != 2 {
                return Err(SolveError::MatchingNeedsTwoLayers);
            }
            matching_solve(inst)
        }
        Algorithm::SearchTree => {
            if inst.k() > inst.n() {
                return Ok(Answer::no());
            }
            kernel::search_tree_solve(inst).map(|o| o.answer)
        }
    }
}
