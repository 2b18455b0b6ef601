use crate::graph::{MultiLayerGraph, SimpleGraph, VertexSet};
use crate::props::PropertySpec;
use crate::solve::{Answer, Instance, SolveError};

use super::{max_cardinality_mates, max_weight_matching, Matching, WeightedGraph};

/// Weighted graph on two copies of the vertex set: copy one is `0..n`,
/// copy two is `n..2n`. Each vertex joins its two copies with weight `n`;
/// edges of layer `i` live on copy `i` with weight `n + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchingReduction {
    graph: WeightedGraph,
    n: usize,
}

impl MatchingReduction {
    pub fn graph(&self) -> &WeightedGraph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Weight a matching must reach to certify a solution of size `k`.
    pub fn threshold(&self, k: usize) -> i64 {
        (self.n * self.n + k) as i64
    }

    /// Vertices whose two copies are not matched to each other.
    pub fn extract(&self, m: &Matching) -> VertexSet {
        (0..self.n)
            .filter(|&v| !m.contains(v, self.n + v))
            .collect()
    }
}

pub fn build_matching_reduction(
    g1: &SimpleGraph,
    g2: &SimpleGraph,
) -> Result<MatchingReduction, SolveError> {
    if g1.n() != g2.n() {
        return Err(SolveError::LayerSizeMismatch(g1.n(), g2.n()));
    }
    let n = g1.n();
    let cross = (0..n).map(|v| (v, n + v, n as i64));
    let first = g1.edges().map(|(u, v)| (u, v, n as i64 + 1));
    let second = g2.edges().map(|(u, v)| (n + u, n + v, n as i64 + 1));
    let graph = WeightedGraph::new(2 * n, cross.chain(first).chain(second).collect::<Vec<_>>())
        .expect("reduction graph is simple");
    Ok(MatchingReduction { graph, n })
}

/// Largest vertex set inducing graphs with perfect matchings in both
/// layers. A maximum-weight matching of the reduction has weight
/// `n^2 + |X|` for this `X`.
pub fn max_common_matchable(g1: &SimpleGraph, g2: &SimpleGraph) -> Result<VertexSet, SolveError> {
    let reduction = build_matching_reduction(g1, g2)?;
    let (weight, m) = max_weight_matching(reduction.graph());
    let x = reduction.extract(&m);
    assert_eq!(
        weight,
        reduction.threshold(x.len()),
        "optimal matching leaves a copy unmatched"
    );
    Ok(x)
}

fn pair_instance(g1: &SimpleGraph, g2: &SimpleGraph, k: usize) -> Result<Instance, SolveError> {
    let graph = MultiLayerGraph::new(g1.n(), vec![g1.clone(), g2.clone()])
        .map_err(|_| SolveError::LayerSizeMismatch(g1.n(), g2.n()))?;
    Instance::new(graph, PropertySpec::Matching, k, 2)
}

/// Two layers, property Matching: yes iff the optimum weight reaches
/// `n^2 + k`.
pub fn two_layer_matching_solve(
    g1: &SimpleGraph,
    g2: &SimpleGraph,
    k: usize,
) -> Result<Answer, SolveError> {
    let inst = pair_instance(g1, g2, k)?;
    let x = max_common_matchable(g1, g2)?;
    if x.len() >= k {
        Answer::yes(&inst, x, vec![0, 1])
    } else {
        Ok(Answer::no())
    }
}

/// Matching with `ell = 1` (largest matched set of any layer) or `ell = 2`
/// (best pair of layers through the weighted reduction).
pub fn matching_solve(inst: &Instance) -> Result<Answer, SolveError> {
    if *inst.pi() != PropertySpec::Matching {
        return Err(SolveError::Unsupported {
            algorithm: "matching",
            property: inst.pi().to_string(),
        });
    }
    if inst.k() > inst.n() {
        return Ok(Answer::no());
    }
    let g = inst.graph();
    let mut best: Option<(VertexSet, Vec<usize>)> = None;
    let mut offer = |x: VertexSet, layers: Vec<usize>| {
        if best.as_ref().is_none_or(|(b, _)| x.len() > b.len()) {
            best = Some((x, layers));
        }
    };
    match inst.ell() {
        1 => {
            for i in 0..g.t() {
                let mates = max_cardinality_mates(g.layer(i));
                offer(
                    (0..g.n()).filter(|&v| mates[v].is_some()).collect(),
                    vec![i],
                );
            }
        }
        2 => {
            for i in 0..g.t() {
                for j in i + 1..g.t() {
                    offer(max_common_matchable(g.layer(i), g.layer(j))?, vec![i, j]);
                }
            }
        }
        _ => return Err(SolveError::MatchingNeedsTwoLayers),
    }
    match best {
        Some((x, layers)) if x.len() >= inst.k() => Answer::yes(inst, x, layers),
        _ => Ok(Answer::no()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edge() -> SimpleGraph {
        SimpleGraph::from_edges(2, [(0, 1)]).unwrap()
    }

    #[test]
    fn reduction_shape() {
        let r = build_matching_reduction(&edge(), &edge()).unwrap();
        assert_eq!(r.graph().vertex_count(), 4);
        assert_eq!(
            r.graph().edges(),
            &[(0, 1, 3), (0, 2, 2), (1, 3, 2), (2, 3, 3)]
        );
        let r = build_matching_reduction(&edge(), &SimpleGraph::edgeless(2)).unwrap();
        assert_eq!(r.graph().edges(), &[(0, 1, 3), (0, 2, 2), (1, 3, 2)]);
        assert!(build_matching_reduction(&edge(), &SimpleGraph::edgeless(3)).is_err());
    }

    #[test]
    fn small_decisions() {
        let a = two_layer_matching_solve(&edge(), &edge(), 2).unwrap();
        assert_eq!(a.to_string(), "YES\nX: 1 2\nlayers: 1 2");
        assert!(
            !two_layer_matching_solve(&edge(), &SimpleGraph::edgeless(2), 2)
                .unwrap()
                .is_yes()
        );
        assert!(
            !two_layer_matching_solve(&edge(), &SimpleGraph::edgeless(2), 1)
                .unwrap()
                .is_yes()
        );
    }
}
