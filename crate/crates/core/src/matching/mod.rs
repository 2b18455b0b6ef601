//! Matching engines and the two-layer matching solver.

mod blossom;
mod cardinality;
mod two_layer;

use thiserror::Error;

pub use cardinality::{has_perfect_matching, matching_number, max_cardinality_mates};
pub use two_layer::{
    build_matching_reduction, matching_solve, two_layer_matching_solve, MatchingReduction,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeightedGraphError {
    #[error("edge endpoint {0} out of range")]
    OutOfRange(usize),
    #[error("self-loop at {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    Duplicate(usize, usize),
    #[error("negative weight on edge {{{0}, {1}}}")]
    NegativeWeight(usize, usize),
}

/// Undirected graph on `0..m` with non-negative integer edge weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedGraph {
    m: usize,
    edges: Vec<(usize, usize, i64)>,
}

impl WeightedGraph {
    pub fn new<I>(m: usize, edges: I) -> Result<Self, WeightedGraphError>
    where
        I: IntoIterator<Item = (usize, usize, i64)>,
    {
        let mut list: Vec<(usize, usize, i64)> = Vec::new();
        for (u, v, w) in edges {
            if u >= m || v >= m {
                return Err(WeightedGraphError::OutOfRange(u.max(v)));
            }
            if u == v {
                return Err(WeightedGraphError::SelfLoop(u));
            }
            if w < 0 {
                return Err(WeightedGraphError::NegativeWeight(u, v));
            }
            list.push((u.min(v), u.max(v), w));
        }
        list.sort_unstable();
        if let Some(p) = list
            .windows(2)
            .find(|p| (p[0].0, p[0].1) == (p[1].0, p[1].1))
        {
            return Err(WeightedGraphError::Duplicate(p[0].0, p[0].1));
        }
        Ok(WeightedGraph { m, edges: list })
    }

    pub fn vertex_count(&self) -> usize {
        self.m
    }

    /// Edges `(u, v, weight)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize, i64)] {
        &self.edges
    }

    pub fn weight(&self, u: usize, v: usize) -> Option<i64> {
        let key = (u.min(v), u.max(v));
        self.edges
            .binary_search_by(|e| (e.0, e.1).cmp(&key))
            .ok()
            .map(|i| self.edges[i].2)
    }
}

/// A set of pairwise vertex-disjoint edges, stored as sorted `(u, v)` with
/// `u < v`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Matching(Vec<(usize, usize)>);

impl Matching {
    pub fn from_mates(mates: &[Option<usize>]) -> Self {
        let pairs = mates
            .iter()
            .enumerate()
            .filter_map(|(v, m)| m.filter(|&u| u > v).map(|u| (v, u)))
            .collect();
        Matching(pairs)
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, u: usize, v: usize) -> bool {
        self.0.binary_search(&(u.min(v), u.max(v))).is_ok()
    }

    /// Checks vertex-disjointness and that every pair is an edge of `g`.
    /// Returns the total weight when valid.
    pub fn weight_in(&self, g: &WeightedGraph) -> Option<i64> {
        let mut used = vec![false; g.vertex_count()];
        let mut total = 0;
        for &(u, v) in &self.0 {
            if u >= used.len() || v >= used.len() || used[u] || used[v] {
                return None;
            }
            used[u] = true;
            used[v] = true;
            total += g.weight(u, v)?;
        }
        Some(total)
    }
}

/// Exact maximum-weight matching (not necessarily perfect).
pub fn max_weight_matching(g: &WeightedGraph) -> (i64, Matching) {
    let mates = blossom::max_weight_mates(g.m, &g.edges);
    let matching = Matching::from_mates(&mates);
    let weight = matching
        .weight_in(g)
        .expect("engine produced an invalid matching");
    (weight, matching)
}
