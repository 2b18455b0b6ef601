//! Multi-layer graph model.
//!
//! Vertices are `0..n` and layers `0..t` in memory; the text formats and the
//! command line shift both to 1-based ids.

use std::fmt;

use thiserror::Error;

/// Vertex id (0-based).
pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("layer {layer} out of range for a graph with {t} layers")]
    LayerOutOfRange { layer: usize, t: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("a multi-layer graph needs at least one layer")]
    NoLayers,
    #[error("empty layer selection")]
    EmptyLayerSelection,
    #[error("layer vertex counts differ ({0} vs {1})")]
    VertexCountMismatch(usize, usize),
}

/// A simple undirected graph with sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    adj: Vec<Vec<Vertex>>,
    m: usize,
}

impl SimpleGraph {
    pub fn edgeless(n: usize) -> Self {
        SimpleGraph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    pub fn complete(n: usize) -> Self {
        let adj = (0..n)
            .map(|v| (0..n).filter(|&u| u != v).collect())
            .collect();
        SimpleGraph {
            adj,
            m: n * n.saturating_sub(1) / 2,
        }
    }

    /// Builds a graph, rejecting loops, duplicates and out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut adj = vec![Vec::new(); n];
        let mut m = 0;
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
            m += 1;
        }
        for (v, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(GraphError::DuplicateEdge(v.min(w[0]), v.max(w[0])));
            }
        }
        Ok(SimpleGraph { adj, m })
    }

    /// Like [`SimpleGraph::from_edges`] but merges duplicates. Used by
    /// constructions that add the same edge from several rules.
    pub fn from_edges_dedup<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut list: Vec<(Vertex, Vertex)> = edges
            .into_iter()
            .map(|(u, v)| (u.min(v), u.max(v)))
            .collect();
        list.sort_unstable();
        list.dedup();
        Self::from_edges(n, list)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Subgraph induced by `vertices` (sorted, distinct), relabelled
    /// `0..len` in the given order.
    pub fn induced(&self, vertices: &[Vertex]) -> SimpleGraph {
        let mut pos = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            pos[v] = i;
        }
        let mut m = 0;
        let adj: Vec<Vec<Vertex>> = vertices
            .iter()
            .map(|&v| {
                let mut list: Vec<Vertex> = self.adj[v]
                    .iter()
                    .filter_map(|&u| (pos[u] != usize::MAX).then_some(pos[u]))
                    .collect();
                list.sort_unstable();
                m += list.len();
                list
            })
            .collect();
        SimpleGraph { adj, m: m / 2 }
    }

    /// Complement graph.
    pub fn complement(&self) -> SimpleGraph {
        let n = self.n();
        let adj: Vec<Vec<Vertex>> = (0..n)
            .map(|v| (0..n).filter(|&u| u != v && !self.has_edge(v, u)).collect())
            .collect();
        let m = n * n.saturating_sub(1) / 2 - self.m;
        SimpleGraph { adj, m }
    }

    /// Adjacency rows as bit masks. Panics for graphs on more than 128
    /// vertices.
    pub fn adjacency_masks(&self) -> Vec<u128> {
        assert!(
            self.n() <= 128,
            "bit-mask view supports at most 128 vertices"
        );
        self.adj
            .iter()
            .map(|list| list.iter().fold(0u128, |acc, &u| acc | (1u128 << u)))
            .collect()
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                i += 1;
                for &u in &self.adj[v] {
                    if !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() > 0 && self.components().len() == 1
    }
}

/// A sorted, duplicate-free set of vertex ids.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(Vec<Vertex>);

impl VertexSet {
    pub fn new<I: IntoIterator<Item = Vertex>>(members: I) -> Self {
        let mut v: Vec<Vertex> = members.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }

    pub fn full(n: usize) -> Self {
        VertexSet((0..n).collect())
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.0.iter().all(|&v| other.contains(v))
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.0.iter().copied()
    }

    pub fn into_vec(self) -> Vec<Vertex> {
        self.0
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        VertexSet::new(iter)
    }
}

/// Displays 1-based ids separated by spaces.
impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_one_based(f, &self.0)
    }
}

pub(crate) fn write_one_based(f: &mut impl fmt::Write, ids: &[usize]) -> fmt::Result {
    for (i, v) in ids.iter().enumerate() {
        if i > 0 {
            f.write_char(' ')?;
        }
        write!(f, "{}", v + 1)?;
    }
    Ok(())
}

/// `t >= 1` simple graphs over the shared vertex set `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiLayerGraph {
    n: usize,
    layers: Vec<SimpleGraph>,
}

impl MultiLayerGraph {
    pub fn new(n: usize, layers: Vec<SimpleGraph>) -> Result<Self, GraphError> {
        if layers.is_empty() {
            return Err(GraphError::NoLayers);
        }
        if let Some(g) = layers.iter().find(|g| g.n() != n) {
            return Err(GraphError::VertexCountMismatch(n, g.n()));
        }
        Ok(MultiLayerGraph { n, layers })
    }

    /// Builds from `(layer, u, v)` triples, all 0-based.
    pub fn from_edges<I>(n: usize, t: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, Vertex, Vertex)>,
    {
        let mut per_layer = vec![Vec::new(); t];
        for (layer, u, v) in edges {
            if layer >= t {
                return Err(GraphError::LayerOutOfRange { layer, t });
            }
            per_layer[layer].push((u, v));
        }
        let layers = per_layer
            .into_iter()
            .map(|e| SimpleGraph::from_edges(n, e))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(n, layers)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn t(&self) -> usize {
        self.layers.len()
    }

    pub fn layer(&self, i: usize) -> &SimpleGraph {
        &self.layers[i]
    }

    pub fn layers(&self) -> &[SimpleGraph] {
        &self.layers
    }

    /// Induced multi-layer subgraph on `x`, with the map from new ids back
    /// to original ids.
    pub fn induced(&self, x: &VertexSet) -> Result<(MultiLayerGraph, Vec<Vertex>), GraphError> {
        if let Some(v) = x.iter().find(|&v| v >= self.n) {
            return Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        let layers = self
            .layers
            .iter()
            .map(|g| g.induced(x.as_slice()))
            .collect();
        Ok((
            MultiLayerGraph { n: x.len(), layers },
            x.as_slice().to_vec(),
        ))
    }

    /// Keeps the selected layers, renumbered in ascending original order.
    pub fn restrict_layers(&self, selection: &[usize]) -> Result<MultiLayerGraph, GraphError> {
        let mut sel = selection.to_vec();
        sel.sort_unstable();
        sel.dedup();
        if sel.is_empty() {
            return Err(GraphError::EmptyLayerSelection);
        }
        if let Some(&layer) = sel.iter().find(|&&l| l >= self.t()) {
            return Err(GraphError::LayerOutOfRange { layer, t: self.t() });
        }
        let layers = sel.iter().map(|&l| self.layers[l].clone()).collect();
        Ok(MultiLayerGraph { n: self.n, layers })
    }

    /// Appends layers; used by padding constructions.
    pub fn with_extra_layers(
        &self,
        extra: Vec<SimpleGraph>,
    ) -> Result<MultiLayerGraph, GraphError> {
        let mut layers = self.layers.clone();
        layers.extend(extra);
        Self::new(self.n, layers)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> MultiLayerGraph {
        MultiLayerGraph::from_edges(3, 1, [(0, 0, 1), (0, 1, 2), (0, 0, 2)]).unwrap()
    }

    #[test]
    fn induced_relabels_in_order() {
        let (h, map) = triangle().induced(&VertexSet::new([0, 2])).unwrap();
        assert_eq!(h.n(), 2);
        assert_eq!(map, vec![0, 2]);
        assert_eq!(h.layer(0).edges().collect::<Vec<_>>(), vec![(0, 1)]);
    }

    #[test]
    fn induced_on_everything_is_identity() {
        let g = triangle();
        let (h, _) = g.induced(&VertexSet::full(3)).unwrap();
        assert_eq!(g, h);
    }

    #[test]
    fn induced_rejects_out_of_range() {
        assert!(matches!(
            triangle().induced(&VertexSet::new([5])),
            Err(GraphError::VertexOutOfRange { vertex: 5, n: 3 })
        ));
    }

    #[test]
    fn restrict_single_layer() {
        let g = MultiLayerGraph::from_edges(3, 3, [(0, 0, 1), (1, 1, 2), (2, 0, 2)]).unwrap();
        let r = g.restrict_layers(&[1]).unwrap();
        assert_eq!(r.t(), 1);
        assert_eq!(r.layer(0), g.layer(1));
        assert_eq!(g.restrict_layers(&[0, 1, 2]).unwrap(), g);
        assert_eq!(g.restrict_layers(&[]), Err(GraphError::EmptyLayerSelection));
        assert!(matches!(
            g.restrict_layers(&[3]),
            Err(GraphError::LayerOutOfRange { .. })
        ));
    }

    #[test]
    fn construction_rejects_bad_edges() {
        assert_eq!(
            SimpleGraph::from_edges(3, [(1, 1)]),
            Err(GraphError::SelfLoop(1))
        );
        assert_eq!(
            SimpleGraph::from_edges(3, [(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert!(SimpleGraph::from_edges(2, [(0, 2)]).is_err());
        assert_eq!(MultiLayerGraph::new(2, vec![]), Err(GraphError::NoLayers));
    }

    #[test]
    fn complement_and_complete() {
        let k4 = SimpleGraph::complete(4);
        assert_eq!(k4.edge_count(), 6);
        assert_eq!(k4.complement(), SimpleGraph::edgeless(4));
        assert!(SimpleGraph::complete(0).components().is_empty());
    }
}
