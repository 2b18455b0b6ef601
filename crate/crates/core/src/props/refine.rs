use std::collections::BTreeSet;

use thiserror::Error;

use crate::graph::{SimpleGraph, Vertex, VertexSet};

use super::{structure, PropertySpec};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RefineError {
    #[error("property `{0}` has no partition refinement")]
    Unsupported(String),
}

/// Disjoint nonempty cells covering `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    cells: Vec<VertexSet>,
}

impl Partition {
    /// Sorts cells by their smallest member. Panics if the cells overlap,
    /// miss a vertex or include an empty set.
    pub fn new(n: usize, mut cells: Vec<VertexSet>) -> Self {
        let mut seen = vec![false; n];
        for cell in &cells {
            assert!(!cell.is_empty(), "empty cell");
            for v in cell.iter() {
                assert!(v < n && !seen[v], "cells overlap or leave the vertex range");
                seen[v] = true;
            }
        }
        assert!(seen.iter().all(|&s| s), "cells do not cover every vertex");
        cells.sort_by_key(|c| c.as_slice()[0]);
        Partition { cells }
    }

    pub fn cells(&self) -> &[VertexSet] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn into_cells(self) -> Vec<VertexSet> {
        self.cells
    }
}

fn with_singletons(n: usize, mut cells: Vec<VertexSet>) -> Partition {
    let mut covered = vec![false; n];
    for c in &cells {
        for v in c.iter() {
            covered[v] = true;
        }
    }
    cells.extend((0..n).filter(|&v| !covered[v]).map(|v| VertexSet::new([v])));
    Partition::new(n, cells)
}

fn core_vertices(g: &SimpleGraph, c: usize) -> Vec<Vertex> {
    let n = g.n();
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut stack: Vec<Vertex> = (0..n).filter(|&v| degree[v] < c).collect();
    while let Some(v) = stack.pop() {
        if removed[v] {
            continue;
        }
        removed[v] = true;
        for &u in g.neighbors(v) {
            if !removed[u] {
                degree[u] -= 1;
                if degree[u] < c {
                    stack.push(u);
                }
            }
        }
    }
    (0..n).filter(|&v| !removed[v]).collect()
}

fn truss_cells(g: &SimpleGraph, c: usize) -> Vec<VertexSet> {
    let alive = structure::truss_peel(g, c - 2);
    let edges = (0..g.n()).flat_map(|u| {
        alive[u]
            .iter()
            .filter(move |&&v| u < v)
            .map(move |&v| (u, v))
    });
    let surviving = SimpleGraph::from_edges(g.n(), edges).expect("subgraph of a simple graph");
    surviving
        .components()
        .into_iter()
        .filter(|comp| comp.len() > 1)
        .map(VertexSet::new)
        .collect()
}

fn edge_connected_cells(
    g: &SimpleGraph,
    c: usize,
    vertices: Vec<Vertex>,
    out: &mut Vec<VertexSet>,
) {
    if vertices.len() == 1 {
        out.push(VertexSet::new(vertices));
        return;
    }
    let sub = g.induced(&vertices);
    let comps = sub.components();
    if comps.len() > 1 {
        for comp in comps {
            edge_connected_cells(g, c, comp.into_iter().map(|i| vertices[i]).collect(), out);
        }
        return;
    }
    let (value, side) = structure::min_edge_cut(&sub);
    if value >= c {
        out.push(VertexSet::new(vertices));
        return;
    }
    let side: BTreeSet<usize> = side.into_iter().collect();
    let (a, b): (Vec<usize>, Vec<usize>) = (0..vertices.len()).partition(|i| side.contains(i));
    edge_connected_cells(g, c, a.into_iter().map(|i| vertices[i]).collect(), out);
    edge_connected_cells(g, c, b.into_iter().map(|i| vertices[i]).collect(), out);
}

/// Splits `0..n` so that every vertex set inducing a member of `pi` lies
/// inside a single cell.
///
/// Cells of connectivity, c-core and c-edge-connectivity refinements
/// satisfy the property themselves. A c-truss cell may still contain an
/// edge removed during peeling; such a cell can come back unsplit.
pub fn pi_refine(g: &SimpleGraph, pi: &PropertySpec) -> Result<Partition, RefineError> {
    let n = g.n();
    let cells = match *pi {
        PropertySpec::Connectivity => g.components().into_iter().map(VertexSet::new).collect(),
        PropertySpec::CCore(c) => {
            let core = core_vertices(g, c);
            if core.is_empty() {
                Vec::new()
            } else {
                vec![VertexSet::new(core)]
            }
        }
        PropertySpec::CTruss(c) => truss_cells(g, c),
        PropertySpec::CEdgeConnectivity(c) => {
            let mut out = Vec::new();
            if n > 0 {
                edge_connected_cells(g, c, (0..n).collect(), &mut out);
            }
            out
        }
        _ => return Err(RefineError::Unsupported(pi.to_string())),
    };
    Ok(with_singletons(n, cells))
}
