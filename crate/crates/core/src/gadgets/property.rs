use crate::graph::{MultiLayerGraph, SimpleGraph, Vertex, VertexSet};
use crate::props::PropertySpec;
use crate::solve::Instance;

use super::GadgetError;

/// A graph whose vertex set splits into equal blocks, one per element of
/// `W`, plus an anchor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetOutput {
    pub graph: SimpleGraph,
    pub blocks: Vec<VertexSet>,
    pub anchor: VertexSet,
    /// Block size.
    pub f: usize,
    /// Anchor size.
    pub f_prime: usize,
    /// `alpha * f + f'`, the size from which membership pins down the
    /// block structure.
    pub threshold: usize,
}

/// Block and anchor sizes of the gadget for `kind`.
pub fn gadget_sizes(kind: &PropertySpec) -> Result<(usize, usize), GadgetError> {
    use PropertySpec::*;
    Ok(match *kind {
        Connectivity | Tree | Star => (1, 1),
        CCore(c) | CConnectivity(c) => (1, c),
        CTruss(c) => (1, c + 1),
        Matching => (2, 0),
        CFactor(c) => (c + 1, 0),
        _ => return Err(GadgetError::Unsupported(kind.to_string())),
    })
}

/// Builds the gadget over `w` source elements `0..w`, of which `selected`
/// are marked. Blocks come first in element order, then the anchor.
pub fn build_property_gadget(
    w: usize,
    selected: &[usize],
    alpha: usize,
    kind: &PropertySpec,
) -> Result<GadgetOutput, GadgetError> {
    kind.validate()
        .map_err(|e| GadgetError::Precondition(e.to_string()))?;
    let (f, f_prime) = gadget_sizes(kind)?;
    if let Some(&bad) = selected.iter().find(|&&v| v >= w) {
        return Err(GadgetError::Precondition(format!(
            "selected element {} outside W",
            bad + 1
        )));
    }
    let mut marked = vec![false; w];
    for &v in selected {
        marked[v] = true;
    }
    let n = w * f + f_prime;
    let blocks: Vec<VertexSet> = (0..w).map(|v| VertexSet::new(v * f..(v + 1) * f)).collect();
    let anchor = VertexSet::new(w * f..n);
    let hubs: Vec<Vertex> = anchor.iter().collect();
    let mut edges = Vec::new();
    match *kind {
        PropertySpec::Matching => {
            edges.extend((0..w).filter(|&v| marked[v]).map(|v| (2 * v, 2 * v + 1)));
        }
        PropertySpec::CFactor(_) => {
            for v in (0..w).filter(|&v| marked[v]) {
                let block = blocks[v].as_slice();
                for (i, &a) in block.iter().enumerate() {
                    edges.extend(block[i + 1..].iter().map(|&b| (a, b)));
                }
            }
        }
        _ => {
            for v in (0..w).filter(|&v| marked[v]) {
                edges.extend(hubs.iter().map(|&u| (v, u)));
            }
            if matches!(kind, PropertySpec::CTruss(_)) {
                for (i, &a) in hubs.iter().enumerate() {
                    edges.extend(hubs[i + 1..].iter().map(|&b| (a, b)));
                }
            }
        }
    }
    let graph = SimpleGraph::from_edges(n, edges).expect("gadget edges are simple");
    Ok(GadgetOutput {
        graph,
        blocks,
        anchor,
        f,
        f_prime,
        threshold: alpha * f + f_prime,
    })
}

/// One layer per vertex `v` of `h_graph`, the gadget over all vertices
/// with `N(v)` marked; `k = h f + f'` and `ell = h`.
pub fn biclique_to_piml(
    h_graph: &SimpleGraph,
    h: usize,
    kind: &PropertySpec,
) -> Result<Instance, GadgetError> {
    if h < 2 {
        return Err(GadgetError::Precondition("h must be at least 2".into()));
    }
    let w = h_graph.n();
    if w < h {
        return Err(GadgetError::Precondition(format!(
            "source has {w} vertices, fewer than h = {h}"
        )));
    }
    let (f, f_prime) = gadget_sizes(kind)?;
    let layers = (0..w)
        .map(|v| build_property_gadget(w, h_graph.neighbors(v), h, kind).map(|g| g.graph))
        .collect::<Result<Vec<_>, _>>()?;
    let graph =
        MultiLayerGraph::new(w * f + f_prime, layers).expect("gadget layers share one layout");
    Ok(Instance::new(graph, kind.clone(), h * f + f_prime, h)?)
}

/// Appends `new_ell - ell` complete layers, then edgeless layers so that
/// `new_t - new_ell` layers may be dropped, as before `t - ell`.
pub fn pad_layers(inst: &Instance, new_t: usize, new_ell: usize) -> Result<Instance, GadgetError> {
    let (t, ell, n) = (inst.t(), inst.ell(), inst.n());
    if new_ell < ell || new_t < new_ell || new_t - new_ell < t - ell {
        return Err(GadgetError::Precondition(format!(
            "cannot pad t = {t}, ell = {ell} to t = {new_t}, ell = {new_ell}"
        )));
    }
    let complete = new_ell - ell;
    let edgeless = (new_t - new_ell) - (t - ell);
    let mut extra = vec![SimpleGraph::complete(n); complete];
    extra.extend(std::iter::repeat_n(SimpleGraph::edgeless(n), edgeless));
    let graph = inst
        .graph()
        .with_extra_layers(extra)
        .expect("padding layers match the vertex count");
    Ok(Instance::new(graph, inst.pi().clone(), inst.k(), new_ell)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn connectivity_gadget() {
        let out = build_property_gadget(3, &[0, 1], 2, &PropertySpec::Connectivity).unwrap();
        assert_eq!(out.graph.n(), 4);
        assert_eq!(out.graph.edges().collect::<Vec<_>>(), vec![(0, 3), (1, 3)]);
        assert_eq!((out.f, out.f_prime), (1, 1));
        assert_eq!(out.anchor, VertexSet::new([3]));
    }

    #[test]
    fn matching_gadget() {
        let out = build_property_gadget(2, &[0], 2, &PropertySpec::Matching).unwrap();
        assert_eq!(out.graph.edges().collect::<Vec<_>>(), vec![(0, 1)]);
        assert_eq!((out.f, out.f_prime), (2, 0));
        assert!(out.anchor.is_empty());
    }

    #[test]
    fn truss_and_factor_gadgets() {
        let out = build_property_gadget(2, &[1], 2, &PropertySpec::CTruss(3)).unwrap();
        assert_eq!(out.graph.n(), 6);
        assert_eq!(out.graph.edge_count(), 6 + 4);
        let out = build_property_gadget(2, &[1], 2, &PropertySpec::CFactor(2)).unwrap();
        assert_eq!(out.graph.edge_count(), 3);
        assert!(build_property_gadget(2, &[1], 2, &PropertySpec::Hamiltonian).is_err());
    }

    #[test]
    fn c4_source() {
        let c4 = SimpleGraph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let inst = biclique_to_piml(&c4, 2, &PropertySpec::Connectivity).unwrap();
        assert_eq!((inst.t(), inst.k(), inst.ell()), (4, 3, 2));
    }

    #[test]
    fn padding() {
        let c4 = SimpleGraph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let inst = biclique_to_piml(&c4, 2, &PropertySpec::Matching).unwrap();
        assert_eq!(pad_layers(&inst, 4, 2).unwrap(), inst);
        let padded = pad_layers(&inst, 7, 3).unwrap();
        assert_eq!((padded.t(), padded.ell()), (7, 3));
        assert_eq!(padded.graph().layer(4).edge_count(), 28);
        assert_eq!(padded.graph().layer(5).edge_count(), 0);
        assert!(pad_layers(&inst, 3, 2).is_err());
    }
}
