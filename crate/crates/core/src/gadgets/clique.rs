use crate::graph::{MultiLayerGraph, SimpleGraph, Vertex};
use crate::props::PropertySpec;
use crate::solve::Instance;

use super::source::ColoredGraph;
use super::GadgetError;

/// Vertex numbering shared by the clique reductions: for every source
/// vertex a block with one slot per foreign colour (ascending), then one
/// vertex per colour.
struct Layout {
    h: usize,
    colors: Vec<usize>,
    w_base: usize,
}

impl Layout {
    fn new(g: &ColoredGraph, h: usize) -> Self {
        Layout {
            h,
            colors: g.colors().to_vec(),
            w_base: g.n() * (h - 1),
        }
    }

    /// Slot of source vertex `v` for colour `other`.
    fn slot(&self, v: Vertex, other: usize) -> Vertex {
        let own = self.colors[v];
        debug_assert_ne!(own, other);
        v * (self.h - 1) + if other < own { other } else { other - 1 }
    }

    /// The block of `v` in slot order.
    fn block(&self, v: Vertex) -> Vec<Vertex> {
        (v * (self.h - 1)..(v + 1) * (self.h - 1)).collect()
    }

    fn color_vertex(&self, j: usize) -> Vertex {
        self.w_base + j
    }
}

fn clique_edges(members: &[Vertex], out: &mut Vec<(Vertex, Vertex)>) {
    for (i, &a) in members.iter().enumerate() {
        out.extend(members[i + 1..].iter().map(|&b| (a, b)));
    }
}

fn check_source(g: &ColoredGraph, h: usize) -> Result<(), GadgetError> {
    g.require_colors(h)?;
    g.require_proper()
}

/// Per source vertex of colour `j`: the cycle `w_j`, then its block in
/// slot order, alternating between the first two layers.
pub fn matching_cycles(g: &ColoredGraph, h: usize) -> Vec<Vec<Vertex>> {
    let layout = Layout::new(g, h);
    (0..g.n())
        .map(|v| {
            let mut cycle = vec![layout.color_vertex(g.color(v))];
            cycle.extend(layout.block(v));
            cycle
        })
        .collect()
}

/// Three-layer Matching instance with `k = h^2` from a multicoloured
/// clique source with an even number `h` of colours.
///
/// Layers one and two hold one alternating `h`-cycle per source vertex
/// through its block and its colour vertex; the edge leaving the colour
/// vertex lies in layer one and the edge returning to it in layer two.
/// Layer three joins `slot(u, colour(v))` to `slot(v, colour(u))` for
/// every source edge and pairs colour `j` with colour `j + h/2`.
pub fn mcc_to_matching(g: &ColoredGraph, h: usize) -> Result<Instance, GadgetError> {
    if h < 2 || h % 2 == 1 {
        return Err(GadgetError::Precondition(format!(
            "h = {h} must be even and at least 2"
        )));
    }
    check_source(g, h)?;
    let layout = Layout::new(g, h);
    let n = layout.w_base + h;
    let mut layers = vec![Vec::new(), Vec::new(), Vec::new()];
    for cycle in matching_cycles(g, h) {
        let (w, seq) = (cycle[0], &cycle[1..]);
        for z in 1..h - 1 {
            layers[z % 2].push((seq[z - 1], seq[z]));
        }
        layers[0].push((w, seq[0]));
        layers[1].push((seq[h - 2], w));
    }
    for (u, v) in g.base().edges() {
        layers[2].push((layout.slot(u, g.color(v)), layout.slot(v, g.color(u))));
    }
    for j in 0..h / 2 {
        layers[2].push((layout.color_vertex(j), layout.color_vertex(j + h / 2)));
    }
    let layers = layers
        .into_iter()
        .map(|e| SimpleGraph::from_edges(n, e).expect("matching construction is simple"))
        .collect();
    let graph = MultiLayerGraph::new(n, layers).expect("layers share the vertex count");
    Ok(Instance::new(graph, PropertySpec::Matching, h * h, 3)?)
}

/// Two-layer c-Factor instance with `k = h^2 + h(h-1)(c-1)/2`.
///
/// Every block plus its colour vertex carries a circulant `c`-regular
/// graph in layer one, next to a clique on all edge vertices. Layer two
/// has a `(c+1)`-clique per source edge on its `c - 1` edge vertices and
/// the two matching slots, and a clique on the colour vertices.
pub fn mcc_to_cfactor(g: &ColoredGraph, h: usize, c: usize) -> Result<Instance, GadgetError> {
    if c < 2 || h < c + 1 || (c * h) % 2 == 1 {
        return Err(GadgetError::Precondition(format!(
            "c-factor construction needs c >= 2, h >= c + 1 and c h even (h = {h}, c = {c})"
        )));
    }
    check_source(g, h)?;
    let layout = Layout::new(g, h);
    let edges: Vec<(Vertex, Vertex)> = g.base().edges().collect();
    let f_base = layout.w_base + h;
    let n = f_base + edges.len() * (c - 1);
    let edge_block =
        |e: usize| -> Vec<Vertex> { (f_base + e * (c - 1)..f_base + (e + 1) * (c - 1)).collect() };

    let mut first = Vec::new();
    for v in 0..g.n() {
        let mut ring = layout.block(v);
        ring.push(layout.color_vertex(g.color(v)));
        for x in 0..h {
            for d in 1..=c / 2 {
                first.push((ring[x], ring[(x + d) % h]));
            }
            if c % 2 == 1 {
                first.push((ring[x], ring[(x + h / 2) % h]));
            }
        }
    }
    clique_edges(&(f_base..n).collect::<Vec<_>>(), &mut first);

    let mut second = Vec::new();
    for (e, &(u, v)) in edges.iter().enumerate() {
        let mut members = edge_block(e);
        members.push(layout.slot(u, g.color(v)));
        members.push(layout.slot(v, g.color(u)));
        clique_edges(&members, &mut second);
    }
    clique_edges(
        &(0..h).map(|j| layout.color_vertex(j)).collect::<Vec<_>>(),
        &mut second,
    );

    let layers = vec![
        SimpleGraph::from_edges_dedup(n, first).expect("selection layer is in range"),
        SimpleGraph::from_edges(n, second).expect("validation cliques share at most one vertex"),
    ];
    let graph = MultiLayerGraph::new(n, layers).expect("layers share the vertex count");
    let k = h * h + h * (h - 1) * (c - 1) / 2;
    Ok(Instance::new(graph, PropertySpec::CFactor(c), k, 2)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::props::check;

    fn edge_source() -> ColoredGraph {
        ColoredGraph::new(
            SimpleGraph::from_edges(2, [(0, 1)]).unwrap(),
            vec![0, 1],
            None,
        )
        .unwrap()
    }

    #[test]
    fn matching_h2_single_edge() {
        let inst = mcc_to_matching(&edge_source(), 2).unwrap();
        assert_eq!((inst.n(), inst.k(), inst.t(), inst.ell()), (4, 4, 3, 3));
    }

    #[test]
    fn matching_rejects_bad_sources() {
        assert!(mcc_to_matching(&edge_source(), 3).is_err());
        let mono = ColoredGraph::new(
            SimpleGraph::from_edges(2, [(0, 1)]).unwrap(),
            vec![0, 0],
            None,
        )
        .unwrap();
        assert!(matches!(
            mcc_to_matching(&mono, 2),
            Err(GadgetError::ImproperColoring(1, 2))
        ));
    }

    #[test]
    fn cycles_alternate() {
        let triangle4 =
            ColoredGraph::new(SimpleGraph::complete(4), vec![0, 1, 2, 3], None).unwrap();
        let inst = mcc_to_matching(&triangle4, 4).unwrap();
        let (g1, g2) = (inst.graph().layer(0), inst.graph().layer(1));
        for cycle in matching_cycles(&triangle4, 4) {
            assert_eq!(cycle.len(), 4);
            for i in 0..4 {
                let (a, b) = (cycle[i], cycle[(i + 1) % 4]);
                let layer = if i % 2 == 0 { g1 } else { g2 };
                assert!(layer.has_edge(a, b), "{a}-{b}");
            }
        }
    }

    #[test]
    fn cfactor_sizes() {
        let tri = ColoredGraph::new(SimpleGraph::complete(3), vec![0, 1, 2], None).unwrap();
        let inst = mcc_to_cfactor(&tri, 3, 2).unwrap();
        assert_eq!((inst.n(), inst.k()), (12, 12));
        let all: Vec<usize> = (0..12).collect();
        assert!(check(
            &inst.graph().layer(0).induced(&all),
            &PropertySpec::CFactor(2)
        ));
        assert!(check(
            &inst.graph().layer(1).induced(&all),
            &PropertySpec::CFactor(2)
        ));
        assert!(mcc_to_cfactor(&tri, 2, 2).is_err());
        assert!(mcc_to_cfactor(&tri, 3, 3).is_err());
    }
}
