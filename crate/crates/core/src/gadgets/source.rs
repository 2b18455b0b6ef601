use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{SimpleGraph, Vertex, VertexSet};
use crate::props::forbidden::for_each_combination;

use super::GadgetError;

/// Side of a vertex in a bipartite source.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    Low,
    High,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SourceMode {
    Clique,
    Biclique,
}

/// A vertex-coloured graph; bipartite sources also carry sides, and a
/// generated source remembers the planted vertex set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredGraph {
    base: SimpleGraph,
    colors: Vec<usize>,
    sides: Option<Vec<Side>>,
    planted: Option<VertexSet>,
}

impl ColoredGraph {
    pub fn new(
        base: SimpleGraph,
        colors: Vec<usize>,
        sides: Option<Vec<Side>>,
    ) -> Result<Self, GadgetError> {
        if colors.len() != base.n() {
            return Err(GadgetError::Source(format!(
                "{} colours for {} vertices",
                colors.len(),
                base.n()
            )));
        }
        if let Some(s) = &sides {
            if s.len() != base.n() {
                return Err(GadgetError::Source(format!(
                    "{} sides for {} vertices",
                    s.len(),
                    base.n()
                )));
            }
            if let Some((u, v)) = base.edges().find(|&(u, v)| s[u] == s[v]) {
                return Err(GadgetError::Source(format!(
                    "edge {{{}, {}}} inside one side",
                    u + 1,
                    v + 1
                )));
            }
        }
        Ok(ColoredGraph {
            base,
            colors,
            sides,
            planted: None,
        })
    }

    pub fn base(&self) -> &SimpleGraph {
        &self.base
    }

    pub fn color(&self, v: Vertex) -> usize {
        self.colors[v]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn side(&self, v: Vertex) -> Option<Side> {
        self.sides.as_ref().map(|s| s[v])
    }

    pub fn sides(&self) -> Option<&[Side]> {
        self.sides.as_deref()
    }

    pub fn planted(&self) -> Option<&VertexSet> {
        self.planted.as_ref()
    }

    pub fn n(&self) -> usize {
        self.base.n()
    }

    /// Vertices of colour `c` (and side `side`, if given), ascending.
    pub fn class(&self, c: usize, side: Option<Side>) -> Vec<Vertex> {
        (0..self.n())
            .filter(|&v| self.colors[v] == c && (side.is_none() || self.side(v) == side))
            .collect()
    }

    pub(crate) fn require_colors(&self, h: usize) -> Result<(), GadgetError> {
        match self.colors.iter().position(|&c| c >= h) {
            Some(v) => Err(GadgetError::Source(format!(
                "vertex {} has colour {} >= h = {h}",
                v + 1,
                self.colors[v] + 1
            ))),
            None => Ok(()),
        }
    }

    pub(crate) fn require_proper(&self) -> Result<(), GadgetError> {
        match self
            .base
            .edges()
            .find(|&(u, v)| self.colors[u] == self.colors[v])
        {
            Some((u, v)) => Err(GadgetError::ImproperColoring(u + 1, v + 1)),
            None => Ok(()),
        }
    }
}

/// Seeded random coloured source with `per_color` vertices per colour
/// (per side and colour for bicliques). Clique sources join vertices of
/// different colours, biclique sources join low to high vertices, each
/// pair independently with probability `edge_prob`. Planting adds a
/// multicoloured clique (biclique) on one random vertex per colour.
pub fn gen_colored_source(
    h: usize,
    per_color: usize,
    edge_prob: f64,
    plant: bool,
    seed: u64,
    mode: SourceMode,
) -> Result<ColoredGraph, GadgetError> {
    if h == 0 || per_color == 0 {
        return Err(GadgetError::Precondition(
            "h and per-color must be positive".into(),
        ));
    }
    if !(0.0..=1.0).contains(&edge_prob) {
        return Err(GadgetError::Precondition(format!(
            "edge probability {edge_prob} outside [0, 1]"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let groups = match mode {
        SourceMode::Clique => h,
        SourceMode::Biclique => 2 * h,
    };
    let n = groups * per_color;
    let colors: Vec<usize> = (0..n).map(|v| (v / per_color) % h).collect();
    let sides = match mode {
        SourceMode::Clique => None,
        SourceMode::Biclique => Some(
            (0..n)
                .map(|v| {
                    if v < h * per_color {
                        Side::Low
                    } else {
                        Side::High
                    }
                })
                .collect::<Vec<_>>(),
        ),
    };
    let joinable = |u: usize, v: usize| match &sides {
        None => colors[u] != colors[v],
        Some(s) => s[u] != s[v],
    };
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if joinable(u, v) && rng.gen_bool(edge_prob) {
                edges.push((u, v));
            }
        }
    }
    let planted = if plant {
        let chosen: Vec<Vertex> = (0..groups)
            .map(|g| {
                let members: Vec<Vertex> = (g * per_color..(g + 1) * per_color).collect();
                *members.choose(&mut rng).expect("groups are nonempty")
            })
            .collect();
        for (a, &u) in chosen.iter().enumerate() {
            for &v in &chosen[a + 1..] {
                if joinable(u, v) {
                    edges.push((u.min(v), u.max(v)));
                }
            }
        }
        Some(VertexSet::new(chosen))
    } else {
        None
    };
    let base = SimpleGraph::from_edges_dedup(n, edges).expect("generated edges are in range");
    let mut g = ColoredGraph::new(base, colors, sides)?;
    g.planted = planted;
    Ok(g)
}

/// A clique with exactly one vertex of each colour `0..h`.
pub fn has_multicolored_clique(g: &ColoredGraph, h: usize) -> Option<VertexSet> {
    fn extend(g: &ColoredGraph, h: usize, chosen: &mut Vec<Vertex>) -> bool {
        let c = chosen.len();
        if c == h {
            return true;
        }
        for v in g.class(c, None) {
            if chosen.iter().all(|&u| g.base().has_edge(u, v)) {
                chosen.push(v);
                if extend(g, h, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    let mut chosen = Vec::new();
    extend(g, h, &mut chosen).then(|| VertexSet::new(chosen))
}

/// One low and one high vertex of every colour `0..h`, all low-high pairs
/// adjacent.
pub fn has_multicolored_biclique(g: &ColoredGraph, h: usize) -> Option<VertexSet> {
    g.sides()?;
    let highs: Vec<Vec<Vertex>> = (0..h).map(|c| g.class(c, Some(Side::High))).collect();
    fn pick_low(
        g: &ColoredGraph,
        h: usize,
        highs: &[Vec<Vertex>],
        lows: &mut Vec<Vertex>,
    ) -> Option<Vec<Vertex>> {
        let common = |c: usize, lows: &[Vertex]| -> Vec<Vertex> {
            highs[c]
                .iter()
                .copied()
                .filter(|&w| lows.iter().all(|&u| g.base().has_edge(u, w)))
                .collect()
        };
        if lows.len() == h {
            let mut chosen = lows.clone();
            for c in 0..h {
                chosen.push(*common(c, lows).first()?);
            }
            return Some(chosen);
        }
        for u in g.class(lows.len(), Some(Side::Low)) {
            lows.push(u);
            if (0..h).all(|c| !common(c, lows).is_empty()) {
                if let Some(found) = pick_low(g, h, highs, lows) {
                    return Some(found);
                }
            }
            lows.pop();
        }
        None
    }
    pick_low(g, h, &highs, &mut Vec::new()).map(VertexSet::new)
}

/// Disjoint `C`, `D` of size `h` with every pair between them adjacent.
pub fn has_biclique(g: &SimpleGraph, h: usize) -> bool {
    for_each_combination(g.n(), h, |c| {
        let common = (0..g.n())
            .filter(|&v| c.iter().all(|&u| g.has_edge(u, v)))
            .count();
        common >= h
    })
}
