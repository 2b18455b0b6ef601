use crate::graph::{MultiLayerGraph, SimpleGraph, Vertex};
use crate::props::PropertySpec;
use crate::solve::Instance;

use super::source::{ColoredGraph, Side};
use super::GadgetError;

/// Vertex numbering: source vertices keep their ids, then `s1`, `s2`, one
/// ascending vertex per source edge and one descending vertex per source
/// edge, both in edge order.
struct Layout {
    h: usize,
    s1: Vertex,
    s2: Vertex,
    /// `(low, high)` endpoint of each source edge.
    edges: Vec<(Vertex, Vertex)>,
    low: Vec<Vec<Vertex>>,
    high: Vec<Vec<Vertex>>,
    /// `asc[i][j]`: ascending vertices from low colour `i` to high colour `j`.
    asc: Vec<Vec<Vec<usize>>>,
    /// `desc[i][j]`: descending vertices from high colour `i` to low colour `j`.
    desc: Vec<Vec<Vec<usize>>>,
}

impl Layout {
    fn new(g: &ColoredGraph, h: usize) -> Result<Self, GadgetError> {
        if h == 0 {
            return Err(GadgetError::Precondition("h must be positive".into()));
        }
        if g.sides().is_none() {
            return Err(GadgetError::Source(
                "biclique source needs low and high sides".into(),
            ));
        }
        g.require_colors(h)?;
        let edges: Vec<(Vertex, Vertex)> = g
            .base()
            .edges()
            .map(|(a, b)| {
                if g.side(a) == Some(Side::Low) {
                    (a, b)
                } else {
                    (b, a)
                }
            })
            .collect();
        let mut asc = vec![vec![Vec::new(); h]; h];
        let mut desc = vec![vec![Vec::new(); h]; h];
        for (e, &(u, w)) in edges.iter().enumerate() {
            asc[g.color(u)][g.color(w)].push(e);
            desc[g.color(w)][g.color(u)].push(e);
        }
        Ok(Layout {
            h,
            s1: g.n(),
            s2: g.n() + 1,
            low: (0..h).map(|c| g.class(c, Some(Side::Low))).collect(),
            high: (0..h).map(|c| g.class(c, Some(Side::High))).collect(),
            edges,
            asc,
            desc,
        })
    }

    fn n(&self) -> usize {
        self.s2 + 1 + 2 * self.edges.len()
    }

    fn alpha(&self, e: usize) -> Vertex {
        self.s2 + 1 + e
    }

    fn delta(&self, e: usize) -> Vertex {
        self.s2 + 1 + self.edges.len() + e
    }

    fn asc_level(&self, i: usize, j: usize) -> Vec<Vertex> {
        self.asc[i][j].iter().map(|&e| self.alpha(e)).collect()
    }

    fn desc_level(&self, i: usize, j: usize) -> Vec<Vertex> {
        self.desc[i][j].iter().map(|&e| self.delta(e)).collect()
    }

    fn selection_levels(&self) -> Vec<Vec<Vertex>> {
        let mut levels = Vec::new();
        for i in 0..self.h {
            levels.push(self.low[i].clone());
            levels.extend((0..self.h).map(|j| self.asc_level(i, j)));
        }
        levels.push(vec![self.s1]);
        levels.push(vec![self.s2]);
        for i in 0..self.h {
            levels.push(self.high[i].clone());
            levels.extend((0..self.h).map(|j| self.desc_level(i, j)));
        }
        levels
    }

    fn validation_levels(&self) -> Vec<Vec<Vertex>> {
        let mut levels = vec![vec![self.s1]];
        for i in 0..self.h {
            for j in 0..self.h {
                levels.push(self.asc_level(i, j));
                levels.push(self.desc_level(j, i));
            }
        }
        levels.push(vec![self.s2]);
        levels.extend(self.low.iter().cloned());
        levels.extend(self.high.iter().cloned());
        levels
    }

    fn selection_edges(&self) -> Vec<(Vertex, Vertex)> {
        let h = self.h;
        let mut out = Vec::new();
        for i in 0..h {
            for &e in &self.asc[i][0] {
                out.push((self.edges[e].0, self.alpha(e)));
            }
            for j in 0..h - 1 {
                for &e in &self.asc[i][j] {
                    for &f in &self.asc[i][j + 1] {
                        if self.edges[e].0 == self.edges[f].0 {
                            out.push((self.alpha(e), self.alpha(f)));
                        }
                    }
                }
            }
            let next: &[Vertex] = if i + 1 < h {
                &self.low[i + 1]
            } else {
                std::slice::from_ref(&self.s1)
            };
            for &e in &self.asc[i][h - 1] {
                out.extend(next.iter().map(|&u| (self.alpha(e), u)));
            }
        }
        out.push((self.s1, self.s2));
        out.extend(self.high[0].iter().map(|&w| (self.s2, w)));
        for i in 0..h {
            for &e in &self.desc[i][0] {
                out.push((self.edges[e].1, self.delta(e)));
            }
            for j in 0..h - 1 {
                for &e in &self.desc[i][j] {
                    for &f in &self.desc[i][j + 1] {
                        if self.edges[e].1 == self.edges[f].1 {
                            out.push((self.delta(e), self.delta(f)));
                        }
                    }
                }
            }
            if i + 1 < h {
                for &e in &self.desc[i][h - 1] {
                    out.extend(self.high[i + 1].iter().map(|&w| (self.delta(e), w)));
                }
            }
        }
        out
    }

    fn validation_edges(&self) -> Vec<(Vertex, Vertex)> {
        let levels = self.validation_levels();
        let mut out = Vec::new();
        for (idx, pair) in levels.windows(2).enumerate() {
            // Levels 1, 3, 5, ... (0-based) start an ascending/descending pair.
            let paired = idx % 2 == 1 && idx < 2 * self.h * self.h;
            if paired {
                let (i, j) = ((idx - 1) / 2 / self.h, (idx - 1) / 2 % self.h);
                out.extend(
                    self.asc[i][j]
                        .iter()
                        .map(|&e| (self.alpha(e), self.delta(e))),
                );
            } else {
                for &a in &pair[0] {
                    out.extend(pair[1].iter().map(|&b| (a, b)));
                }
            }
        }
        out
    }
}

/// Level sequences of the selection and validation layers.
pub fn hamiltonian_levels(
    g: &ColoredGraph,
    h: usize,
) -> Result<(Vec<Vec<Vertex>>, Vec<Vec<Vertex>>), GadgetError> {
    let layout = Layout::new(g, h)?;
    Ok((layout.selection_levels(), layout.validation_levels()))
}

/// Two-layer Hamiltonian instance with `k = 2h + 2h^2 + 2` from a
/// multicoloured biclique source with `h` low and `h` high colours.
///
/// The selection layer chains each low vertex through its ascending edge
/// vertices by increasing high colour, then `s1`, `s2`, and the high
/// vertices with their descending edge vertices likewise. The validation
/// layer orders `s1`, the ascending and descending levels of each colour
/// pair (lexicographic), `s2`, the low and then the high colours; it joins
/// consecutive levels completely, except that an ascending level meets
/// its descending partner only through copies of the same source edge.
pub fn mcb_to_hamiltonian(g: &ColoredGraph, h: usize) -> Result<Instance, GadgetError> {
    let layout = Layout::new(g, h)?;
    let n = layout.n();
    let layers = vec![
        SimpleGraph::from_edges(n, layout.selection_edges()).expect("selection layer is simple"),
        SimpleGraph::from_edges(n, layout.validation_edges()).expect("validation layer is simple"),
    ];
    let graph = MultiLayerGraph::new(n, layers).expect("layers share the vertex count");
    Ok(Instance::new(
        graph,
        PropertySpec::Hamiltonian,
        2 * h + 2 * h * h + 2,
        2,
    )?)
}

/// Every edge of `g` joins consecutive levels.
pub fn edges_respect_levels(g: &SimpleGraph, levels: &[Vec<Vertex>]) -> bool {
    let mut level_of = vec![usize::MAX; g.n()];
    for (i, level) in levels.iter().enumerate() {
        for &v in level {
            level_of[v] = i;
        }
    }
    g.edges().all(|(u, v)| {
        let (a, b) = (level_of[u], level_of[v]);
        a != usize::MAX && b != usize::MAX && a.abs_diff(b) == 1
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::props::check;

    fn source(edges: &[(usize, usize)], n_low: usize, colors: Vec<usize>) -> ColoredGraph {
        let n = colors.len();
        let sides = (0..n)
            .map(|v| if v < n_low { Side::Low } else { Side::High })
            .collect();
        ColoredGraph::new(
            SimpleGraph::from_edges(n, edges.iter().copied()).unwrap(),
            colors,
            Some(sides),
        )
        .unwrap()
    }

    #[test]
    fn single_edge() {
        let g = source(&[(0, 1)], 1, vec![0, 0]);
        let inst = mcb_to_hamiltonian(&g, 1).unwrap();
        assert_eq!((inst.n(), inst.k()), (6, 6));
        let all: Vec<usize> = (0..6).collect();
        for i in 0..2 {
            assert!(check(
                &inst.graph().layer(i).induced(&all),
                &PropertySpec::Hamiltonian
            ));
        }
        let empty = source(&[], 1, vec![0, 0]);
        assert_eq!(mcb_to_hamiltonian(&empty, 1).unwrap().n(), 4);
    }

    #[test]
    fn levels_h2() {
        // Complete K_{2,2} with colours 0, 1 on each side.
        let g = source(&[(0, 2), (0, 3), (1, 2), (1, 3)], 2, vec![0, 1, 0, 1]);
        let inst = mcb_to_hamiltonian(&g, 2).unwrap();
        assert_eq!(inst.k(), 14);
        let (sel, val) = hamiltonian_levels(&g, 2).unwrap();
        assert_eq!(sel.len(), 14);
        assert_eq!(val.len(), 14);
        assert!(edges_respect_levels(inst.graph().layer(0), &sel));
        assert!(edges_respect_levels(inst.graph().layer(1), &val));
        let all: Vec<usize> = (0..inst.n()).collect();
        for i in 0..2 {
            assert!(check(
                &inst.graph().layer(i).induced(&all),
                &PropertySpec::Hamiltonian
            ));
        }
    }
}
