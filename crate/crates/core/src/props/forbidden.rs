//! Forbidden induced subgraphs on at most six vertices.
//!
//! Each pattern is compiled into the set of all labelled adjacency codes of
//! its relabellings, so recognising a candidate vertex tuple is one lookup.

use std::collections::HashSet;
use std::sync::Arc;

use thiserror::Error;

use crate::graph::{SimpleGraph, Vertex, VertexSet};

pub const MAX_PATTERN_SIZE: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PatternError {
    #[error("pattern {index} has {size} vertices; patterns need 1..=6")]
    BadSize { index: usize, size: usize },
    #[error("no patterns given")]
    Empty,
    #[error("line {line}: {reason}")]
    Syntax { line: usize, reason: String },
}

/// Index of the pair `(a, b)`, `a < b < 6`, in the adjacency code.
fn pair_bit(a: usize, b: usize) -> u16 {
    debug_assert!(a < b);
    // Row-major over the strict upper triangle of a 6x6 matrix.
    let idx = a * (2 * MAX_PATTERN_SIZE - a - 1) / 2 + (b - a - 1);
    1 << idx
}

fn code_of(g: &SimpleGraph, tuple: &[Vertex]) -> u16 {
    let mut code = 0;
    for a in 0..tuple.len() {
        for b in a + 1..tuple.len() {
            if g.has_edge(tuple[a], tuple[b]) {
                code |= pair_bit(a, b);
            }
        }
    }
    code
}

fn permutations(m: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                rec(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; m], &mut out);
    out
}

#[derive(Debug)]
struct Compiled {
    /// `(pattern size, codes of every relabelling)`, ascending by size.
    by_size: Vec<(usize, HashSet<u16>)>,
}

/// A finite list of forbidden induced subgraphs.
#[derive(Debug, Clone)]
pub struct Patterns {
    graphs: Vec<SimpleGraph>,
    compiled: Arc<Compiled>,
    label: Option<String>,
}

impl PartialEq for Patterns {
    fn eq(&self, other: &Self) -> bool {
        self.graphs == other.graphs
    }
}

impl Eq for Patterns {}

impl Patterns {
    pub fn new(graphs: Vec<SimpleGraph>) -> Result<Self, PatternError> {
        if graphs.is_empty() {
            return Err(PatternError::Empty);
        }
        let mut by_size: Vec<(usize, HashSet<u16>)> = Vec::new();
        for (index, g) in graphs.iter().enumerate() {
            let size = g.n();
            if size == 0 || size > MAX_PATTERN_SIZE {
                return Err(PatternError::BadSize { index, size });
            }
            let slot = match by_size.iter().position(|(m, _)| *m == size) {
                Some(i) => i,
                None => {
                    by_size.push((size, HashSet::new()));
                    by_size.len() - 1
                }
            };
            for perm in permutations(size) {
                // perm[i] = pattern vertex placed at tuple position i.
                let mut code = 0;
                for a in 0..size {
                    for b in a + 1..size {
                        if g.has_edge(perm[a], perm[b]) {
                            code |= pair_bit(a, b);
                        }
                    }
                }
                by_size[slot].1.insert(code);
            }
        }
        by_size.sort_by_key(|(m, _)| *m);
        Ok(Patterns {
            graphs,
            compiled: Arc::new(Compiled { by_size }),
            label: None,
        })
    }

    /// Parses the pattern file format: blocks of `g <m>` followed by
    /// `e <u> <v>` lines with 1-based ids; `c` lines are comments.
    pub fn parse(text: &str) -> Result<Self, PatternError> {
        let mut blocks: Vec<(usize, Vec<(usize, usize)>)> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let fields: Vec<&str> = raw.split_whitespace().collect();
            let syntax = |reason: &str| PatternError::Syntax {
                line,
                reason: reason.to_string(),
            };
            match fields.first().copied() {
                None | Some("c") => {}
                Some("g") => {
                    let m = fields
                        .get(1)
                        .and_then(|s| s.parse::<usize>().ok())
                        .filter(|_| fields.len() == 2)
                        .ok_or_else(|| syntax("expected `g <m>`"))?;
                    blocks.push((m, Vec::new()));
                }
                Some("e") => {
                    let block = blocks
                        .last_mut()
                        .ok_or_else(|| syntax("edge before `g` line"))?;
                    if fields.len() != 3 {
                        return Err(syntax("expected `e <u> <v>`"));
                    }
                    let u: usize = fields[1].parse().map_err(|_| syntax("bad vertex"))?;
                    let v: usize = fields[2].parse().map_err(|_| syntax("bad vertex"))?;
                    if u == 0 || v == 0 || u > block.0 || v > block.0 {
                        return Err(syntax("vertex out of range"));
                    }
                    block.1.push((u - 1, v - 1));
                }
                Some(other) => return Err(syntax(&format!("unknown tag `{other}`"))),
            }
        }
        let graphs = blocks
            .into_iter()
            .enumerate()
            .map(|(i, (m, edges))| {
                SimpleGraph::from_edges(m, edges).map_err(|e| PatternError::Syntax {
                    line: 0,
                    reason: format!("pattern {}: {e}", i + 1),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(graphs)
    }

    /// Attaches the name used when the owning property is printed.
    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn graphs(&self) -> &[SimpleGraph] {
        &self.graphs
    }

    pub fn max_size(&self) -> usize {
        self.graphs.iter().map(SimpleGraph::n).max().unwrap_or(0)
    }

    fn sizes(&self) -> impl Iterator<Item = (usize, &HashSet<u16>)> {
        self.compiled.by_size.iter().map(|(m, c)| (*m, c))
    }
}

/// Visits all `m`-subsets of `0..n` in lexicographic order; stops when the
/// visitor returns `true`.
pub(crate) fn for_each_combination(
    n: usize,
    m: usize,
    mut visit: impl FnMut(&[usize]) -> bool,
) -> bool {
    if m > n {
        return false;
    }
    let mut c: Vec<usize> = (0..m).collect();
    loop {
        if visit(&c) {
            return true;
        }
        let mut i = m;
        while i > 0 && c[i - 1] == n - m + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return false;
        }
        c[i - 1] += 1;
        for j in i..m {
            c[j] = c[j - 1] + 1;
        }
    }
}

/// Lexicographically smallest vertex set inducing a copy of some pattern.
pub fn find_forbidden(g: &SimpleGraph, patterns: &Patterns) -> Option<VertexSet> {
    let mut best: Option<Vec<Vertex>> = None;
    for (m, codes) in patterns.sizes() {
        let mut found = None;
        for_each_combination(g.n(), m, |tuple| {
            if codes.contains(&code_of(g, tuple)) {
                found = Some(tuple.to_vec());
                true
            } else {
                false
            }
        });
        if let Some(f) = found {
            if best.as_ref().is_none_or(|b| f < *b) {
                best = Some(f);
            }
        }
    }
    best.map(VertexSet::new)
}

/// Every vertex set inducing a copy of some pattern, grouped by size and
/// lexicographic within a size.
pub fn all_occurrences(g: &SimpleGraph, patterns: &Patterns) -> Vec<VertexSet> {
    let mut out = Vec::new();
    for (m, codes) in patterns.sizes() {
        for_each_combination(g.n(), m, |tuple| {
            if codes.contains(&code_of(g, tuple)) {
                out.push(VertexSet::new(tuple.iter().copied()));
            }
            false
        });
    }
    out
}

/// Standard small graphs used as patterns and in tests.
pub mod named {
    use crate::graph::SimpleGraph;

    pub fn path(m: usize) -> SimpleGraph {
        SimpleGraph::from_edges(m, (1..m).map(|i| (i - 1, i))).unwrap()
    }

    pub fn cycle(m: usize) -> SimpleGraph {
        assert!(m >= 3);
        SimpleGraph::from_edges(m, (0..m).map(|i| (i, (i + 1) % m))).unwrap()
    }

    pub fn star(leaves: usize) -> SimpleGraph {
        SimpleGraph::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i))).unwrap()
    }

    pub fn complete(m: usize) -> SimpleGraph {
        SimpleGraph::complete(m)
    }

    pub fn edgeless(m: usize) -> SimpleGraph {
        SimpleGraph::edgeless(m)
    }
}

#[cfg(test)]
mod tests {
    use super::named::*;
    use super::*;

    #[test]
    fn combinations_are_lexicographic() {
        let mut seen = Vec::new();
        for_each_combination(4, 2, |c| {
            seen.push(c.to_vec());
            false
        });
        assert_eq!(
            seen,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        let mut count = 0;
        for_each_combination(3, 0, |_| {
            count += 1;
            false
        });
        assert_eq!(count, 1);
        assert!(!for_each_combination(2, 3, |_| true));
    }

    #[test]
    fn p3_in_path() {
        let p = Patterns::new(vec![path(3)]).unwrap();
        assert_eq!(
            find_forbidden(&path(3), &p),
            Some(VertexSet::new([0, 1, 2]))
        );
    }

    #[test]
    fn cluster_graph_is_p3_free() {
        let p = Patterns::new(vec![path(3)]).unwrap();
        let g =
            SimpleGraph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_eq!(find_forbidden(&g, &p), None);
    }

    #[test]
    fn smallest_across_sizes() {
        // K_2 at {1,2} and P_3 at {0,1,2}: {0,1,2} < {1,2}.
        let g = SimpleGraph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let p = Patterns::new(vec![complete(2), path(3)]).unwrap();
        assert_eq!(find_forbidden(&g, &p), Some(VertexSet::new([0, 1])));
        let g = SimpleGraph::from_edges(4, [(0, 2), (2, 3), (1, 3)]).unwrap();
        let p = Patterns::new(vec![path(4)]).unwrap();
        assert_eq!(find_forbidden(&g, &p), Some(VertexSet::new([0, 1, 2, 3])));
    }

    #[test]
    fn occurrences_of_edges_in_triangle() {
        let p = Patterns::new(vec![complete(2)]).unwrap();
        assert_eq!(all_occurrences(&cycle(3), &p).len(), 3);
    }

    #[test]
    fn pattern_file_format() {
        let p = Patterns::parse("c two patterns\ng 3\ne 1 2\ne 2 3\ng 1\n").unwrap();
        assert_eq!(p.graphs().len(), 2);
        assert_eq!(p.graphs()[0], path(3));
        assert!(Patterns::parse("g 7\n").is_err());
        assert!(Patterns::parse("e 1 2\n").is_err());
        assert!(Patterns::parse("g 2\ne 1 3\n").is_err());
        assert!(Patterns::parse("").is_err());
    }
}
