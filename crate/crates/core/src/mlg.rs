//! The `.mlg` text format.
//!
//! ```text
//! c any comment
//! p mlg <n> <t>
//! e <layer> <u> <v>
//! ```
//!
//! Ids are 1-based. The canonical form has no comments and lists edges
//! sorted by `(layer, u, v)` with `u < v`.

use std::collections::HashSet;
use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{GraphError, MultiLayerGraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: unknown line tag `{tag}`")]
    UnknownTag { line: usize, tag: String },
    #[error("line {line}: edge before the `p mlg` header")]
    EdgeBeforeHeader { line: usize },
    #[error("line {line}: second `p` header")]
    DuplicateHeader { line: usize },
    #[error("line {line}: malformed line: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("line {line}: layer {layer} out of range 1..={t}")]
    LayerOutOfRange { line: usize, layer: usize, t: usize },
    #[error("line {line}: vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange {
        line: usize,
        vertex: usize,
        n: usize,
    },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: duplicate edge {u} {v} in layer {layer}")]
    DuplicateEdge {
        line: usize,
        layer: usize,
        u: usize,
        v: usize,
    },
    #[error("missing `p mlg <n> <t>` header")]
    MissingHeader,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn numbers(line: usize, fields: &[&str], want: usize) -> Result<Vec<usize>, ParseError> {
    if fields.len() != want {
        return Err(ParseError::Malformed {
            line,
            reason: format!("expected {want} fields, found {}", fields.len()),
        });
    }
    fields
        .iter()
        .map(|f| {
            f.parse::<usize>().map_err(|_| ParseError::Malformed {
                line,
                reason: format!("`{f}` is not a non-negative integer"),
            })
        })
        .collect()
}

/// Parses `.mlg` text into a graph.
pub fn parse_mlg(text: &str) -> Result<MultiLayerGraph, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut seen = HashSet::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let raw = raw.trim_end_matches('\r');
        let mut fields = raw.split_whitespace();
        let Some(tag) = fields.next() else { continue };
        let rest: Vec<&str> = fields.collect();
        match tag {
            "c" => {}
            "p" => {
                if header.is_some() {
                    return Err(ParseError::DuplicateHeader { line });
                }
                if rest.first() != Some(&"mlg") {
                    return Err(ParseError::Malformed {
                        line,
                        reason: "header must read `p mlg <n> <t>`".into(),
                    });
                }
                let nums = numbers(line, &rest[1..], 2)?;
                if nums[1] == 0 {
                    return Err(ParseError::Malformed {
                        line,
                        reason: "t must be at least 1".into(),
                    });
                }
                header = Some((nums[0], nums[1]));
            }
            "e" => {
                let Some((n, t)) = header else {
                    return Err(ParseError::EdgeBeforeHeader { line });
                };
                let nums = numbers(line, &rest, 3)?;
                let (layer, u, v) = (nums[0], nums[1], nums[2]);
                if layer == 0 || layer > t {
                    return Err(ParseError::LayerOutOfRange { line, layer, t });
                }
                for vertex in [u, v] {
                    if vertex == 0 || vertex > n {
                        return Err(ParseError::VertexOutOfRange { line, vertex, n });
                    }
                }
                if u == v {
                    return Err(ParseError::SelfLoop { line, vertex: u });
                }
                if !seen.insert((layer, u.min(v), u.max(v))) {
                    return Err(ParseError::DuplicateEdge { line, layer, u, v });
                }
                edges.push((layer - 1, u - 1, v - 1));
            }
            other => {
                return Err(ParseError::UnknownTag {
                    line,
                    tag: other.to_string(),
                })
            }
        }
    }
    let (n, t) = header.ok_or(ParseError::MissingHeader)?;
    Ok(MultiLayerGraph::from_edges(n, t, edges)?)
}

/// Canonical `.mlg` text for `g`.
pub fn serialize_mlg(g: &MultiLayerGraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "p mlg {} {}", g.n(), g.t());
    for (i, layer) in g.layers().iter().enumerate() {
        for (u, v) in layer.edges() {
            let _ = writeln!(out, "e {} {} {}", i + 1, u + 1, v + 1);
        }
    }
    out
}

/// Canonical text preceded by `c` comment lines.
pub fn serialize_mlg_with_comments<S: AsRef<str>>(g: &MultiLayerGraph, comments: &[S]) -> String {
    let mut out = String::new();
    for c in comments {
        let _ = writeln!(out, "c {}", c.as_ref());
    }
    out.push_str(&serialize_mlg(g));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_edge() {
        let g = parse_mlg("p mlg 2 1\ne 1 1 2").unwrap();
        assert_eq!((g.n(), g.t()), (2, 1));
        assert_eq!(g.layer(0).edges().collect::<Vec<_>>(), vec![(0, 1)]);
        assert_eq!(serialize_mlg(&g), "p mlg 2 1\ne 1 1 2\n");
    }

    #[test]
    fn header_only() {
        let g = parse_mlg("p mlg 3 2").unwrap();
        assert_eq!((g.n(), g.t()), (3, 2));
        assert!(g.layers().iter().all(|l| l.edge_count() == 0));
        assert_eq!(serialize_mlg(&g), "p mlg 3 2\n");
    }

    #[test]
    fn comments_and_orientation_normalise() {
        let g = parse_mlg("c hello\np mlg 3 2\ne 2 3 1\nc mid\ne 1 2 1\n").unwrap();
        assert_eq!(serialize_mlg(&g), "p mlg 3 2\ne 1 1 2\ne 2 1 3\n");
    }

    #[test]
    fn empty_graph_is_legal() {
        let g = parse_mlg("p mlg 0 1\n").unwrap();
        assert_eq!(g.n(), 0);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let cases: [(&str, ParseError); 7] = [
            (
                "p mlg 2 1\nx 1",
                ParseError::UnknownTag {
                    line: 2,
                    tag: "x".into(),
                },
            ),
            (
                "e 1 1 2\np mlg 2 1",
                ParseError::EdgeBeforeHeader { line: 1 },
            ),
            (
                "p mlg 2 1\ne 2 1 2",
                ParseError::LayerOutOfRange {
                    line: 2,
                    layer: 2,
                    t: 1,
                },
            ),
            (
                "p mlg 2 1\ne 1 1 3",
                ParseError::VertexOutOfRange {
                    line: 2,
                    vertex: 3,
                    n: 2,
                },
            ),
            (
                "p mlg 2 1\ne 1 0 1",
                ParseError::VertexOutOfRange {
                    line: 2,
                    vertex: 0,
                    n: 2,
                },
            ),
            (
                "p mlg 2 1\n\ne 1 2 2",
                ParseError::SelfLoop { line: 3, vertex: 2 },
            ),
            (
                "p mlg 2 1\ne 1 1 2\ne 1 2 1",
                ParseError::DuplicateEdge {
                    line: 3,
                    layer: 1,
                    u: 2,
                    v: 1,
                },
            ),
        ];
        for (text, want) in cases {
            assert_eq!(parse_mlg(text).unwrap_err(), want, "{text:?}");
        }
        assert_eq!(
            parse_mlg("c only\n").unwrap_err(),
            ParseError::MissingHeader
        );
        assert!(matches!(
            parse_mlg("p mlg 2 1\np mlg 2 1"),
            Err(ParseError::DuplicateHeader { line: 2 })
        ));
        assert!(matches!(
            parse_mlg("p mlg two 1"),
            Err(ParseError::Malformed { line: 1, .. })
        ));
    }
}
