//! Graph properties and their membership tests.

pub mod forbidden;
mod refine;
pub mod structure;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::SimpleGraph;
use crate::matching::has_perfect_matching;

pub use forbidden::{all_occurrences, find_forbidden, PatternError, Patterns, MAX_PATTERN_SIZE};
pub use refine::{pi_refine, Partition, RefineError};

/// A graph property together with its parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PropertySpec {
    Connectivity,
    CCore(usize),
    CTruss(usize),
    CEdgeConnectivity(usize),
    CConnectivity(usize),
    Matching,
    CFactor(usize),
    Hamiltonian,
    ForbiddenInduced(Patterns),
    MaxDegreeAtLeast(usize),
    HIndexAtLeast(usize),
    Tree,
    Star,
    Forest,
    Edgeless,
    Complete,
}

#[derive(Debug, Error)]
pub enum PropertyError {
    #[error("unknown property `{0}`")]
    Unknown(String),
    #[error("property `{0}` needs a parameter")]
    MissingParameter(String),
    #[error("property `{0}` takes no parameter")]
    UnexpectedParameter(String),
    #[error("bad parameter `{value}` for `{name}`")]
    BadParameter { name: String, value: String },
    #[error("{0} needs c >= {1}")]
    ParameterTooSmall(&'static str, usize),
    #[error("cannot read pattern file `{path}`: {source}")]
    PatternFile {
        path: String,
        source: std::io::Error,
    },
    #[error("pattern file `{path}`: {source}")]
    Pattern { path: String, source: PatternError },
}

impl PropertySpec {
    /// Rejects parameters outside the meaningful range.
    pub fn validate(&self) -> Result<(), PropertyError> {
        use PropertySpec::*;
        let (name, c, min) = match *self {
            CCore(c) => ("c-core", c, 1),
            CTruss(c) => ("c-truss", c, 2),
            CEdgeConnectivity(c) => ("c-edge-connectivity", c, 1),
            CConnectivity(c) => ("c-connectivity", c, 1),
            CFactor(c) => ("c-factor", c, 1),
            MaxDegreeAtLeast(x) => ("max-degree-ge", x, 1),
            HIndexAtLeast(x) => ("h-index-ge", x, 1),
            _ => return Ok(()),
        };
        if c < min {
            return Err(PropertyError::ParameterTooSmall(name, min));
        }
        Ok(())
    }

    /// Parses the property grammar, loading pattern files with `load`.
    pub fn parse_with(
        text: &str,
        load: impl FnOnce(&str) -> Result<String, std::io::Error>,
    ) -> Result<Self, PropertyError> {
        let (name, arg) = match text.split_once(':') {
            Some((n, a)) => (n.trim(), Some(a.trim())),
            None => (text.trim(), None),
        };
        let number = |arg: Option<&str>| -> Result<usize, PropertyError> {
            let a = arg.ok_or_else(|| PropertyError::MissingParameter(name.to_string()))?;
            a.parse().map_err(|_| PropertyError::BadParameter {
                name: name.to_string(),
                value: a.to_string(),
            })
        };
        let bare = |spec: PropertySpec| match arg {
            None => Ok(spec),
            Some(_) => Err(PropertyError::UnexpectedParameter(name.to_string())),
        };
        let spec = match name {
            "connectivity" => bare(PropertySpec::Connectivity)?,
            "matching" => bare(PropertySpec::Matching)?,
            "hamiltonian" => bare(PropertySpec::Hamiltonian)?,
            "tree" => bare(PropertySpec::Tree)?,
            "star" => bare(PropertySpec::Star)?,
            "forest" => bare(PropertySpec::Forest)?,
            "edgeless" => bare(PropertySpec::Edgeless)?,
            "complete" => bare(PropertySpec::Complete)?,
            "c-core" => PropertySpec::CCore(number(arg)?),
            "c-truss" => PropertySpec::CTruss(number(arg)?),
            "c-edge-connectivity" => PropertySpec::CEdgeConnectivity(number(arg)?),
            "c-connectivity" => PropertySpec::CConnectivity(number(arg)?),
            "c-factor" => PropertySpec::CFactor(number(arg)?),
            "max-degree-ge" => PropertySpec::MaxDegreeAtLeast(number(arg)?),
            "h-index-ge" => PropertySpec::HIndexAtLeast(number(arg)?),
            "forbidden" => {
                let path = arg
                    .filter(|a| !a.is_empty())
                    .ok_or_else(|| PropertyError::MissingParameter(name.to_string()))?;
                let text = load(path).map_err(|source| PropertyError::PatternFile {
                    path: path.to_string(),
                    source,
                })?;
                let patterns = Patterns::parse(&text).map_err(|source| PropertyError::Pattern {
                    path: path.to_string(),
                    source,
                })?;
                PropertySpec::ForbiddenInduced(patterns.with_label(path))
            }
            _ => return Err(PropertyError::Unknown(name.to_string())),
        };
        spec.validate()?;
        Ok(spec)
    }

    /// Properties whose maximal solutions form a vertex partition that
    /// [`pi_refine`] can compute.
    pub fn is_partitionable(&self) -> bool {
        matches!(
            self,
            PropertySpec::Connectivity
                | PropertySpec::CCore(_)
                | PropertySpec::CTruss(_)
                | PropertySpec::CEdgeConnectivity(_)
        )
    }

    /// Properties closed under adding vertices, so the whole vertex set is
    /// the best candidate.
    pub fn is_complement_hereditary(&self) -> bool {
        matches!(
            self,
            PropertySpec::MaxDegreeAtLeast(_) | PropertySpec::HIndexAtLeast(_)
        )
    }

    /// Does `g` have this property?
    pub fn check(&self, g: &SimpleGraph) -> bool {
        check(g, self)
    }
}

impl FromStr for PropertySpec {
    type Err = PropertyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse_with(s, |p| std::fs::read_to_string(p))
    }
}

impl fmt::Display for PropertySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use PropertySpec::*;
        match self {
            Connectivity => f.write_str("connectivity"),
            CCore(c) => write!(f, "c-core:{c}"),
            CTruss(c) => write!(f, "c-truss:{c}"),
            CEdgeConnectivity(c) => write!(f, "c-edge-connectivity:{c}"),
            CConnectivity(c) => write!(f, "c-connectivity:{c}"),
            Matching => f.write_str("matching"),
            CFactor(c) => write!(f, "c-factor:{c}"),
            Hamiltonian => f.write_str("hamiltonian"),
            ForbiddenInduced(p) => write!(f, "forbidden:{}", p.label().unwrap_or("<patterns>")),
            MaxDegreeAtLeast(x) => write!(f, "max-degree-ge:{x}"),
            HIndexAtLeast(x) => write!(f, "h-index-ge:{x}"),
            Tree => f.write_str("tree"),
            Star => f.write_str("star"),
            Forest => f.write_str("forest"),
            Edgeless => f.write_str("edgeless"),
            Complete => f.write_str("complete"),
        }
    }
}

/// Largest `h` such that `h` vertices have degree at least `h`.
pub fn h_index(g: &SimpleGraph) -> usize {
    let mut degrees: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    degrees.sort_unstable_by(|a, b| b.cmp(a));
    degrees
        .iter()
        .enumerate()
        .take_while(|&(i, &d)| d > i)
        .count()
}

fn is_forest(g: &SimpleGraph) -> bool {
    g.edge_count() + g.components().len() == g.n()
}

fn is_tree(g: &SimpleGraph) -> bool {
    g.n() >= 1 && g.edge_count() + 1 == g.n() && g.is_connected()
}

/// Membership test. Conventions for tiny graphs: the empty graph has
/// Matching, Edgeless, Forest, c-Factor and every forbidden-subgraph
/// property and nothing else; the one-vertex graph is connected, a tree, a
/// star, Hamiltonian, a trivial c-core, c-truss and c-edge-connected graph.
/// c-truss includes connectivity; c-core does not.
pub fn check(g: &SimpleGraph, pi: &PropertySpec) -> bool {
    use PropertySpec::*;
    let n = g.n();
    match pi {
        Connectivity => g.is_connected(),
        CCore(c) => n == 1 || (n > 1 && (0..n).all(|v| g.degree(v) >= *c)),
        CTruss(c) => {
            n == 1 || (n > 1 && g.is_connected() && structure::all_edges_supported(g, c - 2))
        }
        CEdgeConnectivity(c) => n == 1 || (n > 1 && structure::edge_connectivity(g) >= *c),
        CConnectivity(c) => structure::is_c_vertex_connected(g, *c),
        Matching => n.is_multiple_of(2) && has_perfect_matching(g),
        CFactor(c) => structure::has_c_factor(g, *c),
        Hamiltonian => structure::has_hamiltonian_path(g),
        ForbiddenInduced(p) => find_forbidden(g, p).is_none(),
        MaxDegreeAtLeast(x) => (0..n).any(|v| g.degree(v) >= *x),
        HIndexAtLeast(x) => h_index(g) >= *x,
        Tree => is_tree(g),
        Star => is_tree(g) && (n <= 2 || (0..n).any(|v| g.degree(v) == n - 1)),
        Forest => is_forest(g),
        Edgeless => g.edge_count() == 0,
        Complete => n >= 1 && g.edge_count() == n * (n - 1) / 2,
    }
}

#[cfg(test)]
mod tests {
    use super::forbidden::named::*;
    use super::*;

    fn p(s: &str) -> PropertySpec {
        s.parse().unwrap()
    }

    #[test]
    fn grammar_round_trips() {
        for s in [
            "connectivity",
            "c-core:2",
            "c-truss:3",
            "c-edge-connectivity:2",
            "c-connectivity:2",
            "matching",
            "c-factor:2",
            "hamiltonian",
            "max-degree-ge:3",
            "h-index-ge:2",
            "tree",
            "star",
            "forest",
            "edgeless",
            "complete",
        ] {
            assert_eq!(p(s).to_string(), s);
        }
        assert!("c-truss:1".parse::<PropertySpec>().is_err());
        assert!("c-core".parse::<PropertySpec>().is_err());
        assert!("tree:2".parse::<PropertySpec>().is_err());
        assert!("planar".parse::<PropertySpec>().is_err());
        let spec =
            PropertySpec::parse_with("forbidden:p3.txt", |_| Ok("g 3\ne 1 2\ne 2 3\n".into()))
                .unwrap();
        assert_eq!(spec.to_string(), "forbidden:p3.txt");
    }

    #[test]
    fn named_examples() {
        assert!(check(&complete(3), &PropertySpec::Connectivity));
        assert!(check(&cycle(4), &PropertySpec::CCore(2)));
        assert!(!check(&path(4), &PropertySpec::CCore(2)));
        assert!(check(&complete(4), &PropertySpec::CTruss(4)));
        assert!(!check(&path(3), &PropertySpec::Matching));
        assert!(check(&path(2), &PropertySpec::Matching));
        assert!(!check(&star(3), &PropertySpec::Hamiltonian));
        assert!(check(&path(4), &PropertySpec::Hamiltonian));
    }

    #[test]
    fn tiny_graph_conventions() {
        let empty = SimpleGraph::edgeless(0);
        let one = SimpleGraph::edgeless(1);
        for (spec, e, o) in [
            (PropertySpec::Connectivity, false, true),
            (PropertySpec::Tree, false, true),
            (PropertySpec::Star, false, true),
            (PropertySpec::Complete, false, true),
            (PropertySpec::Hamiltonian, false, true),
            (PropertySpec::Matching, true, false),
            (PropertySpec::Edgeless, true, true),
            (PropertySpec::Forest, true, true),
            (PropertySpec::CCore(3), false, true),
            (PropertySpec::CTruss(3), false, true),
        ] {
            assert_eq!(check(&empty, &spec), e, "{spec} on empty graph");
            assert_eq!(check(&one, &spec), o, "{spec} on one vertex");
        }
    }

    #[test]
    fn h_index_and_degree() {
        // Vertices 1 and 2 both have degree >= 2.
        let g = SimpleGraph::from_edges(4, [(0, 1), (0, 2), (1, 3)]).unwrap();
        assert_eq!(h_index(&g), 2);
        assert!(check(&g, &PropertySpec::HIndexAtLeast(2)));
        assert!(!check(&g, &PropertySpec::HIndexAtLeast(3)));
        assert!(check(&star(3), &PropertySpec::MaxDegreeAtLeast(3)));
    }

    #[test]
    fn trees_and_stars() {
        assert!(check(&star(4), &PropertySpec::Star));
        assert!(check(&path(4), &PropertySpec::Tree));
        assert!(!check(&path(4), &PropertySpec::Star));
        assert!(check(&SimpleGraph::edgeless(3), &PropertySpec::Forest));
        assert!(!check(&cycle(3), &PropertySpec::Forest));
    }
}
