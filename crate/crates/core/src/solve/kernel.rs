//! Search tree, hitting-set reformulation and sunflower kernel for
//! properties given by forbidden induced subgraphs.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::graph::{Vertex, VertexSet};
use crate::props::forbidden::for_each_combination;
use crate::props::{all_occurrences, find_forbidden, Patterns, PropertySpec};

use super::{Answer, Instance, SolveError};

/// Ground element of a [`SetSystem`]: a vertex or a layer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Element {
    Vertex(usize),
    Layer(usize),
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Vertex(v) => write!(f, "v{}", v + 1),
            Element::Layer(l) => write!(f, "l{}", l + 1),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SetSystemError {
    #[error("set {0} uses an element outside the ground sets")]
    ForeignElement(usize),
    #[error("line {line}: {reason}")]
    Syntax { line: usize, reason: String },
}

/// 2-colour hitting set: hit every set of the family using at most `b`
/// vertex elements and at most `w` layer elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetSystem {
    vertices: Vec<usize>,
    layers: Vec<usize>,
    family: Vec<Vec<Element>>,
    b: usize,
    w: usize,
}

impl SetSystem {
    pub fn new(
        vertices: impl IntoIterator<Item = usize>,
        layers: impl IntoIterator<Item = usize>,
        family: Vec<Vec<Element>>,
        b: usize,
        w: usize,
    ) -> Result<Self, SetSystemError> {
        let vertices: Vec<usize> = vertices
            .into_iter()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let layers: Vec<usize> = layers
            .into_iter()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let mut fam = Vec::with_capacity(family.len());
        for (i, mut set) in family.into_iter().enumerate() {
            set.sort_unstable();
            set.dedup();
            let inside = set.iter().all(|e| match *e {
                Element::Vertex(v) => vertices.binary_search(&v).is_ok(),
                Element::Layer(l) => layers.binary_search(&l).is_ok(),
            });
            if !inside {
                return Err(SetSystemError::ForeignElement(i));
            }
            fam.push(set);
        }
        Ok(SetSystem {
            vertices,
            layers,
            family: fam,
            b,
            w,
        })
    }

    /// The trivially unsolvable system `{{v1}}` with zero budgets.
    pub fn canonical_no() -> Self {
        SetSystem {
            vertices: vec![0],
            layers: Vec::new(),
            family: vec![vec![Element::Vertex(0)]],
            b: 0,
            w: 0,
        }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn layers(&self) -> &[usize] {
        &self.layers
    }

    pub fn family(&self) -> &[Vec<Element>] {
        &self.family
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn w(&self) -> usize {
        self.w
    }

    /// Largest set size.
    pub fn max_set_size(&self) -> usize {
        self.family.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Text form: `p 2chs |B| |W| |F| b w`, then `s <elements>` per set.
    pub fn to_hs(&self) -> String {
        let mut out = format!(
            "p 2chs {} {} {} {} {}\n",
            self.vertices.len(),
            self.layers.len(),
            self.family.len(),
            self.b,
            self.w
        );
        for set in &self.family {
            out.push('s');
            for e in set {
                out.push_str(&format!(" {e}"));
            }
            out.push('\n');
        }
        out
    }

    /// Inverse of [`SetSystem::to_hs`]; ground sets are the elements that
    /// occur in some set.
    pub fn parse_hs(text: &str) -> Result<Self, SetSystemError> {
        let mut header: Option<[usize; 5]> = None;
        let mut family = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let syntax = |reason: &str| SetSystemError::Syntax {
                line,
                reason: reason.to_string(),
            };
            let fields: Vec<&str> = raw.split_whitespace().collect();
            match fields.first().copied() {
                None | Some("c") => {}
                Some("p") => {
                    if header.is_some() || fields.len() != 7 || fields[1] != "2chs" {
                        return Err(syntax(
                            "expected a single `p 2chs <B> <W> <F> <b> <w>` line",
                        ));
                    }
                    let mut h = [0; 5];
                    for (slot, f) in h.iter_mut().zip(&fields[2..]) {
                        *slot = f.parse().map_err(|_| syntax("bad number"))?;
                    }
                    header = Some(h);
                }
                Some("s") => {
                    if header.is_none() {
                        return Err(syntax("set before header"));
                    }
                    let set = fields[1..]
                        .iter()
                        .map(|f| {
                            let (kind, id) = f.split_at(1);
                            let id: usize = id
                                .parse()
                                .ok()
                                .filter(|&i| i >= 1)
                                .ok_or_else(|| syntax("bad element"))?;
                            match kind {
                                "v" => Ok(Element::Vertex(id - 1)),
                                "l" => Ok(Element::Layer(id - 1)),
                                _ => Err(syntax("bad element")),
                            }
                        })
                        .collect::<Result<Vec<_>, _>>()?;
                    family.push(set);
                }
                Some(_) => return Err(syntax("unknown line tag")),
            }
        }
        let [nb, nw, nf, b, w] = header.ok_or(SetSystemError::Syntax {
            line: 0,
            reason: "missing header".into(),
        })?;
        let used = |pick: fn(&Element) -> Option<usize>| -> Vec<usize> {
            family
                .iter()
                .flatten()
                .filter_map(pick)
                .collect::<BTreeSet<_>>()
                .into_iter()
                .collect()
        };
        let vertices = used(|e| match e {
            Element::Vertex(v) => Some(*v),
            _ => None,
        });
        let layers = used(|e| match e {
            Element::Layer(l) => Some(*l),
            _ => None,
        });
        if (vertices.len(), layers.len(), family.len()) != (nb, nw, nf) {
            return Err(SetSystemError::Syntax {
                line: 1,
                reason: "header counts do not match the sets".into(),
            });
        }
        SetSystem::new(vertices, layers, family, b, w)
    }
}

fn patterns_of(inst: &Instance) -> Result<&Patterns, SolveError> {
    match inst.pi() {
        PropertySpec::ForbiddenInduced(p) => Ok(p),
        other => Err(SolveError::Unsupported {
            algorithm: "search-tree",
            property: other.to_string(),
        }),
    }
}

fn budgets(inst: &Instance) -> Result<(usize, usize), SolveError> {
    if inst.k() > inst.n() {
        return Err(SolveError::NegativeBudget {
            k: inst.k(),
            n: inst.n(),
        });
    }
    Ok((inst.n() - inst.k(), inst.t() - inst.ell()))
}

/// Answer of [`search_tree_solve`] with tree-size counters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub answer: Answer,
    pub nodes: u64,
    pub leaves: u64,
    /// `(d + 1)^(b + w)` for the largest pattern size `d`.
    pub leaf_bound: u128,
}

struct Search<'a> {
    inst: &'a Instance,
    patterns: &'a Patterns,
    nodes: u64,
    leaves: u64,
}

impl Search<'_> {
    fn occurrence(&self, alive: &[Vertex], layers: &[usize]) -> Option<(usize, Vec<Vertex>)> {
        layers.iter().find_map(|&i| {
            let sub = self.inst.graph().layer(i).induced(alive);
            find_forbidden(&sub, self.patterns)
                .map(|occ| (i, occ.iter().map(|j| alive[j]).collect()))
        })
    }

    fn run(
        &mut self,
        alive: Vec<Vertex>,
        layers: Vec<usize>,
        b: usize,
        w: usize,
    ) -> Option<(Vec<Vertex>, Vec<usize>)> {
        self.nodes += 1;
        let Some((layer, occ)) = self.occurrence(&alive, &layers) else {
            self.leaves += 1;
            return Some((alive, layers));
        };
        if b == 0 && w == 0 {
            self.leaves += 1;
            return None;
        }
        if b > 0 {
            for v in occ {
                let rest: Vec<Vertex> = alive.iter().copied().filter(|&u| u != v).collect();
                if let Some(found) = self.run(rest, layers.clone(), b - 1, w) {
                    return Some(found);
                }
            }
        }
        if w > 0 {
            let rest: Vec<usize> = layers.iter().copied().filter(|&i| i != layer).collect();
            return self.run(alive, rest, b, w - 1);
        }
        None
    }
}

/// Branches on the first forbidden occurrence (first layer, then
/// lexicographically smallest set): delete one of its vertices or delete
/// its layer, within budgets `n - k` and `t - ell`.
pub fn search_tree_solve(inst: &Instance) -> Result<SearchOutcome, SolveError> {
    let patterns = patterns_of(inst)?;
    let (b, w) = budgets(inst)?;
    let d = patterns.max_size() as u128;
    let leaf_bound = (d + 1).saturating_pow((b + w) as u32);
    let mut search = Search {
        inst,
        patterns,
        nodes: 0,
        leaves: 0,
    };
    let found = search.run((0..inst.n()).collect(), (0..inst.t()).collect(), b, w);
    assert!(
        search.leaves as u128 <= leaf_bound,
        "search tree exceeded its leaf bound"
    );
    let answer = match found {
        Some((x, layers)) => Answer::yes(inst, VertexSet::new(x), layers)?,
        None => Answer::no(),
    };
    Ok(SearchOutcome {
        answer,
        nodes: search.nodes,
        leaves: search.leaves,
        leaf_bound,
    })
}

/// One set per forbidden occurrence: its vertices plus its layer.
pub fn reduce_to_2chs(inst: &Instance) -> Result<SetSystem, SolveError> {
    let patterns = patterns_of(inst)?;
    let (b, w) = budgets(inst)?;
    let mut family = Vec::new();
    for i in 0..inst.t() {
        for occ in all_occurrences(inst.graph().layer(i), patterns) {
            let mut set: Vec<Element> = occ.iter().map(Element::Vertex).collect();
            set.push(Element::Layer(i));
            family.push(set);
        }
    }
    Ok(SetSystem::new(0..inst.n(), 0..inst.t(), family, b, w)
        .expect("occurrences lie in the ground sets"))
}

/// Sets pairwise intersecting exactly in `core`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sunflower<T> {
    pub core: Vec<T>,
    pub petals: Vec<Vec<T>>,
}

impl<T: Ord + Clone> Sunflower<T> {
    /// Every pair of petals meets exactly in the core.
    pub fn is_valid(&self) -> bool {
        let core: BTreeSet<&T> = self.core.iter().collect();
        self.petals.len() >= 2
            && self.petals.iter().enumerate().all(|(i, p)| {
                let p: BTreeSet<&T> = p.iter().collect();
                self.petals[i + 1..].iter().all(|q| {
                    let q: BTreeSet<&T> = q.iter().collect();
                    p.intersection(&q).copied().collect::<BTreeSet<_>>() == core
                })
            })
    }
}

fn greedy_disjoint<T: Ord + Clone>(sets: &[Vec<T>]) -> Vec<Vec<T>> {
    let mut used: BTreeSet<T> = BTreeSet::new();
    let mut picked = Vec::new();
    for s in sets {
        if s.iter().all(|e| !used.contains(e)) {
            used.extend(s.iter().cloned());
            picked.push(s.clone());
        }
    }
    picked
}

/// Erdős–Rado recursion: a maximal disjoint subfamily is either large
/// enough, or every set meets its union and some element of the union
/// carries the sunflower.
fn erdos_rado<T: Ord + Clone>(sets: &[Vec<T>], target: usize) -> Option<Sunflower<T>> {
    if sets.len() < target {
        return None;
    }
    let disjoint = greedy_disjoint(sets);
    if disjoint.len() >= target {
        return Some(Sunflower {
            core: Vec::new(),
            petals: disjoint,
        });
    }
    let union: BTreeSet<T> = disjoint.into_iter().flatten().collect();
    for x in union {
        let with_x: Vec<Vec<T>> = sets
            .iter()
            .filter(|s| s.binary_search(&x).is_ok())
            .map(|s| s.iter().filter(|&e| *e != x).cloned().collect())
            .collect();
        if let Some(mut sf) = erdos_rado(&with_x, target) {
            let pos = sf.core.binary_search(&x).unwrap_err();
            sf.core.insert(pos, x.clone());
            for p in &mut sf.petals {
                let pos = p.binary_search(&x).unwrap_err();
                p.insert(pos, x.clone());
            }
            return Some(sf);
        }
    }
    None
}

/// For every subset `C` of every set, greedily collects sets containing
/// `C` that are disjoint outside `C`.
fn guess_cores<T: Ord + Clone>(sets: &[Vec<T>], target: usize) -> Option<Sunflower<T>> {
    let mut tried: BTreeSet<Vec<T>> = BTreeSet::new();
    for s in sets {
        for size in 0..=s.len() {
            let mut hit = None;
            for_each_combination(s.len(), size, |idx| {
                let core: Vec<T> = idx.iter().map(|&i| s[i].clone()).collect();
                if !tried.insert(core.clone()) {
                    return false;
                }
                let outside: Vec<Vec<T>> = sets
                    .iter()
                    .filter(|t| core.iter().all(|c| t.binary_search(c).is_ok()))
                    .map(|t| {
                        t.iter()
                            .filter(|e| core.binary_search(e).is_err())
                            .cloned()
                            .collect()
                    })
                    .collect();
                let petals = greedy_disjoint(&outside);
                if petals.len() >= target {
                    let petals = petals
                        .into_iter()
                        .map(|mut p| {
                            p.extend(core.iter().cloned());
                            p.sort();
                            p
                        })
                        .collect();
                    hit = Some(Sunflower { core, petals });
                    return true;
                }
                false
            });
            if hit.is_some() {
                return hit;
            }
        }
    }
    None
}

/// A sunflower with at least `target` petals (and at least two), or
/// `None`. Finds one whenever the family has more than `d!(target-1)^d`
/// distinct sets of size at most `d`.
pub fn find_sunflower<T: Ord + Clone>(family: &[Vec<T>], target: usize) -> Option<Sunflower<T>> {
    let target = target.max(2);
    let sets: Vec<Vec<T>> = family
        .iter()
        .map(|s| {
            let mut s = s.clone();
            s.sort();
            s.dedup();
            s
        })
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let found = erdos_rado(&sets, target).or_else(|| guess_cores(&sets, target))?;
    debug_assert!(found.is_valid());
    Some(found)
}

/// Size bound `d! * (b + w + 1)^d` on a family without sunflowers of
/// `b + w + 2` petals.
pub fn kernel_bound(d: usize, b: usize, w: usize) -> u128 {
    let fact: u128 = (1..=d as u128).product();
    fact.saturating_mul(((b + w + 1) as u128).saturating_pow(d as u32))
}

/// Drops one petal from every sunflower with `b + w + 2` petals; a budget
/// of `b + w` cannot hit `b + w + 1` disjoint sets, which yields
/// [`SetSystem::canonical_no`]. Unused ground elements are removed.
pub fn sunflower_kernelize(sys: &SetSystem) -> SetSystem {
    let budget = sys.b + sys.w;
    let mut family: Vec<Vec<Element>> = sys
        .family
        .iter()
        .cloned()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    loop {
        if greedy_disjoint(&family).len() > budget {
            return SetSystem::canonical_no();
        }
        match find_sunflower(&family, budget + 2) {
            Some(sf) if sf.core.is_empty() => return SetSystem::canonical_no(),
            Some(sf) => {
                let petal = sf.petals.last().expect("sunflowers have petals");
                family.retain(|s| s != petal);
            }
            None => break,
        }
    }
    let vertices: BTreeSet<usize> = family
        .iter()
        .flatten()
        .filter_map(|e| match e {
            Element::Vertex(v) => Some(*v),
            Element::Layer(_) => None,
        })
        .collect();
    let layers: BTreeSet<usize> = family
        .iter()
        .flatten()
        .filter_map(|e| match e {
            Element::Layer(l) => Some(*l),
            Element::Vertex(_) => None,
        })
        .collect();
    SetSystem::new(vertices, layers, family, sys.b, sys.w)
        .expect("kernel stays inside the ground sets")
}

/// Exhaustive search over vertex subsets of size `min(b, |B|)` crossed with
/// layer subsets of size `min(w, |W|)`; larger choices only hit more.
///
/// Panics when `|B| + |W| > 128`.
pub fn hitting_set_solve(sys: &SetSystem) -> bool {
    let nb = sys.vertices.len();
    let nw = sys.layers.len();
    assert!(
        nb + nw <= 128,
        "hitting set search is limited to 128 ground elements"
    );
    let index = |e: &Element| -> usize {
        match *e {
            Element::Vertex(v) => sys.vertices.binary_search(&v).unwrap(),
            Element::Layer(l) => nb + sys.layers.binary_search(&l).unwrap(),
        }
    };
    let masks: Vec<u128> = sys
        .family
        .iter()
        .map(|s| s.iter().fold(0u128, |m, e| m | 1u128 << index(e)))
        .collect();
    let take_b = sys.b.min(nb);
    let take_w = sys.w.min(nw);
    let mut yes = false;
    for_each_combination(nb, take_b, |bs| {
        let bm = bs.iter().fold(0u128, |m, &i| m | 1u128 << i);
        let open: Vec<u128> = masks.iter().copied().filter(|&s| s & bm == 0).collect();
        yes = for_each_combination(nw, take_w, |ws| {
            let wm = ws.iter().fold(0u128, |m, &i| m | 1u128 << (nb + i));
            open.iter().all(|&s| s & wm != 0)
        });
        yes
    });
    yes
}
