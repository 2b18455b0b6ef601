use crate::graph::{SimpleGraph, VertexSet};
use crate::props::{check, PropertySpec};

use super::{Answer, Instance};

fn bit(v: usize) -> u128 {
    1u128 << v
}

fn reach(adj: &[u128], start: usize, mask: u128) -> u128 {
    let mut seen = bit(start);
    let mut frontier = seen;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let new = adj[v] & mask & !seen;
        seen |= new;
        frontier |= new;
    }
    seen
}

fn component_count(adj: &[u128], mask: u128) -> usize {
    let mut rest = mask;
    let mut count = 0;
    while rest != 0 {
        rest &= !reach(adj, rest.trailing_zeros() as usize, mask);
        count += 1;
    }
    count
}

/// Decides membership from degrees and reachability inside `mask` when
/// that is conclusive; `None` defers to the full checker.
fn quick(pi: &PropertySpec, adj: &[u128], x: &[usize], mask: u128) -> Option<bool> {
    use PropertySpec::*;
    let s = x.len();
    let deg = |v: usize| (adj[v] & mask).count_ones() as usize;
    let min_deg = || x.iter().map(|&v| deg(v)).min().unwrap_or(0);
    let edges = || x.iter().map(|&v| deg(v)).sum::<usize>() / 2;
    let connected = || s > 0 && reach(adj, x[0], mask) == mask;
    match *pi {
        Connectivity => Some(connected()),
        CCore(c) => Some(s == 1 || (s > 1 && min_deg() >= c)),
        CTruss(c) => {
            if s <= 1 {
                Some(s == 1)
            } else if min_deg() + 1 < c || !connected() {
                Some(false)
            } else {
                None
            }
        }
        CEdgeConnectivity(c) => {
            if s == 1 {
                Some(true)
            } else if s == 0 || min_deg() < c || !connected() {
                Some(false)
            } else {
                None
            }
        }
        CConnectivity(c) => (s < c + 1 || min_deg() < c || !connected()).then_some(false),
        Matching => (s % 2 == 1 || (s > 0 && min_deg() == 0)).then_some(false),
        CFactor(c) => (s > 0 && (min_deg() < c || (s * c) % 2 == 1)).then_some(false),
        Hamiltonian => {
            if s <= 1 {
                Some(s == 1)
            } else if !connected() || x.iter().filter(|&&v| deg(v) == 1).count() > 2 {
                Some(false)
            } else {
                None
            }
        }
        MaxDegreeAtLeast(d) => Some(x.iter().any(|&v| deg(v) >= d)),
        HIndexAtLeast(h) => Some(x.iter().filter(|&&v| deg(v) >= h).count() >= h),
        Edgeless => Some(x.iter().all(|&v| deg(v) == 0)),
        Complete => Some(s >= 1 && min_deg() + 1 == s),
        Tree => Some(s >= 1 && edges() + 1 == s && connected()),
        Star => Some(
            s >= 1
                && edges() + 1 == s
                && connected()
                && (s <= 2 || x.iter().any(|&v| deg(v) + 1 == s)),
        ),
        Forest => Some(edges() + component_count(adj, mask) == s),
        ForbiddenInduced(_) => None,
    }
}

fn holds(pi: &PropertySpec, g: &SimpleGraph, adj: &[u128], x: &[usize], mask: u128) -> bool {
    match quick(pi, adj, x, mask) {
        Some(decided) => decided,
        None => check(&g.induced(x), pi),
    }
}

/// Exhaustive search by descending size, lexicographic within a size.
/// The witness is the lexicographically first maximum set together with
/// the first `ell` layers it satisfies.
///
/// Panics for graphs with more than 128 vertices.
pub fn brute_force_solve(inst: &Instance) -> Answer {
    let (n, k) = (inst.n(), inst.k());
    if k > n {
        return Answer::no();
    }
    search_sizes(inst, (k..=n).rev())
}

/// Smallest degree every vertex needs in a member of size `s`.
fn degree_floor(pi: &PropertySpec, s: usize) -> usize {
    use PropertySpec::*;
    if s < 2 {
        return 0;
    }
    match *pi {
        Connectivity | Matching | Hamiltonian | Tree | Star => 1,
        CCore(c) | CEdgeConnectivity(c) | CConnectivity(c) | CFactor(c) => c,
        CTruss(c) => (c - 1).max(1),
        Complete => s - 1,
        _ => 0,
    }
}

/// Subsets of one size in lexicographic order, skipping branches in which
/// too many layers already hold a chosen vertex that cannot reach the
/// degree floor.
struct Scan<'a> {
    inst: &'a Instance,
    adj: &'a [Vec<u128>],
    size: usize,
    floor: usize,
    full: u128,
    chosen: Vec<usize>,
    found: Option<(Vec<usize>, Vec<usize>)>,
}

impl Scan<'_> {
    fn viable(&self, next: usize, mask: u128) -> bool {
        if self.floor == 0 {
            return true;
        }
        let undecided = if next >= 128 {
            0
        } else {
            (!0u128 << next) & self.full
        };
        let open = mask | undecided;
        let slack = self.inst.t() - self.inst.ell();
        let mut dead = 0;
        for adj in self.adj {
            if self
                .chosen
                .iter()
                .any(|&u| ((adj[u] & open).count_ones() as usize) < self.floor)
            {
                dead += 1;
                if dead > slack {
                    return false;
                }
            }
        }
        true
    }

    fn leaf(&mut self, mask: u128) -> bool {
        let (t, ell) = (self.inst.t(), self.inst.ell());
        let mut layers = Vec::with_capacity(ell);
        for i in 0..t {
            if layers.len() + (t - i) < ell {
                break;
            }
            if holds(
                self.inst.pi(),
                self.inst.graph().layer(i),
                &self.adj[i],
                &self.chosen,
                mask,
            ) {
                layers.push(i);
                if layers.len() == ell {
                    self.found = Some((self.chosen.clone(), layers));
                    return true;
                }
            }
        }
        false
    }

    fn run(&mut self, next: usize, mask: u128) -> bool {
        let need = self.size - self.chosen.len();
        if need == 0 {
            return self.leaf(mask);
        }
        if self.inst.n() - next < need {
            return false;
        }
        self.chosen.push(next);
        let with = mask | bit(next);
        if self.viable(next + 1, with) && self.run(next + 1, with) {
            return true;
        }
        self.chosen.pop();
        self.viable(next + 1, mask) && self.run(next + 1, mask)
    }
}

/// Scans the given subset sizes in order and stops at the first hit.
pub(crate) fn search_sizes(inst: &Instance, sizes: impl IntoIterator<Item = usize>) -> Answer {
    let n = inst.n();
    assert!(n <= 128, "brute force is limited to 128 vertices");
    let adj: Vec<Vec<u128>> = inst
        .graph()
        .layers()
        .iter()
        .map(SimpleGraph::adjacency_masks)
        .collect();
    let full = if n == 128 { !0 } else { bit(n) - 1 };
    for size in sizes {
        let floor = degree_floor(inst.pi(), size);
        let mut scan = Scan {
            inst,
            adj: &adj,
            size,
            floor,
            full,
            chosen: Vec::with_capacity(size),
            found: None,
        };
        if scan.run(0, 0) {
            let (x, layers) = scan.found.expect("a hit records its witness");
            return Answer::yes(inst, VertexSet::new(x), layers)
                .expect("brute-force witness revalidates");
        }
    }
    Answer::no()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::MultiLayerGraph;
    use crate::props::forbidden::for_each_combination;

    #[test]
    fn quick_filters_agree_with_checker() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let kinds = [
            PropertySpec::Connectivity,
            PropertySpec::CCore(2),
            PropertySpec::CTruss(3),
            PropertySpec::CTruss(4),
            PropertySpec::CEdgeConnectivity(2),
            PropertySpec::CConnectivity(2),
            PropertySpec::Matching,
            PropertySpec::CFactor(2),
            PropertySpec::Hamiltonian,
            PropertySpec::MaxDegreeAtLeast(3),
            PropertySpec::HIndexAtLeast(2),
            PropertySpec::Edgeless,
            PropertySpec::Complete,
            PropertySpec::Tree,
            PropertySpec::Star,
            PropertySpec::Forest,
        ];
        for _ in 0..300 {
            let n = rng.gen_range(1..=8);
            let p = rng.gen_range(0.1..0.9);
            let edges: Vec<_> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|_| rng.gen_bool(p))
                .collect();
            let g = SimpleGraph::from_edges(n, edges).unwrap();
            let adj = g.adjacency_masks();
            for size in 0..=n {
                for_each_combination(n, size, |x| {
                    let mask = x.iter().fold(0u128, |m, &v| m | bit(v));
                    for pi in &kinds {
                        if let Some(d) = quick(pi, &adj, x, mask) {
                            assert_eq!(d, check(&g.induced(x), pi), "{pi} on {x:?}");
                        }
                    }
                    false
                });
            }
        }
    }

    fn plain_scan(inst: &Instance) -> Option<(Vec<usize>, Vec<usize>)> {
        let (n, t, ell) = (inst.n(), inst.t(), inst.ell());
        for size in (inst.k()..=n).rev() {
            let mut found = None;
            for_each_combination(n, size, |x| {
                let layers: Vec<usize> = (0..t)
                    .filter(|&i| check(&inst.graph().layer(i).induced(x), inst.pi()))
                    .take(ell)
                    .collect();
                if layers.len() == ell {
                    found = Some((x.to_vec(), layers));
                }
                found.is_some()
            });
            if found.is_some() {
                return found;
            }
        }
        None
    }

    #[test]
    fn pruned_scan_matches_plain_scan() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let kinds = [
            PropertySpec::Connectivity,
            PropertySpec::CCore(2),
            PropertySpec::CTruss(3),
            PropertySpec::CConnectivity(2),
            PropertySpec::Matching,
            PropertySpec::CFactor(2),
            PropertySpec::Hamiltonian,
            PropertySpec::Complete,
            PropertySpec::Star,
        ];
        for round in 0..150 {
            let n = rng.gen_range(1..=8);
            let t = rng.gen_range(1..=3);
            let p = rng.gen_range(0.2..0.9);
            let mut edges = Vec::new();
            for l in 0..t {
                for u in 0..n {
                    for v in u + 1..n {
                        if rng.gen_bool(p) {
                            edges.push((l, u, v));
                        }
                    }
                }
            }
            let g = MultiLayerGraph::from_edges(n, t, edges).unwrap();
            let pi = kinds[round % kinds.len()].clone();
            let inst = Instance::new(g, pi, 1, rng.gen_range(1..=t)).unwrap();
            let expected = plain_scan(&inst);
            let got = brute_force_solve(&inst);
            assert_eq!(
                got.vertices()
                    .map(|x| (x.as_slice().to_vec(), got.layers().unwrap().to_vec())),
                expected,
                "{inst:?}"
            );
        }
    }

    #[test]
    fn small_examples() {
        let g = MultiLayerGraph::from_edges(2, 2, [(0, 0, 1), (1, 0, 1)]).unwrap();
        let inst = Instance::new(g, PropertySpec::Matching, 2, 2).unwrap();
        let a = brute_force_solve(&inst);
        assert_eq!(a.to_string(), "YES\nX: 1 2\nlayers: 1 2");

        let g = MultiLayerGraph::new(3, vec![SimpleGraph::edgeless(3); 2]).unwrap();
        let inst = Instance::new(g, PropertySpec::Connectivity, 2, 1).unwrap();
        assert!(!brute_force_solve(&inst).is_yes());
    }
}
