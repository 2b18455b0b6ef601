//! Structural primitives behind the property checkers: cuts, triangle
//! support peeling, Hamiltonian paths and factor gadgets.

use std::collections::BTreeSet;

use crate::graph::{SimpleGraph, Vertex};
use crate::matching::has_perfect_matching;

use super::forbidden::for_each_combination;

/// Global minimum edge cut (Stoer–Wagner). Returns the cut value and one
/// side. Requires `n >= 2`.
pub fn min_edge_cut(g: &SimpleGraph) -> (usize, Vec<Vertex>) {
    let n = g.n();
    assert!(n >= 2, "minimum cut needs two vertices");
    let mut w = vec![vec![0usize; n]; n];
    for (u, v) in g.edges() {
        w[u][v] = 1;
        w[v][u] = 1;
    }
    let mut groups: Vec<Vec<Vertex>> = (0..n).map(|v| vec![v]).collect();
    let mut active = vec![true; n];
    let mut best = (usize::MAX, Vec::new());
    for phase in 0..n - 1 {
        let remaining = n - phase;
        let mut in_a = vec![false; n];
        let mut conn = vec![0usize; n];
        let mut prev = usize::MAX;
        for step in 0..remaining {
            let v = (0..n)
                .filter(|&v| active[v] && !in_a[v])
                .max_by(|&a, &b| conn[a].cmp(&conn[b]).then(b.cmp(&a)))
                .unwrap();
            in_a[v] = true;
            if step == remaining - 1 {
                if conn[v] < best.0 {
                    let mut side = groups[v].clone();
                    side.sort_unstable();
                    best = (conn[v], side);
                }
                let moved = std::mem::take(&mut groups[v]);
                groups[prev].extend(moved);
                for u in 0..n {
                    w[prev][u] += w[v][u];
                    w[u][prev] = w[prev][u];
                }
                w[prev][prev] = 0;
                active[v] = false;
            } else {
                prev = v;
                for u in 0..n {
                    conn[u] += w[v][u];
                }
            }
        }
    }
    best
}

/// Minimum edge-cut value; 0 for disconnected graphs.
pub fn edge_connectivity(g: &SimpleGraph) -> usize {
    if g.n() < 2 {
        return 0;
    }
    min_edge_cut(g).0
}

/// True when removing any `c - 1` or fewer vertices leaves a connected
/// graph and there are at least `c + 1` vertices.
pub fn is_c_vertex_connected(g: &SimpleGraph, c: usize) -> bool {
    let n = g.n();
    if n < c + 1 {
        return false;
    }
    for size in 0..c {
        let broken = for_each_combination(n, size, |removed| {
            let keep: Vec<Vertex> = (0..n)
                .filter(|v| removed.binary_search(v).is_err())
                .collect();
            !g.induced(&keep).is_connected()
        });
        if broken {
            return false;
        }
    }
    true
}

/// Edges surviving iterated removal of edges lying in fewer than
/// `min_triangles` triangles. Returned as sorted neighbour sets.
pub fn truss_peel(g: &SimpleGraph, min_triangles: usize) -> Vec<BTreeSet<Vertex>> {
    let mut alive: Vec<BTreeSet<Vertex>> = (0..g.n())
        .map(|v| g.neighbors(v).iter().copied().collect())
        .collect();
    if min_triangles == 0 {
        return alive;
    }
    let mut stack: Vec<(Vertex, Vertex)> = g.edges().collect();
    while let Some((u, v)) = stack.pop() {
        if !alive[u].contains(&v) {
            continue;
        }
        let common: Vec<Vertex> = alive[u].intersection(&alive[v]).copied().collect();
        if common.len() < min_triangles {
            alive[u].remove(&v);
            alive[v].remove(&u);
            for w in common {
                stack.push((u.min(w), u.max(w)));
                stack.push((v.min(w), v.max(w)));
            }
        }
    }
    alive
}

/// Every edge lies in at least `min_triangles` triangles.
pub fn all_edges_supported(g: &SimpleGraph, min_triangles: usize) -> bool {
    g.edges().all(|(u, v)| {
        let (a, b) = (g.neighbors(u), g.neighbors(v));
        let (mut i, mut j, mut common) = (0, 0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    common += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        common >= min_triangles
    })
}

/// Hamiltonian path by subset dynamic programming: `reach[S]` holds the
/// set of vertices at which a path covering exactly `S` can end.
pub fn hamiltonian_path_dp(g: &SimpleGraph) -> bool {
    let n = g.n();
    assert!(n <= 24, "subset DP is limited to 24 vertices");
    if n == 0 {
        return false;
    }
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |a, &u| a | (1 << u)))
        .collect();
    let full = (1u32 << n) - 1;
    let mut reach = vec![0u32; 1usize << n];
    for v in 0..n {
        reach[1 << v] = 1 << v;
    }
    for mask in 1..=full {
        let mut ends = reach[mask as usize];
        while ends != 0 {
            let v = ends.trailing_zeros() as usize;
            ends &= ends - 1;
            let mut ext = adj[v] & !mask;
            while ext != 0 {
                let u = ext.trailing_zeros();
                ext &= ext - 1;
                reach[(mask | (1 << u)) as usize] |= 1 << u;
            }
        }
    }
    reach[full as usize] != 0
}

/// Hamiltonian path by depth-first extension with connectivity pruning.
pub fn hamiltonian_path_search(g: &SimpleGraph) -> bool {
    let n = g.n();
    assert!(n <= 128, "path search is limited to 128 vertices");
    if n == 0 {
        return false;
    }
    let adj = g.adjacency_masks();
    let full: u128 = if n == 128 {
        u128::MAX
    } else {
        (1u128 << n) - 1
    };

    fn reachable_all(adj: &[u128], start: usize, allowed: u128) -> u128 {
        let mut seen = 1u128 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let new = adj[v] & allowed & !seen;
            seen |= new;
            frontier |= new;
        }
        seen
    }

    fn extend(adj: &[u128], v: usize, visited: u128, full: u128) -> bool {
        if visited == full {
            return true;
        }
        let rest = full & !visited;
        let cands = adj[v] & rest;
        if cands == 0 {
            return false;
        }
        // The unvisited part must be reachable from v through unvisited vertices.
        if reachable_all(adj, v, rest | (1u128 << v)) & rest != rest {
            return false;
        }
        // A remaining vertex with no unvisited neighbour other than v must come last.
        let mut forced = 0u32;
        let mut r = rest;
        while r != 0 {
            let u = r.trailing_zeros() as usize;
            r &= r - 1;
            let free = adj[u] & rest;
            if free == 0 && adj[u] & (1u128 << v) == 0 {
                return false;
            }
            if free.count_ones() + u32::from(adj[u] & (1u128 << v) != 0) <= 1 {
                forced += 1;
            }
        }
        if forced > 1 {
            return false;
        }
        let mut c = cands;
        while c != 0 {
            let u = c.trailing_zeros() as usize;
            c &= c - 1;
            if extend(adj, u, visited | (1u128 << u), full) {
                return true;
            }
        }
        false
    }

    if reachable_all(&adj, 0, full) != full {
        return false;
    }
    let leaves: Vec<usize> = (0..n).filter(|&v| adj[v].count_ones() <= 1).collect();
    if n > 1 && (leaves.len() > 2 || leaves.iter().any(|&v| adj[v] == 0)) {
        return false;
    }
    let starts: Vec<usize> = if leaves.is_empty() {
        (0..n).collect()
    } else {
        vec![leaves[0]]
    };
    starts
        .into_iter()
        .any(|s| extend(&adj, s, 1u128 << s, full))
}

/// Hamiltonian path: subset DP on small graphs, pruned search beyond.
pub fn has_hamiltonian_path(g: &SimpleGraph) -> bool {
    match g.n() {
        0 => false,
        1 => true,
        n if n <= 16 => g.is_connected() && hamiltonian_path_dp(g),
        _ => hamiltonian_path_search(g),
    }
}

/// Does `g` have a spanning `c`-regular subgraph? Tutte's splitting: every
/// vertex `v` becomes one port per incident edge plus `deg(v) - c` absorbers
/// joined completely to the ports; the original edges join matching ports.
/// Perfect matchings of the result correspond to `c`-factors of `g`.
pub fn has_c_factor(g: &SimpleGraph, c: usize) -> bool {
    let n = g.n();
    if n == 0 {
        return true;
    }
    if c == 0 {
        return true;
    }
    if (0..n).any(|v| g.degree(v) < c) || (n * c) % 2 == 1 {
        return false;
    }
    // port(v, i) for the i-th neighbour of v.
    let mut port_base = vec![0; n];
    let mut next = 0;
    for v in 0..n {
        port_base[v] = next;
        next += g.degree(v);
    }
    let mut absorber_base = vec![0; n];
    for v in 0..n {
        absorber_base[v] = next;
        next += g.degree(v) - c;
    }
    let mut edges = Vec::new();
    for v in 0..n {
        for (i, &u) in g.neighbors(v).iter().enumerate() {
            if u > v {
                let j = g.neighbors(u).binary_search(&v).unwrap();
                edges.push((port_base[v] + i, port_base[u] + j));
            }
            for a in 0..g.degree(v) - c {
                edges.push((port_base[v] + i, absorber_base[v] + a));
            }
        }
    }
    let gadget = SimpleGraph::from_edges(next, edges).expect("factor gadget is simple");
    has_perfect_matching(&gadget)
}
