//! Unweighted maximum-cardinality matching (Edmonds' blossom shrinking,
//! BFS per free vertex, O(n^3)).

use std::collections::VecDeque;

use crate::graph::SimpleGraph;

const NONE: usize = usize::MAX;

struct Search<'g> {
    g: &'g SimpleGraph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'g> Search<'g> {
    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.g.n()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.blossom[self.base[v]] = true;
            self.blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.g.n();
        self.used.iter_mut().for_each(|u| *u = false);
        self.parent.iter_mut().for_each(|p| *p = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for &to in self.g.neighbors(v) {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.blossom.iter_mut().for_each(|b| *b = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let m = self.mate[to];
                    self.used[m] = true;
                    self.queue.push_back(m);
                }
            }
        }
        None
    }
}

/// `mate[v]` for a maximum-cardinality matching of `g`.
pub fn max_cardinality_mates(g: &SimpleGraph) -> Vec<Option<usize>> {
    let n = g.n();
    let mut s = Search {
        g,
        mate: vec![NONE; n],
        parent: vec![NONE; n],
        base: (0..n).collect(),
        used: vec![false; n],
        blossom: vec![false; n],
        queue: VecDeque::new(),
    };
    // Greedy start.
    for v in 0..n {
        if s.mate[v] == NONE {
            if let Some(&u) = g.neighbors(v).iter().find(|&&u| s.mate[u] == NONE) {
                s.mate[v] = u;
                s.mate[u] = v;
            }
        }
    }
    for root in 0..n {
        if s.mate[root] != NONE {
            continue;
        }
        if let Some(mut v) = s.find_path(root) {
            while v != NONE {
                let pv = s.parent[v];
                let ppv = s.mate[pv];
                s.mate[v] = pv;
                s.mate[pv] = v;
                v = ppv;
            }
        }
    }
    s.mate
        .into_iter()
        .map(|m| (m != NONE).then_some(m))
        .collect()
}

/// Size of a maximum matching.
pub fn matching_number(g: &SimpleGraph) -> usize {
    max_cardinality_mates(g)
        .iter()
        .filter(|m| m.is_some())
        .count()
        / 2
}

pub fn has_perfect_matching(g: &SimpleGraph) -> bool {
    g.n().is_multiple_of(2) && 2 * matching_number(g) == g.n()
}
