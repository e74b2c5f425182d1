//! Maximum-cardinality matching on general graphs.
//!
//! Augmenting paths are found with Edmonds' blossom search: odd cycles met
//! during the alternating BFS are contracted to their base so that the search
//! stays correct on non-bipartite color classes.

use std::collections::VecDeque;

use crate::bitset::VertexSet;
use crate::graph::Graph;

const NONE: usize = usize::MAX;

/// A set of pairwise vertex-disjoint edges, each stored as `(u, v)` with `u < v`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Matching {
    pairs: Vec<(usize, usize)>,
}

impl Matching {
    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut pairs: Vec<_> = pairs
            .into_iter()
            .map(|(u, v)| if u < v { (u, v) } else { (v, u) })
            .collect();
        pairs.sort_unstable();
        Matching { pairs }
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// Matched vertices in ascending order.
    pub fn vertices(&self) -> Vec<usize> {
        let mut vs: Vec<usize> = self.pairs.iter().flat_map(|&(u, v)| [u, v]).collect();
        vs.sort_unstable();
        vs
    }

    /// First `k` pairs.
    pub fn truncated(&self, k: usize) -> Matching {
        Matching {
            pairs: self.pairs.iter().take(k).copied().collect(),
        }
    }

    /// Every pair is an edge of `g` and no vertex is used twice.
    pub fn is_valid_in<S: VertexSet>(&self, g: &Graph<S>) -> bool {
        let mut used = vec![false; g.order()];
        self.pairs.iter().all(|&(u, v)| {
            g.has_edge(u, v)
                && !std::mem::replace(&mut used[u], true)
                && !std::mem::replace(&mut used[v], true)
        })
    }
}

/// Search state for repeated augmentation on one graph.
struct Augmenter<'g, S> {
    graph: &'g Graph<S>,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    in_tree: Vec<bool>,
    in_blossom: Vec<bool>,
    on_path: Vec<bool>,
    queue: VecDeque<usize>,
    size: usize,
}

impl<'g, S: VertexSet> Augmenter<'g, S> {
    fn new(graph: &'g Graph<S>) -> Self {
        let n = graph.order();
        Augmenter {
            graph,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            in_tree: vec![false; n],
            in_blossom: vec![false; n],
            on_path: vec![false; n],
            queue: VecDeque::new(),
            size: 0,
        }
    }

    /// Greedy start: each vertex in id order takes its lowest free neighbour.
    fn greedy(&mut self, limit: usize) {
        for u in 0..self.graph.order() {
            if self.size >= limit {
                return;
            }
            if self.mate[u] != NONE {
                continue;
            }
            if let Some(v) = self.graph.neighbors(u).iter().find(|&v| self.mate[v] == NONE) {
                self.mate[u] = v;
                self.mate[v] = u;
                self.size += 1;
            }
        }
    }

    /// Augments until the matching has `limit` edges or is maximum.
    fn run(&mut self, limit: usize) {
        self.greedy(limit);
        let n = self.graph.order();
        let mut progress = true;
        while progress && self.size < limit {
            progress = false;
            for root in 0..n {
                if self.size >= limit {
                    break;
                }
                if self.mate[root] != NONE {
                    continue;
                }
                if let Some(end) = self.find_path(root) {
                    self.augment(end);
                    self.size += 1;
                    progress = true;
                }
            }
        }
    }

    fn lca(&mut self, mut a: usize, mut b: usize) -> usize {
        self.on_path.fill(false);
        loop {
            a = self.base[a];
            self.on_path[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if self.on_path[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// Alternating BFS from the free vertex `root`; returns the free endpoint
    /// of an augmenting path, with the path encoded in `parent`.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.graph.order();
        self.in_tree.fill(false);
        self.parent.fill(NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.queue.clear();
        self.in_tree[root] = true;
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            let graph = self.graph;
            for to in graph.neighbors(v).iter() {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    // Odd cycle: contract it onto its base.
                    let cur = self.lca(v, to);
                    self.in_blossom.fill(false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.in_tree[i] {
                                self.in_tree[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.in_tree[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        None
    }

    fn augment(&mut self, end: usize) {
        let mut v = end;
        while v != NONE {
            let pv = self.parent[v];
            let next = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = next;
        }
    }

    fn matching(&self) -> Matching {
        Matching::from_pairs(
            self.mate
                .iter()
                .enumerate()
                .filter(|&(u, &v)| v != NONE && u < v)
                .map(|(u, &v)| (u, v)),
        )
    }
}

/// A maximum-cardinality matching of `g`.
pub fn max_matching<S: VertexSet>(g: &Graph<S>) -> Matching {
    let mut aug = Augmenter::new(g);
    aug.run(usize::MAX);
    aug.matching()
}

/// Matching number `ν(g)`.
pub fn matching_number<S: VertexSet>(g: &Graph<S>) -> usize {
    max_matching(g).len()
}

/// A matching of exactly `n` edges if `ν(g) ≥ n`. Augmentation stops as soon
/// as `n` edges are matched.
pub fn find_matching_of_size<S: VertexSet>(g: &Graph<S>, n: usize) -> Option<Matching> {
    let mut aug = Augmenter::new(g);
    aug.run(n);
    (aug.size >= n).then(|| aug.matching().truncated(n))
}

/// `min(ν(g), cap)`; augmentation stops once `cap` edges are matched.
pub fn matching_number_capped<S: VertexSet>(g: &Graph<S>, cap: usize) -> usize {
    let mut aug = Augmenter::new(g);
    aug.run(cap);
    aug.size.min(cap)
}

/// `ν(g) ≥ n`, with early exit.
pub fn has_matching_of_size<S: VertexSet>(g: &Graph<S>, n: usize) -> bool {
    if n == 0 {
        return true;
    }
    if 2 * n > g.order() {
        return false;
    }
    let mut aug = Augmenter::new(g);
    aug.run(n);
    aug.size >= n
}

/// `ν(K_{a_1,…,a_k}) = min(⌊N/2⌋, N − max a_i)`.
pub fn nu_complete_multipartite(part_sizes: &[usize]) -> usize {
    let total: usize = part_sizes.iter().sum();
    let largest = part_sizes.iter().copied().max().unwrap_or(0);
    (total / 2).min(total - largest)
}

/// Looks for a length-3 augmenting path through a matched edge: an edge
/// `v1v2` of `m` and distinct unmatched `y`, `y'` with `v1y` and `v2y'` in `g`.
/// A maximum matching never admits one.
pub fn exchange_violation<S: VertexSet>(
    g: &Graph<S>,
    m: &Matching,
) -> Option<((usize, usize), (usize, usize))> {
    let mut free = g.vertex_set();
    for v in m.vertices() {
        free.remove(v);
    }
    for &(a, b) in m.pairs() {
        for (v1, v2) in [(a, b), (b, a)] {
            let ys = g.neighbors(v1).intersection(&free);
            let ys2 = g.neighbors(v2).intersection(&free);
            for y in ys.iter() {
                if let Some(y2) = ys2.iter().find(|&y2| y2 != y) {
                    return Some(((v1, y), (v2, y2)));
                }
            }
        }
    }
    None
}
