//! Brute-force oracles shared by the integration suites. Nothing here calls
//! the engines under test.

#![allow(dead_code)]

use std::collections::HashMap;

use mrn_core::graph::Graph;

/// `ν(g)` by memoized recursion over vertex subsets (order ≤ 20).
pub fn brute_matching_number(g: &Graph<u128>) -> usize {
    assert!(g.order() <= 20);
    let all: u32 = if g.order() == 0 { 0 } else { (1u32 << g.order()) - 1 };
    let adj: Vec<u32> = (0..g.order())
        .map(|v| (0..g.order()).filter(|&u| g.has_edge(u, v)).fold(0, |s, u| s | 1 << u))
        .collect();
    fn go(set: u32, adj: &[u32], memo: &mut HashMap<u32, usize>) -> usize {
        if set == 0 {
            return 0;
        }
        if let Some(&v) = memo.get(&set) {
            return v;
        }
        let v = set.trailing_zeros() as usize;
        let rest = set & !(1 << v);
        let mut best = go(rest, adj, memo);
        let mut partners = adj[v] & rest;
        while partners != 0 {
            let u = partners.trailing_zeros();
            partners &= partners - 1;
            best = best.max(1 + go(rest & !(1 << u), adj, memo));
        }
        memo.insert(set, best);
        best
    }
    go(all, &adj, &mut HashMap::new())
}

/// `ω(g)` by checking every vertex subset (order ≤ 16).
pub fn brute_clique_number(g: &Graph<u128>) -> usize {
    let n = g.order();
    assert!(n <= 16);
    let mut best = 0;
    for mask in 0u32..(1 << n) {
        let k = mask.count_ones() as usize;
        if k <= best {
            continue;
        }
        let vs: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let clique = vs
            .iter()
            .enumerate()
            .all(|(i, &u)| vs[i + 1..].iter().all(|&v| g.has_edge(u, v)));
        if clique {
            best = k;
        }
    }
    best
}

/// All multisets of positive part sizes summing to `total`, non-increasing.
pub fn integer_partitions(total: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for v in (1..=cap.min(rest)).rev() {
            cur.push(v);
            go(rest - v, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(total, total, &mut Vec::new(), &mut out);
    out
}
