//! Brute-force oracle: every 2-coloring of the host, in Gray-code order.

use std::time::Instant;

use super::{Instance, SearchError, SearchOutcome, SearchStats, SearchStatus};
use crate::clique::find_clique_within;
use crate::coloring::TwoColoring;
use crate::graph::Graph;
use crate::matching::has_matching_of_size;

/// Default cap on host edges for enumeration (`2^24` colorings).
pub const NAIVE_EDGE_LIMIT: usize = 24;

pub fn decide_colorable_naive(inst: &Instance) -> Result<SearchOutcome, SearchError> {
    decide_colorable_naive_with_limit(inst, NAIVE_EDGE_LIMIT)
}

/// Enumerates all `2^E` colorings; refuses hosts with more than `limit` edges.
pub fn decide_colorable_naive_with_limit(
    inst: &Instance,
    limit: usize,
) -> Result<SearchOutcome, SearchError> {
    let start = Instant::now();
    let shape = inst.shape;
    let edges: Vec<(usize, usize)> = shape.edges().collect();
    if edges.len() > limit || edges.len() >= 64 {
        return Err(SearchError::NaiveTooLarge {
            edges: edges.len(),
            limit,
        });
    }
    let n_vertices = shape.vertex_count();
    let parts = shape.part_sets::<u128>();
    let everything = (0..n_vertices).fold(0u128, |s, v| s | 1 << v);

    // Start from all-1 and flip one edge per step.
    let mut g1: Graph<u128> = shape.host_graph();
    let mut g2: Graph<u128> = Graph::new(n_vertices);
    let mut second = 0usize;
    let total: u64 = 1 << edges.len();
    let mut examined = 0;
    for step in 0..total {
        if step > 0 {
            let (u, v) = edges[step.trailing_zeros() as usize];
            if g1.has_edge(u, v) {
                g1.remove_edge(u, v);
                g2.add_edge(u, v);
                second += 1;
            } else {
                g2.remove_edge(u, v);
                g1.add_edge(u, v);
                second -= 1;
            }
        }
        examined += 1;
        let stripes = second >= inst.n && has_matching_of_size(&g2, inst.n);
        if stripes || find_clique_within(&g1, &parts, &everything, inst.m).is_some() {
            continue;
        }
        return Ok(SearchOutcome {
            status: SearchStatus::Colorable(TwoColoring::from_second_color(shape, &g2)),
            stats: SearchStats {
                nodes: examined,
                cover_sets: 0,
                elapsed: start.elapsed(),
            },
        });
    }
    Ok(SearchOutcome {
        status: SearchStatus::NotColorable,
        stats: SearchStats {
            nodes: examined,
            cover_sets: 0,
            elapsed: start.elapsed(),
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::Color;
    use crate::witness::verify_good;

    fn naive(j: usize, t: usize, m: usize, n: usize) -> SearchOutcome {
        decide_colorable_naive(&Instance::new(j, t, m, n).unwrap()).unwrap()
    }

    #[test]
    fn reference_verdicts() {
        let out = naive(4, 1, 4, 2);
        let w = out.status.witness().expect("colorable");
        let r = verify_good(w, 4, 2);
        assert!(r.good);
        assert_eq!((r.omega1, r.nu2), (3, 1));

        let out = naive(2, 2, 3, 2);
        assert_eq!(out.status.witness().unwrap().count(Color::Two), 0);

        assert_eq!(naive(5, 1, 4, 1).status, SearchStatus::NotColorable);
    }

    #[test]
    fn refuses_large_hosts() {
        let inst = Instance::new(5, 2, 4, 3).unwrap();
        assert_eq!(
            decide_colorable_naive(&inst),
            Err(SearchError::NaiveTooLarge { edges: 40, limit: 24 })
        );
    }
}
