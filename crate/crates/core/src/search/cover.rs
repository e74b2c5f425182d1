//! Cover-set branching search.

use std::collections::HashMap;
use std::time::Instant;

use rayon::prelude::*;

use super::{Instance, Meter, SearchConfig, SearchError, SearchOutcome, SearchStats, SearchStatus};
use crate::bitset::WORD_SET_CAPACITY;
use crate::clique::find_clique_within;
use crate::coloring::{Color, TwoColoring};
use crate::graph::Graph;
use crate::matching::matching_number_capped;
use crate::shape::MultipartiteShape;

/// Nodes counted locally before charging the shared meter.
const CHARGE_BATCH: u64 = 1024;

/// Canonical cover-set occupancy profiles for an instance.
///
/// A profile lists how many vertices of each part belong to the cover `W`,
/// non-increasing, summing to `min(2(n−1), N)`; `W` takes the lowest slots of
/// each part. Profiles whose complement meets at least `m` parts are dropped,
/// since the complement is entirely color 1 and would hold a `K_m`.
pub fn cover_profiles(shape: &MultipartiteShape, m: usize, n: usize) -> Vec<Vec<usize>> {
    let (j, t) = (shape.parts(), shape.part_size());
    let k = (2 * (n - 1)).min(shape.vertex_count());
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(j);
    partitions(j, t, k, &mut cur, &mut out);
    if t > 0 {
        out.retain(|p| p.iter().filter(|&&c| c < t).count() < m);
    }
    out
}

fn partitions(j: usize, cap: usize, remaining: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    let left = j - cur.len();
    if left == 0 {
        if remaining == 0 {
            out.push(cur.clone());
        }
        return;
    }
    for v in (0..=cap.min(remaining)).rev() {
        if remaining - v > v * (left - 1) {
            break;
        }
        cur.push(v);
        partitions(j, v, remaining - v, cur, out);
        cur.pop();
    }
}

enum Flow {
    Found,
    Exhausted,
    Aborted,
}

/// Depth-first search over the colors of edges meeting one cover set.
struct CoverSearch<'a> {
    shape: MultipartiteShape,
    m: usize,
    n: usize,
    parts: Vec<u128>,
    /// Edges meeting `W`, in branching order.
    free: Vec<(usize, usize)>,
    /// For each symmetry generator, the position of the image of each free edge.
    images: Vec<Vec<usize>>,
    g1: Graph<u128>,
    g2: Graph<u128>,
    assigned: Vec<Color>,
    meter: &'a Meter,
    pending: u64,
    nodes: u64,
}

impl<'a> CoverSearch<'a> {
    fn new(inst: &Instance, profile: &[usize], symmetry: bool, meter: &'a Meter) -> Self {
        let shape = inst.shape;
        let n_vertices = shape.vertex_count();
        let mut in_cover = vec![false; n_vertices];
        for (p, &count) in profile.iter().enumerate() {
            for slot in 0..count {
                in_cover[shape.vertex(p, slot)] = true;
            }
        }

        let mut g1: Graph<u128> = Graph::new(n_vertices);
        for (u, v) in shape.edges() {
            if !in_cover[u] && !in_cover[v] {
                g1.add_edge(u, v);
            }
        }

        // W-major order: every edge at w before any edge at a later cover vertex.
        let mut free = Vec::new();
        for w in (0..n_vertices).filter(|&w| in_cover[w]) {
            for (x, &x_in_cover) in in_cover.iter().enumerate() {
                if shape.is_cross_pair(w, x) && (!x_in_cover || x > w) {
                    free.push((w, x));
                }
            }
        }
        let position: HashMap<(usize, usize), usize> =
            free.iter().enumerate().map(|(i, &(u, v))| ((u.min(v), u.max(v)), i)).collect();

        let generators = if symmetry {
            symmetry_generators(&shape, profile)
        } else {
            Vec::new()
        };
        let images = generators
            .into_iter()
            .map(|perm| {
                free.iter()
                    .map(|&(u, v)| {
                        let (a, b) = (perm[u], perm[v]);
                        position[&(a.min(b), a.max(b))]
                    })
                    .collect()
            })
            .collect();

        CoverSearch {
            shape,
            m: inst.m,
            n: inst.n,
            parts: shape.part_sets(),
            assigned: Vec::with_capacity(free.len()),
            free,
            images,
            g1,
            g2: Graph::new(n_vertices),
            meter,
            pending: 0,
            nodes: 0,
        }
    }

    /// Lex-leader test: the assignment must not exceed its image under any
    /// generator on the prefix where both are decided.
    fn symmetry_ok(&self) -> bool {
        let d = self.assigned.len();
        self.images.iter().all(|img| {
            for (p, &q) in img.iter().enumerate().take(d) {
                if q >= d {
                    return true;
                }
                let (a, b) = (self.assigned[p], self.assigned[q]);
                if a != b {
                    return a < b;
                }
            }
            true
        })
    }

    fn tick(&mut self) -> bool {
        self.nodes += 1;
        self.pending += 1;
        if self.pending >= CHARGE_BATCH {
            let batch = std::mem::take(&mut self.pending);
            return self.meter.charge(batch);
        }
        true
    }

    fn finish(&mut self) {
        let batch = std::mem::take(&mut self.pending);
        self.meter.charge(batch);
    }

    /// `nu_bound` is an upper bound on ν of the color-2 graph, always below `n`.
    fn dfs(&mut self, nu_bound: usize) -> Flow {
        if !self.tick() {
            return Flow::Aborted;
        }
        let depth = self.assigned.len();
        if depth == self.free.len() {
            return Flow::Found;
        }
        let (u, v) = self.free[depth];

        // Color 1 unless it closes a K_m through uv.
        let common = self.g1.neighbors(u) & self.g1.neighbors(v);
        if find_clique_within(&self.g1, &self.parts, &common, self.m - 2).is_none() {
            self.g1.add_edge(u, v);
            self.assigned.push(Color::One);
            if self.symmetry_ok() {
                match self.dfs(nu_bound) {
                    Flow::Exhausted => {}
                    other => return other,
                }
            }
            self.assigned.pop();
            self.g1.remove_edge(u, v);
        }

        // Color 2 unless it completes an n-matching.
        self.g2.add_edge(u, v);
        let mut next_bound = nu_bound + 1;
        if next_bound >= self.n {
            next_bound = matching_number_capped(&self.g2, self.n);
        }
        if next_bound < self.n {
            self.assigned.push(Color::Two);
            if self.symmetry_ok() {
                match self.dfs(next_bound) {
                    Flow::Exhausted => {}
                    other => return other,
                }
            }
            self.assigned.pop();
        }
        self.g2.remove_edge(u, v);
        Flow::Exhausted
    }

    fn witness(&self) -> TwoColoring {
        TwoColoring::from_second_color(self.shape, &self.g2)
    }
}

/// Ids `[0, N)` with `a` and `b` exchanged.
fn transposition(n: usize, a: usize, b: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.swap(a, b);
    perm
}

/// Involutions of `K_{j×t}` that fix the canonical cover set: swaps of
/// neighbouring slots on the same side of `W` within a part, and slot-wise
/// swaps of neighbouring parts with equal occupancy.
fn symmetry_generators(shape: &MultipartiteShape, profile: &[usize]) -> Vec<Vec<usize>> {
    let n = shape.vertex_count();
    let t = shape.part_size();
    let mut gens = Vec::new();
    for (p, &count) in profile.iter().enumerate() {
        for slot in 0..t.saturating_sub(1) {
            if slot + 1 == count {
                continue;
            }
            gens.push(transposition(n, shape.vertex(p, slot), shape.vertex(p, slot + 1)));
        }
    }
    for p in 0..profile.len().saturating_sub(1) {
        if profile[p] == profile[p + 1] && t > 0 {
            let mut perm: Vec<usize> = (0..n).collect();
            for slot in 0..t {
                perm.swap(shape.vertex(p, slot), shape.vertex(p + 1, slot));
            }
            gens.push(perm);
        }
    }
    gens
}

fn explore(
    inst: &Instance,
    profile: &[usize],
    config: &SearchConfig,
    meter: &Meter,
) -> (Flow, Option<TwoColoring>, u64) {
    let mut search = CoverSearch::new(inst, profile, config.symmetry_breaking, meter);
    let flow = search.dfs(0);
    search.finish();
    let witness = matches!(flow, Flow::Found).then(|| search.witness());
    (flow, witness, search.nodes)
}

/// Decides whether `K_{j×t}` has a coloring with no `K_m` in color 1 and no
/// `nK_2` in color 2.
///
/// With `threads > 1` cover sets are explored in parallel; the witness
/// returned is the one from the earliest cover profile, so the verdict and
/// witness match the single-threaded run.
pub fn decide_colorable(inst: &Instance, config: &SearchConfig) -> Result<SearchOutcome, SearchError> {
    let start = Instant::now();
    let shape = inst.shape;
    if shape.vertex_count() > WORD_SET_CAPACITY {
        return Err(SearchError::TooLarge {
            vertices: shape.vertex_count(),
        });
    }
    if shape.part_size() == 0 {
        return Ok(SearchOutcome {
            status: SearchStatus::Colorable(TwoColoring::uniform(shape, Color::One)),
            stats: SearchStats {
                elapsed: start.elapsed(),
                ..SearchStats::default()
            },
        });
    }

    let profiles = cover_profiles(&shape, inst.m, inst.n);
    let meter = Meter::new(config.budget);
    let mut cover_sets = 0;
    let mut status = SearchStatus::NotColorable;

    if config.threads <= 1 {
        for profile in &profiles {
            cover_sets += 1;
            let (flow, witness, _) = explore(inst, profile, config, &meter);
            match flow {
                Flow::Found => {
                    status = SearchStatus::Colorable(witness.expect("found"));
                    break;
                }
                Flow::Aborted => {
                    status = SearchStatus::BudgetExhausted;
                    break;
                }
                Flow::Exhausted => {}
            }
        }
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(config.threads)
            .build()
            .expect("thread pool");
        let results: Vec<(Flow, Option<TwoColoring>, u64)> =
            pool.install(|| profiles.par_iter().map(|p| explore(inst, p, config, &meter)).collect());
        cover_sets = results.len() as u64;
        // Earliest profile wins, independent of scheduling.
        for (flow, witness, _) in results {
            match flow {
                Flow::Found => {
                    status = SearchStatus::Colorable(witness.expect("found"));
                    break;
                }
                Flow::Aborted => {
                    status = SearchStatus::BudgetExhausted;
                    break;
                }
                Flow::Exhausted => {}
            }
        }
    }

    Ok(SearchOutcome {
        status,
        stats: SearchStats {
            nodes: meter.nodes(),
            cover_sets,
            elapsed: start.elapsed(),
        },
    })
}
