//! Clique detection and clique numbers by branch and bound.
//!
//! Candidates are branched on in ascending vertex order. Two bounds cut
//! branches: the number of host parts a candidate set touches (parts are
//! independent in every subgraph of `K_{j×t}`) and a greedy coloring of the
//! candidates.

use crate::bitset::VertexSet;
use crate::graph::Graph;
use crate::shape::MultipartiteShape;

/// Vertex ids of a clique, ascending.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CliqueCertificate {
    pub vertices: Vec<usize>,
}

/// Number of part masks meeting `cand`.
#[inline]
fn parts_touched<S: VertexSet>(parts: &[S], cand: &S) -> usize {
    parts.iter().filter(|p| p.intersects(cand)).count()
}

/// Greedy sequential coloring of `cand`; returns the class count, saturating at `cap`.
fn greedy_classes<S: VertexSet>(g: &Graph<S>, cand: &S, cap: usize) -> usize {
    let mut rest = cand.clone();
    let mut classes = 0;
    while !rest.is_empty() && classes < cap {
        let mut avail = rest.clone();
        while let Some(v) = avail.first() {
            avail.remove(v);
            rest.remove(v);
            avail = avail.difference(g.neighbors(v));
        }
        classes += 1;
    }
    classes
}

/// Upper bound on the clique number of `g[cand]`, or `cap` if it is at least `cap`.
#[inline]
fn bound<S: VertexSet>(g: &Graph<S>, parts: &[S], cand: &S, cap: usize) -> usize {
    let mut b = cand.len().min(cap);
    if !parts.is_empty() {
        b = b.min(parts_touched(parts, cand));
    }
    if b < cap {
        return b;
    }
    greedy_classes(g, cand, cap)
}

fn extend<S: VertexSet>(
    g: &Graph<S>,
    parts: &[S],
    clique: &mut Vec<usize>,
    mut cand: S,
    k: usize,
) -> bool {
    let need = k - clique.len();
    if need == 0 {
        return true;
    }
    if bound(g, parts, &cand, need) < need {
        return false;
    }
    while let Some(v) = cand.first() {
        if cand.len() < need {
            return false;
        }
        clique.push(v);
        if extend(g, parts, clique, cand.intersection(g.neighbors(v)), k) {
            return true;
        }
        clique.pop();
        cand.remove(v);
    }
    false
}

/// A `k`-clique of `g` inside `cand`, lowest-first. `parts` may be empty when
/// no host partition is known.
pub fn find_clique_within<S: VertexSet>(
    g: &Graph<S>,
    parts: &[S],
    cand: &S,
    k: usize,
) -> Option<Vec<usize>> {
    let mut clique = Vec::with_capacity(k);
    extend(g, parts, &mut clique, cand.clone(), k).then_some(clique)
}

fn maximize<S: VertexSet>(
    g: &Graph<S>,
    parts: &[S],
    clique: &mut Vec<usize>,
    mut cand: S,
    best: &mut Vec<usize>,
) {
    if cand.is_empty() {
        if clique.len() > best.len() {
            best.clone_from(clique);
        }
        return;
    }
    let target = (best.len() + 1).saturating_sub(clique.len());
    if bound(g, parts, &cand, target) < target {
        return;
    }
    while let Some(v) = cand.first() {
        if clique.len() + cand.len() <= best.len() {
            return;
        }
        clique.push(v);
        maximize(g, parts, clique, cand.intersection(g.neighbors(v)), best);
        clique.pop();
        cand.remove(v);
    }
}

/// Clique search bound to one graph, optionally aware of its host partition.
pub struct CliqueEngine<'g, S> {
    graph: &'g Graph<S>,
    parts: Vec<S>,
}

impl<'g, S: VertexSet> CliqueEngine<'g, S> {
    /// Engine without partition knowledge; only the coloring bound applies.
    pub fn new(graph: &'g Graph<S>) -> Self {
        CliqueEngine {
            graph,
            parts: Vec::new(),
        }
    }

    /// Engine for a subgraph of `K_{j×t}`; each host part bounds at most one
    /// clique vertex.
    pub fn on_shape(graph: &'g Graph<S>, shape: &MultipartiteShape) -> Self {
        assert_eq!(graph.order(), shape.vertex_count(), "graph does not match shape");
        CliqueEngine {
            graph,
            parts: shape.part_sets(),
        }
    }

    /// A certificate for `K_m ⊆ G`, if one exists. `m = 0` yields the empty
    /// certificate.
    pub fn contains_clique(&self, m: usize) -> Option<CliqueCertificate> {
        find_clique_within(self.graph, &self.parts, &self.graph.vertex_set(), m)
            .map(|vertices| CliqueCertificate { vertices })
    }

    /// A maximum clique, lexicographically first among those found by the
    /// ascending branching order.
    pub fn maximum_clique(&self) -> CliqueCertificate {
        let mut best = Vec::new();
        let mut clique = Vec::new();
        maximize(self.graph, &self.parts, &mut clique, self.graph.vertex_set(), &mut best);
        CliqueCertificate { vertices: best }
    }

    pub fn clique_number(&self) -> usize {
        self.maximum_clique().vertices.len()
    }
}

/// `K_m ⊆ g`, with `g` viewed as a subgraph of `shape`.
pub fn contains_clique<S: VertexSet>(
    g: &Graph<S>,
    shape: &MultipartiteShape,
    m: usize,
) -> Option<CliqueCertificate> {
    CliqueEngine::on_shape(g, shape).contains_clique(m)
}

/// Exact `ω(g)`.
pub fn clique_number<S: VertexSet>(g: &Graph<S>) -> usize {
    CliqueEngine::new(g).clique_number()
}

/// `cert` lists `m` distinct, pairwise adjacent vertices of `g`.
pub fn verify_clique<S: VertexSet>(g: &Graph<S>, cert: &CliqueCertificate, m: usize) -> bool {
    let vs = &cert.vertices;
    vs.len() == m
        && vs.iter().all(|&v| v < g.order())
        && vs
            .iter()
            .enumerate()
            .all(|(i, &u)| vs[i + 1..].iter().all(|&v| u != v && g.has_edge(u, v)))
}
