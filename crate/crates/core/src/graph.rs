//! Simple undirected graphs stored as adjacency bit rows.

use crate::bitset::{BitSet, VertexSet};

/// A simple undirected graph on vertices `[0, order)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph<S = BitSet> {
    adj: Vec<S>,
}

impl<S: VertexSet> Graph<S> {
    /// Edgeless graph on `order` vertices.
    pub fn new(order: usize) -> Self {
        Graph {
            adj: vec![S::empty(order); order],
        }
    }

    pub fn from_edges(order: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut g = Self::new(order);
        for (u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// Complete multipartite graph with the given part sizes; vertices are
    /// numbered part by part.
    pub fn complete_multipartite(part_sizes: &[usize]) -> Self {
        let order = part_sizes.iter().sum();
        let mut part_of = Vec::with_capacity(order);
        for (p, &size) in part_sizes.iter().enumerate() {
            part_of.extend(std::iter::repeat_n(p, size));
        }
        let mut g = Self::new(order);
        for u in 0..order {
            for v in u + 1..order {
                if part_of[u] != part_of[v] {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Complete graph `K_order`.
    pub fn complete(order: usize) -> Self {
        Self::complete_multipartite(&vec![1; order])
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Adds `uv`. Panics on loops or out-of-range ids.
    #[inline]
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "loop at vertex {u}");
        assert!(u < self.order() && v < self.order(), "edge ({u},{v}) out of range");
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    #[inline]
    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u].remove(v);
        self.adj[v].remove(u);
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adj[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &S {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// All vertices as a set.
    pub fn vertex_set(&self) -> S {
        let mut s = S::empty(self.order());
        for v in 0..self.order() {
            s.insert(v);
        }
        s
    }

    /// Same graph in another set representation.
    pub fn convert<T: VertexSet>(&self) -> Graph<T> {
        Graph::from_edges(self.order(), self.edges())
    }
}
