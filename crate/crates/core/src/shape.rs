//! Complete multipartite host graphs `K_{j×t}` and their canonical edge order.
//!
//! Vertices are laid out part-major: vertex `v` sits in part `v / t` at slot
//! `v % t`. Cross-part edges are ranked lexicographically over `(min, max)`
//! pairs with intra-part pairs skipped.

use std::ops::Range;

use thiserror::Error;

use crate::bitset::VertexSet;
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShapeError {
    #[error("a multipartite shape needs at least 2 parts, got {0}")]
    TooFewParts(usize),
    #[error("vertex {vertex} out of range for {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("vertices {0} and {1} lie in the same part")]
    SamePart(usize, usize),
    #[error("edge rank {rank} out of range for {edges} edges")]
    RankOutOfRange { rank: usize, edges: usize },
    #[error("shape {parts}x{part_size} is too large")]
    Overflow { parts: usize, part_size: usize },
}

/// The host graph `K_{j×t}`: `j` parts of `t` vertices each.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MultipartiteShape {
    parts: usize,
    part_size: usize,
}

impl MultipartiteShape {
    pub fn new(parts: usize, part_size: usize) -> Result<Self, ShapeError> {
        if parts < 2 {
            return Err(ShapeError::TooFewParts(parts));
        }
        // N² bounds every derived count.
        parts
            .checked_mul(part_size)
            .and_then(|n| n.checked_mul(n))
            .ok_or(ShapeError::Overflow { parts, part_size })?;
        Ok(MultipartiteShape { parts, part_size })
    }

    /// Number of parts `j`.
    #[inline]
    pub fn parts(&self) -> usize {
        self.parts
    }

    /// Vertices per part `t`.
    #[inline]
    pub fn part_size(&self) -> usize {
        self.part_size
    }

    /// `N = j·t`.
    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.parts * self.part_size
    }

    /// `E = t²·j(j−1)/2`.
    #[inline]
    pub fn edge_count(&self) -> usize {
        self.part_size * self.part_size * self.parts * (self.parts - 1) / 2
    }

    #[inline]
    pub fn part_of(&self, v: usize) -> usize {
        v / self.part_size
    }

    #[inline]
    pub fn slot_of(&self, v: usize) -> usize {
        v % self.part_size
    }

    #[inline]
    pub fn vertex(&self, part: usize, slot: usize) -> usize {
        debug_assert!(part < self.parts && slot < self.part_size);
        part * self.part_size + slot
    }

    /// Vertex ids of part `p`.
    pub fn part_members(&self, p: usize) -> Range<usize> {
        p * self.part_size..(p + 1) * self.part_size
    }

    /// True when `u` and `v` are distinct in-range vertices of different parts.
    pub fn is_cross_pair(&self, u: usize, v: usize) -> bool {
        let n = self.vertex_count();
        u < n && v < n && self.part_of(u) != self.part_of(v)
    }

    fn check_vertex(&self, v: usize) -> Result<(), ShapeError> {
        if v >= self.vertex_count() {
            Err(ShapeError::VertexOutOfRange {
                vertex: v,
                order: self.vertex_count(),
            })
        } else {
            Ok(())
        }
    }

    /// Number of cross-part edges whose smaller endpoint lies in part `p`.
    fn block_len(&self, p: usize) -> usize {
        self.part_size * (self.parts - 1 - p) * self.part_size
    }

    /// Rank of the cross-part edge `{u, v}` in canonical order.
    pub fn edge_rank(&self, u: usize, v: usize) -> Result<usize, ShapeError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let (u, v) = if u < v { (u, v) } else { (v, u) };
        let (pu, pv) = (self.part_of(u), self.part_of(v));
        if pu == pv {
            return Err(ShapeError::SamePart(u, v));
        }
        let t = self.part_size;
        let j = self.parts;
        // Parts before pu, then earlier slots of pu, then the offset of v
        // among vertices of later parts.
        let before_part = t * t * (pu * (j - 1) - pu * pu.saturating_sub(1) / 2);
        let before_slot = self.slot_of(u) * (j - 1 - pu) * t;
        Ok(before_part + before_slot + (v - (pu + 1) * t))
    }

    /// Inverse of [`edge_rank`](Self::edge_rank); returns `(u, v)` with `u < v`.
    pub fn edge_unrank(&self, rank: usize) -> Result<(usize, usize), ShapeError> {
        let edges = self.edge_count();
        if rank >= edges {
            return Err(ShapeError::RankOutOfRange { rank, edges });
        }
        let t = self.part_size;
        let mut rest = rank;
        let mut p = 0;
        while rest >= self.block_len(p) {
            rest -= self.block_len(p);
            p += 1;
        }
        let row = (self.parts - 1 - p) * t;
        let u = p * t + rest / row;
        let v = (p + 1) * t + rest % row;
        Ok((u, v))
    }

    /// Cross-part edges in rank order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.vertex_count();
        (0..n).flat_map(move |u| {
            let start = (self.part_of(u) + 1) * self.part_size;
            (start..n).map(move |v| (u, v))
        })
    }

    /// The host graph itself.
    pub fn host_graph<S: VertexSet>(&self) -> Graph<S> {
        Graph::complete_multipartite(&vec![self.part_size; self.parts])
    }

    /// Part membership masks, one per part.
    pub fn part_sets<S: VertexSet>(&self) -> Vec<S> {
        (0..self.parts)
            .map(|p| crate::bitset::set_of(self.vertex_count(), self.part_members(p)))
            .collect()
    }
}
