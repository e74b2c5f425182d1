//! Two-colorings of the cross-part edges of `K_{j×t}`.

use std::fmt;

use thiserror::Error;

use crate::bitset::VertexSet;
use crate::graph::Graph;
use crate::shape::{MultipartiteShape, ShapeError};

/// Edge color. Color 1 is the clique side, color 2 the matching side.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    One,
    Two,
}

impl Color {
    pub const ALL: [Color; 2] = [Color::One, Color::Two];

    pub fn from_digit(c: char) -> Option<Color> {
        match c {
            '1' => Some(Color::One),
            '2' => Some(Color::Two),
            _ => None,
        }
    }

    pub fn digit(self) -> char {
        match self {
            Color::One => '1',
            Color::Two => '2',
        }
    }

    pub fn other(self) -> Color {
        match self {
            Color::One => Color::Two,
            Color::Two => Color::One,
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.digit())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("expected {expected} edge colors, got {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("relabeling is not an automorphism of the host graph")]
    NotAutomorphism,
    #[error(transparent)]
    Shape(#[from] ShapeError),
}

/// A color for every cross-part edge, stored in canonical edge order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TwoColoring {
    shape: MultipartiteShape,
    colors: Vec<Color>,
}

impl TwoColoring {
    pub fn new(shape: MultipartiteShape, colors: Vec<Color>) -> Result<Self, ColoringError> {
        if colors.len() != shape.edge_count() {
            return Err(ColoringError::LengthMismatch {
                expected: shape.edge_count(),
                found: colors.len(),
            });
        }
        Ok(TwoColoring { shape, colors })
    }

    pub fn uniform(shape: MultipartiteShape, color: Color) -> Self {
        TwoColoring {
            shape,
            colors: vec![color; shape.edge_count()],
        }
    }

    /// Colors each edge `(u, v)`, `u < v`, by `f`.
    pub fn from_fn(shape: MultipartiteShape, mut f: impl FnMut(usize, usize) -> Color) -> Self {
        let colors = shape.edges().map(|(u, v)| f(u, v)).collect();
        TwoColoring { shape, colors }
    }

    /// Colors the edges of `second` with color 2 and every other edge with 1.
    pub fn from_second_color<S: VertexSet>(
        shape: MultipartiteShape,
        second: &Graph<S>,
    ) -> Self {
        Self::from_fn(shape, |u, v| {
            if second.has_edge(u, v) {
                Color::Two
            } else {
                Color::One
            }
        })
    }

    #[inline]
    pub fn shape(&self) -> MultipartiteShape {
        self.shape
    }

    #[inline]
    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn color(&self, u: usize, v: usize) -> Result<Color, ShapeError> {
        Ok(self.colors[self.shape.edge_rank(u, v)?])
    }

    pub fn set_color(&mut self, u: usize, v: usize, c: Color) -> Result<(), ShapeError> {
        let r = self.shape.edge_rank(u, v)?;
        self.colors[r] = c;
        Ok(())
    }

    pub fn count(&self, c: Color) -> usize {
        self.colors.iter().filter(|&&x| x == c).count()
    }

    /// Graph on all `N` vertices whose edges are the cross-part edges of color `c`.
    pub fn color_subgraph<S: VertexSet>(&self, c: Color) -> Graph<S> {
        let edges = self
            .shape
            .edges()
            .zip(&self.colors)
            .filter(|(_, &col)| col == c)
            .map(|(e, _)| e);
        Graph::from_edges(self.shape.vertex_count(), edges)
    }

    /// Payload string of `'1'`/`'2'` digits.
    pub fn digits(&self) -> String {
        self.colors.iter().map(|c| c.digit()).collect()
    }

    /// Image of this coloring under the vertex relabeling `v -> perm[v]`.
    ///
    /// `perm` must permute `[0, N)` and preserve the part structure.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self, ColoringError> {
        let s = self.shape;
        let n = s.vertex_count();
        if perm.len() != n {
            return Err(ColoringError::NotAutomorphism);
        }
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(ColoringError::NotAutomorphism);
            }
        }
        for u in 0..n {
            for v in u + 1..n {
                if (s.part_of(u) == s.part_of(v)) != (s.part_of(perm[u]) == s.part_of(perm[v])) {
                    return Err(ColoringError::NotAutomorphism);
                }
            }
        }
        let mut colors = vec![Color::One; self.colors.len()];
        for ((u, v), &c) in s.edges().zip(&self.colors) {
            colors[s.edge_rank(perm[u], perm[v])?] = c;
        }
        Ok(TwoColoring { shape: s, colors })
    }
}
