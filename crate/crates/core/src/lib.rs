//! Size multipartite Ramsey numbers `m_j(K_m, nK_2)`.
//!
//! `m_j(K_m, nK_2)` is the least `t` such that every red/blue coloring of the
//! complete multipartite graph `K_{j×t}` has a `K_m` in color 1 or a matching
//! of `n` edges in color 2. This crate evaluates the closed form, builds the
//! extremal colorings that certify the lower bound, checks colorings with
//! clique and matching certificates, and decides small instances exactly by
//! search so the closed form can be confirmed independently.

pub mod bitset;
pub mod clique;
pub mod coloring;
pub mod format;
pub mod formula;
pub mod graph;
pub mod matching;
pub mod search;
pub mod shape;
pub mod table;
pub mod witness;

pub use coloring::{Color, TwoColoring};
pub use format::{ColoringDocument, FormatError, TargetParams};
pub use formula::{classify_regime, mrn_value, QueryError, RamseyQuery, RamseyValue, Regime, RegimeTag};
pub use graph::Graph;
pub use shape::{MultipartiteShape, ShapeError};
pub use witness::{build_extremal, verify_good, GoodnessReport};
