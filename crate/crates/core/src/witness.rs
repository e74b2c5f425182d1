//! Extremal lower-bound colorings and goodness certificates.
//!
//! The extremal coloring of `K_{j×t}` for `(K_m, nK_2)` gives color 2 to all
//! edges among the last `s = j + 2 − m` parts, a complete `s`-partite graph on
//! `s·t` vertices, and color 1 to everything else. Color 1 is then complete
//! `(m−1)`-partite (the first `m − 2` parts plus the union of the last `s`), so
//! it has no `K_m`; color 2 has `ν = ⌊s·t/2⌋`, which stays below `n` at
//! `t = t* − 1`. With `s ≤ 1` (the infinite regime) no edge gets color 2.

use rayon::prelude::*;
use thiserror::Error;

use crate::bitset::BitSet;
use crate::clique::{CliqueCertificate, CliqueEngine};
use crate::coloring::{Color, TwoColoring};
use crate::format::{ColoringDocument, TargetParams};
use crate::formula::{mrn_value, RamseyQuery, RamseyValue};
use crate::graph::Graph;
use crate::matching::{find_matching_of_size, max_matching, Matching};
use crate::shape::MultipartiteShape;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WitnessError {
    #[error("{0} is infinite; pass an explicit part size")]
    InfiniteNeedsSize(RamseyQuery),
    #[error(transparent)]
    Shape(#[from] crate::shape::ShapeError),
}

/// Result of checking a coloring against `(K_m, nK_2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoodnessReport {
    pub good: bool,
    /// An `m`-clique in color 1, when one exists.
    pub clique_cert: Option<CliqueCertificate>,
    /// An `n`-edge matching in color 2, when one exists.
    pub matching_cert: Option<Matching>,
    /// `ν` of the color-2 graph.
    pub nu2: usize,
    /// `ω` of the color-1 graph.
    pub omega1: usize,
}

/// Checks `c` for `K_m` in color 1 and `nK_2` in color 2.
pub fn verify_good(c: &TwoColoring, m: usize, n: usize) -> GoodnessReport {
    let shape = c.shape();
    let g1: Graph<BitSet> = c.color_subgraph(Color::One);
    let g2: Graph<BitSet> = c.color_subgraph(Color::Two);
    let engine = CliqueEngine::on_shape(&g1, &shape);
    let omega1 = engine.clique_number();
    let clique_cert = (omega1 >= m).then(|| {
        engine
            .contains_clique(m)
            .expect("clique number bounds the search")
    });
    let nu2 = max_matching(&g2).len();
    let matching_cert = (nu2 >= n).then(|| {
        find_matching_of_size(&g2, n).expect("matching number bounds the search")
    });
    GoodnessReport {
        good: clique_cert.is_none() && matching_cert.is_none(),
        clique_cert,
        matching_cert,
        nu2,
        omega1,
    }
}

/// The extremal coloring for `q` on `K_{j×t}` at an arbitrary part size.
pub fn extremal_coloring_at(q: &RamseyQuery, t: usize) -> Result<TwoColoring, WitnessError> {
    let shape = MultipartiteShape::new(q.j(), t)?;
    let first_second = match q.stripe_parts() {
        Some(s) => q.j() - s,
        None => q.j(),
    };
    Ok(TwoColoring::from_fn(shape, |u, v| {
        if shape.part_of(u) >= first_second && shape.part_of(v) >= first_second {
            Color::Two
        } else {
            Color::One
        }
    }))
}

/// The lower-bound witness at `t* − 1`. Infinite-regime queries have no
/// distinguished size; use [`extremal_coloring_at`].
pub fn build_extremal(q: &RamseyQuery) -> Result<TwoColoring, WitnessError> {
    match mrn_value(q) {
        RamseyValue::Finite(t) => extremal_coloring_at(q, t - 1),
        RamseyValue::Infinite => Err(WitnessError::InfiniteNeedsSize(*q)),
    }
}

/// Witness wrapped as a file document with its target parameters.
pub fn witness_document(q: &RamseyQuery, t: Option<usize>) -> Result<ColoringDocument, WitnessError> {
    let coloring = match t {
        Some(t) => extremal_coloring_at(q, t)?,
        None => build_extremal(q)?,
    };
    Ok(ColoringDocument::new(
        coloring,
        Some(TargetParams { m: q.m(), n: q.n() }),
    ))
}

/// One checked witness from a sweep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepRecord {
    pub query: RamseyQuery,
    pub part_size: usize,
    pub report: GoodnessReport,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SweepSummary {
    pub records: Vec<SweepRecord>,
}

impl SweepSummary {
    pub fn failures(&self) -> impl Iterator<Item = &SweepRecord> {
        self.records.iter().filter(|r| !r.report.good)
    }

    pub fn all_good(&self) -> bool {
        self.failures().next().is_none()
    }
}

/// Builds and verifies the witness for every finite-regime query in range.
/// Records come back sorted by `(m, j, n)` regardless of scheduling.
pub fn witness_sweep(
    m_range: std::ops::RangeInclusive<usize>,
    j_range: std::ops::RangeInclusive<usize>,
    n_range: std::ops::RangeInclusive<usize>,
) -> SweepSummary {
    let mut queries = Vec::new();
    for m in m_range {
        for j in j_range.clone() {
            for n in n_range.clone() {
                if let Ok(q) = RamseyQuery::new(j, m, n) {
                    if q.stripe_parts().is_some() {
                        queries.push(q);
                    }
                }
            }
        }
    }
    let mut records: Vec<SweepRecord> = queries
        .par_iter()
        .map(|q| {
            let c = build_extremal(q).expect("finite regime only");
            SweepRecord {
                query: *q,
                part_size: c.shape().part_size(),
                report: verify_good(&c, q.m(), q.n()),
            }
        })
        .collect();
    records.sort_by_key(|r| (r.query.m(), r.query.j(), r.query.n()));
    SweepSummary { records }
}
