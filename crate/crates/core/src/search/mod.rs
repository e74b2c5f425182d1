//! Exact decision of "is `K_{j×t}` 2-colorable to `(K_m, nK_2)`?".
//!
//! [`decide_colorable`] runs the cover-set search: in a good coloring the
//! vertices of a maximum color-2 matching cover every color-2 edge and number
//! at most `2(n − 1)`, so it suffices to fix such a cover `W` up to host
//! symmetry, color everything outside `W` with 1, and branch only on edges
//! meeting `W`. [`decide_colorable_naive`] enumerates all `2^E` colorings and
//! exists to cross-check it on tiny hosts.

mod cover;
mod naive;

use std::fmt;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

use thiserror::Error;

use crate::coloring::TwoColoring;
use crate::formula::{QueryError, RamseyQuery, RamseyValue};
use crate::shape::{MultipartiteShape, ShapeError};

pub use cover::{cover_profiles, decide_colorable};
pub use naive::{decide_colorable_naive, decide_colorable_naive_with_limit, NAIVE_EDGE_LIMIT};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error(transparent)]
    Query(#[from] QueryError),
    #[error(transparent)]
    Shape(#[from] ShapeError),
    #[error("host has {vertices} vertices; the search handles at most 128")]
    TooLarge { vertices: usize },
    #[error("host has {edges} edges; naive enumeration is limited to {limit}")]
    NaiveTooLarge { edges: usize, limit: usize },
}

/// Node and wall-clock limits. Exceeding either ends the search with
/// [`SearchStatus::BudgetExhausted`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: Option<u64>,
    pub max_time: Option<Duration>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget::default()
    }

    pub fn nodes(max_nodes: u64) -> Self {
        Budget {
            max_nodes: Some(max_nodes),
            max_time: None,
        }
    }

    pub fn time(max_time: Duration) -> Self {
        Budget {
            max_nodes: None,
            max_time: Some(max_time),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub budget: Budget,
    /// Worker threads for exploring cover sets; `1` runs single-threaded.
    pub threads: usize,
    /// Lex-leader pruning under the automorphisms fixing each cover set.
    pub symmetry_breaking: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            budget: Budget::unlimited(),
            threads: 1,
            symmetry_breaking: true,
        }
    }
}

impl SearchConfig {
    pub fn with_budget(budget: Budget) -> Self {
        SearchConfig {
            budget,
            ..Self::default()
        }
    }
}

/// One instance `(j, t, m, n)` of the decision problem.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Instance {
    pub shape: MultipartiteShape,
    pub m: usize,
    pub n: usize,
}

impl Instance {
    pub fn new(j: usize, t: usize, m: usize, n: usize) -> Result<Self, SearchError> {
        RamseyQuery::new(j, m, n)?;
        Ok(Instance {
            shape: MultipartiteShape::new(j, t)?,
            m,
            n,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchStatus {
    Colorable(TwoColoring),
    NotColorable,
    BudgetExhausted,
}

impl SearchStatus {
    pub fn verdict(&self) -> Verdict {
        match self {
            SearchStatus::Colorable(_) => Verdict::Colorable,
            SearchStatus::NotColorable => Verdict::NotColorable,
            SearchStatus::BudgetExhausted => Verdict::BudgetExhausted,
        }
    }

    pub fn witness(&self) -> Option<&TwoColoring> {
        match self {
            SearchStatus::Colorable(c) => Some(c),
            _ => None,
        }
    }
}

/// [`SearchStatus`] without the witness.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Colorable,
    NotColorable,
    BudgetExhausted,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Colorable => "COLORABLE",
            Verdict::NotColorable => "NOT_COLORABLE",
            Verdict::BudgetExhausted => "BUDGET_EXHAUSTED",
        })
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Search-tree nodes expanded (colorings examined, for the naive oracle).
    pub nodes: u64,
    /// Cover-set profiles whose subtree was entered.
    pub cover_sets: u64,
    pub elapsed: Duration,
}

impl SearchStats {
    fn absorb(&mut self, other: &SearchStats) {
        self.nodes += other.nodes;
        self.cover_sets += other.cover_sets;
        self.elapsed += other.elapsed;
    }
}

impl fmt::Display for SearchStats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "nodes={} cover_sets={} elapsed_ms={}",
            self.nodes,
            self.cover_sets,
            self.elapsed.as_millis()
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    pub status: SearchStatus,
    pub stats: SearchStats,
}

/// Node counter and stop flag shared by all workers of one search.
pub(crate) struct Meter {
    nodes: AtomicU64,
    exhausted: AtomicBool,
    max_nodes: Option<u64>,
    deadline: Option<Instant>,
}

impl Meter {
    pub(crate) fn new(budget: Budget) -> Self {
        Meter {
            nodes: AtomicU64::new(0),
            exhausted: AtomicBool::new(false),
            max_nodes: budget.max_nodes,
            deadline: budget.max_time.map(|d| Instant::now() + d),
        }
    }

    /// Adds `batch` nodes; returns false once the budget is gone.
    pub(crate) fn charge(&self, batch: u64) -> bool {
        if self.exhausted.load(Ordering::Relaxed) {
            return false;
        }
        let total = self.nodes.fetch_add(batch, Ordering::Relaxed) + batch;
        let over_nodes = self.max_nodes.is_some_and(|max| total > max);
        let over_time = self.deadline.is_some_and(|d| Instant::now() >= d);
        if over_nodes || over_time {
            self.exhausted.store(true, Ordering::Relaxed);
            return false;
        }
        true
    }

    pub(crate) fn nodes(&self) -> u64 {
        self.nodes.load(Ordering::Relaxed)
    }
}

/// Value of `m_j(K_m, nK_2)` as established by search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ComputedValue {
    /// Colorable at `t − 1`, not colorable at `t`.
    Finite(usize),
    /// `j ≤ m − 1` and every `t ≤ checked_up_to` was colorable.
    InfiniteEvidence { checked_up_to: usize },
    /// Budget ran out at `at_t`, or no flip occurred up to `t_max`.
    Unresolved { at_t: usize },
}

impl ComputedValue {
    /// Agreement with a closed-form value.
    pub fn matches(&self, value: RamseyValue) -> bool {
        match (self, value) {
            (ComputedValue::Finite(a), RamseyValue::Finite(b)) => *a == b,
            (ComputedValue::InfiniteEvidence { .. }, RamseyValue::Infinite) => true,
            _ => false,
        }
    }
}

impl fmt::Display for ComputedValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComputedValue::Finite(t) => write!(f, "FINITE({t})"),
            ComputedValue::InfiniteEvidence { checked_up_to } => {
                write!(f, "INFINITE (colorable for all t <= {checked_up_to})")
            }
            ComputedValue::Unresolved { at_t } => write!(f, "UNRESOLVED (at t={at_t})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComputeReport {
    pub value: ComputedValue,
    /// Verdict per part size tried, in increasing `t`.
    pub steps: Vec<(usize, Verdict)>,
    pub stats: SearchStats,
}

/// Searches `t = 1, 2, …, t_max` until the host stops being colorable. The
/// budget covers the whole computation.
pub fn compute_value_by_search(
    j: usize,
    m: usize,
    n: usize,
    t_max: usize,
    config: &SearchConfig,
) -> Result<ComputeReport, SearchError> {
    RamseyQuery::new(j, m, n)?;
    let start = Instant::now();
    let mut stats = SearchStats::default();
    let mut steps = Vec::new();
    for t in 1..=t_max {
        let remaining = Budget {
            max_nodes: config.budget.max_nodes.map(|b| b.saturating_sub(stats.nodes)),
            max_time: config.budget.max_time.map(|d| d.saturating_sub(start.elapsed())),
        };
        let sub = SearchConfig {
            budget: remaining,
            ..*config
        };
        let outcome = decide_colorable(&Instance::new(j, t, m, n)?, &sub)?;
        stats.absorb(&outcome.stats);
        let verdict = outcome.status.verdict();
        steps.push((t, verdict));
        let value = match verdict {
            Verdict::Colorable => continue,
            Verdict::NotColorable => ComputedValue::Finite(t),
            Verdict::BudgetExhausted => ComputedValue::Unresolved { at_t: t },
        };
        stats.elapsed = start.elapsed();
        return Ok(ComputeReport { value, steps, stats });
    }
    stats.elapsed = start.elapsed();
    let value = if j < m {
        ComputedValue::InfiniteEvidence { checked_up_to: t_max }
    } else {
        ComputedValue::Unresolved { at_t: t_max }
    };
    Ok(ComputeReport { value, steps, stats })
}
