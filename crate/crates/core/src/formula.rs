//! Closed-form values of `m_j(K_m, nK_2)`.
//!
//! One formula covers every regime: no finite size works when `j ≤ m − 1`
//! (a `(m−1)`-partite host is `K_m`-free, so coloring everything 1 is good at
//! any size), and otherwise the value is `⌈2n / (j + 2 − m)⌉`. The individual
//! results it subsumes are kept in [`stated_values`] and checked against it by
//! [`consistency_table`].

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum QueryError {
    #[error("j must be ≥ 2")]
    TooFewParts,
    #[error("m must be ≥ 3")]
    CliqueTooSmall,
    #[error("n must be ≥ 1")]
    NoStripes,
}

/// The pair `(K_m, nK_2)` on `j`-partite hosts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RamseyQuery {
    j: usize,
    m: usize,
    n: usize,
}

impl RamseyQuery {
    pub fn new(j: usize, m: usize, n: usize) -> Result<Self, QueryError> {
        if j < 2 {
            return Err(QueryError::TooFewParts);
        }
        if m < 3 {
            return Err(QueryError::CliqueTooSmall);
        }
        if n < 1 {
            return Err(QueryError::NoStripes);
        }
        Ok(RamseyQuery { j, m, n })
    }

    #[inline]
    pub fn j(&self) -> usize {
        self.j
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// `s = j + 2 − m`, the number of parts carrying color 2 in the extremal
    /// coloring; `None` in the infinite regime.
    pub fn stripe_parts(&self) -> Option<usize> {
        (self.j >= self.m).then(|| self.j + 2 - self.m)
    }
}

impl fmt::Display for RamseyQuery {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m_{}(K_{}, {}K2)", self.j, self.m, self.n)
    }
}

/// A size multipartite Ramsey number.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RamseyValue {
    Finite(usize),
    Infinite,
}

impl RamseyValue {
    pub fn finite(self) -> Option<usize> {
        match self {
            RamseyValue::Finite(t) => Some(t),
            RamseyValue::Infinite => None,
        }
    }
}

impl fmt::Display for RamseyValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RamseyValue::Finite(t) => write!(f, "{t}"),
            RamseyValue::Infinite => f.write_str("INF"),
        }
    }
}

/// `m_j(K_m, nK_2)`.
pub fn mrn_value(q: &RamseyQuery) -> RamseyValue {
    match q.stripe_parts() {
        None => RamseyValue::Infinite,
        Some(s) => RamseyValue::Finite((2 * q.n).div_ceil(s)),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Regime {
    /// `j ≤ m − 1`.
    InfiniteFewParts,
    /// `j = m`.
    Diagonal,
    /// `j = m + 1`, `n ≤ 5`.
    SubdiagonalSmallN,
    General,
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Regime::InfiniteFewParts => "INFINITE_FEW_PARTS",
            Regime::Diagonal => "DIAGONAL",
            Regime::SubdiagonalSmallN => "SUBDIAGONAL_SMALL_N",
            Regime::General => "GENERAL",
        })
    }
}

/// A regime plus the name of the result that settles it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RegimeTag {
    pub regime: Regime,
    pub result: &'static str,
}

pub fn classify_regime(q: &RamseyQuery) -> RegimeTag {
    let (regime, result) = if q.j < q.m {
        (Regime::InfiniteFewParts, "infinite regime")
    } else if q.j == q.m {
        (Regime::Diagonal, "diagonal theorem")
    } else if q.j == q.m + 1 && q.n <= 5 {
        (Regime::SubdiagonalSmallN, "subdiagonal theorem")
    } else {
        let result = match q.m {
            3 => "K_3 theorem",
            4 => "combined K_4 theorem",
            5 => "combined K_5 theorem",
            _ => "main theorem",
        };
        (Regime::General, result)
    };
    RegimeTag { regime, result }
}

fn ceil_div(a: usize, b: usize) -> usize {
    a.div_ceil(b)
}

/// Every individually stated value covering `q`, each with its source name.
///
/// These are transcribed one result at a time, independently of
/// [`mrn_value`], so they can serve as its oracle.
pub fn stated_values(q: &RamseyQuery) -> Vec<(&'static str, RamseyValue)> {
    use RamseyValue::{Finite, Infinite};
    let (j, m, n) = (q.j, q.m, q.n);
    let mut out = Vec::new();
    if j < m {
        out.push(("few parts: infinite", Infinite));
    }
    if j == m && n <= 2 {
        out.push(("diagonal, n <= 2", Finite(n)));
    }
    if j == m && n >= 3 {
        out.push(("diagonal, n >= 3", Finite(n)));
    }
    if j == m + 1 && (3..=5).contains(&n) {
        out.push(("subdiagonal, n in 3..=5", Finite(n - 1)));
    }
    if m == 3 {
        let v = if j == 2 { Infinite } else { Finite(ceil_div(2 * n, j - 1)) };
        out.push(("K_3 stripes", v));
    }
    if m == 4 {
        let v = if j <= 3 { Infinite } else { Finite(ceil_div(2 * n, j - 2)) };
        out.push(("combined K_4", v));
        if j == 5 && n >= 3 {
            out.push(("m_5(K_4), n >= 3", Finite(ceil_div(2 * n, 3))));
        }
        if n == 1 && j >= 4 {
            out.push(("K_4 remark: one stripe", Finite(1)));
        }
        if n == 2 && j >= 6 {
            out.push(("K_4 remark: 2K2, j >= 6", Finite(1)));
        }
        if n == 2 && j == 5 {
            out.push(("K_4 remark: m_5(K_4, 2K2)", Finite(2)));
        }
    }
    if m == 5 {
        let v = if j <= 4 { Infinite } else { Finite(ceil_div(2 * n, j - 3)) };
        out.push(("combined K_5", v));
        if j == 6 && (6..=8).contains(&n) {
            out.push(("m_6(K_5), n in 6..=8", Finite(n - 2)));
        }
        if j == 6 && n >= 6 {
            out.push(("m_6(K_5), n >= 6", Finite(n - n / 3)));
        }
        if n == 2 && j >= 7 {
            out.push(("K_5 remark: 2K2, j >= 7", Finite(1)));
        }
        if j == 6 && n == 1 {
            out.push(("K_5 remark: m_6(K_5, K2)", Finite(1)));
        }
        if j == 6 && n == 2 {
            out.push(("K_5 remark: m_6(K_5, 2K2)", Finite(2)));
        }
    }
    if m >= 4 && j >= m && n >= 3 {
        out.push(("main theorem", Finite(ceil_div(2 * n, j + 2 - m))));
    }
    if m >= 6 && j >= m + 2 && n >= 3 {
        out.push(("general m >= 6", Finite(ceil_div(2 * n, j + 2 - m))));
    }
    out
}

/// One comparison between the unified formula and a stated result.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConsistencyRow {
    pub query: RamseyQuery,
    pub unified: RamseyValue,
    pub stated: RamseyValue,
    pub source: &'static str,
}

impl ConsistencyRow {
    pub fn agrees(&self) -> bool {
        self.unified == self.stated
    }
}

/// Rows for `m ∈ {3,4,5}`, `2 ≤ j ≤ 12`, plus the diagonal, subdiagonal and
/// general families for `6 ≤ m ≤ 12`; all with `1 ≤ n ≤ 40`.
pub fn consistency_table() -> Vec<ConsistencyRow> {
    let mut queries = Vec::new();
    for m in 3..=5 {
        for j in 2..=12 {
            queries.push((j, m));
        }
    }
    for m in 6..=12 {
        for j in 2..=m + 4 {
            queries.push((j, m));
        }
    }
    let mut rows = Vec::new();
    for (j, m) in queries {
        for n in 1..=40 {
            let q = RamseyQuery::new(j, m, n).expect("grid parameters are valid");
            let unified = mrn_value(&q);
            rows.extend(stated_values(&q).into_iter().map(|(source, stated)| ConsistencyRow {
                query: q,
                unified,
                stated,
                source,
            }));
        }
    }
    rows
}

#[cfg(test)]
mod tests {
    use super::*;
    use RamseyValue::{Finite, Infinite};

    fn value(j: usize, m: usize, n: usize) -> RamseyValue {
        mrn_value(&RamseyQuery::new(j, m, n).unwrap())
    }

    #[test]
    fn reference_values() {
        assert_eq!(value(3, 5, 2), Infinite);
        assert_eq!(value(5, 5, 9), Finite(9));
        assert_eq!(value(7, 4, 10), Finite(4));
        assert_eq!(value(6, 5, 7), Finite(5));
        assert_eq!(value(6, 5, 6), Finite(4));
        assert_eq!(value(4, 3, 4), Finite(3));
    }

    #[test]
    fn parameter_errors() {
        assert_eq!(RamseyQuery::new(5, 2, 3), Err(QueryError::CliqueTooSmall));
        assert_eq!(RamseyQuery::new(1, 4, 3), Err(QueryError::TooFewParts));
        assert_eq!(RamseyQuery::new(5, 4, 0), Err(QueryError::NoStripes));
    }

    #[test]
    fn regimes() {
        let tag = |j, m, n| classify_regime(&RamseyQuery::new(j, m, n).unwrap());
        assert_eq!(tag(4, 4, 7).regime, Regime::Diagonal);
        assert_eq!(tag(5, 4, 3).regime, Regime::SubdiagonalSmallN);
        assert_eq!(tag(2, 4, 1).regime, Regime::InfiniteFewParts);
        assert_eq!(tag(5, 4, 6).regime, Regime::General);
        assert_eq!(tag(7, 4, 10).result, "combined K_4 theorem");
    }

    #[test]
    fn consistency_rows_from_examples() {
        let rows = consistency_table();
        let find = |j, m, n, source: &str| {
            rows.iter()
                .find(|r| (r.query.j(), r.query.m(), r.query.n()) == (j, m, n) && r.source == source)
                .cloned()
                .unwrap()
        };
        let r = find(5, 4, 5, "subdiagonal, n in 3..=5");
        assert_eq!((r.unified, r.stated), (Finite(4), Finite(4)));
        let r = find(6, 5, 8, "m_6(K_5), n in 6..=8");
        assert_eq!((r.unified, r.stated), (Finite(6), Finite(6)));
        let r = find(5, 4, 2, "K_4 remark: m_5(K_4, 2K2)");
        assert_eq!((r.unified, r.stated), (Finite(2), Finite(2)));
        assert!(rows.iter().all(ConsistencyRow::agrees));
    }

    #[test]
    fn monotone_in_n_and_antitone_in_j() {
        for m in 3..=8 {
            for j in m..=12 {
                for n in 1..40 {
                    assert!(value(j, m, n).finite() <= value(j, m, n + 1).finite());
                    if j < 12 {
                        assert!(value(j + 1, m, n).finite() <= value(j, m, n).finite());
                    }
                }
            }
        }
    }

    #[test]
    fn small_stripe_counts() {
        for m in 3..=10 {
            for j in m..=m + 6 {
                assert_eq!(value(j, m, 1), Finite(1));
                let two = if j <= m + 1 { 2 } else { 1 };
                assert_eq!(value(j, m, 2), Finite(two), "j={j} m={m}");
            }
        }
    }
}
