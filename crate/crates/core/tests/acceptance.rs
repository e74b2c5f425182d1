//! End-to-end acceptance suite. Runs without the libtest harness so each
//! criterion prints exactly one PASS/FAIL line; exits non-zero on any failure.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{brute_clique_number, brute_matching_number, integer_partitions};
use mrn_core::clique::clique_number;
use mrn_core::formula::consistency_table;
use mrn_core::graph::Graph;
use mrn_core::matching::{max_matching, nu_complete_multipartite};
use mrn_core::search::{
    compute_value_by_search, decide_colorable, decide_colorable_naive, Budget, Instance,
    SearchConfig, NAIVE_EDGE_LIMIT,
};
use mrn_core::table::{render_table, TableFormat, TableSpec};
use mrn_core::witness::{witness_document, witness_sweep};
use mrn_core::{mrn_value, verify_good, ColoringDocument, MultipartiteShape, RamseyQuery};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Outcome {
    failures: Vec<String>,
    detail: String,
}

fn criterion(
    id: u32,
    title: &str,
    limit: Duration,
    body: impl FnOnce() -> Outcome,
) -> bool {
    let start = Instant::now();
    let mut out = body();
    let elapsed = start.elapsed();
    if elapsed > limit {
        out.failures.push(format!("took {elapsed:.2?}, limit {limit:?}"));
    }
    let ok = out.failures.is_empty();
    println!(
        "[{}] criterion {id}: {title} ({}; {elapsed:.2?} of {limit:?})",
        if ok { "PASS" } else { "FAIL" },
        out.detail,
    );
    for f in out.failures.iter().take(10) {
        println!("       {f}");
    }
    ok
}

fn formula_consistency() -> Outcome {
    let rows = consistency_table();
    let sources: BTreeSet<&str> = rows.iter().map(|r| r.source).collect();
    let mut failures: Vec<String> = rows
        .iter()
        .filter(|r| !r.agrees())
        .map(|r| format!("{}: unified {} vs {} says {}", r.query, r.unified, r.source, r.stated))
        .collect();
    for required in [
        "diagonal, n >= 3",
        "subdiagonal, n in 3..=5",
        "m_5(K_4), n >= 3",
        "m_6(K_5), n in 6..=8",
        "m_6(K_5), n >= 6",
        "combined K_4",
        "combined K_5",
        "K_3 stripes",
    ] {
        if !sources.contains(required) {
            failures.push(format!("no rows for {required}"));
        }
    }
    Outcome {
        failures,
        detail: format!("{} comparisons over {} stated results", rows.len(), sources.len()),
    }
}

fn witness_validity() -> Outcome {
    let summary = witness_sweep(3..=8, 3..=12, 1..=20);
    let mut failures = Vec::new();
    for r in &summary.records {
        let (j, m, n) = (r.query.j(), r.query.m(), r.query.n());
        if j < m {
            continue;
        }
        let s = j + 2 - m;
        let t_star = mrn_value(&r.query).finite().unwrap();
        let expected_nu = s * (t_star - 1) / 2;
        let expected_omega = if t_star == 1 { 0 } else { m - 1 };
        if !r.report.good
            || r.part_size != t_star - 1
            || r.report.omega1 != expected_omega
            || r.report.nu2 != expected_nu
            || expected_nu > n - 1
        {
            failures.push(format!(
                "{}: t={} good={} omega1={} nu2={} (expected {expected_omega}, {expected_nu})",
                r.query, r.part_size, r.report.good, r.report.omega1, r.report.nu2
            ));
        }
    }
    Outcome {
        failures,
        detail: format!("{} witnesses", summary.records.len()),
    }
}

fn search_grid() -> Outcome {
    let mut grid = Vec::new();
    for j in 5..=7 {
        grid.extend((1..=4).map(|n| (j, 4, n)));
        grid.extend((1..=3).map(|n| (j, 5, n)));
    }
    for j in 3..=5 {
        grid.extend((1..=4).map(|n| (j, 3, n)));
    }
    for m in 4..=5 {
        grid.extend((1..=3).map(|n| (m, m, n)));
    }
    grid.sort();
    grid.dedup();
    let config = SearchConfig::with_budget(Budget::time(Duration::from_secs(60)));
    let mut failures = Vec::new();
    let mut nodes = 0;
    for &(j, m, n) in &grid {
        let expected = mrn_value(&RamseyQuery::new(j, m, n).unwrap());
        let t_max = expected.finite().unwrap() + 1;
        let report = compute_value_by_search(j, m, n, t_max, &config).unwrap();
        nodes += report.stats.nodes;
        if !report.value.matches(expected) {
            failures.push(format!("j={j} m={m} n={n}: search {} vs formula {expected}", report.value));
        }
    }
    Outcome {
        failures,
        detail: format!("{} instances, {nodes} nodes", grid.len()),
    }
}

fn oracle_equivalence() -> Outcome {
    let mut failures = Vec::new();
    let mut count = 0;
    for j in 2..=7 {
        for t in 0..=2 {
            let edges = j * (j - 1) / 2 * t * t;
            if edges > NAIVE_EDGE_LIMIT {
                continue;
            }
            for m in 3..=5 {
                for n in 1..=4 {
                    let inst = Instance::new(j, t, m, n).unwrap();
                    let fast = decide_colorable(&inst, &SearchConfig::default()).unwrap();
                    let slow = decide_colorable_naive(&inst).unwrap();
                    count += 1;
                    if fast.status.verdict() != slow.status.verdict() {
                        failures.push(format!(
                            "j={j} t={t} m={m} n={n}: cover {} vs naive {}",
                            fast.status.verdict(),
                            slow.status.verdict()
                        ));
                    }
                    for w in [fast.status.witness(), slow.status.witness()].into_iter().flatten() {
                        if !verify_good(w, m, n).good {
                            failures.push(format!("j={j} t={t} m={m} n={n}: witness is not good"));
                        }
                    }
                }
            }
        }
    }
    Outcome {
        failures,
        detail: format!("{count} instances"),
    }
}

fn matching_engine() -> Outcome {
    let mut failures = Vec::new();
    let mut shapes = 0;
    for total in 0..=10 {
        for parts in integer_partitions(total) {
            shapes += 1;
            let g: Graph<u128> = Graph::complete_multipartite(&parts);
            if nu_complete_multipartite(&parts) != max_matching(&g).len() {
                failures.push(format!("parts {parts:?}"));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x6d61_7463);
    for _ in 0..200 {
        let mut parts = Vec::new();
        let mut total = 0;
        let target = rng.gen_range(1..=40);
        while total < target {
            let a = rng.gen_range(1..=(target - total).min(12));
            parts.push(a);
            total += a;
        }
        let g: Graph = Graph::complete_multipartite(&parts);
        if nu_complete_multipartite(&parts) != max_matching(&g).len() {
            failures.push(format!("parts {parts:?}"));
        }
    }
    for _ in 0..500 {
        let order = rng.gen_range(0..=16);
        let p = rng.gen_range(0.05..0.7);
        let mut g: Graph<u128> = Graph::new(order);
        for u in 0..order {
            for v in u + 1..order {
                if rng.gen_bool(p) {
                    g.add_edge(u, v);
                }
            }
        }
        let m = max_matching(&g);
        if !m.is_valid_in(&g) || m.len() != brute_matching_number(&g) {
            failures.push(format!("random graph {:?}", g.edges().collect::<Vec<_>>()));
        }
    }
    Outcome {
        failures,
        detail: format!("{shapes} exhaustive shapes, 200 random shapes, 500 random graphs"),
    }
}

fn clique_engine() -> Outcome {
    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0x636c_6971);
    for _ in 0..500 {
        let j = rng.gen_range(2..=10);
        let t = rng.gen_range(1..=10 / j);
        let shape = MultipartiteShape::new(j, t).unwrap();
        let p = rng.gen_range(0.2..1.0);
        let g: Graph<u128> =
            Graph::from_edges(shape.vertex_count(), shape.edges().filter(|_| rng.gen_bool(p)));
        if clique_number(&g) != brute_clique_number(&g) {
            failures.push(format!("j={j} t={t} edges {:?}", g.edges().collect::<Vec<_>>()));
        }
    }
    let mut shapes = 0;
    for total in 0..=12 {
        for mut parts in integer_partitions(total) {
            parts.push(0);
            shapes += 1;
            let g: Graph = Graph::complete_multipartite(&parts);
            if clique_number(&g) != parts.iter().filter(|&&a| a > 0).count() {
                failures.push(format!("parts {parts:?}"));
            }
        }
    }
    Outcome {
        failures,
        detail: format!("500 random subgraphs, {shapes} complete multipartite graphs"),
    }
}

const GOLDEN_W543: &str = include_str!("golden/witness_j5_m4_n3.mrn");
const GOLDEN_W758: &str = include_str!("golden/witness_j7_m5_n8.mrn");
const GOLDEN_W656: &str = include_str!("golden/witness_j6_m5_n6.mrn");
const GOLDEN_TABLE: &str = include_str!("golden/table_m4_j2-7_n1-5.md");

fn corrupted_variants() -> Vec<Vec<u8>> {
    let base = GOLDEN_W543;
    let mut out: Vec<Vec<u8>> = [
        "",
        "MRN1\n",
        "MRN2\nj=5 t=1 m=4 n=3\ncolors=1111111222\n",
        "mrn1\nj=5 t=1 m=4 n=3\ncolors=1111111222\n",
        "MRN1\nj=5 t=1 m=4 n=3\ncolors=1111111222",
        "MRN1\nj=5 t=1 m=4 n=3\ncolors=1111111222\n\n",
        "MRN1\r\nj=5 t=1 m=4 n=3\r\ncolors=1111111222\r\n",
        "MRN1\nj=5 t=1 m=4 n=3\ncolors=111111122\n",
        "MRN1\nj=5 t=1 m=4 n=3\ncolors=11111112222\n",
        "MRN1\nj=5 t=1 m=4 n=3\ncolors=1111111223\n",
        "MRN1\nj=5 t=1 m=4 n=3\ncolors=111111122 \n",
        "MRN1\nj=5 t=1 m=4 n=3\ncolours=1111111222\n",
        "MRN1\nj=6 t=1 m=4 n=3\ncolors=1111111222\n",
        "MRN1\nj=5 t=2 m=4 n=3\ncolors=1111111222\n",
        "MRN1\nj=05 t=1 m=4 n=3\ncolors=1111111222\n",
        "MRN1\nt=1 j=5 m=4 n=3\ncolors=1111111222\n",
        "MRN1\nj=5  t=1 m=4 n=3\ncolors=1111111222\n",
        "MRN1\nj=1 t=1 m=4 n=3\ncolors=\n",
        "MRN1\nj=5 t=1 m=4\ncolors=1111111222\n",
    ]
    .iter()
    .map(|s| s.as_bytes().to_vec())
    .collect();
    let mut invalid_utf8 = base.as_bytes().to_vec();
    invalid_utf8[12] = 0xff;
    out.push(invalid_utf8);
    out
}

fn format_stability() -> Outcome {
    let mut failures = Vec::new();
    for ((j, m, n), golden) in [((5, 4, 3), GOLDEN_W543), ((7, 5, 8), GOLDEN_W758), ((6, 5, 6), GOLDEN_W656)] {
        let q = RamseyQuery::new(j, m, n).unwrap();
        let doc = witness_document(&q, None).unwrap();
        if doc.serialize() != golden {
            failures.push(format!("witness {q} differs from golden file"));
        }
        if ColoringDocument::parse(golden).map(|d| d.serialize()).as_deref() != Ok(golden) {
            failures.push(format!("golden witness {q} does not round-trip"));
        }
    }
    let table = render_table(&TableSpec { m: 4, j: 2..=7, n: 1..=5, format: TableFormat::Markdown }).unwrap();
    if table != GOLDEN_TABLE {
        failures.push("markdown table differs from golden file".to_string());
    }
    let variants = corrupted_variants();
    for (i, v) in variants.iter().enumerate() {
        if ColoringDocument::parse_bytes(v).is_ok() {
            failures.push(format!("corrupted variant {i} was accepted: {:?}", String::from_utf8_lossy(v)));
        }
    }
    Outcome {
        failures,
        detail: format!("3 witnesses, 1 table, {} corrupted variants", variants.len()),
    }
}

fn main() -> ExitCode {
    let results = [
        criterion(1, "formula consistency", Duration::from_secs(1), formula_consistency),
        criterion(2, "lower-bound witness sweep", Duration::from_secs(10), witness_validity),
        criterion(3, "search agrees with formula", Duration::from_secs(30 * 60), search_grid),
        criterion(4, "cover search agrees with naive oracle", Duration::from_secs(5 * 60), oracle_equivalence),
        criterion(5, "matching engine", Duration::from_secs(60), matching_engine),
        criterion(6, "clique engine", Duration::from_secs(60), clique_engine),
        criterion(7, "format stability", Duration::from_secs(1), format_stability),
    ];
    let passed = results.iter().filter(|&&ok| ok).count();
    println!("acceptance: {passed}/{} criteria passed", results.len());
    if passed == results.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
