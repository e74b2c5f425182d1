//! `mrn`: evaluate, construct, verify and search size multipartite Ramsey
//! numbers `m_j(K_m, nK_2)`.
//!
//! Exit codes: 0 success or good coloring, 1 bad coloring, 2 usage or parse
//! error, 3 search budget exhausted.

use std::fmt;
use std::fs;
use std::io::{self, Write};
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use mrn_core::search::{
    compute_value_by_search, decide_colorable, decide_colorable_naive, Budget, ComputedValue,
    Instance, SearchConfig, SearchStatus, Verdict,
};
use mrn_core::table::{render_table, TableFormat, TableSpec};
use mrn_core::witness::witness_document;
use mrn_core::{
    classify_regime, mrn_value, verify_good, ColoringDocument, GoodnessReport, RamseyQuery,
    TargetParams,
};

#[derive(Parser, Debug)]
#[command(name = "mrn", version, about = "Size multipartite Ramsey numbers m_j(K_m, nK2)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the closed-form value and the result that settles it.
    Formula(QueryArgs),
    /// Write the extremal good coloring at t* - 1 (or at --t).
    Witness {
        #[command(flatten)]
        query: QueryArgs,
        /// Part size; required when the value is infinite.
        #[arg(long)]
        t: Option<usize>,
        /// Output file; stdout when absent.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check a coloring file for K_m in color 1 and nK2 in color 2.
    Verify {
        /// Clique order; defaults to the file's m= field.
        #[arg(long)]
        m: Option<usize>,
        /// Matching size; defaults to the file's n= field.
        #[arg(long)]
        n: Option<usize>,
        file: PathBuf,
    },
    /// Decide whether K_{j x t} has a good coloring.
    Search {
        #[arg(long)]
        j: usize,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        search: SearchArgs,
        /// Enumerate every coloring instead of running the cover search.
        #[arg(long)]
        naive: bool,
        /// Write the witness here when one is found.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Find the value by searching t = 1, 2, ..., --t-max.
    Compute {
        #[command(flatten)]
        query: QueryArgs,
        #[arg(long)]
        t_max: usize,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Render a table of closed-form values for fixed m.
    Table {
        #[arg(long)]
        m: usize,
        /// Range of j, as `A..=B`, `A-B` or `A`.
        #[arg(long, value_parser = parse_range)]
        j: RangeInclusive<usize>,
        /// Range of n, as `A..=B`, `A-B` or `A`.
        #[arg(long, value_parser = parse_range)]
        n: RangeInclusive<usize>,
        /// `md` or `csv`.
        #[arg(long, default_value = "md")]
        format: String,
    },
}

#[derive(Args, Debug)]
struct QueryArgs {
    #[arg(long)]
    j: usize,
    #[arg(long)]
    m: usize,
    #[arg(long)]
    n: usize,
}

impl QueryArgs {
    fn query(&self) -> Result<RamseyQuery, Failure> {
        RamseyQuery::new(self.j, self.m, self.n).map_err(Failure::usage)
    }
}

#[derive(Args, Debug)]
struct SearchArgs {
    /// Wall-clock budget in seconds.
    #[arg(long)]
    budget: Option<f64>,
    /// Node budget.
    #[arg(long)]
    max_nodes: Option<u64>,
    /// Worker threads for cover-set exploration.
    #[arg(long, default_value_t = 1)]
    threads: usize,
    /// Disable lex-leader symmetry breaking.
    #[arg(long)]
    no_symmetry: bool,
}

impl SearchArgs {
    fn config(&self) -> Result<SearchConfig, Failure> {
        let max_time = match self.budget {
            None => None,
            Some(s) => Some(
                Duration::try_from_secs_f64(s)
                    .map_err(|_| Failure::usage(format!("invalid --budget {s}")))?,
            ),
        };
        if self.threads == 0 {
            return Err(Failure::usage("--threads must be ≥ 1"));
        }
        Ok(SearchConfig {
            budget: Budget { max_nodes: self.max_nodes, max_time },
            threads: self.threads,
            symmetry_breaking: !self.no_symmetry,
        })
    }
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let (a, b) = s
        .split_once("..=")
        .or_else(|| s.split_once('-'))
        .unwrap_or((s, s));
    let lo = a.trim().parse().map_err(|_| format!("bad range start in {s:?}"))?;
    let hi = b.trim().parse().map_err(|_| format!("bad range end in {s:?}"))?;
    Ok(lo..=hi)
}

/// A message plus the exit code it maps to.
#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(e: impl fmt::Display) -> Self {
        Failure { code: 2, message: e.to_string() }
    }
}

fn write_output(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Failure::usage(format!("{}: {e}", p.display()))),
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(Failure::usage),
    }
}

fn cmd_formula(args: &QueryArgs) -> Result<u8, Failure> {
    let q = args.query()?;
    println!("{q} = {}  [{}]", mrn_value(&q), classify_regime(&q).result);
    Ok(0)
}

fn cmd_witness(args: &QueryArgs, t: Option<usize>, output: Option<&Path>) -> Result<u8, Failure> {
    let q = args.query()?;
    let doc = witness_document(&q, t).map_err(Failure::usage)?;
    write_output(output, &doc.serialize())?;
    Ok(0)
}

fn describe(report: &GoodnessReport) -> String {
    let mut line = String::from(if report.good { "good" } else { "bad" });
    if let Some(c) = &report.clique_cert {
        let vs: Vec<String> = c.vertices.iter().map(|v| v.to_string()).collect();
        line.push_str(&format!(" clique=[{}]", vs.join(",")));
    }
    if let Some(m) = &report.matching_cert {
        let es: Vec<String> = m.pairs().iter().map(|(u, v)| format!("{u}-{v}")).collect();
        line.push_str(&format!(" matching=[{}]", es.join(",")));
    }
    line.push_str(&format!(" omega1={} nu2={}", report.omega1, report.nu2));
    line
}

fn cmd_verify(m: Option<usize>, n: Option<usize>, file: &Path) -> Result<u8, Failure> {
    let bytes = fs::read(file).map_err(|e| Failure::usage(format!("{}: {e}", file.display())))?;
    let doc = ColoringDocument::parse_bytes(&bytes)
        .map_err(|e| Failure::usage(format!("{}: {e}", file.display())))?;
    let header = doc.target;
    let m = m.or(header.map(|p| p.m)).ok_or_else(|| Failure::usage("--m is required: file has no m= field"))?;
    let n = n.or(header.map(|p| p.n)).ok_or_else(|| Failure::usage("--n is required: file has no n= field"))?;
    if m < 3 {
        return Err(Failure::usage("m must be ≥ 3"));
    }
    if n < 1 {
        return Err(Failure::usage("n must be ≥ 1"));
    }
    let report = verify_good(&doc.coloring, m, n);
    println!("{}", describe(&report));
    Ok(if report.good { 0 } else { 1 })
}

struct SearchRequest<'a> {
    inst: Instance,
    config: SearchConfig,
    naive: bool,
    output: Option<&'a Path>,
}

fn cmd_search(req: SearchRequest<'_>) -> Result<u8, Failure> {
    let outcome = if req.naive {
        decide_colorable_naive(&req.inst)
    } else {
        decide_colorable(&req.inst, &req.config)
    }
    .map_err(Failure::usage)?;
    println!("{}", outcome.status.verdict());
    eprintln!("{}", outcome.stats);
    match &outcome.status {
        SearchStatus::Colorable(w) => {
            if let Some(path) = req.output {
                let target = TargetParams { m: req.inst.m, n: req.inst.n };
                write_output(Some(path), &ColoringDocument::new(w.clone(), Some(target)).serialize())?;
                eprintln!("witness written to {}", path.display());
            }
            Ok(0)
        }
        SearchStatus::NotColorable => Ok(0),
        SearchStatus::BudgetExhausted => Ok(3),
    }
}

fn cmd_compute(args: &QueryArgs, t_max: usize, config: &SearchConfig) -> Result<u8, Failure> {
    let q = args.query()?;
    let report = compute_value_by_search(q.j(), q.m(), q.n(), t_max, config).map_err(Failure::usage)?;
    for (t, verdict) in &report.steps {
        eprintln!("t={t} {verdict}");
    }
    eprintln!("{}", report.stats);
    println!("{q} = {}", report.value);
    match report.value {
        ComputedValue::Finite(t) => {
            if t > 1 {
                println!("t={} COLORABLE", t - 1);
            }
            println!("t={t} NOT_COLORABLE");
            Ok(0)
        }
        ComputedValue::InfiniteEvidence { .. } => Ok(0),
        ComputedValue::Unresolved { .. } => {
            if matches!(report.steps.last(), Some((_, Verdict::BudgetExhausted))) {
                println!("{}", Verdict::BudgetExhausted);
                Ok(3)
            } else {
                Ok(0)
            }
        }
    }
}

fn cmd_table(m: usize, j: RangeInclusive<usize>, n: RangeInclusive<usize>, format: &str) -> Result<u8, Failure> {
    let format: TableFormat = format.parse().map_err(Failure::usage)?;
    let text = render_table(&TableSpec { m, j, n, format }).map_err(Failure::usage)?;
    write_output(None, &text)?;
    Ok(0)
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Formula(q) => cmd_formula(&q),
        Command::Witness { query, t, output } => cmd_witness(&query, t, output.as_deref()),
        Command::Verify { m, n, file } => cmd_verify(m, n, &file),
        Command::Search { j, t, m, n, search, naive, output } => {
            RamseyQuery::new(j, m, n).map_err(Failure::usage)?;
            let inst = Instance::new(j, t, m, n).map_err(Failure::usage)?;
            cmd_search(SearchRequest { inst, config: search.config()?, naive, output: output.as_deref() })
        }
        Command::Compute { query, t_max, search } => cmd_compute(&query, t_max, &search.config()?),
        Command::Table { m, j, n, format } => cmd_table(m, j, n, &format),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
