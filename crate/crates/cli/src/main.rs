use std::fmt::Write as _;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use sha2::{Digest, Sha256};

use stabgraph::classifier::classify_full;
use stabgraph::graph::{parse_edge_lists, parse_graph6, to_dot, to_graph6};
use stabgraph::harness::{
    enumerate_canonical, enumerate_graphs, random_graphs, run_suite, select_suites, GraphRecord,
    InputIdentity, ReportDocument, SuiteConfig, VerificationOutcome, ENUMERATION_LIMIT,
};
use stabgraph::solvers::Budget;
use stabgraph::{Error, Graph};

const BUDGET_VAR: &str = "STABILITY_BUDGET";

/// Stability of the independence number under edge additions.
#[derive(Parser)]
#[command(name = "stabgraph", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify every graph in FILE (or stdin).
    Classify {
        #[arg(long, value_enum, default_value_t = InputFormat::Graph6)]
        format: InputFormat,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        output: OutputFormat,
        file: Option<PathBuf>,
    },
    /// Run verification suites over exhaustive and random populations.
    Verify {
        /// Comma separated suite ids, or `all`.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Largest order for the exhaustive sweeps (2..=8).
        #[arg(long)]
        nmax: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// One graph per isomorphism class instead of every labeled graph.
        #[arg(long)]
        canonical: bool,
        /// Print the outcomes as a JSON array.
        #[arg(long)]
        json: bool,
        /// List the suites and exit.
        #[arg(long)]
        list: bool,
    },
    /// Print every labeled graph on N vertices as graph6.
    Enum {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        canonical: bool,
    },
    /// Print seeded G(n, p) samples as graph6.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        count: usize,
        #[arg(long)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Copy, Clone, ValueEnum)]
enum InputFormat {
    Graph6,
    Edgelist,
}

#[derive(Copy, Clone, ValueEnum)]
enum OutputFormat {
    Json,
    Text,
    Dot,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            let budget = err.chain().any(|c| c.downcast_ref::<Error>().is_some_and(Error::is_budget));
            ExitCode::from(if budget { 3 } else { 2 })
        }
    }
}

fn budget() -> anyhow::Result<Budget> {
    match std::env::var(BUDGET_VAR) {
        Ok(v) => {
            let cap = v.trim().parse().with_context(|| format!("{BUDGET_VAR}={v} is not a count"))?;
            Ok(Budget::new(cap))
        }
        Err(_) => Ok(Budget::default()),
    }
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    let mut out = io::stdout().lock();
    match cli.command {
        Command::Classify { format, output, file } => {
            let (bytes, source) = match &file {
                Some(path) => (
                    std::fs::read(path).with_context(|| format!("reading {}", path.display()))?,
                    path.display().to_string(),
                ),
                None => {
                    let mut buf = Vec::new();
                    io::stdin().read_to_end(&mut buf).context("reading stdin")?;
                    (buf, "-".to_string())
                }
            };
            let graphs = parse_input(&bytes, format)?;
            let budget = budget()?;
            let records = graphs
                .iter()
                .map(|g| Ok(GraphRecord::new(g, classify_full(g, budget)?)))
                .collect::<stabgraph::Result<Vec<_>>>()?;
            let doc = ReportDocument::new(InputIdentity { source, sha256: sha256_hex(&bytes) }, records);
            match output {
                OutputFormat::Json => writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?,
                OutputFormat::Text => out.write_all(render_text(&doc).as_bytes())?,
                OutputFormat::Dot => {
                    for (g, rec) in graphs.iter().zip(&doc.graphs) {
                        writeln!(out, "// {}", summary_line(rec))?;
                        out.write_all(to_dot(g).as_bytes())?;
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { suite, nmax, seed, canonical, json, list } => {
            let suites = select_suites(&suite)?;
            if list {
                for s in suites {
                    writeln!(out, "{:24} {}", s.id, s.statement)?;
                }
                return Ok(ExitCode::SUCCESS);
            }
            if let Some(n) = nmax {
                if !(2..=ENUMERATION_LIMIT).contains(&n) {
                    bail!(Error::Parameter(format!("--nmax {n} outside 2..={ENUMERATION_LIMIT}")));
                }
            }
            let cfg = SuiteConfig { nmax, seed, canonical, budget: budget()?, ..SuiteConfig::default() };
            let mut outcomes = Vec::new();
            for s in suites {
                let o = run_suite(s, &cfg).with_context(|| format!("suite {}", s.id))?;
                if !json {
                    write!(out, "{}", render_outcome(&o))?;
                    out.flush()?;
                }
                outcomes.push(o);
            }
            if json {
                writeln!(out, "{}", serde_json::to_string_pretty(&outcomes)?)?;
            }
            let ok = outcomes.iter().all(VerificationOutcome::holds);
            Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Enum { n, canonical } => {
            let graphs: Box<dyn Iterator<Item = Graph>> =
                if canonical { Box::new(enumerate_canonical(n)?) } else { Box::new(enumerate_graphs(n)?) };
            let mut out = io::BufWriter::new(out);
            for g in graphs {
                writeln!(out, "{}", to_graph6(&g))?;
            }
            out.flush()?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Random { n, count, p, seed } => {
            let mut out = io::BufWriter::new(out);
            for g in random_graphs(n, count, p, seed)? {
                writeln!(out, "{}", to_graph6(&g))?;
            }
            out.flush()?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn parse_input(bytes: &[u8], format: InputFormat) -> anyhow::Result<Vec<Graph>> {
    match format {
        InputFormat::Graph6 => bytes
            .split(|&b| b == b'\n')
            .enumerate()
            .filter(|(_, line)| !line.iter().all(u8::is_ascii_whitespace))
            .map(|(i, line)| parse_graph6(line.trim_ascii()).with_context(|| format!("line {}", i + 1)))
            .collect(),
        InputFormat::Edgelist => {
            let text = std::str::from_utf8(bytes).context("edge list is not UTF-8")?;
            Ok(parse_edge_lists(text)?)
        }
    }
}

fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().fold(String::with_capacity(64), |mut s, b| {
        let _ = write!(s, "{b:02x}");
        s
    })
}

fn summary_line(rec: &GraphRecord) -> String {
    let r = &rec.report;
    format!(
        "{} n={} alpha={} mu={} xi={} omega={} ke={} plus={} p3_plus={} plus_plus={}",
        rec.graph6,
        r.n,
        r.alpha,
        r.mu,
        r.xi,
        r.omega_count,
        r.is_ke,
        r.plus.as_str(),
        r.p3_plus,
        r.plus_plus
    )
}

fn render_text(doc: &ReportDocument) -> String {
    let mut s = String::new();
    for rec in &doc.graphs {
        let _ = writeln!(s, "{}", summary_line(rec));
        for (flag, w) in &rec.report.witnesses {
            let edges: Vec<String> = w.edges().iter().map(|e| format!("{}-{}", e.u(), e.v())).collect();
            let _ = writeln!(s, "  {} broken by {}", flag.as_str(), edges.join(" "));
        }
        for (flag, names) in &rec.report.fast_paths {
            let _ = writeln!(s, "  {} fast paths: {}", flag.as_str(), names.join(", "));
        }
        for c in &rec.report.conflicts {
            let _ = writeln!(s, "  conflict: {c}");
        }
        for n in &rec.report.notes {
            let _ = writeln!(s, "  note: {n}");
        }
    }
    let sum = &doc.summary;
    let _ = writeln!(
        s,
        "{} graphs, {} K-E, {} alpha+_P3 stable, {} alpha++ stable, {} conflicts",
        sum.graphs, sum.ke, sum.p3_plus, sum.plus_plus, sum.conflicts
    );
    s
}

/// Violations beyond this many are counted but not printed.
const SHOWN_VIOLATIONS: usize = 10;

fn render_outcome(o: &VerificationOutcome) -> String {
    let mut s = String::new();
    let verdict = if o.holds() { "PASS" } else { "FAIL" };
    let _ = write!(s, "{verdict} {:24} checked {:>9}", o.theorem_id, o.checked);
    if o.excluded > 0 {
        let _ = write!(s, ", excluded {}", o.excluded);
    }
    let _ = writeln!(s, ", violations {} ({})", o.violations.len(), o.population);
    for v in o.violations.iter().take(SHOWN_VIOLATIONS) {
        let _ = writeln!(s, "  {} {}", v.graph6, v.detail);
    }
    if o.violations.len() > SHOWN_VIOLATIONS {
        let _ = writeln!(s, "  ... {} more", o.violations.len() - SHOWN_VIOLATIONS);
    }
    s
}
