//! `spectradom`: analyze graphs, verify the domination-constrained spectral
//! bounds over a graph source, and census their extremal families.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::io::{self, BufReader, Write as _};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use spectradom::harness::{
    self, collect_graphs, constructed_extremal, emit_csv, emit_report, enumerate_nonisomorphic,
    extremal_census, extremal_census_from, ingest_graph6, run_suite, CensusReport, ReportFormat,
    SuiteOptions, SuiteReport, VerdictRow,
};
use spectradom::spectral::{summary, SpectralSummary};
use spectradom::theorems::check;
use spectradom::{
    emit_graph6, parse_graph6, Analysis, DominationResult, Graph, TheoremId, TheoremVerdict,
};

const EXIT_VIOLATION: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_FAILURE: u8 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "spectradom",
    version,
    about = "Domination number versus Laplacian spectral radius"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print gamma, the spectral radii and every applicable bound for each graph.
    Analyze(AnalyzeArgs),
    /// Check bounds and equality characterizations over a graph source.
    Verify(VerifyArgs),
    /// Compare the graphs attaining a bound with its constructed extremal family.
    Census(CensusArgs),
    /// Print the constructed extremal family as canonical graph6 lines.
    Extremal(ExtremalArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Human,
}

#[derive(Args, Debug)]
struct AnalyzeArgs {
    /// A graph6 string, a file with one graph6 string per line, or `-` for stdin.
    graph: String,
    /// Comma-separated theorem ids, or `all`.
    #[arg(long, default_value = "all", value_parser = parse_theorem_list)]
    theorems: TheoremList,
    #[arg(long, value_enum, default_value_t = Format::Human)]
    format: Format,
    /// Skip malformed lines in a file instead of failing.
    #[arg(long)]
    lenient: bool,
}

#[derive(Args, Debug)]
struct SourceArgs {
    /// Enumerate every non-isomorphic graph on N vertices (N <= 7).
    #[arg(long, conflicts_with = "input", required_unless_present = "input")]
    n: Option<usize>,
    /// Read graph6 lines from FILE, or from stdin when FILE is `-`.
    #[arg(long, value_name = "FILE")]
    input: Option<PathBuf>,
    /// Skip malformed input lines instead of failing.
    #[arg(long)]
    lenient: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[command(flatten)]
    source: SourceArgs,
    /// Comma-separated theorem ids, or `all`.
    #[arg(long, default_value = "all", value_parser = parse_theorem_list)]
    theorems: TheoremList,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Stop at the first graph with a violation or mismatch.
    #[arg(long)]
    fail_fast: bool,
    /// Worker threads; defaults to the available parallelism.
    #[arg(long, env = "SPECTRADOM_JOBS")]
    jobs: Option<usize>,
}

#[derive(Args, Debug)]
struct CensusArgs {
    #[command(flatten)]
    source: SourceArgs,
    #[arg(long)]
    gamma: usize,
    /// T31, C32 or T41 (`L` and `Q` are accepted for T31 and T41).
    #[arg(long)]
    theorem: TheoremId,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args, Debug)]
struct ExtremalArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    gamma: usize,
    /// T31, C32 or T41 (`L` and `Q` are accepted for T31 and T41).
    #[arg(long)]
    theorem: TheoremId,
}

#[derive(Clone, Debug)]
struct TheoremList(BTreeSet<TheoremId>);

fn parse_theorem_list(s: &str) -> Result<TheoremList, String> {
    if s.trim().eq_ignore_ascii_case("all") {
        return Ok(TheoremList(TheoremId::ALL.into_iter().collect()));
    }
    let ids = s
        .split(',')
        .map(|part| part.trim().parse::<TheoremId>())
        .collect::<Result<BTreeSet<_>, _>>()?;
    if ids.is_empty() {
        return Err("no theorem ids given".into());
    }
    Ok(TheoremList(ids))
}

/// Errors that should exit with the usage status rather than a failure.
#[derive(Debug)]
struct UsageError(String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn usage(message: impl Into<String>) -> anyhow::Error {
    UsageError(message.into()).into()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Analyze(args) => analyze(args),
        Command::Verify(args) => verify(args),
        Command::Census(args) => census(args),
        Command::Extremal(args) => extremal(args),
    };
    match outcome {
        Ok(clean) => {
            if clean {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_VIOLATION)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            let usage_error = e.downcast_ref::<UsageError>().is_some()
                || matches!(
                    e.downcast_ref::<harness::HarnessError>(),
                    Some(harness::HarnessError::InvalidArgument(_))
                );
            ExitCode::from(if usage_error {
                EXIT_USAGE
            } else {
                EXIT_FAILURE
            })
        }
    }
}

fn write_stdout(text: &str) -> anyhow::Result<()> {
    let mut out = io::stdout().lock();
    out.write_all(text.as_bytes())?;
    out.flush()?;
    Ok(())
}

fn report_format(format: Format) -> Option<ReportFormat> {
    match format {
        Format::Json => Some(ReportFormat::Json),
        Format::Csv => Some(ReportFormat::Csv),
        Format::Human => None,
    }
}

/// Reads graph6 lines from a path or from stdin (`-`).
fn read_graphs(path: &Path, lenient: bool) -> anyhow::Result<Vec<Graph>> {
    let (graphs, warnings) = if path == Path::new("-") {
        collect_graphs(ingest_graph6(io::stdin().lock()), lenient)?
    } else {
        let file =
            std::fs::File::open(path).with_context(|| format!("opening {}", path.display()))?;
        collect_graphs(ingest_graph6(BufReader::new(file)), lenient)
            .with_context(|| format!("reading {}", path.display()))?
    };
    for w in warnings {
        eprintln!("warning: skipped {w}");
    }
    Ok(graphs)
}

fn load_source(source: &SourceArgs) -> anyhow::Result<(Vec<Graph>, String)> {
    match (&source.n, &source.input) {
        (Some(n), None) => {
            let graphs = enumerate_nonisomorphic(*n)?.collect();
            Ok((graphs, format!("all non-isomorphic graphs on {n} vertices")))
        }
        (None, Some(path)) => {
            let graphs = read_graphs(path, source.lenient)?;
            let name = if path == Path::new("-") {
                "stdin".to_string()
            } else {
                path.display().to_string()
            };
            Ok((graphs, format!("graph6 input {name}")))
        }
        _ => Err(usage("exactly one of --n and --input is required")),
    }
}

#[derive(Serialize)]
struct GraphAnalysis {
    graph6: String,
    n: usize,
    domination: DominationResult,
    spectrum: SpectralSummary,
    verdicts: Vec<TheoremVerdict>,
}

fn analyze_graph(g: &Graph, theorems: &BTreeSet<TheoremId>) -> anyhow::Result<GraphAnalysis> {
    let graph6 = emit_graph6(g);
    let analysis = Analysis::new(g);
    let mut verdicts = Vec::new();
    for &id in theorems {
        if let Some(v) = check(&analysis, id).with_context(|| format!("graph {graph6}"))? {
            verdicts.push(v);
        }
    }
    let mut spectrum = summary(g);
    // the radii of the edgeless graph are zero by convention
    spectrum.mu = analysis.mu;
    spectrum.q = analysis.q;
    Ok(GraphAnalysis {
        graph6,
        n: g.order(),
        domination: analysis.domination,
        spectrum,
        verdicts,
    })
}

/// Room left under the bound; for the edge-addition lemma the verdict's
/// bound is a lower bound, so the difference is taken the other way.
fn slack(v: &TheoremVerdict) -> f64 {
    let s = if v.theorem_id == TheoremId::L21 {
        v.computed_value - v.bound_value
    } else {
        v.bound_value - v.computed_value
    };
    // avoid printing -0.000000000
    if s.abs() < 5e-10 {
        0.0
    } else {
        s
    }
}

fn human_block(a: &GraphAnalysis) -> String {
    let mut s = String::new();
    let d = &a.domination;
    let sp = &a.spectrum;
    writeln!(s, "graph {}", a.graph6).unwrap();
    writeln!(s, "  n         {}", a.n).unwrap();
    writeln!(s, "  gamma     {}  witness {}", d.gamma, d.witness).unwrap();
    writeln!(s, "  mu        {:.9}", sp.mu).unwrap();
    writeln!(s, "  q         {:.9}", sp.q).unwrap();
    writeln!(s, "  max deg   {}", sp.max_degree).unwrap();
    writeln!(s, "  avg deg   {:.9}", sp.avg_degree).unwrap();
    for v in &a.verdicts {
        let status = if v.bound_holds { "holds" } else { "VIOLATED" };
        write!(
            s,
            "  {:<13} bound {:>13.9}  value {:>13.9}  slack {:>13.9}  {status}  equality {}",
            v.theorem_id.as_str(),
            v.bound_value,
            v.computed_value,
            slack(v),
            v.equality,
        )
        .unwrap();
        if v.theorem_id.has_characterization() {
            write!(s, "  recognizer {}", v.recognizer_accepts).unwrap();
        }
        if !v.characterization_consistent {
            s.push_str("  MISMATCH");
        }
        if !v.detail.is_empty() {
            write!(s, "  ({})", v.detail).unwrap();
        }
        s.push('\n');
    }
    s
}

fn analyze(args: AnalyzeArgs) -> anyhow::Result<bool> {
    let path = Path::new(&args.graph);
    let graphs = if args.graph == "-" || path.is_file() {
        read_graphs(path, args.lenient)?
    } else {
        vec![parse_graph6(&args.graph)
            .with_context(|| format!("parsing graph6 `{}`", args.graph))?]
    };
    let analyses = graphs
        .iter()
        .map(|g| analyze_graph(g, &args.theorems.0))
        .collect::<anyhow::Result<Vec<_>>>()?;
    let clean = analyses
        .iter()
        .flat_map(|a| &a.verdicts)
        .all(|v| v.bound_holds && v.characterization_consistent);
    let text = match args.format {
        Format::Human => analyses
            .iter()
            .map(human_block)
            .collect::<Vec<_>>()
            .join("\n"),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&analyses)?;
            s.push('\n');
            s
        }
        Format::Csv => {
            let rows: Vec<VerdictRow> = analyses
                .iter()
                .flat_map(|a| {
                    a.verdicts.iter().map(|v| VerdictRow {
                        graph6: a.graph6.clone(),
                        verdict: v.clone(),
                    })
                })
                .collect();
            emit_csv(&rows)
        }
    };
    write_stdout(&text)?;
    Ok(clean)
}

fn human_suite(report: &SuiteReport) -> String {
    let mut s = String::new();
    writeln!(s, "source      {}", report.source_description).unwrap();
    writeln!(s, "graphs      {}", report.graphs_processed).unwrap();
    writeln!(
        s,
        "{:<14} {:>8} {:>10} {:>9} {:>10}",
        "theorem", "checked", "violations", "equality", "mismatches"
    )
    .unwrap();
    for (id, c) in &report.verdicts_by_theorem {
        writeln!(
            s,
            "{:<14} {:>8} {:>10} {:>9} {:>10}",
            id.as_str(),
            c.checked,
            c.bound_violations,
            c.equality_cases,
            c.characterization_mismatches
        )
        .unwrap();
    }
    for v in &report.violations {
        writeln!(s, "VIOLATION {} {}: {}", v.graph6, v.theorem_id, v.detail).unwrap();
    }
    writeln!(
        s,
        "{}",
        if report.is_clean() {
            "CLEAN"
        } else {
            "VIOLATIONS FOUND"
        }
    )
    .unwrap();
    s
}

fn verify(args: VerifyArgs) -> anyhow::Result<bool> {
    let (graphs, source_description) = load_source(&args.source)?;
    let options = SuiteOptions {
        source_description,
        jobs: args.jobs.unwrap_or(0),
        fail_fast: args.fail_fast,
    };
    let report = run_suite(graphs, &args.theorems.0, &options)?;
    let text = match report_format(args.format) {
        Some(f) => emit_report(&report, f),
        None => human_suite(&report),
    };
    write_stdout(&text)?;
    eprintln!("elapsed: {:.3}s", report.elapsed.as_secs_f64());
    Ok(report.is_clean())
}

fn banner(report: &CensusReport) -> String {
    format!(
        "{}: n = {}, gamma = {}, {}: {} found, {} constructed",
        if report.matches { "MATCH" } else { "MISMATCH" },
        report.n,
        report.gamma,
        report.theorem_id,
        report.found_extremal.len(),
        report.constructed_extremal.len()
    )
}

fn human_census(report: &CensusReport) -> String {
    let mut s = String::new();
    writeln!(s, "found extremal ({}):", report.found_extremal.len()).unwrap();
    for g in &report.found_extremal {
        writeln!(s, "  {g}").unwrap();
    }
    writeln!(
        s,
        "constructed extremal ({}):",
        report.constructed_extremal.len()
    )
    .unwrap();
    for g in &report.constructed_extremal {
        writeln!(s, "  {g}").unwrap();
    }
    writeln!(s, "{}", banner(report)).unwrap();
    s
}

fn census(args: CensusArgs) -> anyhow::Result<bool> {
    let start = Instant::now();
    let report = match (&args.source.n, &args.source.input) {
        (Some(n), None) => extremal_census(*n, args.gamma, args.theorem)?,
        (None, Some(_)) => {
            let (graphs, _) = load_source(&args.source)?;
            let n = graphs
                .first()
                .map(Graph::order)
                .ok_or_else(|| usage("census input contains no graphs"))?;
            extremal_census_from(graphs, n, args.gamma, args.theorem)?
        }
        _ => bail!(usage("exactly one of --n and --input is required")),
    };
    match report_format(args.format) {
        Some(f) => {
            write_stdout(&emit_report(&report, f))?;
            eprintln!("{}", banner(&report));
        }
        None => write_stdout(&human_census(&report))?,
    }
    eprintln!("elapsed: {:.3}s", start.elapsed().as_secs_f64());
    Ok(report.matches)
}

fn extremal(args: ExtremalArgs) -> anyhow::Result<bool> {
    let family = constructed_extremal(args.n, args.gamma, args.theorem)?;
    let mut text = String::new();
    for g in family {
        text.push_str(&g);
        text.push('\n');
    }
    write_stdout(&text)?;
    Ok(true)
}
