//! Graph sources, suite execution, extremal censuses and report output.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::io::{self, BufRead};
use std::path::Path;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::canon::{self, is_canonical_labeling};
use crate::error::{CheckError, Graph6Error, GraphError};
use crate::graph::{Family, Graph};
use crate::graph6::{emit_graph6, parse_graph6};
use crate::structure::{self, bipartition_of};
use crate::theorems::{self, Analysis, TheoremId, TheoremVerdict};

/// Largest order served by [`enumerate_nonisomorphic`].
pub const MAX_ENUMERATION_ORDER: usize = 7;

/// CSV header shared by every report.
pub const CSV_HEADER: &str =
    "graph6,theorem,n,gamma,bound,value,holds,equality,recognizer,consistent";

const CHUNK: usize = 512;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("{0}")]
    InvalidArgument(String),
    #[error("line {line}: {error}")]
    Parse { line: usize, error: Graph6Error },
    #[error("I/O error: {0}")]
    Io(#[from] io::Error),
    #[error("graph {graph6}: {error}")]
    Check { graph6: String, error: CheckError },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// One representative per isomorphism class on `n` vertices: the labeled
/// graphs that equal their own canonical form, in increasing canonical order.
pub fn enumerate_nonisomorphic(n: usize) -> Result<impl Iterator<Item = Graph>, HarnessError> {
    if !(1..=MAX_ENUMERATION_ORDER).contains(&n) {
        return Err(HarnessError::InvalidArgument(format!(
            "built-in enumeration supports 1 <= n <= {MAX_ENUMERATION_ORDER}, got {n}; \
             generate larger graphs externally and pass them as graph6 input"
        )));
    }
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let bits = pairs.len();
    Ok((0u64..1 << bits).filter_map(move |m| {
        let mut adj = vec![0u64; n];
        // the first pair in graph6 order is the most significant bit
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if m >> (bits - 1 - k) & 1 == 1 {
                adj[i] |= 1u64 << j;
                adj[j] |= 1u64 << i;
            }
        }
        is_canonical_labeling(&adj).then(|| Graph::from_adjacency_unchecked(adj))
    }))
}

/// Parses graph6 lines; blank lines are skipped. Errors carry 1-based line
/// numbers.
pub fn ingest_graph6<R: BufRead>(reader: R) -> impl Iterator<Item = Result<Graph, HarnessError>> {
    reader
        .lines()
        .enumerate()
        .filter_map(|(i, line)| match line {
            Err(e) => Some(Err(HarnessError::Io(e))),
            Ok(text) if text.trim().is_empty() => None,
            Ok(text) => Some(
                parse_graph6(&text).map_err(|error| HarnessError::Parse { line: i + 1, error }),
            ),
        })
}

pub fn ingest_graph6_path(
    path: &Path,
) -> Result<impl Iterator<Item = Result<Graph, HarnessError>>, HarnessError> {
    let file = std::fs::File::open(path)?;
    Ok(ingest_graph6(io::BufReader::new(file)))
}

/// Reads every graph from a graph6 source. Under `lenient`, malformed lines
/// are skipped and returned as warnings; otherwise the first one is fatal.
pub fn collect_graphs<I>(
    source: I,
    lenient: bool,
) -> Result<(Vec<Graph>, Vec<String>), HarnessError>
where
    I: IntoIterator<Item = Result<Graph, HarnessError>>,
{
    let mut graphs = Vec::new();
    let mut warnings = Vec::new();
    for item in source {
        match item {
            Ok(g) => graphs.push(g),
            Err(e @ HarnessError::Parse { .. }) if lenient => warnings.push(e.to_string()),
            Err(e) => return Err(e),
        }
    }
    Ok((graphs, warnings))
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct TheoremCounts {
    pub checked: usize,
    pub bound_violations: usize,
    pub equality_cases: usize,
    pub characterization_mismatches: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Violation {
    pub graph6: String,
    pub theorem_id: TheoremId,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct EqualityCase {
    pub graph6: String,
    pub theorem_id: TheoremId,
    pub gamma: usize,
}

/// One verdict with the graph it belongs to.
#[derive(Clone, Debug, PartialEq)]
pub struct VerdictRow {
    pub graph6: String,
    pub verdict: TheoremVerdict,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub source_description: String,
    pub graphs_processed: usize,
    pub verdicts_by_theorem: BTreeMap<TheoremId, TheoremCounts>,
    pub violations: Vec<Violation>,
    pub equality_cases: Vec<EqualityCase>,
    /// Wall-clock time; kept out of the JSON so reports are reproducible.
    #[serde(skip)]
    pub elapsed: Duration,
    #[serde(skip)]
    pub rows: Vec<VerdictRow>,
}

impl SuiteReport {
    pub fn is_clean(&self) -> bool {
        self.verdicts_by_theorem
            .values()
            .all(|c| c.bound_violations == 0 && c.characterization_mismatches == 0)
    }
}

#[derive(Clone, Debug, Default)]
pub struct SuiteOptions {
    pub source_description: String,
    /// Worker threads; 0 means rayon's default.
    pub jobs: usize,
    /// Stop after the first graph (in input order) with a problem.
    pub fail_fast: bool,
}

struct GraphOutcome {
    sort_key: (usize, Vec<u8>),
    graph6: String,
    verdicts: Vec<TheoremVerdict>,
}

impl GraphOutcome {
    fn has_problem(&self) -> bool {
        self.verdicts
            .iter()
            .any(|v| !v.bound_holds || !v.characterization_consistent)
    }
}

fn process_graph(g: &Graph, checks: &BTreeSet<TheoremId>) -> Result<GraphOutcome, HarnessError> {
    let graph6 = emit_graph6(g);
    let key = if g.order() <= canon::MAX_CANON_VERTICES {
        canon::canonical_form(g)?
    } else {
        graph6.clone().into_bytes()
    };
    let analysis = Analysis::new(g);
    let mut verdicts = Vec::with_capacity(checks.len());
    for &id in checks {
        match theorems::check(&analysis, id) {
            Ok(Some(v)) => verdicts.push(v),
            Ok(None) => {}
            Err(error) => return Err(HarnessError::Check { graph6, error }),
        }
    }
    Ok(GraphOutcome {
        sort_key: (g.order(), key),
        graph6,
        verdicts,
    })
}

/// Checks every graph against every applicable theorem in `checks`.
///
/// Graphs are processed in parallel chunks and merged in input order; the
/// lists in the report are then sorted by canonical form, so the result does
/// not depend on the worker count.
pub fn run_suite<I>(
    source: I,
    checks: &BTreeSet<TheoremId>,
    options: &SuiteOptions,
) -> Result<SuiteReport, HarnessError>
where
    I: IntoIterator<Item = Graph>,
{
    if checks.is_empty() {
        return Err(HarnessError::InvalidArgument("no theorems selected".into()));
    }
    let start = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(options.jobs)
        .build()
        .map_err(|e| HarnessError::InvalidArgument(format!("thread pool: {e}")))?;

    let mut outcomes: Vec<GraphOutcome> = Vec::new();
    let mut iter = source.into_iter();
    loop {
        let chunk: Vec<Graph> = iter.by_ref().take(CHUNK).collect();
        if chunk.is_empty() {
            break;
        }
        let done: Vec<GraphOutcome> = pool.install(|| {
            chunk
                .par_iter()
                .map(|g| process_graph(g, checks))
                .collect::<Result<_, _>>()
        })?;
        if options.fail_fast {
            if let Some(pos) = done.iter().position(GraphOutcome::has_problem) {
                outcomes.extend(done.into_iter().take(pos + 1));
                break;
            }
        }
        outcomes.extend(done);
    }

    let mut counts: BTreeMap<TheoremId, TheoremCounts> = checks
        .iter()
        .map(|&id| (id, TheoremCounts::default()))
        .collect();
    let mut violations = Vec::new();
    let mut equality_cases = Vec::new();
    outcomes.sort_by(|a, b| a.sort_key.cmp(&b.sort_key));
    let mut rows = Vec::new();
    for outcome in &outcomes {
        for v in &outcome.verdicts {
            let c = counts.get_mut(&v.theorem_id).expect("requested theorem");
            c.checked += 1;
            if !v.bound_holds {
                c.bound_violations += 1;
                violations.push(Violation {
                    graph6: outcome.graph6.clone(),
                    theorem_id: v.theorem_id,
                    detail: format!(
                        "bound {} violated by value {}: {}",
                        v.bound_value, v.computed_value, v.detail
                    ),
                });
            }
            if !v.characterization_consistent {
                c.characterization_mismatches += 1;
                violations.push(Violation {
                    graph6: outcome.graph6.clone(),
                    theorem_id: v.theorem_id,
                    detail: format!(
                        "equality {} but recognizer {}: {}",
                        v.equality, v.recognizer_accepts, v.detail
                    ),
                });
            }
            if v.equality {
                c.equality_cases += 1;
                equality_cases.push(EqualityCase {
                    graph6: outcome.graph6.clone(),
                    theorem_id: v.theorem_id,
                    gamma: v.gamma,
                });
            }
            rows.push(VerdictRow {
                graph6: outcome.graph6.clone(),
                verdict: v.clone(),
            });
        }
    }

    Ok(SuiteReport {
        source_description: options.source_description.clone(),
        graphs_processed: outcomes.len(),
        verdicts_by_theorem: counts,
        violations,
        equality_cases,
        elapsed: start.elapsed(),
        rows,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct CensusReport {
    pub n: usize,
    pub gamma: usize,
    pub theorem_id: TheoremId,
    pub found_extremal: Vec<String>,
    pub constructed_extremal: Vec<String>,
    pub matches: bool,
    #[serde(skip)]
    pub rows: Vec<VerdictRow>,
}

fn validate_combination(n: usize, gamma: usize, theorem: TheoremId) -> Result<(), HarnessError> {
    let low = match theorem {
        TheoremId::T31 | TheoremId::C32 => 2,
        TheoremId::T41 => 1,
        other => {
            return Err(HarnessError::InvalidArgument(format!(
                "no extremal family for {other}; use T31, C32 or T41"
            )))
        }
    };
    if n == 0 || gamma < low || gamma >= n {
        return Err(HarnessError::InvalidArgument(format!(
            "{theorem} needs {low} <= gamma <= n - 1, got n = {n}, gamma = {gamma}"
        )));
    }
    Ok(())
}

/// Canonical graph6 strings of the extremal family, built from its
/// definition without enumeration.
pub fn constructed_extremal(
    n: usize,
    gamma: usize,
    theorem: TheoremId,
) -> Result<Vec<String>, HarnessError> {
    validate_combination(n, gamma, theorem)?;
    if n > canon::MAX_CANON_VERTICES {
        return Err(HarnessError::InvalidArgument(format!(
            "family construction is deduplicated by canonical form, limited to n <= {}",
            canon::MAX_CANON_VERTICES
        )));
    }
    let mut out = BTreeSet::new();
    let core = n + 2 - gamma;
    match theorem {
        TheoremId::T31 => {
            for a in 2..=core / 2 {
                let b = Graph::construct(Family::CompleteBipartite(a, core - a))?;
                let bp = bipartition_of(&b).expect("complete bipartite");
                for h in structure::b_plus_members(&b, &bp)? {
                    if h.max_degree() <= n - gamma {
                        out.insert(canon::canonical_graph6(&h.with_isolated(gamma - 2)?)?);
                    }
                }
            }
        }
        TheoremId::C32 => {
            for a in 2..=core / 2 {
                let b = Graph::construct(Family::CompleteBipartite(a, core - a))?;
                out.insert(canon::canonical_graph6(&b.with_isolated(gamma - 2)?)?);
            }
        }
        TheoremId::T41 => {
            let clique = Graph::construct(Family::Complete(n - gamma + 1))?;
            out.insert(canon::canonical_graph6(&clique.with_isolated(gamma - 1)?)?);
            if gamma >= 2 && (n - gamma).is_multiple_of(2) {
                let cp = Graph::construct(Family::CocktailParty(core / 2))?;
                out.insert(canon::canonical_graph6(&cp.with_isolated(gamma - 2)?)?);
            }
        }
        _ => unreachable!("validated above"),
    }
    Ok(out.into_iter().collect())
}

/// Compares the equality holders among all graphs of order `n` and
/// domination number `gamma` with the constructed family.
pub fn extremal_census(
    n: usize,
    gamma: usize,
    theorem: TheoremId,
) -> Result<CensusReport, HarnessError> {
    validate_combination(n, gamma, theorem)?;
    extremal_census_from(enumerate_nonisomorphic(n)?, n, gamma, theorem)
}

/// [`extremal_census`] over graphs supplied by the caller; graphs of other
/// orders are ignored. Found graphs are compared by canonical form, so the
/// source may use any labeling, and the comparison is only meaningful when
/// the source holds every isomorphism class of order `n`.
pub fn extremal_census_from<I>(
    source: I,
    n: usize,
    gamma: usize,
    theorem: TheoremId,
) -> Result<CensusReport, HarnessError>
where
    I: IntoIterator<Item = Graph>,
{
    validate_combination(n, gamma, theorem)?;
    let constructed = constructed_extremal(n, gamma, theorem)?;
    let mut found = BTreeSet::new();
    let mut rows = Vec::new();
    for g in source {
        if g.order() != n {
            continue;
        }
        let analysis = Analysis::new(&g);
        if analysis.gamma() != gamma {
            continue;
        }
        let graph6 = canon::canonical_graph6(&g)?;
        let verdict = theorems::check(&analysis, theorem).map_err(|error| HarnessError::Check {
            graph6: graph6.clone(),
            error,
        })?;
        let Some(verdict) = verdict else { continue };
        if verdict.equality {
            found.insert(graph6.clone());
        }
        if verdict.equality || constructed.contains(&graph6) {
            rows.push(VerdictRow { graph6, verdict });
        }
    }
    rows.sort_by(|a, b| a.graph6.cmp(&b.graph6));
    let found: Vec<String> = found.into_iter().collect();
    Ok(CensusReport {
        n,
        gamma,
        theorem_id: theorem,
        matches: found == constructed,
        found_extremal: found,
        constructed_extremal: constructed,
        rows,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
}

pub trait Report: Serialize {
    fn rows(&self) -> &[VerdictRow];
}

impl Report for SuiteReport {
    fn rows(&self) -> &[VerdictRow] {
        &self.rows
    }
}

impl Report for CensusReport {
    fn rows(&self) -> &[VerdictRow] {
        &self.rows
    }
}

/// Serializes a report; the output always ends with a newline.
pub fn emit_report<R: Report>(report: &R, format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("reports serialize");
            s.push('\n');
            s
        }
        ReportFormat::Csv => emit_csv(report.rows()),
    }
}

/// Verdict rows as CSV under [`CSV_HEADER`], one line per row.
pub fn emit_csv(rows: &[VerdictRow]) -> String {
    let mut s = String::from(CSV_HEADER);
    s.push('\n');
    for row in rows {
        let v = &row.verdict;
        writeln!(
            s,
            "{},{},{},{},{},{},{},{},{},{}",
            row.graph6,
            v.theorem_id,
            v.n,
            v.gamma,
            v.bound_value,
            v.computed_value,
            v.bound_holds,
            v.equality,
            v.recognizer_accepts,
            v.characterization_consistent
        )
        .expect("writing to a String");
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_counts_small() {
        let counts: Vec<usize> = (1..=5)
            .map(|n| enumerate_nonisomorphic(n).unwrap().count())
            .collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34]);
        assert!(enumerate_nonisomorphic(0).is_err());
        assert!(enumerate_nonisomorphic(8).is_err());
    }

    #[test]
    fn enumeration_is_sorted_and_canonical() {
        let graphs: Vec<Graph> = enumerate_nonisomorphic(4).unwrap().collect();
        let strings: Vec<String> = graphs.iter().map(emit_graph6).collect();
        let mut sorted = strings.clone();
        sorted.sort();
        assert_eq!(strings, sorted);
        for g in &graphs {
            assert_eq!(&canon::canonical_graph(g).unwrap(), g);
        }
    }

    #[test]
    fn ingest_examples() {
        let graphs: Vec<Graph> = ingest_graph6("C~\n@\n".as_bytes())
            .map(Result::unwrap)
            .collect();
        assert_eq!(graphs.len(), 2);
        assert_eq!(graphs[0].edge_count(), 6);
        assert_eq!(graphs[1].order(), 1);

        assert_eq!(ingest_graph6("".as_bytes()).count(), 0);

        let err = collect_graphs(ingest_graph6("Bx\nC~\n".as_bytes()), false).unwrap_err();
        assert!(matches!(err, HarnessError::Parse { line: 1, .. }));
        assert!(err.to_string().starts_with("line 1:"));

        let (graphs, warnings) =
            collect_graphs(ingest_graph6("C~\n\nBx\n@\n".as_bytes()), true).unwrap();
        assert_eq!(graphs.len(), 2);
        assert_eq!(warnings.len(), 1);
        assert!(warnings[0].starts_with("line 3:"));
    }

    #[test]
    fn empty_suite() {
        let checks = BTreeSet::from([TheoremId::T31]);
        let r = run_suite(Vec::new(), &checks, &SuiteOptions::default()).unwrap();
        assert_eq!(r.graphs_processed, 0);
        assert_eq!(
            r.verdicts_by_theorem[&TheoremId::T31],
            TheoremCounts::default()
        );
        assert!(r.is_clean());
        assert!(run_suite(Vec::new(), &BTreeSet::new(), &SuiteOptions::default()).is_err());
    }

    #[test]
    fn suite_on_four_vertices() {
        let checks = BTreeSet::from([TheoremId::T31]);
        let r = run_suite(
            enumerate_nonisomorphic(4).unwrap(),
            &checks,
            &SuiteOptions::default(),
        )
        .unwrap();
        assert_eq!(r.graphs_processed, 11);
        assert!(r.violations.is_empty());
        let c4 = emit_graph6(
            &canon::canonical_graph(&Graph::construct(Family::Cycle(4)).unwrap()).unwrap(),
        );
        assert!(r
            .equality_cases
            .iter()
            .any(|e| e.graph6 == c4 && e.gamma == 2));
    }

    #[test]
    fn census_examples() {
        let r = extremal_census(4, 2, TheoremId::T41).unwrap();
        assert!(r.matches);
        assert_eq!(r.constructed_extremal.len(), 2);
        let r = extremal_census(5, 3, TheoremId::T31).unwrap();
        let k22k1 = Graph::construct(Family::CompleteBipartite(2, 2))
            .unwrap()
            .with_isolated(1)
            .unwrap();
        assert_eq!(
            r.constructed_extremal,
            vec![canon::canonical_graph6(&k22k1).unwrap()]
        );
        assert!(r.matches);
        assert!(extremal_census(4, 4, TheoremId::T31).is_err());
        assert!(extremal_census(4, 1, TheoremId::T31).is_err());
        assert!(extremal_census(4, 2, TheoremId::Ore).is_err());
    }

    #[test]
    fn csv_header_is_exact() {
        let checks = BTreeSet::from([TheoremId::T41]);
        let r = run_suite(
            enumerate_nonisomorphic(3).unwrap(),
            &checks,
            &SuiteOptions::default(),
        )
        .unwrap();
        let csv = emit_report(&r, ReportFormat::Csv);
        assert_eq!(csv.lines().next().unwrap(), CSV_HEADER);
        assert_eq!(csv.lines().count(), 1 + 4);
    }
}
