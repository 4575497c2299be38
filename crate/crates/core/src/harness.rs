//! Graph streams, exhaustive and sampled searches, matrix dumps and the
//! tabular output formats used by the `lexcess` binary.
//!
//! Searches evaluate graphs in parallel batches and fold the results in
//! stream order, so summaries and row output are byte-identical across runs
//! with the same configuration.

use std::fmt;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::compound::{additive_compound, binomial_u128, m_k_family};
use crate::error::{Error, Result};
use crate::excess::{bound_catalog, BoundKind, ExcessReport, GraphContext, ReportOptions};
use crate::graph::{self, Graph};
use crate::linalg::Family;
use crate::token;

/// Largest `n` searched exhaustively without an explicit override.
pub const EXHAUSTIVE_MAX_N: usize = 7;
/// Hard limit for exhaustive enumeration: `C(n, 2)` pairs must fit a mask.
pub const EXHAUSTIVE_HARD_MAX_N: usize = 11;
/// Violations kept verbatim in a summary; the counters are always exact.
pub const MAX_LISTED_VIOLATIONS: usize = 1_000;

const BATCH: usize = 2_048;

/// An inclusive range of integers, written `a`, `a..b` or `a..=b` (both
/// inclusive). An open upper end (`a..`) means "up to the graph order".
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Span {
    pub lo: usize,
    pub hi: Option<usize>,
}

impl Span {
    pub fn single(v: usize) -> Self {
        Span { lo: v, hi: Some(v) }
    }

    pub fn new(lo: usize, hi: usize) -> Self {
        Span { lo, hi: Some(hi) }
    }

    /// Every value from `lo` on.
    pub fn from(lo: usize) -> Self {
        Span { lo, hi: None }
    }

    /// The span clipped to `..=max`.
    pub fn clip(&self, max: usize) -> std::ops::RangeInclusive<usize> {
        self.lo..=self.hi.map_or(max, |h| h.min(max))
    }
}

impl FromStr for Span {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("bad range `{s}`"));
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
        let s = s.trim();
        if s == "all" {
            return Ok(Span::from(1));
        }
        let span = match s.split_once("..") {
            None => Span::single(num(s)?),
            Some((a, b)) => {
                let b = b.strip_prefix('=').unwrap_or(b);
                let lo = num(a)?;
                if b.trim().is_empty() {
                    Span::from(lo)
                } else {
                    Span::new(lo, num(b)?)
                }
            }
        };
        if span.hi.is_some_and(|h| h < span.lo) {
            return Err(bad());
        }
        Ok(span)
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.hi {
            Some(h) if h == self.lo => write!(f, "{h}"),
            Some(h) => write!(f, "{}..{h}", self.lo),
            None => write!(f, "{}..", self.lo),
        }
    }
}

/// A named graph generator, written `name:arg[:arg...]`.
///
/// `empty:n`, `complete:n`, `path:n`, `cycle:n`, `star:n`, `matching:t[:iso]`,
/// `turan:n:r`, `er:n:p:seed`.
#[derive(Debug, Clone, PartialEq)]
pub enum GraphSpec {
    Empty(usize),
    Complete(usize),
    Path(usize),
    Cycle(usize),
    Star(usize),
    Matching { t: usize, isolated: usize },
    Turan { n: usize, r: usize },
    ErdosRenyi { n: usize, p: f64, seed: u64 },
}

impl GraphSpec {
    pub fn build(&self) -> Result<Graph> {
        match *self {
            GraphSpec::Empty(n) => Ok(graph::empty(n)),
            GraphSpec::Complete(n) => graph::complete(n),
            GraphSpec::Path(n) => graph::path(n),
            GraphSpec::Cycle(n) => graph::cycle(n),
            GraphSpec::Star(n) => graph::star(n),
            GraphSpec::Matching { t, isolated } => Ok(graph::matching_graph(t, isolated)),
            GraphSpec::Turan { n, r } => graph::turan(n, r),
            GraphSpec::ErdosRenyi { n, p, seed } => graph::erdos_renyi(n, p, seed),
        }
    }
}

impl FromStr for GraphSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("bad graph spec `{s}`"));
        let mut parts = s.trim().split(':');
        let name = parts.next().ok_or_else(bad)?;
        let args: Vec<&str> = parts.collect();
        let int = |i: usize| -> Result<usize> {
            args.get(i).and_then(|a| a.parse().ok()).ok_or_else(bad)
        };
        let arity = match name {
            "matching" => 1..=2,
            "turan" => 2..=2,
            "er" => 3..=3,
            _ => 1..=1,
        };
        if !arity.contains(&args.len()) {
            return Err(bad());
        }
        Ok(match name {
            "empty" => GraphSpec::Empty(int(0)?),
            "complete" => GraphSpec::Complete(int(0)?),
            "path" => GraphSpec::Path(int(0)?),
            "cycle" => GraphSpec::Cycle(int(0)?),
            "star" => GraphSpec::Star(int(0)?),
            "matching" => GraphSpec::Matching {
                t: int(0)?,
                isolated: if args.len() == 2 { int(1)? } else { 0 },
            },
            "turan" => GraphSpec::Turan { n: int(0)?, r: int(1)? },
            "er" => GraphSpec::ErdosRenyi {
                n: int(0)?,
                p: args[1].parse().map_err(|_| bad())?,
                seed: args[2].parse().map_err(|_| bad())?,
            },
            _ => return Err(bad()),
        })
    }
}

/// Where the graphs of a `report` or `dump` come from.
#[derive(Debug, Clone, PartialEq)]
pub enum GraphSource {
    Spec(GraphSpec),
    Graph6(String),
    /// An edge-list file (one graph) or a graph6 file (one graph per line).
    File(PathBuf),
}

impl GraphSource {
    pub fn load(&self) -> Result<Vec<Graph>> {
        match self {
            GraphSource::Spec(spec) => Ok(vec![spec.build()?]),
            GraphSource::Graph6(line) => Ok(vec![graph::decode_graph6(line)?]),
            GraphSource::File(path) => load_graph_file(path),
        }
    }
}

/// Reads an edge-list or graph6 file, telling them apart by the first
/// non-comment line: an edge list starts with the numeric header `n m`.
pub fn load_graph_file(path: &Path) -> Result<Vec<Graph>> {
    let text = std::fs::read_to_string(path)?;
    parse_graph_text(&text)
}

pub fn parse_graph_text(text: &str) -> Result<Vec<Graph>> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'));
    let is_edge_list = first.is_some_and(|l| {
        let tokens: Vec<&str> = l.split_whitespace().collect();
        tokens.len() == 2 && tokens.iter().all(|t| t.bytes().all(|b| b.is_ascii_digit()))
    });
    if is_edge_list {
        Ok(vec![graph::parse_edge_list(text)?])
    } else {
        graph::parse_graph6_lines(text)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SearchMode {
    Exhaustive,
    Sample,
    File,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Json,
    Csv,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchConfig {
    pub mode: SearchMode,
    pub n: Span,
    pub k: Span,
    pub count: usize,
    pub p: f64,
    pub seed: u64,
    pub input: Option<PathBuf>,
    pub options: ReportOptions,
    pub allow_large: bool,
    /// Emit progress lines on stderr.
    pub progress: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            mode: SearchMode::Exhaustive,
            n: Span::single(4),
            k: Span::from(1),
            count: 100,
            p: 0.5,
            seed: 0,
            input: None,
            options: ReportOptions::default(),
            allow_large: false,
            progress: false,
        }
    }
}

impl SearchConfig {
    pub fn validate(&self) -> Result<()> {
        if self.k.lo < 1 {
            return Err(Error::InvalidParameter("k range must start at 1 or above".into()));
        }
        match self.mode {
            SearchMode::Exhaustive | SearchMode::Sample => {
                if self.n.hi.is_none() {
                    return Err(Error::InvalidParameter("n range needs an upper end".into()));
                }
            }
            SearchMode::File => {
                if self.input.is_none() {
                    return Err(Error::InvalidParameter("file mode needs an input path".into()));
                }
            }
        }
        if self.mode == SearchMode::Exhaustive {
            let hi = self.n.hi.unwrap_or(0);
            if hi > EXHAUSTIVE_HARD_MAX_N {
                return Err(Error::InvalidParameter(format!(
                    "exhaustive search supports n <= {EXHAUSTIVE_HARD_MAX_N}"
                )));
            }
            if hi > EXHAUSTIVE_MAX_N && !self.allow_large {
                return Err(Error::InvalidParameter(format!(
                    "exhaustive search above n = {EXHAUSTIVE_MAX_N} needs --allow-large"
                )));
            }
        }
        if self.mode == SearchMode::Sample && !(0.0..=1.0).contains(&self.p) {
            return Err(Error::InvalidParameter(format!("p = {} not in [0, 1]", self.p)));
        }
        Ok(())
    }
}

/// Every labeled graph on `n` vertices, ordered by pair bitmask.
pub fn labeled_graphs(n: usize) -> Result<impl Iterator<Item = Graph>> {
    let pairs = n * n.saturating_sub(1) / 2;
    if pairs >= 64 {
        return Err(Error::InvalidParameter(format!("cannot enumerate labeled graphs on {n} vertices")));
    }
    Ok((0..1u64 << pairs).map(move |mask| Graph::from_pair_mask(n, mask)))
}

/// The graph stream of a search, in its fixed order.
pub fn graph_stream(config: &SearchConfig) -> Result<Box<dyn Iterator<Item = Result<Graph>>>> {
    config.validate()?;
    let ns = config.n.clip(usize::MAX);
    match config.mode {
        SearchMode::Exhaustive => {
            let mut streams = Vec::new();
            for n in ns {
                streams.push(labeled_graphs(n)?);
            }
            Ok(Box::new(streams.into_iter().flatten().map(Ok)))
        }
        SearchMode::Sample => {
            // Per-graph seeds come from one SplitMix64 stream.
            let mut seeds = SplitMix64::seed_from_u64(config.seed);
            let (count, p) = (config.count, config.p);
            let plan: Vec<(usize, u64)> = ns
                .flat_map(|n| (0..count).map(move |_| n))
                .map(|n| (n, seeds.next_u64()))
                .collect();
            Ok(Box::new(plan.into_iter().map(move |(n, s)| graph::erdos_renyi(n, p, s))))
        }
        SearchMode::File => {
            let path = config.input.as_ref().expect("validated");
            Ok(Box::new(load_graph_file(path)?.into_iter().map(Ok)))
        }
    }
}

/// Result of evaluating one graph.
#[derive(Debug, Clone)]
pub enum GraphOutcome {
    Evaluated(Vec<ExcessReport>),
    Skipped { graph6: String, reason: String },
}

/// Reports for every `k` of `span` that fits `g`. Theorem violations are
/// returned inside the reports, not as errors.
pub fn evaluate_graph(g: &Graph, span: Span, options: &ReportOptions) -> Result<GraphOutcome> {
    let ctx = match GraphContext::new(g, options) {
        Ok(ctx) => ctx,
        Err(e @ (Error::CapExceeded { .. } | Error::TooManyVertices(_))) => {
            return Ok(GraphOutcome::Skipped {
                graph6: graph::encode_graph6(g),
                reason: e.to_string(),
            })
        }
        Err(e) => return Err(e),
    };
    let reports = span.clip(g.n()).map(|k| ctx.report(k)).collect::<Result<Vec<_>>>()?;
    Ok(GraphOutcome::Evaluated(reports))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundSummary {
    pub name: String,
    pub kind: BoundKind,
    pub evaluated: u64,
    pub skipped: u64,
    /// Smallest slack seen and where.
    pub worst_slack: Option<f64>,
    pub worst_graph: Option<String>,
    pub worst_k: Option<usize>,
    pub tight: u64,
    pub violations: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Violation {
    pub name: String,
    pub kind: BoundKind,
    pub graph6: String,
    pub k: usize,
    pub lhs: f64,
    pub bound: f64,
    pub slack: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchSummary {
    pub graphs_processed: u64,
    pub graphs_skipped: u64,
    pub evaluations: u64,
    pub theorem_violations: u64,
    pub conjecture_violations: u64,
    pub bounds: Vec<BoundSummary>,
    /// At most [`MAX_LISTED_VIOLATIONS`] entries, in stream order.
    pub violations: Vec<Violation>,
    pub skipped_graphs: Vec<String>,
}

impl SearchSummary {
    pub fn new(options: &ReportOptions) -> Self {
        SearchSummary {
            graphs_processed: 0,
            graphs_skipped: 0,
            evaluations: 0,
            theorem_violations: 0,
            conjecture_violations: 0,
            bounds: bound_catalog(options)
                .into_iter()
                .map(|(name, kind)| BoundSummary {
                    name,
                    kind,
                    evaluated: 0,
                    skipped: 0,
                    worst_slack: None,
                    worst_graph: None,
                    worst_k: None,
                    tight: 0,
                    violations: 0,
                })
                .collect(),
            violations: Vec::new(),
            skipped_graphs: Vec::new(),
        }
    }

    pub fn bound(&self, name: &str) -> Option<&BoundSummary> {
        self.bounds.iter().find(|b| b.name == name)
    }

    pub fn absorb(&mut self, outcome: &GraphOutcome) {
        let reports = match outcome {
            GraphOutcome::Skipped { graph6, .. } => {
                self.graphs_skipped += 1;
                if self.skipped_graphs.len() < MAX_LISTED_VIOLATIONS {
                    self.skipped_graphs.push(graph6.clone());
                }
                return;
            }
            GraphOutcome::Evaluated(reports) => reports,
        };
        self.graphs_processed += 1;
        for report in reports {
            self.evaluations += 1;
            for (kind, rec) in report.records() {
                let Some(entry) = self.bounds.iter_mut().find(|b| b.name == rec.name) else {
                    continue;
                };
                entry.evaluated += 1;
                if rec.tight {
                    entry.tight += 1;
                }
                if entry.worst_slack.is_none_or(|w| rec.slack < w) {
                    entry.worst_slack = Some(rec.slack);
                    entry.worst_graph = Some(report.graph_id.clone());
                    entry.worst_k = Some(report.k);
                }
                if !rec.satisfied {
                    entry.violations += 1;
                    match kind {
                        BoundKind::Theorem => self.theorem_violations += 1,
                        BoundKind::Conjecture => self.conjecture_violations += 1,
                    }
                    if self.violations.len() < MAX_LISTED_VIOLATIONS {
                        self.violations.push(Violation {
                            name: rec.name.clone(),
                            kind,
                            graph6: report.graph_id.clone(),
                            k: report.k,
                            lhs: rec.lhs,
                            bound: rec.bound_value,
                            slack: rec.slack,
                        });
                    }
                }
            }
            for s in &report.skipped {
                if let Some(entry) = self.bounds.iter_mut().find(|b| b.name == s.name) {
                    entry.skipped += 1;
                }
            }
        }
    }
}

/// Runs a search, handing each evaluated graph to `sink` in stream order.
pub fn run_search(
    config: &SearchConfig,
    mut sink: impl FnMut(&GraphOutcome) -> Result<()>,
) -> Result<SearchSummary> {
    let mut stream = graph_stream(config)?;
    let mut summary = SearchSummary::new(&config.options);
    let mut batch = Vec::with_capacity(BATCH);
    loop {
        batch.clear();
        for g in stream.by_ref().take(BATCH) {
            batch.push(g?);
        }
        if batch.is_empty() {
            break;
        }
        let outcomes: Vec<Result<GraphOutcome>> = batch
            .par_iter()
            .map(|g| evaluate_graph(g, config.k, &config.options))
            .collect();
        for outcome in outcomes {
            let outcome = outcome?;
            summary.absorb(&outcome);
            sink(&outcome)?;
        }
        if config.progress {
            eprintln!(
                "[search] {} graphs, {} theorem / {} conjecture violations",
                summary.graphs_processed + summary.graphs_skipped,
                summary.theorem_violations,
                summary.conjecture_violations
            );
        }
    }
    Ok(summary)
}

fn fmt_opt(v: Option<f64>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

/// Writes one wide CSV row per `(graph, k)`: `graph6, n, m, k, eps_k,
/// teps_k, epsT_k`, then `lhs, bound, slack` for each catalog record.
pub struct SearchCsv<W: Write> {
    writer: csv::Writer<W>,
    names: Vec<String>,
}

impl<W: Write> SearchCsv<W> {
    pub fn new(out: W, options: &ReportOptions) -> Result<Self> {
        let names: Vec<String> = bound_catalog(options).into_iter().map(|(n, _)| n).collect();
        let mut writer = csv::Writer::from_writer(out);
        let mut header: Vec<String> =
            ["graph6", "n", "m", "k", "eps_k", "teps_k", "epsT_k"].map(String::from).to_vec();
        for name in &names {
            header.extend(["lhs", "bound", "slack"].map(|s| format!("{name}_{s}")));
        }
        writer.write_record(&header)?;
        Ok(SearchCsv { writer, names })
    }

    pub fn write_report(&mut self, r: &ExcessReport) -> Result<()> {
        let mut row = vec![
            r.graph_id.clone(),
            r.n.to_string(),
            r.m.to_string(),
            r.k.to_string(),
            r.eps_k.to_string(),
            fmt_opt(r.teps_k),
            fmt_opt(r.eps_t_k),
        ];
        for name in &self.names {
            match r.record(name) {
                Some(rec) => row.extend([rec.lhs, rec.bound_value, rec.slack].map(|x| x.to_string())),
                None => row.extend([String::new(), String::new(), String::new()]),
            }
        }
        self.writer.write_record(&row)?;
        Ok(())
    }

    pub fn write_outcome(&mut self, outcome: &GraphOutcome) -> Result<()> {
        if let GraphOutcome::Evaluated(reports) = outcome {
            for r in reports {
                self.write_report(r)?;
            }
        }
        Ok(())
    }

    pub fn finish(mut self) -> Result<W> {
        self.writer.flush()?;
        self.writer.into_inner().map_err(|e| Error::Io(e.into_error()))
    }
}

/// Long-format CSV for reports: one row per `(graph, k, record)`.
pub fn write_reports_csv<W: Write>(out: W, reports: &[ExcessReport]) -> Result<W> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["graph6", "n", "m", "k", "kind", "name", "lhs", "bound", "slack", "satisfied", "tight"])?;
    for r in reports {
        for (kind, rec) in r.records() {
            let kind = match kind {
                BoundKind::Theorem => "theorem",
                BoundKind::Conjecture => "conjecture",
            };
            w.write_record([
                r.graph_id.clone(),
                r.n.to_string(),
                r.m.to_string(),
                r.k.to_string(),
                kind.to_string(),
                rec.name.clone(),
                rec.lhs.to_string(),
                rec.bound_value.to_string(),
                rec.slack.to_string(),
                rec.satisfied.to_string(),
                rec.tight.to_string(),
            ])?;
        }
    }
    w.flush()?;
    w.into_inner().map_err(|e| Error::Io(e.into_error()))
}

/// Reports for every graph and every `k` in `span`. A `k`
/// beyond a graph's order is an error here, unlike in searches.
pub fn report(graphs: &[Graph], span: Span, options: &ReportOptions) -> Result<Vec<ExcessReport>> {
    let mut out = Vec::new();
    for g in graphs {
        if let Some(hi) = span.hi {
            if hi > g.n() {
                return Err(Error::KOutOfRange { k: hi, min: 1, max: g.n() });
            }
        }
        if span.lo < 1 || span.lo > g.n() {
            return Err(Error::KOutOfRange { k: span.lo, min: 1, max: g.n() });
        }
        let ctx = GraphContext::new(g, options)?;
        for k in span.clip(g.n()) {
            out.push(ctx.report(k)?);
        }
    }
    Ok(out)
}

/// Matrices and graphs that `dump` can print.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DumpObject {
    Laplacian,
    Signless,
    Compound(usize),
    MK(usize),
    Token(usize),
    TokenLaplacian(usize),
}

impl DumpObject {
    pub fn parse(name: &str, k: Option<usize>) -> Result<Self> {
        let need = || k.ok_or_else(|| Error::InvalidParameter(format!("`{name}` needs k")));
        Ok(match name {
            "laplacian" => DumpObject::Laplacian,
            "signless" => DumpObject::Signless,
            "compound" => DumpObject::Compound(need()?),
            "m_k" | "mk" => DumpObject::MK(need()?),
            "token" => DumpObject::Token(need()?),
            "token-laplacian" => DumpObject::TokenLaplacian(need()?),
            _ => return Err(Error::InvalidParameter(format!("unknown dump object `{name}`"))),
        })
    }
}

/// Text of a dumped object: matrices as `dim` then rows, token graphs in
/// edge-list format.
pub fn dump(g: &Graph, object: DumpObject, options: &ReportOptions) -> Result<String> {
    let caps = &options.caps;
    Ok(match object {
        DumpObject::Laplacian => Family::Laplacian.matrix(g).to_text(),
        DumpObject::Signless => Family::Signless.matrix(g).to_text(),
        DumpObject::Compound(k) => {
            if k < 1 || k > g.n() {
                return Err(Error::KOutOfRange { k, min: 1, max: g.n() });
            }
            caps.check_matrix(g.n(), k)?;
            additive_compound(&Family::Laplacian.matrix(g), k)?.matrix.to_text()
        }
        DumpObject::MK(k) => m_k_family(g, k, Family::Laplacian, caps)?.matrix.to_text(),
        DumpObject::Token(k) => token::token_graph(g, k, caps)?.graph.to_edge_list(),
        DumpObject::TokenLaplacian(k) => token::token_laplacian(g, k, caps)?.to_text(),
    })
}

/// Number of labeled graphs an exhaustive search over `span` visits.
pub fn exhaustive_size(span: Span) -> u128 {
    span.clip(EXHAUSTIVE_HARD_MAX_N)
        .map(|n| 1u128 << binomial_u128(n, 2).min(127))
        .sum()
}
