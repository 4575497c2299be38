use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use laplacian_excess::excess::FamilySelection;
use laplacian_excess::harness::{
    self, DumpObject, GraphOutcome, GraphSource, GraphSpec, OutputFormat, SearchConfig, SearchCsv,
    SearchMode, Span,
};
use laplacian_excess::{Caps, Error, ReportOptions};

/// Laplacian eigenvalue-sum excesses, compounds and token graphs.
///
/// Exit status: 0 success, 1 a proved bound was violated, 2 bad input or
/// usage, 3 an enumeration cap was exceeded.
#[derive(Parser)]
#[command(name = "lexcess", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate every bound and conjecture for one or more graphs.
    Report {
        #[command(flatten)]
        source: SourceArgs,
        /// k, a..b, or all.
        #[arg(long, default_value = "all")]
        k: Span,
        #[command(flatten)]
        limits: Limits,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Search a stream of graphs for bound violations.
    Search {
        #[arg(long, value_enum, default_value_t = Mode::Exhaustive)]
        mode: Mode,
        /// Graph order(s) for exhaustive and sample mode.
        #[arg(long, default_value = "4")]
        n: Span,
        #[arg(long, default_value = "all")]
        k: Span,
        /// Samples per graph order.
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Graph file for file mode (edge list or graph6).
        #[arg(long)]
        input: Option<PathBuf>,
        /// Permit exhaustive search above n = 7.
        #[arg(long)]
        allow_large: bool,
        /// Suppress progress lines on stderr.
        #[arg(long, short)]
        quiet: bool,
        #[command(flatten)]
        limits: Limits,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Print a matrix or token graph.
    Dump {
        #[arg(value_parser = ["laplacian", "signless", "compound", "m_k", "token", "token-laplacian"])]
        object: String,
        k: Option<usize>,
        #[command(flatten)]
        source: SourceArgs,
        #[command(flatten)]
        limits: Limits,
    },
    /// Run the built-in identity and bound checks.
    Selftest,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct SourceArgs {
    /// Generator such as star:5, turan:6:2, er:8:0.5:1.
    #[arg(long)]
    graph: Option<GraphSpec>,
    #[arg(long)]
    graph6: Option<String>,
    /// Edge-list or graph6 file.
    #[arg(long)]
    input: Option<PathBuf>,
}

impl SourceArgs {
    fn source(&self) -> GraphSource {
        match (&self.graph, &self.graph6, &self.input) {
            (Some(spec), _, _) => GraphSource::Spec(spec.clone()),
            (_, Some(g6), _) => GraphSource::Graph6(g6.clone()),
            (_, _, Some(path)) => GraphSource::File(path.clone()),
            _ => unreachable!("clap enforces one source"),
        }
    }
}

#[derive(Args)]
struct Limits {
    /// Cap on C(n, k) for subset scans.
    #[arg(long, env = "LEXCESS_CAP", default_value_t = Caps::DEFAULT_SUBSETS)]
    cap: u64,
    /// Cap on C(n, k) for dense compound and token matrices.
    #[arg(long, env = "LEXCESS_MATRIX_CAP", default_value_t = Caps::DEFAULT_MATRIX_DIM)]
    matrix_cap: u64,
    /// Slack below -tol counts as a violation.
    #[arg(long, env = "LEXCESS_TOL", default_value_t = ReportOptions::DEFAULT_VIOLATION_TOL)]
    tol: f64,
    #[arg(long, value_enum, default_value_t = Families::Laplacian)]
    family: Families,
}

impl Limits {
    fn options(&self) -> ReportOptions {
        ReportOptions {
            families: match self.family {
                Families::Laplacian => FamilySelection::Laplacian,
                Families::Signless => FamilySelection::Signless,
                Families::Both => FamilySelection::Both,
            },
            caps: Caps {
                subsets: self.cap,
                matrix_dim: self.matrix_cap,
            },
            violation_tol: self.tol,
            ..ReportOptions::default()
        }
    }
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Exhaustive,
    Sample,
    File,
}

#[derive(Clone, Copy, ValueEnum)]
enum Families {
    Laplacian,
    Signless,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

impl From<Format> for OutputFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Json => OutputFormat::Json,
            Format::Csv => OutputFormat::Csv,
        }
    }
}

const EXIT_VIOLATION: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_CAP: u8 = 3;

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::TheoremViolation { .. } => EXIT_VIOLATION,
        Error::CapExceeded { .. } => EXIT_CAP,
        _ => EXIT_INPUT,
    }
}

fn create(path: &PathBuf) -> Result<BufWriter<File>, Error> {
    Ok(BufWriter::new(File::create(path)?))
}

fn report(source: &SourceArgs, k: Span, limits: &Limits, output: &OutputArgs) -> Result<u8, Error> {
    let options = limits.options();
    let graphs = source.source().load()?;
    let reports = harness::report(&graphs, k, &options)?;
    let mut stdout = io::stdout().lock();
    serde_json::to_writer_pretty(&mut stdout, &reports)?;
    writeln!(stdout)?;
    if let Some(path) = &output.out {
        match output.format {
            Format::Json => {
                let mut w = create(path)?;
                serde_json::to_writer_pretty(&mut w, &reports)?;
                writeln!(w)?;
                w.flush()?;
            }
            Format::Csv => {
                harness::write_reports_csv(create(path)?, &reports)?.flush()?;
            }
        }
    }
    if reports.iter().any(|r| r.theorem_violations().next().is_some()) {
        return Ok(EXIT_VIOLATION);
    }
    if reports.iter().any(|r| !r.skipped.is_empty()) {
        eprintln!("some quantities were skipped: enumeration cap exceeded");
        return Ok(EXIT_CAP);
    }
    Ok(0)
}

enum Rows {
    Csv(SearchCsv<BufWriter<File>>),
    JsonLines(BufWriter<File>),
    Nothing,
}

fn search(config: SearchConfig, output: &OutputArgs) -> Result<u8, Error> {
    let mut rows = match (&output.out, output.format) {
        (None, _) => Rows::Nothing,
        (Some(path), Format::Csv) => Rows::Csv(SearchCsv::new(create(path)?, &config.options)?),
        (Some(path), Format::Json) => Rows::JsonLines(create(path)?),
    };
    let summary = harness::run_search(&config, |outcome| match (&mut rows, outcome) {
        (Rows::Csv(csv), o) => csv.write_outcome(o),
        (Rows::JsonLines(w), GraphOutcome::Evaluated(reports)) => {
            for r in reports {
                serde_json::to_writer(&mut *w, r)?;
                writeln!(w)?;
            }
            Ok(())
        }
        _ => Ok(()),
    })?;
    match rows {
        Rows::Csv(csv) => csv.finish()?.flush()?,
        Rows::JsonLines(mut w) => w.flush()?,
        Rows::Nothing => {}
    }
    let mut stdout = io::stdout().lock();
    serde_json::to_writer_pretty(&mut stdout, &summary)?;
    writeln!(stdout)?;
    Ok(if summary.theorem_violations > 0 { EXIT_VIOLATION } else { 0 })
}

fn dump(object: &str, k: Option<usize>, source: &SourceArgs, limits: &Limits) -> Result<u8, Error> {
    let object = DumpObject::parse(object, k)?;
    let options = limits.options();
    let mut stdout = io::stdout().lock();
    for g in source.source().load()? {
        stdout.write_all(harness::dump(&g, object, &options)?.as_bytes())?;
    }
    Ok(0)
}

fn selftest() -> u8 {
    let mut failed = false;
    for check in laplacian_excess::selftest::run_all() {
        println!("{check}");
        failed |= !check.passed;
    }
    u8::from(failed)
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.command {
        Command::Report { source, k, limits, output } => report(&source, k, &limits, &output),
        Command::Search {
            mode,
            n,
            k,
            count,
            p,
            seed,
            input,
            allow_large,
            quiet,
            limits,
            output,
        } => {
            let config = SearchConfig {
                mode: match mode {
                    Mode::Exhaustive => SearchMode::Exhaustive,
                    Mode::Sample => SearchMode::Sample,
                    Mode::File => SearchMode::File,
                },
                n,
                k,
                count,
                p,
                seed,
                input,
                options: limits.options(),
                allow_large,
                progress: !quiet,
            };
            search(config, &output)
        }
        Command::Dump { object, k, source, limits } => dump(&object, k, &source, &limits),
        Command::Selftest => Ok(selftest()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
