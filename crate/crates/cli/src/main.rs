//! `distspec`: command-line workbench over the distance-spectrum library.
//!
//! Five subcommands: `spectrum` for single-graph invariants, `check` for
//! batch bound evaluation, `scan` for conjecture scans over enumerated or
//! file-backed corpora, `threshold` for the Ramsey–Moore order threshold,
//! and `families` for corpus generation.
//!
//! Exit codes: 0 on success with no violations, 1 on violations or data
//! errors, 2 on usage errors.

use std::fs::File;
use std::io::{self, BufWriter};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use distspec::bounds::{moore_threshold, BoundId};
use distspec::enumerate::{
    enumerate_connected_graphs, enumerate_trees, CONNECTED_ENUM_MAX, TREE_ENUM_MAX,
};
use distspec::families::FamilySpec;
use distspec::graph6::{encode_graph6, parse_graph6};
use distspec::harness::{self, ScanSummary};
use distspec::report;
use distspec::spectra::{distance_spectrum, laplacian_spectrum};
use distspec::{Graph, Result};

/// How many corpus members to list inline in human-readable summaries.
const LIST_LIMIT: usize = 12;

#[derive(Parser)]
#[command(
    name = "distspec",
    version,
    about = "Distance-spectrum workbench: spectra, bound checks, and conjecture scans"
)]
struct Cli {
    /// Worker-thread count for parallel scans (default: one per core).
    /// Output is identical for every worker count.
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print spectra and distance invariants of a single graph.
    Spectrum(SpectrumArgs),
    /// Evaluate catalog bounds over a corpus, one JSON report per line.
    Check(CheckArgs),
    /// Scan a conjecture over an enumerated or file-backed corpus.
    Scan(ScanArgs),
    /// Print the order threshold that guarantees lambda_k(D) >= -2.
    Threshold(ThresholdArgs),
    /// Emit graph6 corpora: parametric families or exhaustive enumerations.
    Families(FamiliesArgs),
}

#[derive(Args)]
#[command(group = clap::ArgGroup::new("source").required(true))]
struct SpectrumArgs {
    /// graph6 string of a connected graph.
    #[arg(long, group = "source")]
    graph6: Option<String>,

    /// Named family; requires --n, and --r for complete_bipartite.
    #[arg(long, group = "source", value_enum, requires = "n")]
    family: Option<FamilyName>,

    /// Order (vertex count) for --family.
    #[arg(long)]
    n: Option<usize>,

    /// Size of the first part for --family complete_bipartite.
    #[arg(long)]
    r: Option<usize>,

    /// Also print S_k, the sum of the k largest distance eigenvalues
    /// (repeatable).
    #[arg(long)]
    k: Vec<usize>,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct CheckArgs {
    /// Comma-separated bound ids, or `all`.
    #[arg(long)]
    bounds: String,

    /// graph6 corpus file, one graph per line.
    #[arg(long)]
    input: PathBuf,

    /// Eigenvalue index for bounds parameterized by k.
    #[arg(long, default_value_t = 2)]
    k: usize,

    /// Independence parameter for bounds parameterized by s.
    #[arg(long, default_value_t = 2)]
    s: usize,

    /// Write the JSONL reports here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct ScanArgs {
    /// Which conjecture to scan.
    #[arg(long, value_enum)]
    conjecture: Conjecture,

    /// Corpus source: exhaustive connected graphs, all trees, or a file.
    #[arg(long, value_enum)]
    mode: Mode,

    /// Order for the enumerated modes.
    #[arg(long)]
    n: Option<usize>,

    /// Partial-sum index for path-max and bipartite-sk.
    #[arg(long)]
    k: Option<usize>,

    /// graph6 corpus file for --mode file.
    #[arg(long)]
    input: Option<PathBuf>,

    /// Output prefix: writes PREFIX.summary.csv and PREFIX.violations.jsonl.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct ThresholdArgs {
    /// Eigenvalue index; the threshold applies to lambda_k, k >= 2.
    #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
    k: u64,
}

#[derive(Args)]
struct FamiliesArgs {
    /// A parametric family, or an exhaustive enumeration.
    #[arg(long, value_enum)]
    kind: CorpusKind,

    /// Order (vertex count).
    #[arg(long)]
    n: usize,

    /// Size of the first part for complete_bipartite.
    #[arg(long)]
    r: Option<usize>,

    /// Write the graph6 lines here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyName {
    Complete,
    #[value(name = "complete_bipartite")]
    CompleteBipartite,
    Star,
    Path,
    Cycle,
}

#[derive(Clone, Copy, ValueEnum)]
enum CorpusKind {
    Complete,
    #[value(name = "complete_bipartite")]
    CompleteBipartite,
    Star,
    Path,
    Cycle,
    Trees,
    Connected,
}

impl CorpusKind {
    fn family(self) -> Option<FamilyName> {
        match self {
            CorpusKind::Complete => Some(FamilyName::Complete),
            CorpusKind::CompleteBipartite => Some(FamilyName::CompleteBipartite),
            CorpusKind::Star => Some(FamilyName::Star),
            CorpusKind::Path => Some(FamilyName::Path),
            CorpusKind::Cycle => Some(FamilyName::Cycle),
            CorpusKind::Trees | CorpusKind::Connected => None,
        }
    }
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Conjecture {
    PathMax,
    BipartiteSk,
    Lambda2Half,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Mode {
    Exhaustive,
    Trees,
    File,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.jobs {
        Some(threads) => {
            harness::with_workers(threads, || dispatch(cli.command)).unwrap_or_else(Err)
        }
        None => dispatch(cli.command),
    };
    outcome.unwrap_or_else(|e| {
        eprintln!("error: {e}");
        ExitCode::FAILURE
    })
}

fn dispatch(command: Command) -> Result<ExitCode> {
    match command {
        Command::Spectrum(args) => cmd_spectrum(args),
        Command::Check(args) => cmd_check(args),
        Command::Scan(args) => cmd_scan(args),
        Command::Threshold(args) => cmd_threshold(args),
        Command::Families(args) => cmd_families(args),
    }
}

/// Prints a usage diagnostic and yields the usage exit code.
fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

/// Builds a parametric family from CLI flags; errors are usage messages.
fn family_spec(
    name: FamilyName,
    n: usize,
    r: Option<usize>,
) -> std::result::Result<FamilySpec, String> {
    let spec = match name {
        FamilyName::Complete => FamilySpec::complete(n),
        FamilyName::CompleteBipartite => {
            let r = r.ok_or_else(|| "complete_bipartite requires --r".to_owned())?;
            if r >= n {
                return Err(format!("--r must be smaller than --n (r = {r}, n = {n})"));
            }
            FamilySpec::complete_bipartite(r, n - r)
        }
        FamilyName::Star => FamilySpec::star(n),
        FamilyName::Path => FamilySpec::path(n),
        FamilyName::Cycle => FamilySpec::cycle(n),
    };
    spec.map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct SumRecord {
    k: usize,
    value: f64,
}

#[derive(Serialize)]
struct SpectrumRecord {
    graph6: String,
    n: usize,
    m: usize,
    diameter: u32,
    wiener: u64,
    distance_spectrum: Vec<f64>,
    laplacian_spectrum: Vec<f64>,
    sums: Vec<SumRecord>,
}

fn cmd_spectrum(args: SpectrumArgs) -> Result<ExitCode> {
    let g = if let Some(text) = &args.graph6 {
        parse_graph6(text)?
    } else {
        let name = args.family.expect("clap guarantees one source");
        let n = args.n.expect("clap ties --n to --family");
        match family_spec(name, n, args.r) {
            Ok(spec) => spec.build(),
            Err(msg) => return Ok(usage_error(&msg)),
        }
    };
    for &k in &args.k {
        if k < 1 || k > g.n() {
            return Ok(usage_error(&format!(
                "--k {k} out of range 1..={} for this graph",
                g.n()
            )));
        }
    }

    let dm = g.distance_matrix()?;
    let dist = distance_spectrum(&g)?;
    let lap = laplacian_spectrum(&g)?;
    let sums: Vec<SumRecord> = args
        .k
        .iter()
        .map(|&k| SumRecord {
            k,
            value: dist.sum_top_k(k).expect("k validated above"),
        })
        .collect();

    match args.format {
        Format::Text => {
            println!("graph6: {}", encode_graph6(&g));
            println!("n = {}", g.n());
            println!("m = {}", g.edge_count());
            println!("diameter = {}", dm.diameter());
            println!("wiener index = {}", dm.wiener());
            println!("distance spectrum: {}", render_values(dist.values()));
            println!("laplacian spectrum: {}", render_values(lap.values()));
            for sum in &sums {
                println!("S_{}(D) = {:.6}", sum.k, sum.value);
            }
        }
        Format::Json => {
            let record = SpectrumRecord {
                graph6: encode_graph6(&g),
                n: g.n(),
                m: g.edge_count(),
                diameter: dm.diameter(),
                wiener: dm.wiener(),
                distance_spectrum: dist.values().to_vec(),
                laplacian_spectrum: lap.values().to_vec(),
                sums,
            };
            println!("{}", report::to_json_line(&record)?);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn render_values(values: &[f64]) -> String {
    values
        .iter()
        .map(|&v| format!("{:.6}", if v == 0.0 { 0.0 } else { v }))
        .collect::<Vec<_>>()
        .join(", ")
}

fn parse_bounds(spec: &str) -> std::result::Result<Vec<BoundId>, String> {
    if spec == "all" {
        return Ok(BoundId::ALL.to_vec());
    }
    let ids: Vec<BoundId> = spec
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<BoundId>().map_err(|e| e.to_string()))
        .collect::<std::result::Result<_, _>>()?;
    if ids.is_empty() {
        return Err("--bounds lists no bound ids".to_owned());
    }
    Ok(ids)
}

fn cmd_check(args: CheckArgs) -> Result<ExitCode> {
    let ids = match parse_bounds(&args.bounds) {
        Ok(ids) => ids,
        Err(msg) => return Ok(usage_error(&msg)),
    };
    let corpus = harness::load_corpus(&args.input)?;
    let (reports, _summary) = harness::scan_bounds(&corpus, &ids, args.k, args.s)?;

    match &args.output {
        Some(path) => report::write_jsonl(BufWriter::new(File::create(path)?), &reports)?,
        None => report::write_jsonl(io::stdout().lock(), &reports)?,
    }

    let applicable = reports.iter().filter(|r| r.applicable).count();
    let failures = reports.iter().filter(|r| r.applicable && !r.holds).count();
    let equalities = reports.iter().filter(|r| r.equality).count();
    eprintln!(
        "checked {} graphs x {} bounds: {} applicable, {} failed, {} exact equalities",
        corpus.len(),
        ids.len(),
        applicable,
        failures,
        equalities,
    );
    Ok(if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}

fn cmd_scan(args: ScanArgs) -> Result<ExitCode> {
    let corpus: Vec<Graph> = match args.mode {
        Mode::Exhaustive => {
            let Some(n) = args.n else {
                return Ok(usage_error("--mode exhaustive requires --n"));
            };
            if !(1..=CONNECTED_ENUM_MAX).contains(&n) {
                return Ok(usage_error(&format!(
                    "--mode exhaustive supports 1 <= n <= {CONNECTED_ENUM_MAX}; \
                     use --mode file with --input for larger corpora"
                )));
            }
            enumerate_connected_graphs(n)?
        }
        Mode::Trees => {
            let Some(n) = args.n else {
                return Ok(usage_error("--mode trees requires --n"));
            };
            if !(2..=TREE_ENUM_MAX).contains(&n) {
                return Ok(usage_error(&format!(
                    "--mode trees supports 2 <= n <= {TREE_ENUM_MAX}; \
                     use --mode file with --input for larger corpora"
                )));
            }
            enumerate_trees(n)?
        }
        Mode::File => {
            let Some(input) = &args.input else {
                return Ok(usage_error("--mode file requires --input"));
            };
            harness::load_corpus(input)?
        }
    };

    if let Some(n) = args.n {
        let k_floor = match args.conjecture {
            Conjecture::PathMax => 1,
            Conjecture::BipartiteSk => 2,
            Conjecture::Lambda2Half => 2,
        };
        let k_used = args.k.unwrap_or(k_floor);
        if matches!(args.conjecture, Conjecture::Lambda2Half) && n < 2 {
            return Ok(usage_error("--conjecture lambda2-half requires n >= 2"));
        }
        if k_used < k_floor || k_used > n {
            return Ok(usage_error(&format!(
                "--k {k_used} out of range {k_floor}..={n} for this conjecture"
            )));
        }
    }

    let summary = match args.conjecture {
        Conjecture::PathMax => {
            let Some(k) = args.k else {
                return Ok(usage_error("--conjecture path-max requires --k"));
            };
            harness::scan_path_max(&corpus, k)?
        }
        Conjecture::BipartiteSk => {
            let Some(k) = args.k else {
                return Ok(usage_error("--conjecture bipartite-sk requires --k"));
            };
            // Enumerated corpora are restricted to their bipartite members;
            // a file corpus is taken verbatim and must be all-bipartite.
            let corpus: Vec<Graph> = match args.mode {
                Mode::File => corpus,
                Mode::Exhaustive | Mode::Trees => corpus
                    .into_iter()
                    .filter(|g| g.bipartition().is_ok_and(|b| b.is_some()))
                    .collect(),
            };
            harness::scan_bipartite_sk(&corpus, k)?
        }
        Conjecture::Lambda2Half => harness::scan_lambda2_half(&corpus)?,
    };

    if let Some(prefix) = &args.output {
        let csv_path = path_with_suffix(prefix, ".summary.csv");
        let jsonl_path = path_with_suffix(prefix, ".violations.jsonl");
        report::write_summary_csv(
            BufWriter::new(File::create(&csv_path)?),
            std::slice::from_ref(&summary),
        )?;
        report::write_jsonl_records(
            BufWriter::new(File::create(&jsonl_path)?),
            &summary.violations,
        )?;
    }

    print_scan_summary(&summary);
    Ok(if summary.violations.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}

fn print_scan_summary(summary: &ScanSummary) {
    println!("conjecture: {}", summary.conjecture_id);
    match summary.n {
        Some(n) => println!("corpus: {} graphs (n = {n})", summary.corpus_size),
        None => println!("corpus: {} graphs", summary.corpus_size),
    }
    if let Some(k) = summary.k {
        println!("k: {k}");
    }

    println!("violations: {}", summary.violations.len());
    for v in summary.violations.iter().take(LIST_LIMIT) {
        println!(
            "  {}  lhs = {:.6}  rhs = {:.6}  verified = {}",
            v.graph6, v.lhs, v.rhs, v.verified
        );
    }
    if summary.violations.len() > LIST_LIMIT {
        println!("  ... and {} more", summary.violations.len() - LIST_LIMIT);
    }

    println!("equality witnesses: {}", summary.equality_witnesses.len());
    for w in summary.equality_witnesses.iter().take(LIST_LIMIT) {
        println!("  {w}");
    }
    if summary.equality_witnesses.len() > LIST_LIMIT {
        println!(
            "  ... and {} more",
            summary.equality_witnesses.len() - LIST_LIMIT
        );
    }

    if !summary.expected_witnesses.is_empty() || !summary.equality_witnesses.is_empty() {
        let verdict = if summary.equality_witnesses == summary.expected_witnesses {
            "matches the predicted witness set"
        } else {
            "DIFFERS from the predicted witness set"
        };
        println!(
            "expected witnesses: {} ({verdict})",
            summary.expected_witnesses.len()
        );
    }

    if let Some((g6, value)) = &summary.extremal {
        println!("extremal: {g6} (value {value:.6})");
    }
}

fn path_with_suffix(prefix: &Path, suffix: &str) -> PathBuf {
    let mut os = prefix.as_os_str().to_owned();
    os.push(suffix);
    PathBuf::from(os)
}

fn cmd_threshold(args: ThresholdArgs) -> Result<ExitCode> {
    let threshold = moore_threshold(args.k as usize);
    println!("k = {}", args.k);
    println!("l = {}", threshold.l);
    println!("d = {}", threshold.d);
    println!("n0 = {}", threshold.n0);
    if threshold.exact {
        println!("status: exact");
    } else {
        println!("status: upper estimate (binomial bound in place of the exact Ramsey number)");
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_families(args: FamiliesArgs) -> Result<ExitCode> {
    let graphs: Vec<Graph> = if let Some(name) = args.kind.family() {
        match family_spec(name, args.n, args.r) {
            Ok(spec) => vec![spec.build()],
            Err(msg) => return Ok(usage_error(&msg)),
        }
    } else {
        match args.kind {
            CorpusKind::Trees => {
                if !(2..=TREE_ENUM_MAX).contains(&args.n) {
                    return Ok(usage_error(&format!(
                        "--kind trees supports 2 <= n <= {TREE_ENUM_MAX}"
                    )));
                }
                enumerate_trees(args.n)?
            }
            CorpusKind::Connected => {
                if !(1..=CONNECTED_ENUM_MAX).contains(&args.n) {
                    return Ok(usage_error(&format!(
                        "--kind connected supports 1 <= n <= {CONNECTED_ENUM_MAX}"
                    )));
                }
                enumerate_connected_graphs(args.n)?
            }
            _ => unreachable!("parametric kinds handled above"),
        }
    };

    let lines: String = graphs.iter().map(|g| encode_graph6(g) + "\n").collect();
    match &args.output {
        Some(path) => std::fs::write(path, lines)?,
        None => print!("{lines}"),
    }
    Ok(ExitCode::SUCCESS)
}
