//! Command-line front end: compute the irregularity indices of a graph,
//! preview insertion deltas, apply the pinned subdivisions, construct
//! witnesses for target values, enumerate trees, and run the exhaustive
//! and randomized verification campaigns.
//!
//! Exit codes: 0 success, 1 violated precondition or unsupported value,
//! 2 I/O, format or usage errors.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use albertson::codec::{emit_graph6, parse_edge_list, parse_graph6};
use albertson::dynamic::edge_addition_delta;
use albertson::enumerate::{free_trees, verify_trees};
use albertson::family::{construct_family, realize, FamilySpec};
use albertson::invariants::{invariant_report, modified_albertson};
use albertson::sweep::sweep_connected;
use albertson::transform::{neutral_subdivide, subdivide_cubic_edge};
use albertson::verify::{run_all, VerifyConfig, DEFAULT_SEED};
use albertson::{ErrorKind, Graph};

#[derive(Parser)]
#[command(
    name = "albertson",
    version,
    about = "Albertson and degree-square irregularity indices: compute, update, construct, verify"
)]
struct Cli {
    /// Print elapsed wall time to stderr after the command finishes.
    #[arg(long, global = true)]
    timing: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute both indices of one graph.
    Compute(ComputeArgs),
    /// Index delta for inserting one absent edge, without committing it.
    Delta(DeltaArgs),
    /// Apply a +10 cubic-edge subdivision or a neutral subdivision.
    Transform(TransformArgs),
    /// Construct witnesses attaining a target index value.
    Realize(RealizeArgs),
    /// Construct one parameterized family member.
    Family(FamilyArgs),
    /// Enumerate all free trees of one order.
    EnumerateTrees(EnumerateTreesArgs),
    /// Sweep all free trees of one order and report the extremal values.
    VerifyTrees(VerifyTreesArgs),
    /// Exhaustive value spectrum over all connected graphs up to an order.
    Spectrum(SpectrumArgs),
    /// Run every verification campaign and print one line per law.
    VerifyAll(VerifyAllArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum InputFormat {
    G6,
    Edgelist,
}

#[derive(Args)]
struct GraphInput {
    /// Inline graph6 string.
    #[arg(long, value_name = "STR", conflicts_with = "input")]
    graph6: Option<String>,
    /// Path to a graph file.
    #[arg(long, value_name = "PATH", required_unless_present = "graph6")]
    input: Option<PathBuf>,
    /// File format; sniffed from the content when omitted.
    #[arg(long, value_enum)]
    format: Option<InputFormat>,
}

#[derive(Args)]
struct ComputeArgs {
    #[command(flatten)]
    source: GraphInput,
    /// Include the per-edge terms in the report.
    #[arg(long)]
    per_edge: bool,
    /// JSON output (the default).
    #[arg(long, conflicts_with = "csv")]
    json: bool,
    /// CSV output.
    #[arg(long)]
    csv: bool,
}

#[derive(Args)]
struct DeltaArgs {
    #[command(flatten)]
    source: GraphInput,
    #[arg(long)]
    u: usize,
    #[arg(long)]
    v: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum TransformKind {
    /// Subdivide an edge with both endpoints of degree 3 (+10).
    T1,
    /// Index-preserving subdivision (degree-2 endpoint, or pendant edge).
    Neutral,
}

#[derive(Args)]
struct TransformArgs {
    #[command(flatten)]
    source: GraphInput,
    #[arg(long, value_enum)]
    kind: TransformKind,
    #[arg(long)]
    u: usize,
    #[arg(long)]
    v: usize,
    /// Also write the resulting graph6 line to this file.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct RealizeArgs {
    /// Even target value (0, 6, 8, 10, or any even value >= 16).
    #[arg(long)]
    target: u64,
    /// Number of witnesses, of pairwise distinct order.
    #[arg(long)]
    count: usize,
    /// Also write bare graph6 lines to this file.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct FamilyArgs {
    /// Number of +10 subdivision steps.
    #[arg(long)]
    i: usize,
    /// Base variant 0..=4.
    #[arg(long)]
    j: u8,
    /// Requested prism size (grown automatically when steps need more).
    #[arg(long, default_value_t = 3)]
    size: usize,
}

#[derive(Args)]
struct EnumerateTreesArgs {
    #[arg(long)]
    n: usize,
    /// Print one graph6 line per tree instead of the count.
    #[arg(long)]
    emit_graph6: bool,
}

#[derive(Args)]
struct VerifyTreesArgs {
    #[arg(long)]
    n: usize,
}

#[derive(Args)]
struct SpectrumArgs {
    #[arg(long)]
    n_max: usize,
    #[arg(long, default_value_t = 1)]
    workers: usize,
}

#[derive(Args)]
struct VerifyAllArgs {
    /// Largest tree order for the exhaustive tree campaigns.
    #[arg(long, default_value_t = 12)]
    tree_n: usize,
    /// Largest graph order for the exhaustive sweeps.
    #[arg(long, default_value_t = 7)]
    sweep_n: usize,
    /// Seed for the randomized campaigns.
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, default_value_t = 1)]
    workers: usize,
}

enum CliError {
    Graph(albertson::Error),
    Io(PathBuf, std::io::Error),
    /// A verification campaign reported failures.
    ChecksFailed,
}

impl From<albertson::Error> for CliError {
    fn from(e: albertson::Error) -> Self {
        CliError::Graph(e)
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Graph(e) => match e.kind() {
                ErrorKind::Format => 2,
                ErrorKind::Input | ErrorKind::Precondition | ErrorKind::Unsupported => 1,
            },
            CliError::Io(..) => 2,
            CliError::ChecksFailed => 1,
        }
    }

    fn report(&self) {
        match self {
            CliError::Graph(e) => eprintln!("error: {e}"),
            CliError::Io(path, e) => eprintln!("error: {}: {e}", path.display()),
            CliError::ChecksFailed => eprintln!("error: some checks failed"),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    let outcome = run(cli.command);
    if cli.timing {
        eprintln!("elapsed: {:.3?}", started.elapsed());
    }
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            e.report();
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Compute(args) => cmd_compute(args),
        Command::Delta(args) => cmd_delta(args),
        Command::Transform(args) => cmd_transform(args),
        Command::Realize(args) => cmd_realize(args),
        Command::Family(args) => cmd_family(args),
        Command::EnumerateTrees(args) => cmd_enumerate_trees(args),
        Command::VerifyTrees(args) => cmd_verify_trees(args),
        Command::Spectrum(args) => cmd_spectrum(args),
        Command::VerifyAll(args) => cmd_verify_all(args),
    }
}

/// Loads the graph named by the input flags. Duplicate edge-list entries
/// are tolerated with a warning on stderr.
fn load_graph(source: &GraphInput) -> Result<Graph, CliError> {
    if let Some(text) = &source.graph6 {
        return Ok(parse_graph6(text.trim())?);
    }
    let path = source.input.as_ref().expect("clap requires a source");
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(path.clone(), e))?;
    let format = source.format.unwrap_or_else(|| sniff_format(&text));
    match format {
        InputFormat::G6 => {
            let line = text
                .lines()
                .map(str::trim)
                .find(|l| !l.is_empty())
                .unwrap_or("");
            Ok(parse_graph6(line)?)
        }
        InputFormat::Edgelist => {
            let (graph, duplicates) = parse_edge_list(&text)?;
            if duplicates {
                eprintln!(
                    "warning: duplicate edges in {} were dropped",
                    path.display()
                );
            }
            Ok(graph)
        }
    }
}

/// An edge list starts with a line of two decimal integers; anything
/// else is treated as graph6.
fn sniff_format(text: &str) -> InputFormat {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'));
    match first {
        Some(line) => {
            let mut tokens = line.split_ascii_whitespace();
            let two_ints = tokens.next().is_some_and(|t| t.parse::<usize>().is_ok())
                && tokens.next().is_some_and(|t| t.parse::<usize>().is_ok())
                && tokens.next().is_none();
            if two_ints {
                InputFormat::Edgelist
            } else {
                InputFormat::G6
            }
        }
        None => InputFormat::G6,
    }
}

#[derive(Serialize)]
struct ComputeOutput {
    albertson: u64,
    modified: u64,
    max_degree: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    per_edge_terms: Option<Vec<(usize, usize, u64)>>,
}

fn cmd_compute(args: ComputeArgs) -> Result<(), CliError> {
    let graph = load_graph(&args.source)?;
    let report = invariant_report(&graph, args.per_edge);
    let out = ComputeOutput {
        albertson: report.albertson,
        modified: report.modified,
        max_degree: report.max_degree,
        per_edge_terms: report.per_edge_terms,
    };
    if args.csv {
        println!("albertson,modified,max_degree");
        println!("{},{},{}", out.albertson, out.modified, out.max_degree);
        if let Some(terms) = &out.per_edge_terms {
            println!();
            println!("u,v,term");
            for (u, v, term) in terms {
                println!("{u},{v},{term}");
            }
        }
    } else {
        println!("{}", serde_json::to_string(&out).expect("plain data"));
    }
    Ok(())
}

#[derive(Serialize)]
struct DeltaOutput {
    u: usize,
    v: usize,
    before: u64,
    after: u64,
    delta: i64,
}

fn cmd_delta(args: DeltaArgs) -> Result<(), CliError> {
    let graph = load_graph(&args.source)?;
    let delta = edge_addition_delta(&graph, args.u, args.v)?;
    let before = modified_albertson(&graph);
    let out = DeltaOutput {
        u: args.u,
        v: args.v,
        before,
        after: (before as i64 + delta) as u64,
        delta,
    };
    println!("{}", serde_json::to_string(&out).expect("plain data"));
    Ok(())
}

fn cmd_transform(args: TransformArgs) -> Result<(), CliError> {
    let graph = load_graph(&args.source)?;
    let result = match args.kind {
        TransformKind::T1 => subdivide_cubic_edge(&graph, args.u, args.v)?,
        TransformKind::Neutral => neutral_subdivide(&graph, args.u, args.v)?,
    };
    let line = emit_graph6(&result);
    if let Some(path) = &args.out {
        std::fs::write(path, format!("{line}\n")).map_err(|e| CliError::Io(path.clone(), e))?;
    }
    println!("{line}");
    Ok(())
}

fn cmd_realize(args: RealizeArgs) -> Result<(), CliError> {
    let witnesses = realize(args.target, args.count)?;
    let mut file_lines = String::new();
    for (graph, provenance) in witnesses.graphs.iter().zip(&witnesses.provenance) {
        let line = emit_graph6(graph);
        println!(
            "{line}\tvalue={}\torder={}\t{provenance}",
            witnesses.target,
            graph.order()
        );
        file_lines.push_str(&line);
        file_lines.push('\n');
    }
    if let Some(path) = &args.out {
        std::fs::write(path, file_lines).map_err(|e| CliError::Io(path.clone(), e))?;
    }
    Ok(())
}

fn cmd_family(args: FamilyArgs) -> Result<(), CliError> {
    let spec = FamilySpec::new(args.i, args.j, args.size)?;
    let graph = construct_family(&spec)?;
    println!(
        "{}\tvalue={}\torder={}\tfamily(steps={}, variant={}, size={})",
        emit_graph6(&graph),
        spec.predicted_value(),
        graph.order(),
        spec.steps,
        spec.variant,
        spec.effective_size()
    );
    Ok(())
}

fn cmd_enumerate_trees(args: EnumerateTreesArgs) -> Result<(), CliError> {
    if args.emit_graph6 {
        let mut count = 0usize;
        for tree in free_trees(args.n)? {
            println!("{}", emit_graph6(&tree));
            count += 1;
        }
        eprintln!("{count} trees of order {}", args.n);
    } else {
        let count = free_trees(args.n)?.count();
        println!("order={} trees={count}", args.n);
    }
    Ok(())
}

fn cmd_verify_trees(args: VerifyTreesArgs) -> Result<(), CliError> {
    let report = verify_trees(args.n)?;
    println!("order={}", report.order);
    println!("trees={}", report.tree_count);
    println!(
        "min={} min_witnesses={}",
        report.min_value, report.min_witnesses
    );
    println!(
        "max={} max_witnesses={}",
        report.max_value, report.max_witnesses
    );
    println!("bound_violations={}", report.bound_violations.len());
    println!("equality_mismatches={}", report.equality_mismatches.len());
    for g in &report.bound_violations {
        println!("violation\t{}", emit_graph6(g));
    }
    for g in &report.equality_mismatches {
        println!("mismatch\t{}", emit_graph6(g));
    }

    let star_value = {
        let d = (report.order - 1) as u64;
        d * (d * d - 1)
    };
    let clean = report.bound_violations.is_empty()
        && report.equality_mismatches.is_empty()
        && report.min_value == 6
        && report.min_witnesses == 1
        && report.max_value == star_value
        && report.max_witnesses == 1;
    if clean {
        Ok(())
    } else {
        Err(CliError::ChecksFailed)
    }
}

fn cmd_spectrum(args: SpectrumArgs) -> Result<(), CliError> {
    let report = sweep_connected(args.n_max, args.workers)?;
    println!("max_order={}", report.max_order);
    println!("attained={}", join(&report.attained));
    println!("odd_values={}", join(&report.odd_values));
    println!("gap_values={}", join(&report.gap_values));
    Ok(())
}

fn join<'a>(values: impl IntoIterator<Item = &'a u64>) -> String {
    values
        .into_iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn cmd_verify_all(args: VerifyAllArgs) -> Result<(), CliError> {
    let cfg = VerifyConfig {
        tree_max: args.tree_n,
        sweep_max: args.sweep_n,
        seed: args.seed,
        workers: args.workers,
    };
    let results = run_all(&cfg)?;
    let mut all_passed = true;
    for r in &results {
        println!(
            "{} {}: {}",
            if r.passed { "PASS" } else { "FAIL" },
            r.name,
            r.detail
        );
        all_passed &= r.passed;
    }
    println!(
        "{}/{} checks passed",
        results.iter().filter(|r| r.passed).count(),
        results.len()
    );
    if all_passed {
        Ok(())
    } else {
        Err(CliError::ChecksFailed)
    }
}
