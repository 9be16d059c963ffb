//! Command-line front end.
//!
//! Exit codes: 0 success, 1 verification failure, 2 parse error,
//! 3 usage or applicability error, 4 resource cap exceeded.

use std::fs;
use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use nearlyz::extremal::{
    check_second_max, monotonicity_suite, run_identity_suite, run_route_agreement, scan_order,
    verify_lemma_inequalities, verify_max_theorem, verify_min_theorems, verify_table,
    GoldenTable, IdentityConfig, LemmaConfig, VerificationResult, MAX_SCAN_ORDER, MIN_SCAN_ORDER,
};
use nearlyz::oracle::{OracleCap, OracleError, DEFAULT_ORACLE_CAP};
use nearlyz::{
    enumerate_free_trees, enumerate_free_trees_range, free_tree_count, parse_edgelist,
    parse_graph6, sigma1_oracle, to_graph6, z0, z1_recursive, z1_tree_dp, zk_oracle, Graph,
};

const EXIT_VERIFY_FAIL: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_USAGE: u8 = 3;
const EXIT_CAP: u8 = 4;

#[derive(Parser)]
#[command(
    name = "nearlyz",
    about = "Count nearly independent edge subsets, enumerate free trees, scan and verify extremal claims",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute an invariant for every input graph
    Compute(ComputeArgs),
    /// Stream all free trees of one order as graph6 lines
    Enumerate(EnumerateArgs),
    /// Scan all free trees of one order for the Z_1 extremes
    Scan(ScanArgs),
    /// Run a verification suite
    Verify(VerifyArgs),
    /// Print an embedded golden table as CSV
    Tables(TablesArgs),
    /// Emit the line graph of every input graph
    LineGraph(LineGraphArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Invariant {
    Z0,
    Z1,
    Zk,
    Sigma1,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Oracle,
    Recursive,
    Dp,
    Closed,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Graph6,
    Edgelist,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Path,
    Cycle,
    Star,
    Broom3,
}

#[derive(Args)]
struct ComputeArgs {
    /// Which invariant to compute
    #[arg(long, value_enum)]
    invariant: Invariant,
    /// Pair count for zk
    #[arg(long)]
    k: Option<usize>,
    /// Input file, or - for stdin
    #[arg(long, default_value = "-")]
    input: String,
    #[arg(long, value_enum, default_value = "graph6")]
    format: Format,
    /// oracle (exhaustive sweep), recursive, dp (forests only), or
    /// closed (named family, no input file)
    #[arg(long, value_enum)]
    method: Option<Method>,
    /// Family for --method closed
    #[arg(long, value_enum)]
    family: Option<Family>,
    /// Order for --method closed
    #[arg(long)]
    n: Option<usize>,
    /// Override both oracle caps
    #[arg(long)]
    oracle_cap: Option<usize>,
    /// Emit a JSON document instead of plain lines
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct EnumerateArgs {
    /// Tree order
    #[arg(long)]
    n: usize,
    /// Emit only the slice A..B of the stream
    #[arg(long)]
    range: Option<String>,
    /// Write to a file instead of stdout
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args)]
struct ScanArgs {
    /// Tree order
    #[arg(long)]
    n: usize,
    /// Parallel workers
    #[arg(long, default_value = "1")]
    jobs: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// tables | min | max | second-max | lemmas | monotonicity |
    /// identities | all
    #[arg(long)]
    suite: String,
    /// Order range A..B (inclusive ends) for the scan-based suites
    #[arg(long)]
    n_range: Option<String>,
    /// Seed for the sampled suites
    #[arg(long, default_value = "42")]
    seed: u64,
    /// Parallel workers for the scan-based suites
    #[arg(long, default_value = "1")]
    jobs: usize,
}

#[derive(Args)]
struct TablesArgs {
    /// Table order: 9 or 10
    #[arg(long)]
    n: usize,
    /// Write to a file instead of stdout
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args)]
struct LineGraphArgs {
    /// Input file, or - for stdin
    #[arg(long, default_value = "-")]
    input: String,
    #[arg(long, value_enum, default_value = "graph6")]
    format: Format,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Compute(args) => compute(args),
        Command::Enumerate(args) => enumerate(args),
        Command::Scan(args) => scan(args),
        Command::Verify(args) => verify(args),
        Command::Tables(args) => tables(args),
        Command::LineGraph(args) => line_graph(args),
    };
    match code {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError { exit, message }) => {
            eprintln!("error: {message}");
            ExitCode::from(exit)
        }
    }
}

struct CliError {
    exit: u8,
    message: String,
}

fn fail(exit: u8, message: impl Into<String>) -> CliError {
    CliError {
        exit,
        message: message.into(),
    }
}

fn read_input(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut buf = String::new();
        io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| fail(EXIT_PARSE, format!("reading stdin: {e}")))?;
        Ok(buf)
    } else {
        fs::read_to_string(path).map_err(|e| fail(EXIT_PARSE, format!("reading {path}: {e}")))
    }
}

fn parse_graphs(text: &str, format: Format) -> Result<Vec<Graph>, CliError> {
    match format {
        Format::Graph6 => text
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(|l| parse_graph6(l).map_err(|e| fail(EXIT_PARSE, e.to_string())))
            .collect(),
        Format::Edgelist => Ok(vec![
            parse_edgelist(text).map_err(|e| fail(EXIT_PARSE, e.to_string()))?
        ]),
    }
}

/// Cap precedence: --oracle-cap flag, then NEARLYZ_ORACLE_CAP, then
/// the built-in default.
fn resolve_cap(flag: Option<usize>) -> Result<OracleCap, CliError> {
    if let Some(limit) = flag {
        return Ok(OracleCap::uniform(limit));
    }
    match std::env::var("NEARLYZ_ORACLE_CAP") {
        Ok(raw) => {
            let limit: usize = raw.parse().map_err(|_| {
                fail(
                    EXIT_USAGE,
                    format!("NEARLYZ_ORACLE_CAP must be an integer, got {raw:?}"),
                )
            })?;
            Ok(OracleCap::uniform(limit))
        }
        Err(_) => Ok(DEFAULT_ORACLE_CAP),
    }
}

fn parse_range(raw: &str) -> Result<(usize, usize), CliError> {
    let (a, b) = raw
        .split_once("..")
        .ok_or_else(|| fail(EXIT_USAGE, format!("range must look like A..B, got {raw:?}")))?;
    let a = a
        .parse()
        .map_err(|_| fail(EXIT_USAGE, format!("bad range start {a:?}")))?;
    let b = b
        .parse()
        .map_err(|_| fail(EXIT_USAGE, format!("bad range end {b:?}")))?;
    Ok((a, b))
}

fn cap_error(e: OracleError) -> CliError {
    match e {
        OracleError::CapExceeded { .. } => fail(EXIT_CAP, e.to_string()),
        OracleError::Graph(g) => fail(EXIT_USAGE, g.to_string()),
    }
}

fn compute(args: ComputeArgs) -> Result<(), CliError> {
    let cap = resolve_cap(args.oracle_cap)?;
    let values: Vec<String> = if args.method == Some(Method::Closed) {
        let family = args.family.ok_or_else(|| {
            fail(EXIT_USAGE, "--method closed needs --family and --n")
        })?;
        let n = args
            .n
            .ok_or_else(|| fail(EXIT_USAGE, "--method closed needs --n"))?;
        let value = closed_value(args.invariant, family, n)?;
        vec![value]
    } else {
        let graphs = parse_graphs(&read_input(&args.input)?, args.format)?;
        if graphs.is_empty() {
            return Err(fail(EXIT_PARSE, "no graphs in input"));
        }
        graphs
            .iter()
            .map(|g| compute_one(g, &args, cap))
            .collect::<Result<_, _>>()?
    };
    if args.json {
        let doc = serde_json::json!({ "schema": 1, "values": values });
        println!("{}", serde_json::to_string_pretty(&doc).expect("serializes"));
    } else {
        for v in values {
            println!("{v}");
        }
    }
    Ok(())
}

fn closed_value(invariant: Invariant, family: Family, n: usize) -> Result<String, CliError> {
    use nearlyz::closed::*;
    let err = |e: ClosedFormError| fail(EXIT_USAGE, e.to_string());
    let value = match (invariant, family) {
        (Invariant::Z0, Family::Path) => z0_path_closed(n),
        (Invariant::Z1, Family::Path) => z1_path_closed(n),
        (Invariant::Sigma1, Family::Path) => sigma1_path_closed(n),
        (Invariant::Z1, Family::Cycle) => z1_cycle_closed(n).map_err(err)?,
        (Invariant::Sigma1, Family::Cycle) => sigma1_cycle_closed(n).map_err(err)?,
        (Invariant::Z1, Family::Star) => z1_star_closed(n).map_err(err)?,
        (Invariant::Z1, Family::Broom3) => z1_broom3_closed(n).map_err(err)?,
        _ => {
            return Err(fail(
                EXIT_USAGE,
                "no closed form for that invariant/family pair",
            ))
        }
    };
    Ok(value.to_string())
}

fn compute_one(g: &Graph, args: &ComputeArgs, cap: OracleCap) -> Result<String, CliError> {
    let method = args.method;
    let value = match args.invariant {
        Invariant::Zk => {
            let k = args
                .k
                .ok_or_else(|| fail(EXIT_USAGE, "--invariant zk needs --k"))?;
            if matches!(method, Some(Method::Dp) | Some(Method::Recursive)) {
                return Err(fail(EXIT_USAGE, "zk is computed by the oracle only"));
            }
            zk_oracle(g, k, cap).map_err(cap_error)?
        }
        Invariant::Sigma1 => {
            if matches!(method, Some(Method::Dp) | Some(Method::Recursive)) {
                return Err(fail(EXIT_USAGE, "sigma1 is computed by the oracle only"));
            }
            sigma1_oracle(g, cap).map_err(cap_error)?
        }
        Invariant::Z0 => match method {
            Some(Method::Oracle) => zk_oracle(g, 0, cap).map_err(cap_error)?,
            Some(Method::Dp) => nearlyz::forest_z0_z1(g)
                .map_err(|_| fail(EXIT_USAGE, "--method dp needs a forest input"))?
                .0,
            _ => z0(g),
        },
        Invariant::Z1 => match method {
            Some(Method::Oracle) => zk_oracle(g, 1, cap).map_err(cap_error)?,
            Some(Method::Dp) => z1_tree_dp(g)
                .map_err(|_| fail(EXIT_USAGE, "--method dp needs a forest input"))?,
            Some(Method::Recursive) => z1_recursive(g),
            None => {
                if g.is_forest() {
                    z1_tree_dp(g).expect("checked forest")
                } else {
                    z1_recursive(g)
                }
            }
            Some(Method::Closed) => unreachable!("closed handled before parsing input"),
        },
    };
    Ok(value.to_string())
}

fn enumerate(args: EnumerateArgs) -> Result<(), CliError> {
    let stream: Box<dyn Iterator<Item = Graph>> = match &args.range {
        Some(raw) => {
            let (a, b) = parse_range(raw)?;
            let total = free_tree_count(args.n).map_err(|e| fail(EXIT_USAGE, e.to_string()))?;
            if a > b || b > total {
                return Err(fail(
                    EXIT_USAGE,
                    format!("range {a}..{b} out of bounds for {total} trees"),
                ));
            }
            Box::new(
                enumerate_free_trees_range(args.n, a, b)
                    .map_err(|e| fail(EXIT_USAGE, e.to_string()))?,
            )
        }
        None => Box::new(
            enumerate_free_trees(args.n).map_err(|e| fail(EXIT_USAGE, e.to_string()))?,
        ),
    };
    let mut out: Box<dyn Write> = match &args.out {
        Some(path) => Box::new(
            fs::File::create(path)
                .map_err(|e| fail(EXIT_USAGE, format!("creating {path}: {e}")))?,
        ),
        None => Box::new(io::stdout().lock()),
    };
    for tree in stream {
        let line = to_graph6(&tree).expect("enumerated orders encode");
        writeln!(out, "{line}").map_err(|e| fail(EXIT_USAGE, format!("write failed: {e}")))?;
    }
    Ok(())
}

fn scan(args: ScanArgs) -> Result<(), CliError> {
    if !(MIN_SCAN_ORDER..=MAX_SCAN_ORDER).contains(&args.n) {
        return Err(fail(
            EXIT_USAGE,
            format!("scan order must lie in {MIN_SCAN_ORDER}..={MAX_SCAN_ORDER}"),
        ));
    }
    let report = scan_order(args.n, args.jobs.max(1))
        .map_err(|e| fail(EXIT_USAGE, e.to_string()))?;
    // wall time goes to stderr so stdout stays identical across runs
    eprintln!("scanned {} trees in {:?}", report.tree_count, report.elapsed);
    if args.json {
        println!("{}", report.to_json());
    } else {
        print!("{report}");
    }
    Ok(())
}

fn tables(args: TablesArgs) -> Result<(), CliError> {
    let table = GoldenTable::for_order(args.n).map_err(|e| fail(EXIT_USAGE, e.to_string()))?;
    match &args.out {
        Some(path) => fs::write(path, table.csv())
            .map_err(|e| fail(EXIT_USAGE, format!("writing {path}: {e}")))?,
        None => print!("{}", table.csv()),
    }
    Ok(())
}

fn line_graph(args: LineGraphArgs) -> Result<(), CliError> {
    let graphs = parse_graphs(&read_input(&args.input)?, args.format)?;
    for g in &graphs {
        let l = g.line_graph();
        let encoded = to_graph6(&l).map_err(|e| fail(EXIT_USAGE, e.to_string()))?;
        println!("{encoded}");
    }
    Ok(())
}

fn verify(args: VerifyArgs) -> Result<(), CliError> {
    let range = args.n_range.as_deref().map(parse_range).transpose()?;
    let scan_range = |default_lo: usize, default_hi: usize| -> Result<(usize, usize), CliError> {
        let (lo, hi) = range.unwrap_or((default_lo, default_hi));
        if lo < 9 || hi < lo || hi > MAX_SCAN_ORDER {
            return Err(fail(
                EXIT_USAGE,
                format!("order range {lo}..{hi} must satisfy 9 <= lo <= hi <= {MAX_SCAN_ORDER}"),
            ));
        }
        Ok((lo, hi))
    };
    let jobs = args.jobs.max(1);
    let mut results: Vec<VerificationResult> = Vec::new();
    let scan_err = |e: nearlyz::extremal::ScanError| fail(EXIT_USAGE, e.to_string());

    let suites: Vec<&str> = if args.suite == "all" {
        vec![
            "tables",
            "min",
            "max",
            "second-max",
            "lemmas",
            "monotonicity",
            "identities",
        ]
    } else {
        vec![args.suite.as_str()]
    };
    for suite in suites {
        match suite {
            "tables" => {
                for n in [9, 10] {
                    results.push(verify_table(n).map_err(|e| fail(EXIT_USAGE, e.to_string()))?);
                }
            }
            "min" => {
                let (lo, hi) = scan_range(9, 13)?;
                results.push(verify_min_theorems(lo, hi, jobs).map_err(scan_err)?);
            }
            "max" => {
                let (lo, hi) = scan_range(9, 13)?;
                results.push(verify_max_theorem(lo, hi, jobs, args.seed, 50).map_err(scan_err)?);
            }
            "second-max" => {
                let (lo, hi) = scan_range(9, 16)?;
                results.push(check_second_max(lo, hi, jobs).map_err(scan_err)?);
            }
            "lemmas" => {
                results.push(verify_lemma_inequalities(&LemmaConfig::default()));
            }
            "monotonicity" => {
                results.push(monotonicity_suite(args.seed, 500));
            }
            "identities" => {
                let cfg = IdentityConfig {
                    seed: args.seed,
                    ..IdentityConfig::default()
                };
                results.extend(run_identity_suite(&cfg));
                results.push(run_route_agreement(&cfg));
            }
            other => {
                return Err(fail(EXIT_USAGE, format!("unknown suite {other:?}")));
            }
        }
    }
    let mut all_pass = true;
    for r in &results {
        print!("{r}");
        all_pass &= r.passed();
    }
    let (passed, total) = (
        results.iter().filter(|r| r.passed()).count(),
        results.len(),
    );
    println!("{passed}/{total} claims verified");
    if all_pass {
        Ok(())
    } else {
        Err(fail(EXIT_VERIFY_FAIL, "verification failures above"))
    }
}
