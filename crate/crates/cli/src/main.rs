//! `circulant` — exact invariants and claim verification for independence
//! complexes of circulant graphs.
//!
//! Three subcommands:
//!
//! * `analyze` — full invariant report for a single instance `C_n(S)`.
//! * `verify`  — check one claim across a range of instances, one record per
//!   instance plus a summary; exits nonzero iff a check fails.
//! * `sweep`   — emit one invariant record per `(n, S)` pair over a range.
//!
//! Output is a human-readable report when stdout is a terminal and JSON Lines
//! otherwise (or whenever `--json` / `-o` is given). Records are emitted in a
//! canonical order — ascending `n`, then connection sets by bitmask value —
//! regardless of how many worker threads computed them, so identical
//! invocations produce byte-identical output.

mod report;

use circulant_invariants::arith::is_prime;
use circulant_invariants::circulant::enumerate_specs;
use circulant_invariants::complex::DEFAULT_MAX_FACES;
use circulant_invariants::invariants::DEFAULT_MAX_BETTI_GROUND;
use circulant_invariants::{verify_instance, CirculantSpec, Claim, FieldSpec, VerifyContext};
use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use report::{build_analysis, Analysis, Caps, CliError, InstanceRecord, VerifyRecord};
use std::fs::File;
use std::io::{self, BufWriter, IsTerminal, Write};
use std::path::PathBuf;
use std::process::ExitCode;

/// Environment variable consulted when `--max-faces` is not given.
const MAX_FACES_ENV: &str = "CIRCULANT_MAX_FACES";

#[derive(Parser)]
#[command(
    name = "circulant",
    version,
    about = "Exact invariants of Stanley-Reisner rings of circulant independence complexes"
)]
struct Cli {
    /// Worker threads for ranged commands (default: all cores)
    #[arg(long, global = true, value_name = "N")]
    workers: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report every invariant of a single instance C_n(S)
    Analyze(AnalyzeArgs),
    /// Check one claim across a range of instances
    Verify(VerifyArgs),
    /// Emit one invariant record per connection set over a range of orders
    Sweep(SweepArgs),
}

#[derive(Args)]
struct CommonOpts {
    /// Coefficient field: "q" for the rationals or "p:N" for a prime field
    #[arg(long, default_value = "q", value_name = "FIELD")]
    field: String,

    /// Fold Hochster sums along the dihedral symmetry (the default)
    #[arg(long, conflicts_with = "no_symmetry")]
    symmetry: bool,

    /// Evaluate every vertex subset without symmetry folding
    #[arg(long)]
    no_symmetry: bool,

    /// Cap on faces enumerated per complex (env CIRCULANT_MAX_FACES)
    #[arg(long, value_name = "COUNT")]
    max_faces: Option<usize>,

    /// Cap on the ground-set size for Betti table computations
    #[arg(long, default_value_t = DEFAULT_MAX_BETTI_GROUND, value_name = "N")]
    max_betti_n: usize,

    /// Force JSON Lines output (automatic when stdout is not a terminal)
    #[arg(long)]
    json: bool,

    /// Write JSON Lines output to a file instead of stdout
    #[arg(short, long, value_name = "PATH")]
    output: Option<PathBuf>,
}

impl CommonOpts {
    fn field_spec(&self) -> Result<FieldSpec, CliError> {
        parse_field(&self.field)
    }

    fn symmetry_enabled(&self) -> bool {
        !self.no_symmetry
    }

    fn caps(&self) -> Result<Caps, CliError> {
        let max_faces = match self.max_faces {
            Some(v) => v,
            None => match std::env::var(MAX_FACES_ENV) {
                Ok(raw) => raw.parse().map_err(|_| {
                    CliError::Usage(format!(
                        "{MAX_FACES_ENV} must be a positive integer, got {raw:?}"
                    ))
                })?,
                Err(_) => DEFAULT_MAX_FACES,
            },
        };
        Ok(Caps {
            max_faces,
            max_betti_n: self.max_betti_n,
        })
    }

    fn json_output(&self) -> bool {
        self.json || self.output.is_some() || !io::stdout().is_terminal()
    }
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Number of vertices
    #[arg(long)]
    n: usize,

    /// Comma-separated connection set; pass "" for the empty set
    #[arg(long, value_name = "LIST")]
    s: String,

    /// Also compute the Betti table and the homological report
    #[arg(long)]
    betti: bool,

    #[command(flatten)]
    common: CommonOpts,
}

/// Selects which orders a ranged command visits. Exactly one is required.
#[derive(Args)]
#[group(required = true, multiple = false)]
struct OrderSelection {
    /// A single order n
    #[arg(long)]
    n: Option<usize>,

    /// Every order from 2 through N
    #[arg(long, value_name = "N")]
    n_max: Option<usize>,

    /// An explicit comma-separated list of orders
    #[arg(long, value_name = "LIST")]
    n_list: Option<String>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Claim to check: lem2.2, thm2.3, cor2.5, lem3.2, thm3.6, thm4.1,
    /// thm4.2, thm4.3, cor4.6, or conj-euler
    claim: String,

    #[command(flatten)]
    orders: OrderSelection,

    /// Restrict to one exact connection set (comma-separated; "" for empty)
    #[arg(long, value_name = "LIST")]
    s: Option<String>,

    /// Keep only prime orders
    #[arg(long, conflicts_with = "composite_only")]
    prime_only: bool,

    /// Keep only composite orders
    #[arg(long)]
    composite_only: bool,

    #[command(flatten)]
    common: CommonOpts,
}

#[derive(Args)]
struct SweepArgs {
    #[command(flatten)]
    orders: OrderSelection,

    /// Skip Betti tables and the homological report (much faster)
    #[arg(long)]
    no_betti: bool,

    /// Keep only prime orders
    #[arg(long, conflicts_with = "composite_only")]
    prime_only: bool,

    /// Keep only composite orders
    #[arg(long)]
    composite_only: bool,

    #[command(flatten)]
    common: CommonOpts,
}

fn main() -> ExitCode {
    let cli = Cli::parse();

    if let Some(workers) = cli.workers {
        if workers == 0 {
            eprintln!("error: --workers must be at least 1");
            return ExitCode::from(2);
        }
        // Build the global pool before any parallel work; failure here can
        // only mean the pool already exists, which keeps the default.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build_global();
    }

    let outcome = match cli.command {
        Command::Analyze(args) => cmd_analyze(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Sweep(args) => cmd_sweep(args),
    };

    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}

fn parse_field(raw: &str) -> Result<FieldSpec, CliError> {
    if raw.eq_ignore_ascii_case("q") {
        return Ok(FieldSpec::Rationals);
    }
    if let Some(rest) = raw.strip_prefix("p:") {
        let p: u64 = rest.parse().map_err(|_| {
            CliError::Usage(format!("invalid field {raw:?}: expected p:<prime>"))
        })?;
        return FieldSpec::prime(p).map_err(|e| CliError::Usage(format!("invalid field: {e}")));
    }
    Err(CliError::Usage(format!(
        "invalid field {raw:?}: expected \"q\" or \"p:<prime>\""
    )))
}

fn parse_connections(raw: &str) -> Result<Vec<usize>, CliError> {
    raw.split(',')
        .filter(|part| !part.is_empty())
        .map(|part| {
            part.trim()
                .parse::<usize>()
                .map_err(|_| CliError::Usage(format!("invalid connection {part:?} in --s")))
        })
        .collect()
}

fn parse_order_list(raw: &str) -> Result<Vec<usize>, CliError> {
    raw.split(',')
        .filter(|part| !part.is_empty())
        .map(|part| {
            part.trim()
                .parse::<usize>()
                .map_err(|_| CliError::Usage(format!("invalid order {part:?} in --n-list")))
        })
        .collect()
}

fn resolve_orders(selection: &OrderSelection) -> Result<Vec<usize>, CliError> {
    let mut orders: Vec<usize> = if let Some(n) = selection.n {
        vec![n]
    } else if let Some(n_max) = selection.n_max {
        (2..=n_max).collect()
    } else if let Some(raw) = &selection.n_list {
        parse_order_list(raw)?
    } else {
        unreachable!("clap enforces exactly one order selector");
    };
    orders.sort_unstable();
    orders.dedup();
    for &n in &orders {
        if !(2..=64).contains(&n) {
            return Err(CliError::Usage(format!(
                "order {n} is out of range; supported orders are 2 through 64"
            )));
        }
    }
    Ok(orders)
}

/// Every instance over the given orders, in canonical order: ascending `n`,
/// then connection sets by ascending bitmask value.
fn instances(
    orders: &[usize],
    prime_only: bool,
    composite_only: bool,
) -> Vec<CirculantSpec> {
    orders
        .iter()
        .filter(|&&n| {
            if prime_only {
                is_prime(n)
            } else if composite_only {
                !is_prime(n)
            } else {
                true
            }
        })
        .flat_map(|&n| enumerate_specs(n))
        .collect()
}

/// Where records go: stdout or the `-o` file.
enum Sink {
    Stdout(io::Stdout),
    File(BufWriter<File>),
}

impl Sink {
    fn open(path: &Option<PathBuf>) -> Result<Self, CliError> {
        match path {
            Some(p) => {
                let file = File::create(p).map_err(|e| {
                    CliError::Io(format!("cannot write {}: {e}", p.display()))
                })?;
                Ok(Sink::File(BufWriter::new(file)))
            }
            None => Ok(Sink::Stdout(io::stdout())),
        }
    }

    fn write_line(&mut self, line: &str) -> Result<(), CliError> {
        let result = match self {
            Sink::Stdout(out) => writeln!(out, "{line}"),
            Sink::File(out) => writeln!(out, "{line}"),
        };
        result.map_err(|e| CliError::Io(format!("write failed: {e}")))
    }

    fn finish(self) -> Result<(), CliError> {
        if let Sink::File(mut out) = self {
            out.flush()
                .map_err(|e| CliError::Io(format!("write failed: {e}")))?;
        }
        Ok(())
    }
}

fn to_json(value: &impl serde::Serialize) -> String {
    serde_json::to_string(value).expect("record serialization cannot fail")
}

fn cmd_analyze(args: AnalyzeArgs) -> Result<u8, CliError> {
    let connections = parse_connections(&args.s)?;
    let spec = CirculantSpec::new(args.n, connections)
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let field = args.common.field_spec()?;
    let caps = args.common.caps()?;

    let analysis: Analysis = build_analysis(
        &spec,
        field,
        args.betti,
        args.common.symmetry_enabled(),
        caps,
    )?;

    let mut sink = Sink::open(&args.common.output)?;
    if args.common.json_output() {
        sink.write_line(&to_json(&analysis.record))?;
    } else {
        let rendered = report::render_analysis(&analysis);
        for line in rendered.lines() {
            sink.write_line(line)?;
        }
    }
    sink.finish()?;
    Ok(0)
}

fn cmd_verify(args: VerifyArgs) -> Result<u8, CliError> {
    let claim: Claim = args.claim.parse().map_err(|_| {
        let ids = Claim::ALL
            .iter()
            .map(|c| c.id())
            .collect::<Vec<_>>()
            .join(", ");
        CliError::Usage(format!(
            "unknown claim {:?}; expected one of: {ids}",
            args.claim
        ))
    })?;
    let orders = resolve_orders(&args.orders)?;
    let mut specs = instances(&orders, args.prime_only, args.composite_only);
    if let Some(raw) = &args.s {
        let mut wanted = parse_connections(raw)?;
        wanted.sort_unstable();
        wanted.dedup();
        specs.retain(|spec| spec.connections() == wanted);
    }
    let ctx = VerifyContext {
        field: args.common.field_spec()?,
        use_symmetry: args.common.symmetry_enabled(),
        ..VerifyContext::default()
    };
    let caps = args.common.caps()?;
    let ctx = VerifyContext {
        max_faces: caps.max_faces,
        max_betti_ground: caps.max_betti_n,
        ..ctx
    };

    let results: Vec<VerifyRecord> = specs
        .par_iter()
        .map(|spec| {
            verify_instance(claim, spec, &ctx).map(|result| VerifyRecord {
                claim: claim.id().to_string(),
                n: spec.n(),
                s: spec.connections().to_vec(),
                status: result.status.to_string(),
                witness: result.witness,
            })
        })
        .collect::<Result<_, _>>()?;

    let mut holds = 0usize;
    let mut fails = 0usize;
    let mut inapplicable = 0usize;
    for record in &results {
        match record.status.as_str() {
            "holds" => holds += 1,
            "fails" => fails += 1,
            _ => inapplicable += 1,
        }
    }
    let summary = format!(
        "summary: claim {} on {} instances: {} holds, {} fails, {} inapplicable",
        claim.id(),
        results.len(),
        holds,
        fails,
        inapplicable
    );

    let json = args.common.json_output();
    let mut sink = Sink::open(&args.common.output)?;
    for record in &results {
        if json {
            sink.write_line(&to_json(record))?;
        } else {
            sink.write_line(&report::render_verify_row(record))?;
        }
    }
    sink.finish()?;
    if json {
        eprintln!("{summary}");
    } else {
        println!("{summary}");
    }

    // A counterexample search reports findings without failing the run;
    // every other claim turns failures into a nonzero exit.
    if fails > 0 && claim != Claim::EulerNonvanishing {
        Ok(1)
    } else {
        Ok(0)
    }
}

fn cmd_sweep(args: SweepArgs) -> Result<u8, CliError> {
    let orders = resolve_orders(&args.orders)?;
    let specs = instances(&orders, args.prime_only, args.composite_only);
    let field = args.common.field_spec()?;
    let caps = args.common.caps()?;
    let symmetry = args.common.symmetry_enabled();
    let want_betti = !args.no_betti;

    let records: Vec<InstanceRecord> = specs
        .par_iter()
        .map(|spec| build_analysis(spec, field, want_betti, symmetry, caps).map(|a| a.record))
        .collect::<Result<_, _>>()?;

    let json = args.common.json_output();
    let mut sink = Sink::open(&args.common.output)?;
    for record in &records {
        if json {
            sink.write_line(&to_json(record))?;
        } else {
            sink.write_line(&report::render_sweep_row(record))?;
        }
    }
    sink.finish()?;
    Ok(0)
}
