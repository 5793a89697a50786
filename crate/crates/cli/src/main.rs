//! Command-line front end: enumerates ballot paths, lattices, and intervals,
//! prints character tables, expands the interval-counting series, and runs
//! the verification suites.
//!
//! Exit codes: 0 on success, 1 when a verification check fails, 2 on bad
//! arguments or runtime errors.  All results go to stdout; timing goes to
//! stderr so output can be piped or compared verbatim.

use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Result};
use clap::{Parser, Subcommand, ValueEnum};
use num::BigInt;
use serde_json::json;

use tamari_core::action::{labelled_interval_count, prime_counts, CharacterTable};
use tamari_core::engine::functional::iterate;
use tamari_core::formulas::ballot_count_formula;
use tamari_core::verify::{run_criteria, Suite, CRITERION_COUNT};
use tamari_core::{BallotPath, Series, TamariLattice};

const SCHEMA: &str = "tamari/1";

/// Lattice sizes past this need --force; everything is held in memory.
const NODE_GUARD: u64 = 50_000;

#[derive(Parser)]
#[command(
    name = "tamari",
    version,
    about = "Exact computations in m-Tamari lattices: paths, intervals, characters, series"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Spec {
    /// Keep one weight variable per cycle length.
    Generic,
    /// Set every weight to 1: counts unlabelled intervals.
    Ones,
    /// Keep only the length-1 weight: counts labelled intervals over n!.
    Parking,
}

#[derive(Subcommand)]
enum Command {
    /// List or count the ballot paths of slope m and size n.
    Paths {
        #[arg(short)]
        m: usize,
        #[arg(short)]
        n: usize,
        /// Print only the number of paths.
        #[arg(long)]
        count: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Proceed even when the enumeration is large.
        #[arg(long)]
        force: bool,
    },
    /// Print the rotation lattice on ballot paths: nodes and cover relation.
    Lattice {
        #[arg(short)]
        m: usize,
        #[arg(short)]
        n: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        force: bool,
    },
    /// List or count the intervals of the lattice.
    Intervals {
        #[arg(short)]
        m: usize,
        #[arg(short)]
        n: usize,
        /// Print interval, labelled, and prime counts instead of the list.
        #[arg(long)]
        count: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        force: bool,
    },
    /// Fixed-point counts of the relabelling action, one row per cycle type.
    CharacterTable {
        #[arg(short)]
        m: usize,
        #[arg(short)]
        n: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        force: bool,
    },
    /// Expand the interval-counting series to a given order in t.
    Series {
        #[arg(short)]
        m: usize,
        /// Truncation order: coefficients of t^0 through t^N.
        #[arg(short = 'N', long = "order")]
        order: usize,
        #[arg(long, value_enum, default_value = "generic")]
        spec: Spec,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run the verification suites and report pass/fail per criterion.
    Verify {
        /// Suite to run; see --list for the names.
        #[arg(long, default_value = "all", conflicts_with = "criterion")]
        suite: String,
        /// Run a single criterion by number (1-9).
        #[arg(long)]
        criterion: Option<usize>,
        /// Worker threads for independent criteria.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// List the suites and their criteria, then exit.
        #[arg(long)]
        list: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let code = match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    };
    eprintln!("elapsed: {:?}", start.elapsed());
    code
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Paths {
            m,
            n,
            count,
            format,
            force,
        } => cmd_paths(m, n, count, format, force),
        Command::Lattice { m, n, format, force } => cmd_lattice(m, n, format, force),
        Command::Intervals {
            m,
            n,
            count,
            format,
            force,
        } => cmd_intervals(m, n, count, format, force),
        Command::CharacterTable { m, n, format, force } => {
            cmd_character_table(m, n, format, force)
        }
        Command::Series {
            m,
            order,
            spec,
            format,
        } => cmd_series(m, order, spec, format),
        Command::Verify {
            suite,
            criterion,
            jobs,
            list,
            format,
        } => cmd_verify(&suite, criterion, jobs, list, format),
    }
}

fn no_dot(format: Format, what: &str) -> Result<()> {
    if format == Format::Dot {
        bail!("dot output is only available for the lattice, not {what}");
    }
    Ok(())
}

/// Refuses oversized enumerations unless --force is given.
fn guard_size(m: usize, n: usize, force: bool) -> Result<()> {
    let nodes = ballot_count_formula(m, n)?;
    if !force && nodes > BigInt::from(NODE_GUARD) {
        bail!(
            "m={m}, n={n} has {nodes} paths (> {NODE_GUARD}); pass --force to proceed"
        );
    }
    Ok(())
}

fn cmd_paths(m: usize, n: usize, count: bool, format: Format, force: bool) -> Result<ExitCode> {
    no_dot(format, "paths")?;
    if count {
        let total = ballot_count_formula(m, n)?;
        match format {
            Format::Json => print_json(&json!({
                "schema": SCHEMA,
                "command": "paths",
                "m": m, "n": n,
                "count": total.to_string(),
            })),
            _ => println!("{total}"),
        }
        return Ok(ExitCode::SUCCESS);
    }
    guard_size(m, n, force)?;
    let paths = BallotPath::enumerate(m, n);
    match format {
        Format::Json => print_json(&json!({
            "schema": SCHEMA,
            "command": "paths",
            "m": m, "n": n,
            "count": paths.len(),
            "paths": paths.iter().map(|p| p.word()).collect::<Vec<_>>(),
        })),
        _ => {
            for p in &paths {
                println!("{}", p.word());
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_lattice(m: usize, n: usize, format: Format, force: bool) -> Result<ExitCode> {
    guard_size(m, n, force)?;
    let lat = TamariLattice::build(m, n, None)?;
    match format {
        Format::Dot => print!("{}", lat.to_dot()),
        Format::Json => {
            let mut value = lat.to_json();
            let obj = value.as_object_mut().expect("lattice serializes to an object");
            obj.insert("schema".into(), json!(SCHEMA));
            obj.insert("command".into(), json!("lattice"));
            print_json(&value);
        }
        Format::Text => {
            println!(
                "m={m} n={n}: {} nodes, {} intervals",
                lat.node_count(),
                lat.interval_count()
            );
            for i in 0..lat.node_count() {
                let ups: Vec<String> = lat
                    .covers(i)
                    .iter()
                    .map(|&j| lat.path(j).word())
                    .collect();
                println!("{} -> {}", lat.path(i).word(), ups.join(" "));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_intervals(
    m: usize,
    n: usize,
    count: bool,
    format: Format,
    force: bool,
) -> Result<ExitCode> {
    no_dot(format, "intervals")?;
    guard_size(m, n, force)?;
    let lat = TamariLattice::build(m, n, None)?;
    if count {
        let labelled = labelled_interval_count(&lat);
        let (prime_labelled, prime_unlabelled) = prime_counts(&lat);
        match format {
            Format::Json => print_json(&json!({
                "schema": SCHEMA,
                "command": "intervals",
                "m": m, "n": n,
                "intervals": lat.interval_count(),
                "labelled": labelled.to_string(),
                "prime": prime_unlabelled.to_string(),
                "prime_labelled": prime_labelled.to_string(),
            })),
            _ => {
                println!("intervals: {}", lat.interval_count());
                println!("labelled: {labelled}");
                println!("prime: {prime_unlabelled}");
                println!("prime labelled: {prime_labelled}");
            }
        }
        return Ok(ExitCode::SUCCESS);
    }
    let pairs = lat.intervals();
    match format {
        Format::Json => print_json(&json!({
            "schema": SCHEMA,
            "command": "intervals",
            "m": m, "n": n,
            "count": pairs.len(),
            "intervals": pairs
                .iter()
                .map(|&(i, j)| json!([lat.path(i).word(), lat.path(j).word()]))
                .collect::<Vec<_>>(),
        })),
        _ => {
            for &(i, j) in &pairs {
                println!("{} <= {}", lat.path(i).word(), lat.path(j).word());
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_character_table(m: usize, n: usize, format: Format, force: bool) -> Result<ExitCode> {
    no_dot(format, "character tables")?;
    guard_size(m, n, force)?;
    let lat = TamariLattice::build(m, n, None)?;
    let table = CharacterTable::compute(&lat)?;
    match format {
        Format::Json => {
            let mut value = table.to_json();
            let obj = value.as_object_mut().expect("table serializes to an object");
            obj.insert("schema".into(), json!(SCHEMA));
            obj.insert("command".into(), json!("character-table"));
            print_json(&value);
        }
        _ => print!("{}", table.to_text()),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_series(m: usize, order: usize, spec: Spec, format: Format) -> Result<ExitCode> {
    no_dot(format, "series")?;
    if m == 0 {
        bail!("the slope m must be at least 1");
    }
    let full = iterate(m, order);
    let series = match spec {
        Spec::Generic => full,
        Spec::Ones => full.map(|c| c.specialize_p_ones()),
        Spec::Parking => full.map(|c| c.specialize_p_parking()),
    };
    match format {
        Format::Json => {
            let mut value = series.to_json();
            let obj = value.as_object_mut().expect("series serializes to an object");
            obj.insert("schema".into(), json!(SCHEMA));
            obj.insert("command".into(), json!("series"));
            obj.insert("m".into(), json!(m));
            obj.insert("spec".into(), json!(spec_name(spec)));
            print_json(&value);
        }
        _ => print_series_text(&series),
    }
    Ok(ExitCode::SUCCESS)
}

fn spec_name(spec: Spec) -> &'static str {
    match spec {
        Spec::Generic => "generic",
        Spec::Ones => "ones",
        Spec::Parking => "parking",
    }
}

fn print_series_text(series: &Series) {
    for k in 0..=series.order() {
        println!("{}^{k}: {}", series.var, series.coeff(k));
    }
}

fn cmd_verify(
    suite: &str,
    criterion: Option<usize>,
    jobs: usize,
    list: bool,
    format: Format,
) -> Result<ExitCode> {
    no_dot(format, "verification results")?;
    if list {
        for s in Suite::ALL {
            let ids: Vec<String> = s.criteria().iter().map(|id| id.to_string()).collect();
            println!("{}: criteria {}", s.name(), ids.join(", "));
        }
        return Ok(ExitCode::SUCCESS);
    }
    let ids: Vec<usize> = match criterion {
        Some(id) => {
            if !(1..=CRITERION_COUNT).contains(&id) {
                bail!("criterion number must be 1..={CRITERION_COUNT}, got {id}");
            }
            vec![id]
        }
        None => {
            let Some(s) = Suite::parse(suite) else {
                let names: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
                bail!("unknown suite {suite:?}; expected one of {}", names.join(", "));
            };
            s.criteria().to_vec()
        }
    };
    let results = run_criteria(&ids, jobs);
    let mut all_passed = true;
    match format {
        Format::Json => {
            let rows: Vec<serde_json::Value> = ids
                .iter()
                .zip(&results)
                .map(|(id, r)| {
                    all_passed &= r.passed;
                    json!({
                        "criterion": id,
                        "name": r.name,
                        "passed": r.passed,
                        "details": r.details,
                    })
                })
                .collect();
            print_json(&json!({
                "schema": SCHEMA,
                "command": "verify",
                "passed": rows.iter().all(|r| r["passed"] == json!(true)),
                "results": rows,
            }));
        }
        _ => {
            for (id, r) in ids.iter().zip(&results) {
                all_passed &= r.passed;
                let status = if r.passed { "PASS" } else { "FAIL" };
                println!("{status} criterion {id}: {} — {}", r.name, r.details);
            }
        }
    }
    Ok(if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn print_json(value: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(value).expect("valid JSON tree"));
}
