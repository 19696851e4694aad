//! `mc-choice`: generate, check, and invert two-stage minimal-compromise
//! choice tables.
//!
//! Exit statuses: 0 success / all conditions pass; 1 data-property failure
//! (a condition is violated or no representation exists); 2 input error;
//! 3 internal defect (the characterization contradicted — a bug).

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use mc_core::axioms;
use mc_core::dataset::{parse_dataset, to_canonical_json, ChoiceDataset};
use mc_core::engine::generate;
use mc_core::model::Universe;
use mc_core::oracle::{
    brute_force_rationalize, brute_force_representations, characterization_sweep, SweepMode,
    SweepReport,
};
use mc_core::recovery::{recover, RecoveryError};
use mc_core::report::{report_json, report_text, witness_json};
use mc_core::text::{format_linear_order, format_weak_order, parse_linear_order, parse_weak_order};

const EXIT_OK: u8 = 0;
const EXIT_DATA: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_DEFECT: u8 = 3;

#[derive(Parser)]
#[command(
    name = "mc-choice",
    about = "Two-stage minimal-compromise choice: generate tables, check axioms, recover preferences, verify by brute force",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct InputArgs {
    /// Dataset file to read
    #[arg(long = "in", value_name = "FILE")]
    input: PathBuf,
}

#[derive(Subcommand)]
enum Command {
    /// Generate the full choice table of a preference pair as a dataset
    Generate {
        /// First-stage weak order, e.g. "x,y > z" (x ties y, both above z)
        #[arg(long)]
        weak_order: String,
        /// Second-stage veto order, e.g. "x > y > z"
        #[arg(long)]
        linear_order: String,
        /// Universe as comma-separated labels; defaults to the alternatives
        /// of --weak-order in order of first appearance
        #[arg(long)]
        labels: Option<String>,
        /// Output file; stdout when omitted
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a dataset against the axioms and the characterizing conditions
    Check {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Recover a representing preference pair from a dataset
    Recover {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// List every representation found by exhaustive search
    Oracle {
        #[command(flatten)]
        input: InputArgs,
        /// All representing (weak order, veto order) pairs (default)
        #[arg(long, conflicts_with = "rational")]
        all: bool,
        /// All weak orders whose plain maximisation matches instead
        #[arg(long)]
        rational: bool,
    },
    /// Sweep a census checking conditions, search, and recovery agree
    Sweep {
        /// Universe size (sweeps are desk-scale: n ≤ 4)
        #[arg(long)]
        n: u8,
        /// Scan the entire census; default for n ≤ 3, required explicitly
        /// for the 26M-table n = 4 census
        #[arg(long, conflicts_with = "sample")]
        exhaustive: bool,
        /// Scan COUNT seeded-random tables instead
        #[arg(long, value_name = "COUNT")]
        sample: Option<u64>,
        /// Seed for --sample
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Worker threads; the report does not depend on this
        #[arg(long, default_value_t = 1)]
        shards: usize,
    },
}

fn read_dataset(path: &PathBuf) -> Result<ChoiceDataset> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("cannot read {}", path.display()))?;
    parse_dataset(&text).with_context(|| format!("invalid dataset {}", path.display()))
}

fn labels_of_expression(expr: &str) -> Vec<String> {
    let mut labels: Vec<String> = Vec::new();
    for class in expr.split('>') {
        for raw in class.split(',') {
            let label = raw.trim();
            if !label.is_empty() && !labels.iter().any(|l| l == label) {
                labels.push(label.to_owned());
            }
        }
    }
    labels
}

fn run_generate(
    weak_order: &str,
    linear_order: &str,
    labels: Option<&str>,
    out: Option<&PathBuf>,
) -> Result<u8> {
    let labels: Vec<String> = match labels {
        Some(l) => l.split(',').map(|s| s.trim().to_owned()).collect(),
        None => labels_of_expression(weak_order),
    };
    let universe = Universe::new(labels)?;
    let weak = parse_weak_order(weak_order, &universe)
        .map_err(|e| anyhow!("--weak-order: {e}"))?;
    let linear = parse_linear_order(linear_order, &universe)
        .map_err(|e| anyhow!("--linear-order: {e}"))?;
    let ds = ChoiceDataset {
        correspondence: generate(&weak, &linear),
        universe,
    };
    let json = to_canonical_json(&ds);
    match out {
        Some(path) => fs::write(path, json + "\n")
            .with_context(|| format!("cannot write {}", path.display()))?,
        None => println!("{json}"),
    }
    Ok(EXIT_OK)
}

fn run_check(input: &InputArgs, format: Format) -> Result<u8> {
    let ds = read_dataset(&input.input)?;
    let report = axioms::check_all(&ds.correspondence);
    match format {
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&report_json(&report, &ds.universe))?
        ),
        Format::Text => print!("{}", report_text(&report, &ds.universe)),
    }
    Ok(if report.conditions_pass() {
        EXIT_OK
    } else {
        EXIT_DATA
    })
}

fn run_recover(input: &InputArgs, format: Format) -> Result<u8> {
    let ds = read_dataset(&input.input)?;
    let menu_count = ds.correspondence.menus().count();
    match recover(&ds.correspondence) {
        Ok((weak, linear)) => {
            let w = format_weak_order(&weak, &ds.universe);
            let l = format_linear_order(&linear, &ds.universe);
            match format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&serde_json::json!({
                        "outcome": "success",
                        "weak_order": w,
                        "linear_order": l,
                        "regenerated_menus": menu_count,
                    }))?
                ),
                Format::Text => {
                    println!("weak order:   {w}");
                    println!("linear order: {l}");
                    println!("regeneration: exact match on all {menu_count} menus");
                }
            }
            Ok(EXIT_OK)
        }
        Err(RecoveryError::Condition(w)) => {
            match format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&serde_json::json!({
                        "outcome": "condition_failed",
                        "condition": w.axiom.key(),
                        "witness": witness_json(&w, &ds.universe),
                    }))?
                ),
                Format::Text => {
                    println!("condition violated: {}", w.axiom);
                    println!("witness: {}", w.describe(&ds.universe));
                }
            }
            Ok(EXIT_DATA)
        }
        Err(RecoveryError::Internal(defect)) => {
            eprintln!("internal defect: {defect}");
            Ok(EXIT_DEFECT)
        }
    }
}

fn run_oracle(input: &InputArgs, rational: bool) -> Result<u8> {
    let ds = read_dataset(&input.input)?;
    if rational {
        let orders = brute_force_rationalize(&ds.correspondence);
        println!("rationalizing weak orders: {}", orders.len());
        for w in &orders {
            println!("  {}", format_weak_order(w, &ds.universe));
        }
        Ok(if orders.is_empty() { EXIT_DATA } else { EXIT_OK })
    } else {
        let pairs = brute_force_representations(&ds.correspondence);
        println!("representing pairs: {}", pairs.len());
        for (w, l) in &pairs {
            println!(
                "  R = {}   L = {}",
                format_weak_order(w, &ds.universe),
                format_linear_order(l, &ds.universe)
            );
        }
        Ok(if pairs.is_empty() { EXIT_DATA } else { EXIT_OK })
    }
}

fn print_sweep_report(report: &SweepReport) {
    let mode = match report.mode {
        SweepMode::Exhaustive => "exhaustive".to_owned(),
        SweepMode::Sample { count, seed } => format!("sample(count={count}, seed={seed})"),
    };
    println!("universe size:       {}", report.n);
    println!("mode:                {mode}");
    println!("tables scanned:      {}", report.scanned);
    println!("conditions 1-5 pass: {}", report.conditions_pass);
    println!("mc-representable:    {}", report.representable);
    println!("recover succeeded:   {}", report.recovered);
    println!("discrepancies:       {}", report.discrepancy_count);
    for d in &report.discrepancies {
        println!(
            "  table {:?}: conditions={} search={} recover={}",
            d.table, d.conditions_pass, d.representable, d.recovered
        );
    }
}

fn run_sweep(n: u8, exhaustive: bool, sample: Option<u64>, seed: u64, shards: usize) -> Result<u8> {
    if n == 0 || n > 4 {
        return Err(anyhow!("sweeps support 1 ≤ n ≤ 4, got {n}"));
    }
    if shards == 0 {
        return Err(anyhow!("--shards must be at least 1"));
    }
    let mode = match (exhaustive, sample) {
        (_, Some(count)) => SweepMode::Sample { count, seed },
        (true, None) => SweepMode::Exhaustive,
        (false, None) if n <= 3 => SweepMode::Exhaustive,
        (false, None) => {
            return Err(anyhow!(
                "the n = 4 census has 26,254,935 tables; pass --exhaustive to scan it all or --sample COUNT"
            ))
        }
    };
    let report = characterization_sweep(n, mode, shards);
    print_sweep_report(&report);
    Ok(if report.is_clean() { EXIT_OK } else { EXIT_DEFECT })
}

fn run(cli: Cli) -> Result<u8> {
    match &cli.command {
        Command::Generate {
            weak_order,
            linear_order,
            labels,
            out,
        } => run_generate(weak_order, linear_order, labels.as_deref(), out.as_ref()),
        Command::Check { input, format } => run_check(input, *format),
        Command::Recover { input, format } => run_recover(input, *format),
        Command::Oracle { input, rational, .. } => run_oracle(input, *rational),
        Command::Sweep {
            n,
            exhaustive,
            sample,
            seed,
            shards,
        } => run_sweep(*n, *exhaustive, *sample, *seed, *shards),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}
