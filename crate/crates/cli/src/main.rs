//! Command-line verification harness: runs the suites, reproduces the
//! classification tables, solves single metrics, and checks the group model.
//!
//! Exit status is nonzero exactly when some check FAILED; sampled-but-matched
//! components do not fail a run.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use homstruct_cli::config::{Config, ConfigFile, ConfigOverrides};
use homstruct_cli::suites;
use homstruct_core::rational::parse_rational;

#[derive(Parser)]
#[command(name = "homstruct", version, about = "Exact verification of homogeneous structures on diagonal metrics over SU(1,1)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
enum Format {
    Json,
    Markdown,
    Both,
}

#[derive(Args)]
struct CommonOpts {
    /// Metric case to run (repeatable); all five by default.
    #[arg(long = "case")]
    cases: Vec<String>,
    /// Parameter samples per metric case.
    #[arg(long)]
    samples: Option<usize>,
    /// Sample count for identity checks (minimum 16 unless unsafe).
    #[arg(long)]
    identity_samples: Option<usize>,
    /// Seed for all deterministic sampling (HOMSTRUCT_SEED overrides the default).
    #[arg(long)]
    seed: Option<u64>,
    /// Restrict parameters to perfect squares everywhere.
    #[arg(long)]
    perfect_squares: bool,
    /// Permit identity-sample counts below 16.
    #[arg(long)]
    unsafe_low_samples: bool,
    /// JSON configuration file; command-line flags override its values.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Output file (stdout when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Report format.
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Run the verification suites and reproduce the tables.
    Verify(CommonOpts),
    /// Decompose the structure variety of a single metric.
    Solve {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(long, allow_hyphen_values = true)]
        nu: String,
        /// Family parameter: also locate each catalog structure at this t.
        #[arg(long, allow_hyphen_values = true)]
        t: Option<String>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Reproduce the classification tables only.
    Tables {
        /// Which tables to emit (table1..table5 or all).
        #[arg(long, default_value = "all")]
        which: String,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Exact checks in the matrix model of the group.
    Group {
        /// pi0 | pi1 | piplus | doublecover | all
        #[arg(long, default_value = "all")]
        which: String,
        /// Number of rational points.
        #[arg(long, default_value = "16")]
        points: usize,
        #[arg(long)]
        seed: Option<u64>,
    },
}

fn load_config_file(path: &Option<PathBuf>) -> Result<Option<ConfigFile>, String> {
    match path {
        None => Ok(None),
        Some(p) => {
            let text = std::fs::read_to_string(p)
                .map_err(|e| format!("cannot read config {}: {e}", p.display()))?;
            let file: ConfigFile = serde_json::from_str(&text)
                .map_err(|e| format!("malformed config {}: {e}", p.display()))?;
            Ok(Some(file))
        }
    }
}

fn resolve(common: &CommonOpts) -> Result<Config, String> {
    let file = load_config_file(&common.config)?;
    Config::resolve(
        file,
        ConfigOverrides {
            cases: common.cases.clone(),
            samples_per_case: common.samples,
            identity_sample_count: common.identity_samples,
            seed: common.seed,
            perfect_square_only: if common.perfect_squares { Some(true) } else { None },
            unsafe_low_samples: common.unsafe_low_samples,
        },
    )
}

fn write_output(path: &Option<PathBuf>, content: &str) -> Result<(), String> {
    match path {
        None => {
            println!("{content}");
            Ok(())
        }
        Some(p) => std::fs::write(p, content).map_err(|e| format!("cannot write {}: {e}", p.display())),
    }
}

fn emit_report(report: &homstruct_cli::Report, common: &CommonOpts) -> Result<(), String> {
    match common.format {
        Format::Json => write_output(&common.out, &report.to_json()),
        Format::Markdown => write_output(&common.out, &report.to_markdown()),
        Format::Both => {
            let base = common
                .out
                .clone()
                .ok_or_else(|| String::from("--format both requires --out"))?;
            let json_path = base.with_extension("json");
            let md_path = base.with_extension("md");
            std::fs::write(&json_path, report.to_json())
                .map_err(|e| format!("cannot write {}: {e}", json_path.display()))?;
            std::fs::write(&md_path, report.to_markdown())
                .map_err(|e| format!("cannot write {}: {e}", md_path.display()))?;
            Ok(())
        }
    }
}

fn run() -> Result<bool, String> {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify(common) => {
            let cfg = resolve(&common)?;
            let report = suites::run_suite(&cfg);
            for line in suites::timing_lines(&report) {
                eprintln!("{line}");
            }
            emit_report(&report, &common)?;
            Ok(!report.is_fail())
        }
        Command::Solve {
            lambda,
            mu,
            nu,
            t,
            seed,
            out,
        } => {
            let l = parse_rational(&lambda)?;
            let m = parse_rational(&mu)?;
            let n = parse_rational(&nu)?;
            let t = t.map(|s| parse_rational(&s)).transpose()?;
            let seed = seed
                .or_else(|| std::env::var("HOMSTRUCT_SEED").ok().and_then(|s| s.parse().ok()))
                .unwrap_or(42);
            let value = suites::solve_point(&l, &m, &n, t.as_ref(), seed)?;
            let matched = value["matched"].as_bool().unwrap_or(false);
            write_output(&out, &serde_json::to_string_pretty(&value).expect("serializes"))?;
            Ok(matched)
        }
        Command::Tables { which, common } => {
            let cfg = resolve(&common)?;
            let mut report = suites::run_suite(&cfg);
            report.suites.clear();
            let keep = |name: &str, which: &str| which == "all" || which == name;
            if !keep("table1", &which) {
                report.tables.table1.clear();
            }
            if !keep("table2", &which) {
                report.tables.table2.clear();
            }
            if !keep("table3", &which) {
                report.tables.table3.clear();
            }
            if !keep("table4", &which) {
                report.tables.table4.clear();
            }
            if !keep("table5", &which) {
                report.tables.table5.clear();
            }
            if !["all", "table1", "table2", "table3", "table4", "table5"].contains(&which.as_str()) {
                return Err(format!("unknown table `{which}`"));
            }
            let failed = report.is_fail();
            emit_report(&report, &common)?;
            Ok(!failed)
        }
        Command::Group { which, points, seed } => {
            let seed = seed
                .or_else(|| std::env::var("HOMSTRUCT_SEED").ok().and_then(|s| s.parse().ok()))
                .unwrap_or(42);
            let (msg, ok) = suites::group_checks(&which, seed, points)?;
            println!("{msg}");
            Ok(ok)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("verification FAILED");
            ExitCode::from(1)
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
