//! `icx` — exact integer complexity from the command line.
//!
//! Tables are loaded from a cache file when one is given (`--cache` or the
//! `ICX_CACHE` environment variable) and covers the requested range;
//! otherwise they are built on the fly with the fast sieve.  All exit codes:
//! 0 success, 1 runtime or verification failure, 2 argument errors.
//! Failures print one JSON object to stderr.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use icx::cache::{read_cache, write_cache};
use icx::defect::{complexity_lower_bound, defect_of, integer_defect};
use icx::error::{Error, Result};
use icx::max_with_complexity;
use icx::spectrum::{
    classified_numbers, spectrum_rows, verify_classification, verify_integral_ratios,
    verify_product_coincidence, verify_smallest_defects, verify_tables,
    verify_threshold_equivalence, Report,
};
use icx::stability::{max_horizon, probe};
use icx::table::ComplexityTable;

#[derive(Parser)]
#[command(name = "icx", version, about = "Exact integer complexity toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a complexity table and write it as a cache file
    Sieve {
        /// Largest value to cover
        #[arg(long)]
        limit: u64,
        /// Sieve variant: the exhaustive oracle or the pruned fast builder
        #[arg(long, value_enum, default_value_t = Mode::Fast)]
        mode: Mode,
        /// Output path
        #[arg(long)]
        out: PathBuf,
    },
    /// Print the complexity of N
    Cpx {
        n: u64,
        /// Cache file to read instead of building a table
        #[arg(long)]
        cache: Option<PathBuf>,
    },
    /// Print the exact defect of N plus a display-only decimal approximation
    Defect { n: u64 },
    /// Print the integer-defect view of N with the threshold cross-check
    Idefect { n: u64 },
    /// Probe the 3-power orbit of N and report the stable-complexity estimate
    Stability {
        n: u64,
        /// Number of factors of three to examine (default: as many as fit)
        #[arg(long)]
        horizon: Option<u32>,
    },
    /// Print spectrum rows for a residue class (CSV: r,h_num,h_den,K,leader)
    Table {
        #[arg(long, value_parser = clap::value_parser!(u8).range(0..=2))]
        residue: u8,
        #[arg(long, default_value_t = 12)]
        rows: u64,
    },
    /// Run a verification suite; exit 0 iff it passed
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        /// Largest complexity level (tables, v3lem)
        #[arg(long)]
        kmax: Option<u32>,
        /// Sweep bound (classify, dtod, small3, coinci)
        #[arg(long)]
        limit: Option<u64>,
    },
    /// Emit every number up to the limit with integer defect at most 1 (CSV)
    Classify {
        #[arg(long)]
        limit: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Oracle,
    Fast,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Tables,
    Classify,
    Dtod,
    Small3,
    Coinci,
    V3lem,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!(
                "{}",
                serde_json::json!({ "kind": e.kind(), "message": e.to_string() })
            );
            ExitCode::from(1)
        }
    }
}

/// Cache file from the environment, if any.
fn env_cache() -> Option<PathBuf> {
    std::env::var_os("ICX_CACHE").map(PathBuf::from)
}

/// A table covering 1..=needed: an explicit cache must suffice on its own;
/// the environment cache is used opportunistically; otherwise build.
fn acquire(needed: u64, explicit: Option<&Path>) -> Result<ComplexityTable> {
    if let Some(path) = explicit {
        let table = read_cache(path)?;
        if table.limit() >= needed {
            return Ok(table);
        }
        return Err(Error::InsufficientTable {
            needed,
            limit: table.limit(),
        });
    }
    if let Some(path) = env_cache() {
        if path.exists() {
            let table = read_cache(&path)?;
            if table.limit() >= needed {
                return Ok(table);
            }
        }
    }
    ComplexityTable::build_fast(needed)
}

fn run(command: Command) -> Result<u8> {
    match command {
        Command::Sieve { limit, mode, out } => {
            let table = match mode {
                Mode::Oracle => ComplexityTable::build_oracle(limit)?,
                Mode::Fast => ComplexityTable::build_fast(limit)?,
            };
            write_cache(&out, &table)?;
            println!("wrote {} (limit {limit})", out.display());
            Ok(0)
        }
        Command::Cpx { n, cache } => {
            let table = acquire(n, cache.as_deref())?;
            println!("{}", table.cpx(n)?);
            Ok(0)
        }
        Command::Defect { n } => {
            let table = acquire(n, None)?;
            let d = defect_of(n, &table)?;
            // the trailing ~ marks the decimal as display-only; ordering
            // decisions always go through the exact descriptor
            println!(
                "{}",
                serde_json::json!({
                    "complexity": d.complexity(),
                    "base": d.base().to_string(),
                    "approx": format!("{}~", significant_digits(d.approx(), 12)),
                })
            );
            Ok(0)
        }
        Command::Idefect { n } => {
            let table = acquire(n, None)?;
            let lower = complexity_lower_bound(n);
            let d = integer_defect(n, &table)?;
            let cross = defect_of(n, &table)?.integer_defect();
            let (from_defect, consistent) = match cross {
                Ok(v) => (serde_json::json!(v), v == d),
                // base 1 is excluded from the threshold search
                Err(_) => (serde_json::Value::Null, n == 1),
            };
            println!(
                "{}",
                serde_json::json!({
                    "n": n,
                    "lower_bound": lower,
                    "integer_defect": d,
                    "integer_defect_from_defect": from_defect,
                    "consistent": consistent,
                })
            );
            Ok(0)
        }
        Command::Stability { n, horizon } => {
            let (table, horizon) = match horizon {
                Some(k) => {
                    let mut needed = n;
                    for _ in 0..k {
                        needed = needed.checked_mul(3).ok_or(Error::InsufficientTable {
                            needed: u64::MAX,
                            limit: 0,
                        })?;
                    }
                    (acquire(needed, None)?, k)
                }
                None => {
                    // default: as deep as the available table affords, at
                    // least two steps when building fresh
                    let table = acquire(n.saturating_mul(9), None)?;
                    let h = max_horizon(n, &table);
                    (table, h)
                }
            };
            let report = probe(n, horizon, &table)?;
            println!("{}", serde_json::to_string(&report).expect("serializable"));
            Ok(0)
        }
        Command::Table { residue, rows } => {
            println!("r,h_num,h_den,K,leader");
            for row in spectrum_rows(residue, rows) {
                println!(
                    "{},{},{},{},{}",
                    row.r,
                    row.h.numer(),
                    row.h.denom(),
                    row.k_min,
                    row.leader
                );
            }
            Ok(0)
        }
        Command::Verify { suite, kmax, limit } => {
            let report = run_suite(suite, kmax, limit)?;
            println!("{}", serde_json::to_string(&report).expect("serializable"));
            Ok(if report.passed { 0 } else { 1 })
        }
        Command::Classify { limit } => {
            println!("n,complexity");
            for (n, cpx) in classified_numbers(limit)? {
                println!("{n},{cpx}");
            }
            Ok(0)
        }
    }
}

fn run_suite(suite: Suite, kmax: Option<u32>, limit: Option<u64>) -> Result<Report> {
    let table_for_level = |k: u32| -> Result<ComplexityTable> {
        let needed = max_with_complexity(k)?
            .try_into()
            .map_err(|_| Error::InsufficientTable {
                needed: u64::MAX,
                limit: 0,
            })?;
        acquire(needed, None)
    };
    match suite {
        Suite::Tables => {
            let kmax = kmax.unwrap_or(30);
            verify_tables(kmax, &table_for_level(kmax)?)
        }
        Suite::V3lem => {
            let kmax = kmax.unwrap_or(20);
            verify_integral_ratios(kmax, &table_for_level(kmax)?)
        }
        Suite::Classify => {
            let limit = limit.unwrap_or(1_000_000);
            verify_classification(limit, &acquire(limit, None)?)
        }
        Suite::Dtod => {
            let limit = limit.unwrap_or(1_000_000);
            verify_threshold_equivalence(limit, &acquire(limit, None)?)
        }
        Suite::Small3 => {
            let limit = limit.unwrap_or(1_000_000);
            verify_smallest_defects(limit, &acquire(limit, None)?)
        }
        Suite::Coinci => {
            let limit = limit.unwrap_or(100_000);
            verify_product_coincidence(limit, &acquire(limit, None)?)
        }
    }
}

/// Round to the given number of significant digits, plain decimal notation.
fn significant_digits(v: f64, digits: i32) -> String {
    if v == 0.0 {
        return format!("{:.*}", digits as usize, 0.0);
    }
    let before = if v.abs() >= 1.0 {
        v.abs().log10().floor() as i32 + 1
    } else {
        0
    };
    let decimals = (digits - before).max(0) as usize;
    format!("{v:.decimals$}")
}
