//! Argument parsing and the three subcommands.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::sync::Mutex;
use std::time::Instant;

use anyhow::{Context as _, Result};
use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use pseudoroot::series::{cor49_series, theorem1_series, theorem2_series};
use pseudoroot::Rational;

use crate::cache::{self, Cache};
use crate::checks::{run_check, Check, Context};
use crate::dims::{self, Algebra, DimRow, Method};
use crate::field::FieldMode;
use crate::report::{ReportSet, VerificationReport};
use crate::with_field;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
pub enum Which {
    #[value(name = "qn")]
    #[serde(rename = "qn")]
    Qn,
    #[value(name = "qn_dual")]
    #[serde(rename = "qn_dual")]
    QnDual,
    #[value(name = "cor49")]
    #[serde(rename = "cor49")]
    Cor49,
}

/// Graded dimensions of the pseudo-root algebras Q_n and their quadratic duals.
#[derive(Debug, Parser)]
#[command(name = "pseudoroot", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: Format,

    /// Coefficient field: `rational` or `gfp:P` (prime fields are probabilistic).
    #[arg(long, global = true, default_value = "rational")]
    pub field: FieldMode,

    /// Worker threads (default: number of cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    /// JSON file caching engine dimensions.
    #[arg(long, global = true)]
    pub cache: Option<PathBuf>,

    /// Seed for sampled checks.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Dimension table by degree.
    Dims {
        #[arg(long = "n")]
        n: usize,
        #[arg(long)]
        max_degree: usize,
        #[arg(long, value_enum, default_value = "engine")]
        method: Method,
        #[arg(long, value_enum, default_value = "qn")]
        algebra: Algebra,
        /// Recompute cached engine values and fail on disagreement.
        #[arg(long)]
        verify_cache: bool,
    },
    /// Run verification checks.
    Verify {
        #[arg(long = "n")]
        n: usize,
        #[arg(long)]
        max_degree: usize,
        /// Comma-separated checks (default: all).
        #[arg(long, value_enum, value_delimiter = ',')]
        checks: Vec<Check>,
    },
    /// Coefficients of a closed-form or recursive Hilbert series.
    Series {
        #[arg(value_enum)]
        which: Which,
        #[arg(long = "n")]
        n: usize,
        #[arg(long, default_value_t = 20)]
        trunc: usize,
    },
}

/// Runs the parsed command; returns the process exit code.
pub fn run(cli: &Cli) -> i32 {
    let result = match &cli.command {
        Command::Dims {
            n,
            max_degree,
            method,
            algebra,
            verify_cache,
        } => cmd_dims(cli, *n, *max_degree, *method, *algebra, *verify_cache),
        Command::Verify {
            n,
            max_degree,
            checks,
        } => cmd_verify(cli, *n, *max_degree, checks),
        Command::Series { which, n, trunc } => cmd_series(cli, *which, *n, *trunc),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            EXIT_USAGE
        }
    }
}

fn emit(cli: &Cli, text: &str) -> Result<()> {
    match &cli.output {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()?;
            Ok(())
        }
    }
}

fn pool(cli: &Cli) -> Result<rayon::ThreadPool> {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Some(j) = cli.jobs {
        b = b.num_threads(j.max(1));
    }
    Ok(b.build()?)
}

#[derive(Serialize)]
struct DimsOutput<'a> {
    algebra: Algebra,
    n: usize,
    method: Method,
    field: String,
    exact: bool,
    rows: &'a [DimRow],
}

fn cmd_dims(
    cli: &Cli,
    n: usize,
    max_degree: usize,
    method: Method,
    algebra: Algebra,
    verify_cache: bool,
) -> Result<i32> {
    dims::check_n(n)?;
    let mut code = EXIT_PASS;
    let values = if method == Method::Engine {
        let fresh = || -> Result<Vec<u128>> {
            with_field!(cli.field, engine_dims_for(algebra, n, max_degree))
        };
        match &cli.cache {
            None => fresh()?,
            Some(path) => {
                let mut cache = Cache::open(path);
                let keys: Vec<String> = (0..=max_degree)
                    .map(|i| cache::key(algebra, n, i, cli.field))
                    .collect();
                let cached: Option<Vec<u128>> = keys.iter().map(|k| cache.get(k)).collect();
                let values = match cached {
                    Some(c) if !verify_cache => c,
                    cached => {
                        let f = fresh()?;
                        if let Some(c) = cached {
                            for (k, (old, new)) in keys.iter().zip(c.iter().zip(&f)) {
                                if old != new {
                                    eprintln!(
                                        "cache mismatch for {k}: cached {old}, recomputed {new}"
                                    );
                                    code = EXIT_FAIL;
                                }
                            }
                        }
                        f
                    }
                };
                for (k, &v) in keys.into_iter().zip(&values) {
                    cache.insert(k, v);
                }
                cache.save()?;
                values
            }
        }
    } else {
        dims::method_dims::<Rational>(algebra, method, n, max_degree)?
    };
    let rows = dims::rows(algebra, method, n, &values);
    let exact = method != Method::Engine || cli.field.is_exact();
    let text = match cli.format {
        Format::Json => {
            let out = DimsOutput {
                algebra,
                n,
                method,
                field: cli.field.to_string(),
                exact,
                rows: &rows,
            };
            serde_json::to_string_pretty(&out)? + "\n"
        }
        Format::Csv => {
            let mut s = String::from("algebra,n,degree,dim,method\n");
            for r in &rows {
                s += &format!(
                    "{},{},{},{},{}\n",
                    r.algebra.id(),
                    r.n,
                    r.degree,
                    r.dim,
                    r.method.id()
                );
            }
            s
        }
        Format::Text => {
            let mut s = format!(
                "{} n={} method={}{}\n",
                algebra.id(),
                n,
                method.id(),
                if exact {
                    String::new()
                } else {
                    format!(" field={} (probabilistic)", cli.field)
                }
            );
            for r in &rows {
                s += &format!("{:>4}  {}\n", r.degree, r.dim);
            }
            s
        }
    };
    emit(cli, &text)?;
    Ok(code)
}

fn engine_dims_for<S: pseudoroot::Field>(
    algebra: Algebra,
    n: usize,
    max_degree: usize,
) -> Result<Vec<u128>> {
    dims::engine_dims::<S>(algebra, n, max_degree)
}

fn run_one<S: pseudoroot::Field>(check: Check, ctx: &Context<'_>) -> Result<VerificationReport> {
    run_check::<S>(check, ctx)
}

fn cmd_verify(cli: &Cli, n: usize, max_degree: usize, checks: &[Check]) -> Result<i32> {
    dims::check_n(n)?;
    let mut checks: Vec<Check> = if checks.is_empty() {
        Check::ALL.to_vec()
    } else {
        checks.to_vec()
    };
    checks.sort();
    checks.dedup();
    let cache = cli.cache.as_ref().map(|p| Mutex::new(Cache::open(p)));
    let ctx = Context {
        n,
        max_degree,
        seed: cli.seed,
        field: cli.field,
        cache: cache.as_ref(),
    };
    let results: Vec<Result<(VerificationReport, f64)>> = pool(cli)?.install(|| {
        checks
            .par_iter()
            .map(|&c| {
                let start = Instant::now();
                let r = with_field!(cli.field, run_one(c, &ctx))?;
                Ok((r, start.elapsed().as_secs_f64() * 1e3))
            })
            .collect()
    });
    let mut reports = Vec::with_capacity(results.len());
    let mut timings = BTreeMap::new();
    for res in results {
        let (r, ms) = res?;
        timings.insert(format!("{}_ms", r.check), (ms * 1e3).round() / 1e3);
        reports.push(r);
    }
    if let Some(c) = &cache {
        c.lock().expect("cache lock").save()?;
    }
    let set = ReportSet::new(reports, timings);
    let text = match cli.format {
        Format::Json => set.to_json(),
        Format::Csv => set.to_csv(),
        Format::Text => set.to_text(),
    };
    emit(cli, &text)?;
    Ok(if set.pass { EXIT_PASS } else { EXIT_FAIL })
}

#[derive(Serialize)]
struct SeriesOutput {
    which: Which,
    n: usize,
    trunc: usize,
    coefficients: Vec<String>,
}

fn cmd_series(cli: &Cli, which: Which, n: usize, trunc: usize) -> Result<i32> {
    let s = match which {
        Which::Qn => theorem1_series::<Rational>(n, trunc),
        Which::QnDual => theorem2_series::<Rational>(n, trunc),
        Which::Cor49 => cor49_series::<Rational>(n, trunc),
    };
    let coefficients: Vec<String> = s.coeffs().iter().map(|c| c.to_string()).collect();
    let text = match cli.format {
        Format::Json => {
            serde_json::to_string_pretty(&SeriesOutput {
                which,
                n,
                trunc,
                coefficients,
            })? + "\n"
        }
        Format::Csv => {
            let mut out = String::from("degree,coefficient\n");
            for (i, c) in coefficients.iter().enumerate() {
                out += &format!("{i},{c}\n");
            }
            out
        }
        Format::Text => coefficients.join(" ") + "\n",
    };
    emit(cli, &text)?;
    Ok(EXIT_PASS)
}
