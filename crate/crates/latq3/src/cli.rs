//! Command-line surface: argument parsing, dispatch, and exit codes.

use std::path::PathBuf;

use clap::{Parser, ValueEnum};

use crate::closed_form::{g_decomposable, g_indecomposable};
use crate::error::{Error, Result};
use crate::family::{
    decomposable_gram, decomposable_params, indecomposable_gram, parse_param, IndecomposableParams,
};
use crate::gram::GramMatrix;
use crate::io::{
    critical_points_json, decomposable_scan_json, lattice_report_json, moment_report_json,
    read_gram_file, sweep_csv, sweep_json, write_text_file,
};
use crate::mc::second_moment_mc;
use crate::optimize::{decomposable_region_scan, find_critical_points, Region};
use crate::report::lattice_report;
use crate::verification::run_verification;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CommandKind {
    /// Full geometric report for one lattice.
    Analyze,
    /// Grid of G values over a parametric family (CSV by default).
    Sweep,
    /// Critical-point search (indecomposable) or region scan (decomposable).
    Optimize,
    /// Monte Carlo estimate of G for one lattice.
    Sample,
    /// Self-contained verification suite; exit 0 iff every check passes.
    VerifyPaper,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyKind {
    Indecomposable,
    Decomposable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatKind {
    Json,
    Csv,
}

/// Quantization-error toolkit for three-dimensional lattices.
#[derive(Debug, Parser)]
#[command(name = "latq3", version, disable_help_subcommand = true)]
pub struct Cli {
    #[arg(value_enum)]
    pub command: CommandKind,
    /// JSON file holding {"gram": [[g11,g12,g13],[...],[...]]}.
    #[arg(long)]
    pub gram: Option<PathBuf>,
    /// Parametric family to evaluate instead of a Gram file.
    #[arg(long, value_enum)]
    pub family: Option<FamilyKind>,
    /// Family parameter; accepts a number or one of the symbolic tokens
    /// 2-sqrt2, sqrt3-1, 2/sqrt3.
    #[arg(long)]
    pub alpha: Option<String>,
    /// Family parameter; same syntax as --alpha.
    #[arg(long)]
    pub beta: Option<String>,
    /// Grid resolution for sweep/optimize.
    #[arg(long)]
    pub grid: Option<usize>,
    /// Monte Carlo sample count (default 1000000).
    #[arg(long)]
    pub samples: Option<u64>,
    /// Monte Carlo seed (default 0).
    #[arg(long)]
    pub seed: Option<u64>,
    /// Write output here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Output format where a choice exists (sweep: csv default, json optional).
    #[arg(long, value_enum)]
    pub format: Option<FormatKind>,
}

/// Map an error to the process exit code contract: 2 for unusable
/// input, 3 for structurally valid but infeasible parameters, 1 for
/// internal computation failures.
pub fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::Input(_) => 2,
        Error::Parameter(_)
        | Error::Domain(_)
        | Error::NotSymmetric { .. }
        | Error::NotPositiveDefinite { .. }
        | Error::DegenerateLattice(_) => 3,
        Error::ReductionFailure(_) | Error::Geometry(_) => 1,
    }
}

fn emit(out: &Option<PathBuf>, content: &str) -> Result<()> {
    match out {
        Some(path) => write_text_file(path, content),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn parsed_pair(cli: &Cli) -> Result<(f64, f64)> {
    let alpha = cli
        .alpha
        .as_deref()
        .ok_or_else(|| Error::Input("--family requires --alpha and --beta".to_string()))?;
    let beta = cli
        .beta
        .as_deref()
        .ok_or_else(|| Error::Input("--family requires --alpha and --beta".to_string()))?;
    Ok((parse_param(alpha)?, parse_param(beta)?))
}

/// Resolve the lattice to operate on: exactly one of a Gram file or a
/// family point.
fn gram_from_cli(cli: &Cli) -> Result<GramMatrix> {
    match (&cli.gram, cli.family) {
        (Some(_), Some(_)) => Err(Error::Input(
            "choose exactly one of --gram and --family".to_string(),
        )),
        (None, None) => Err(Error::Input(
            "provide a lattice via --gram FILE or --family NAME --alpha X --beta Y".to_string(),
        )),
        (Some(path), None) => read_gram_file(path),
        (None, Some(kind)) => {
            let (a, b) = parsed_pair(cli)?;
            match kind {
                FamilyKind::Indecomposable => {
                    Ok(indecomposable_gram(&IndecomposableParams::new(a, b)?))
                }
                FamilyKind::Decomposable => Ok(decomposable_gram(&decomposable_params(a, b)?)),
            }
        }
    }
}

/// Interior grid over the open unit square: alpha = beta = i/(n+1).
fn indecomposable_sweep_rows(n: usize) -> Result<Vec<(f64, f64, f64)>> {
    let mut rows = Vec::with_capacity(n * n);
    for i in 1..=n {
        let a = i as f64 / (n + 1) as f64;
        for j in 1..=n {
            let b = j as f64 / (n + 1) as f64;
            rows.push((a, b, g_indecomposable(&IndecomposableParams::new(a, b)?)));
        }
    }
    Ok(rows)
}

/// Interior grid over the canonical decomposable region: alpha strictly
/// inside [0.1, 2/sqrt(3)], beta strictly inside
/// [max(alpha, 1/alpha), 1/alpha + alpha/4].
fn decomposable_sweep_rows(n: usize) -> Result<Vec<(f64, f64, f64)>> {
    let alpha_lo = 0.1;
    let alpha_hi = 2.0 / 3f64.sqrt();
    let mut rows = Vec::with_capacity(n * n);
    for i in 1..=n {
        let a = alpha_lo + (alpha_hi - alpha_lo) * i as f64 / (n + 1) as f64;
        let b_lo = (1.0 / a).max(a);
        let b_hi = 1.0 / a + a / 4.0;
        for j in 1..=n {
            let b = b_lo + (b_hi - b_lo) * j as f64 / (n + 1) as f64;
            rows.push((a, b, g_decomposable(&decomposable_params(a, b)?)));
        }
    }
    Ok(rows)
}

fn reject_csv(cli: &Cli, command: &str) -> Result<()> {
    if cli.format == Some(FormatKind::Csv) {
        return Err(Error::Input(format!(
            "csv output is only available for sweep, not {command}"
        )));
    }
    Ok(())
}

fn run_analyze(cli: &Cli) -> Result<i32> {
    reject_csv(cli, "analyze")?;
    let gram = gram_from_cli(cli)?;
    let report = lattice_report(&gram)?;
    emit(&cli.out, &lattice_report_json(&report))?;
    Ok(0)
}

fn run_sweep(cli: &Cli) -> Result<i32> {
    let family = cli
        .family
        .ok_or_else(|| Error::Input("sweep requires --family".to_string()))?;
    let n = cli
        .grid
        .ok_or_else(|| Error::Input("sweep requires --grid".to_string()))?;
    if n == 0 {
        return Err(Error::Input("--grid must be at least 1".to_string()));
    }
    let rows = match family {
        FamilyKind::Indecomposable => indecomposable_sweep_rows(n)?,
        FamilyKind::Decomposable => decomposable_sweep_rows(n)?,
    };
    let content = match cli.format {
        Some(FormatKind::Json) => sweep_json(&rows),
        _ => sweep_csv(&rows),
    };
    emit(&cli.out, &content)?;
    Ok(0)
}

fn run_optimize(cli: &Cli) -> Result<i32> {
    reject_csv(cli, "optimize")?;
    if cli.gram.is_some() {
        return Err(Error::Input(
            "optimize works on a --family, not a --gram file".to_string(),
        ));
    }
    let family = cli.family.unwrap_or(FamilyKind::Indecomposable);
    let content = match family {
        FamilyKind::Indecomposable => {
            let grid = cli.grid.unwrap_or(40);
            let search = find_critical_points(&Region::default_search(), grid, 1e-10)?;
            critical_points_json(&search)
        }
        FamilyKind::Decomposable => {
            let grid = cli.grid.unwrap_or(200);
            let scan = decomposable_region_scan(grid)?;
            decomposable_scan_json(&scan)
        }
    };
    emit(&cli.out, &content)?;
    Ok(0)
}

fn run_sample(cli: &Cli) -> Result<i32> {
    reject_csv(cli, "sample")?;
    let gram = gram_from_cli(cli)?;
    let samples = cli.samples.unwrap_or(1_000_000);
    let seed = cli.seed.unwrap_or(0);
    let report = second_moment_mc(&gram, samples, seed)?;
    emit(&cli.out, &moment_report_json(&report))?;
    Ok(0)
}

fn run_verify(cli: &Cli) -> Result<i32> {
    reject_csv(cli, "verify-paper")?;
    let report = run_verification()?;
    print!("{}", report.render_text());
    if cli.out.is_some() {
        emit(&cli.out, &report.to_json())?;
    }
    Ok(if report.overall_pass() { 0 } else { 1 })
}

/// Execute one parsed invocation; the returned integer is the process
/// exit code for a run that produced output.
pub fn run(cli: &Cli) -> Result<i32> {
    match cli.command {
        CommandKind::Analyze => run_analyze(cli),
        CommandKind::Sweep => run_sweep(cli),
        CommandKind::Optimize => run_optimize(cli),
        CommandKind::Sample => run_sample(cli),
        CommandKind::VerifyPaper => run_verify(cli),
    }
}
