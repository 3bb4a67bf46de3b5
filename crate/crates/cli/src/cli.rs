//! Argument definitions and command dispatch.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ghl3::order_stats::pdf_rth;
use ghl3::sampling::sample;
use ghl3::{Ghl3, OrderIndex, RngStream, Tolerance};

use crate::format::significant;
use crate::table::{self, Format, TableId, TableSpec};
use crate::CliError;

#[derive(Debug, Parser)]
#[command(name = "ghl3", version, about = "Type III generalized half logistic distribution")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Regenerate the cdf grid, the moment table or the median table.
    #[command(allow_negative_numbers = true)]
    Table(TableArgs),
    /// Evaluate one function at one point.
    #[command(allow_negative_numbers = true)]
    Eval(EvalArgs),
    /// Draw seeded variates, one per line.
    #[command(allow_negative_numbers = true)]
    Sample(SampleArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableKind {
    Cdf,
    Moments,
    Median,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Csv,
    Md,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Function {
    Pdf,
    Cdf,
    Survival,
    Hazard,
    Quantile,
    Moment,
    OrdstatPdf,
}

#[derive(Debug, Args)]
pub struct TolArgs {
    /// Absolute tolerance for integrals and root finding.
    #[arg(long)]
    pub tol_abs: Option<f64>,
    /// Relative tolerance for integrals and root finding.
    #[arg(long)]
    pub tol_rel: Option<f64>,
}

impl TolArgs {
    fn resolve(&self) -> Result<Tolerance, CliError> {
        let def = Tolerance::default();
        Tolerance::new(
            self.tol_abs.unwrap_or(def.abs_tol()),
            self.tol_rel.unwrap_or(def.rel_tol()),
            def.max_subdivisions(),
        )
        .map_err(|e| CliError::usage(e.to_string()))
    }
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(value_enum)]
    pub kind: TableKind,
    /// A single shape parameter.
    #[arg(long, conflicts_with = "b_list")]
    pub b: Option<f64>,
    /// Shape parameters as `lo..hi` (unit steps, inclusive) or `b1,b2,...`.
    #[arg(long)]
    pub b_list: Option<String>,
    /// Last x of the cdf grid.
    #[arg(long)]
    pub x_max: Option<f64>,
    /// Column spacing of the cdf grid; must divide 1.
    #[arg(long)]
    pub step: Option<f64>,
    /// Highest moment order in the moment table.
    #[arg(long)]
    pub n_max: Option<u32>,
    /// Decimal places per cell.
    #[arg(long)]
    pub precision: Option<usize>,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: FormatArg,
    #[command(flatten)]
    pub tol: TolArgs,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[arg(value_enum)]
    pub function: Function,
    #[arg(long)]
    pub b: f64,
    /// Evaluation point (the level p for `quantile`).
    #[arg(long, visible_alias = "p")]
    pub x: Option<f64>,
    /// Moment order for `moment`.
    #[arg(long)]
    pub order: Option<i64>,
    /// Rank for `ordstat-pdf`.
    #[arg(long)]
    pub r: Option<u32>,
    /// Sample size for `ordstat-pdf`.
    #[arg(long)]
    pub n: Option<u32>,
    #[command(flatten)]
    pub tol: TolArgs,
}

#[derive(Debug, Args)]
pub struct SampleArgs {
    #[arg(long)]
    pub b: f64,
    #[arg(long)]
    pub count: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[command(flatten)]
    pub tol: TolArgs,
}

/// Parse `lo..hi` (inclusive, unit steps) or a comma-separated list.
pub fn parse_b_list(s: &str) -> Result<Vec<f64>, CliError> {
    let bad = || CliError::usage(format!("invalid b list `{s}`"));
    if let Some((lo, hi)) = s.split_once("..") {
        let lo: f64 = lo.trim().parse().map_err(|_| bad())?;
        let hi: f64 = hi.trim().parse().map_err(|_| bad())?;
        if !(lo.is_finite() && hi.is_finite() && lo <= hi) || hi - lo > 1e4 {
            return Err(bad());
        }
        let steps = (hi - lo + 1e-9).floor() as u64;
        Ok((0..=steps).map(|k| lo + k as f64).collect())
    } else {
        s.split(',').map(|part| part.trim().parse::<f64>().map_err(|_| bad())).collect()
    }
}

fn table_spec(args: &TableArgs) -> Result<TableSpec, CliError> {
    let id = match args.kind {
        TableKind::Cdf => TableId::Cdf,
        TableKind::Moments => TableId::Moments,
        TableKind::Median => TableId::Median,
    };
    let mut spec = TableSpec::defaults(id);
    if let Some(b) = args.b {
        spec.b_values = vec![b];
    }
    if let Some(list) = &args.b_list {
        spec.b_values = parse_b_list(list)?;
    }
    if args.x_max.is_some() {
        spec.x_max = args.x_max;
    }
    if let Some(step) = args.step {
        spec.x_step = step;
    }
    if let Some(n) = args.n_max {
        spec.n_max = n;
    }
    if let Some(p) = args.precision {
        spec.precision = p;
    }
    spec.tol = args.tol.resolve()?;
    Ok(spec)
}

fn require<T>(v: Option<T>, flag: &str, function: &str) -> Result<T, CliError> {
    v.ok_or_else(|| CliError::usage(format!("`{function}` needs --{flag}")))
}

/// Value of `args.function` at the requested point.
pub fn evaluate(args: &EvalArgs) -> Result<f64, CliError> {
    let d = Ghl3::with_tolerance(args.b, args.tol.resolve()?)?;
    let name = args.function.to_possible_value().map(|v| v.get_name().to_owned()).unwrap_or_default();
    let x = || require(args.x, "x", &name);
    let v = match args.function {
        Function::Pdf => d.pdf(x()?)?,
        Function::Cdf => d.cdf(x()?)?,
        Function::Survival => d.survival(x()?)?,
        Function::Hazard => d.hazard(x()?)?,
        Function::Quantile => d.quantile(x()?)?,
        Function::Moment => {
            let order = require(args.order, "order", &name)?;
            let order =
                u32::try_from(order).map_err(|_| CliError::usage("moment order must be a nonnegative integer"))?;
            d.moment(order)?
        }
        Function::OrdstatPdf => {
            let r = require(args.r, "r", &name)?;
            let n = require(args.n, "n", &name)?;
            pdf_rth(&d, OrderIndex::new(r, n)?, x()?)?
        }
    };
    Ok(v)
}

pub fn run<W: Write>(cli: &Cli, out: &mut W) -> Result<(), CliError> {
    match &cli.command {
        Command::Table(args) => {
            let spec = table_spec(args)?;
            let t = table::build(&spec)?;
            let format = match args.format {
                FormatArg::Csv => Format::Csv,
                FormatArg::Md => Format::Markdown,
            };
            table::render(&t, format, out)
        }
        Command::Eval(args) => {
            let v = evaluate(args)?;
            writeln!(out, "{}", significant(v, 10))?;
            Ok(())
        }
        Command::Sample(args) => {
            let d = Ghl3::with_tolerance(args.b, args.tol.resolve()?)?;
            let values = sample(&d, &mut RngStream::new(args.seed), args.count)?;
            for v in values {
                writeln!(out, "{}", significant(v, 17))?;
            }
            Ok(())
        }
    }
}
