//! Table generation (cdf grid, moment table, median table) and the CSV and
//! Markdown renderers.

use std::io::Write;

use ghl3::{Ghl3, Tolerance};

use crate::format::fixed;
use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableId {
    Cdf,
    Moments,
    Median,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Csv,
    Markdown,
}

/// What to tabulate. `x_*` only matter for the cdf grid, `n_max` only for
/// the moment table.
#[derive(Debug, Clone, PartialEq)]
pub struct TableSpec {
    pub table_id: TableId,
    pub b_values: Vec<f64>,
    /// Per-b grid end; `None` picks the published grid end for that b.
    pub x_max: Option<f64>,
    pub x_start: f64,
    pub x_step: f64,
    pub n_max: u32,
    pub precision: usize,
    pub tol: Tolerance,
}

impl TableSpec {
    /// The published layout for `table_id`.
    pub fn defaults(table_id: TableId) -> Self {
        let (b_values, precision) = match table_id {
            TableId::Cdf => (vec![2.0, 3.0], 4),
            TableId::Moments => ((1..=10).map(f64::from).collect(), 4),
            TableId::Median => ((1..=5).map(f64::from).collect(), 5),
        };
        Self {
            table_id,
            b_values,
            x_max: None,
            x_start: 0.0,
            x_step: 0.1,
            n_max: 4,
            precision,
            tol: Tolerance::default(),
        }
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if self.b_values.is_empty() {
            return Err(CliError::usage("at least one b value is required"));
        }
        if !(1..=12).contains(&self.precision) {
            return Err(CliError::usage("precision must be between 1 and 12"));
        }
        if self.table_id == TableId::Cdf {
            if !(self.x_step > 0.0 && self.x_step <= 1.0) {
                return Err(CliError::usage("step must lie in (0, 1]"));
            }
            let cols = 1.0 / self.x_step;
            if (cols - cols.round()).abs() > 1e-9 {
                return Err(CliError::usage("step must divide 1 evenly (0.1, 0.25, 0.5, ...)"));
            }
            if !(self.x_start >= 0.0 && self.x_start.is_finite()) {
                return Err(CliError::usage("grid start must be nonnegative"));
            }
            if let Some(hi) = self.x_max {
                if !(hi.is_finite() && hi >= self.x_start) {
                    return Err(CliError::usage("x-max must be finite and not below the grid start"));
                }
            }
        }
        if self.table_id == TableId::Moments && self.n_max == 0 {
            return Err(CliError::usage("n-max must be at least 1"));
        }
        Ok(())
    }

    /// Grid end used for shape `b`: 5.9 for b = 2 and 4.9 for b = 3 as
    /// published, 5.9 otherwise.
    pub fn x_max_for(&self, b: f64) -> f64 {
        self.x_max.unwrap_or(if b == 3.0 { 4.9 } else { 5.9 })
    }

    fn columns_per_unit(&self) -> u64 {
        (1.0 / self.x_step).round() as u64
    }

    /// First and last grid index for shape `b`; grid point `k` is `k·step`.
    fn grid_bounds(&self, b: f64) -> (u64, u64) {
        let cols = self.columns_per_unit() as f64;
        let first = (self.x_start * cols - 1e-9).ceil().max(0.0) as u64;
        let last = (self.x_max_for(b) * cols + 1e-9).floor() as u64;
        (first, last)
    }

    /// Number of grid points for shape `b`.
    pub fn x_count(&self, b: f64) -> u64 {
        let (first, last) = self.grid_bounds(b);
        last.saturating_sub(first) + 1
    }
}

/// A rendered table: header plus rows of already-formatted cells. The first
/// column is always `b`; `grouped` tables get one Markdown block per b.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
    pub grouped: bool,
}

fn model(b: f64, tol: Tolerance) -> Result<Ghl3, CliError> {
    Ok(Ghl3::with_tolerance(b, tol)?)
}

/// Decimals needed to print multiples of `step` exactly.
fn step_decimals(step: f64) -> usize {
    (1..=6)
        .find(|&d| {
            let scaled = step * 10f64.powi(d as i32);
            (scaled - scaled.round()).abs() < 1e-9
        })
        .unwrap_or(6)
}

pub fn build(spec: &TableSpec) -> Result<Table, CliError> {
    spec.validate()?;
    match spec.table_id {
        TableId::Cdf => cdf_table(spec),
        TableId::Moments => moment_table(spec),
        TableId::Median => median_table(spec),
    }
}

/// Rows are indexed by the integer part of x and columns by the fractional
/// offset, so the grid reads like the published table.
fn cdf_table(spec: &TableSpec) -> Result<Table, CliError> {
    let cols = spec.columns_per_unit();
    let dec = step_decimals(spec.x_step);
    let mut header = vec!["b".to_string(), "x".to_string()];
    header.extend((0..cols).map(|j| fixed(j as f64 / cols as f64, dec)));

    let mut rows = Vec::new();
    for &b in &spec.b_values {
        let d = model(b, spec.tol)?;
        let (first, last) = spec.grid_bounds(b);
        for whole in first / cols..=last / cols {
            let mut row = vec![format!("{b}"), fixed(whole as f64, dec)];
            for j in 0..cols {
                let k = whole * cols + j;
                if k < first || k > last {
                    row.push(String::new());
                } else {
                    let x = k as f64 / cols as f64;
                    row.push(fixed(d.cdf(x)?, spec.precision));
                }
            }
            rows.push(row);
        }
    }
    Ok(Table { header, rows, grouped: true })
}

fn moment_table(spec: &TableSpec) -> Result<Table, CliError> {
    let mut header = vec!["b".to_string()];
    header.extend((1..=spec.n_max).map(|n| if n == 1 { "E[X]".to_string() } else { format!("E[X^{n}]") }));
    let mut rows = Vec::new();
    for &b in &spec.b_values {
        let d = model(b, spec.tol)?;
        let mut row = vec![format!("{b}")];
        for n in 1..=spec.n_max {
            row.push(fixed(d.moment(n)?, spec.precision));
        }
        rows.push(row);
    }
    Ok(Table { header, rows, grouped: false })
}

fn median_table(spec: &TableSpec) -> Result<Table, CliError> {
    let header = vec!["b".to_string(), "median".to_string()];
    let mut rows = Vec::new();
    for &b in &spec.b_values {
        let d = model(b, spec.tol)?;
        rows.push(vec![format!("{b}"), fixed(d.median()?, spec.precision)]);
    }
    Ok(Table { header, rows, grouped: false })
}

pub fn render<W: Write>(table: &Table, format: Format, out: W) -> Result<(), CliError> {
    match format {
        Format::Csv => render_csv(table, out),
        Format::Markdown => render_markdown(table, out),
    }
}

fn render_csv<W: Write>(table: &Table, out: W) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(&table.header)?;
    for row in &table.rows {
        w.write_record(row)?;
    }
    w.flush()?;
    Ok(())
}

fn markdown_block<W: Write>(header: &[String], rows: &[&[String]], out: &mut W) -> Result<(), CliError> {
    let widths: Vec<usize> = (0..header.len())
        .map(|c| rows.iter().map(|r| r[c].len()).chain([header[c].len(), 3]).max().unwrap_or(3))
        .collect();
    let line = |cells: &mut dyn Iterator<Item = String>| format!("| {} |", cells.collect::<Vec<_>>().join(" | "));
    writeln!(out, "{}", line(&mut header.iter().zip(&widths).map(|(h, w)| format!("{h:>w$}"))))?;
    writeln!(out, "{}", line(&mut widths.iter().map(|w| format!("{}:", "-".repeat(w - 1)))))?;
    for row in rows {
        writeln!(out, "{}", line(&mut row.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}"))))?;
    }
    Ok(())
}

fn render_markdown<W: Write>(table: &Table, mut out: W) -> Result<(), CliError> {
    if !table.grouped {
        let rows: Vec<&[String]> = table.rows.iter().map(Vec::as_slice).collect();
        return markdown_block(&table.header, &rows, &mut out);
    }
    let mut rest: &[Vec<String>] = &table.rows;
    let mut first = true;
    while let Some(head) = rest.first() {
        let b = head[0].clone();
        let len = rest.iter().take_while(|r| r[0] == b).count();
        let (group, tail) = rest.split_at(len);
        if !first {
            writeln!(out)?;
        }
        first = false;
        writeln!(out, "b = {b}")?;
        writeln!(out)?;
        let rows: Vec<&[String]> = group.iter().map(|r| &r[1..]).collect();
        markdown_block(&table.header[1..], &rows, &mut out)?;
        rest = tail;
    }
    Ok(())
}
