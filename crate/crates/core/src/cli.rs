//! Command-line front end.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::RadiiError;
use crate::family::{Base, Family};
use crate::rayleigh::{radius_bracket, SumSource};
use crate::roots::find_radius_with;
use crate::series::SeriesPolicy;
use crate::verification::{
    explore_interlacing_with, run_suite, Expected, InterlacingReport, VerificationConfig,
    VerificationReport, MAX_ZEROS,
};

pub const SCHEMA_VERSION: u32 = 1;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NUMERICAL: i32 = 3;

pub const BOUNDS_HEADER: [&str; 6] = ["family", "parameter", "k", "lower", "upper", "source"];
pub const RADIUS_HEADER: [&str; 7] = [
    "family",
    "parameter",
    "radius",
    "residual",
    "iterations",
    "lo3",
    "hi3",
];
const VERIFY_HEADER: [&str; 9] = [
    "claim_id",
    "family",
    "parameter",
    "argument",
    "measured",
    "expected",
    "tolerance",
    "passed",
    "error",
];
const INTERLACE_HEADER: [&str; 5] = [
    "parameter",
    "index",
    "struve_zero",
    "bessel_zero",
    "interlacing",
];

const FAMILY_HELP: &str = "Families: bessel-circle (φ), bessel-sqrt (ϕ), struve-circle (v), \
struve-sqrt (w), lommel-circle (g), lommel-sqrt (h), or all. Repeat or separate with commas";

/// Radii of univalence and starlikeness of normalized Bessel, Struve and
/// Lommel functions.
#[derive(Debug, Parser)]
#[command(
    name = "radii",
    version,
    after_help = "Set RADII_MAX_TERMS to change the series term limit (default 400)."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Euler–Rayleigh lower and upper bounds on the radius.
    Bounds(BoundsArgs),
    /// Radius as the first positive zero of the derivative.
    Radius(RadiusArgs),
    /// Run the claim suite. Exits 1 if any claim fails.
    Verify(VerifyArgs),
    /// Zeros of z H' - νH and z J' - νJ and whether they interlace.
    ExploreInterlace(InterlaceArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SourceArg {
    Closed,
    Newton,
    Both,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct GridArgs {
    #[arg(long = "family", required = true, value_delimiter = ',', value_parser = parse_families, help = FAMILY_HELP)]
    pub families: Vec<Vec<Family>>,
    /// Single parameter value.
    #[arg(
        long,
        allow_hyphen_values = true,
        conflicts_with = "range",
        required_unless_present = "range"
    )]
    pub param: Option<f64>,
    /// Parameter sweep `start:stop:step`, stop included.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_range)]
    pub range: Option<Range>,
}

#[derive(Debug, Clone, Args)]
pub struct BoundsArgs {
    #[command(flatten)]
    pub grid: GridArgs,
    /// Highest order k. Closed forms stop at 3.
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u8).range(1..=6))]
    pub k: u8,
    #[arg(long, value_enum, default_value = "both")]
    pub source: SourceArg,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct RadiusArgs {
    #[command(flatten)]
    pub grid: GridArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    /// Keep claims under this id prefix, for example T2d or T3b.k2.
    #[arg(long, value_delimiter = ',')]
    pub only: Vec<String>,
    /// Tolerance override `PREFIX=VALUE`.
    #[arg(long = "tol", value_parser = parse_tolerance)]
    pub tolerances: Vec<(String, f64)>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct InterlaceArgs {
    /// Orders ν in [-1/2, 1/2]. Repeat or separate with commas.
    #[arg(long = "param", allow_hyphen_values = true, value_delimiter = ',', default_values_t = [-0.5, 0.0, 0.5])]
    pub params: Vec<f64>,
    /// Zeros per sequence, at most 20.
    #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u8).range(1..=MAX_ZEROS as i64))]
    pub n_max: u8,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Range {
    pub start: f64,
    pub stop: f64,
    pub step: f64,
}

impl Range {
    pub fn points(&self) -> Vec<f64> {
        let n = ((self.stop - self.start) / self.step + 1e-9).floor() as usize;
        (0..=n).map(|i| self.start + i as f64 * self.step).collect()
    }
}

fn parse_families(s: &str) -> Result<Vec<Family>, String> {
    if s.eq_ignore_ascii_case("all") {
        return Ok(Family::ALL.to_vec());
    }
    s.parse::<Family>()
        .map(|f| vec![f])
        .map_err(|e| e.to_string())
}

pub fn parse_range(s: &str) -> Result<Range, String> {
    let parts: Vec<&str> = s.split(':').collect();
    let [start, stop, step] = parts.as_slice() else {
        return Err("expected start:stop:step".into());
    };
    let num = |t: &str| t.trim().parse::<f64>().map_err(|e| format!("{t:?}: {e}"));
    let range = Range {
        start: num(start)?,
        stop: num(stop)?,
        step: num(step)?,
    };
    if !(range.step > 0.0 && range.step.is_finite()) {
        return Err("step must be positive".into());
    }
    if !(range.start.is_finite() && range.stop.is_finite()) || range.stop < range.start {
        return Err("need finite start <= stop".into());
    }
    if (range.stop - range.start) / range.step > 1e6 {
        return Err("more than a million points".into());
    }
    Ok(range)
}

fn parse_tolerance(s: &str) -> Result<(String, f64), String> {
    let (key, value) = s.split_once('=').ok_or("expected PREFIX=VALUE")?;
    let value: f64 = value
        .trim()
        .parse()
        .map_err(|e| format!("{value:?}: {e}"))?;
    if value.is_nan() || value < 0.0 {
        return Err("tolerance must be nonnegative".into());
    }
    Ok((key.trim().to_owned(), value))
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Domain(RadiiError),
    #[error(transparent)]
    Numerical(RadiiError),
    #[error("output: {0}")]
    Io(#[from] std::io::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Domain(_) => EXIT_USAGE,
            CliError::Numerical(_) | CliError::Io(_) | CliError::Csv(_) | CliError::Json(_) => {
                EXIT_NUMERICAL
            }
        }
    }
}

impl From<RadiiError> for CliError {
    fn from(e: RadiiError) -> Self {
        match e {
            RadiiError::ParameterOutOfRange { .. }
            | RadiiError::UnsupportedOrder { .. }
            | RadiiError::OrderTooHigh { .. }
            | RadiiError::ZeroOrder => CliError::Domain(e),
            _ => CliError::Numerical(e),
        }
    }
}

/// Formats a real with 17 significant digits; non-finite values are empty.
pub fn fmt_real(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else {
        String::new()
    }
}

/// A computed table: ordered rows of optional cells plus warnings.
struct Table {
    command: &'static str,
    header: &'static [&'static str],
    rows: Vec<Vec<Cell>>,
    warnings: Vec<String>,
    numerical_failure: bool,
}

#[derive(Debug, Clone)]
enum Cell {
    Real(f64),
    Int(usize),
    Text(String),
    Empty,
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Real(x) => fmt_real(*x),
            Cell::Int(n) => n.to_string(),
            Cell::Text(s) => s.clone(),
            Cell::Empty => String::new(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Real(x) if x.is_finite() => json!(x),
            Cell::Int(n) => json!(n),
            Cell::Text(s) => json!(s),
            _ => Value::Null,
        }
    }
}

impl Table {
    fn render(&self, format: Format) -> Result<Vec<u8>, CliError> {
        match format {
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(self.header)?;
                for row in &self.rows {
                    w.write_record(row.iter().map(Cell::csv))?;
                }
                w.into_inner().map_err(|e| CliError::Io(e.into_error()))
            }
            Format::Json => {
                let rows: Vec<Value> = self
                    .rows
                    .iter()
                    .map(|row| {
                        Value::Object(
                            self.header
                                .iter()
                                .zip(row)
                                .map(|(k, c)| (k.to_string(), c.json()))
                                .collect(),
                        )
                    })
                    .collect();
                let doc = json!({
                    "schema_version": SCHEMA_VERSION,
                    "command": self.command,
                    "rows": rows,
                    "warnings": self.warnings,
                });
                let mut out = serde_json::to_vec_pretty(&doc)?;
                out.push(b'\n');
                Ok(out)
            }
            Format::Text => {
                let cells: Vec<Vec<String>> = self
                    .rows
                    .iter()
                    .map(|r| r.iter().map(Cell::csv).collect())
                    .collect();
                let widths: Vec<usize> = (0..self.header.len())
                    .map(|i| {
                        cells
                            .iter()
                            .map(|r| r[i].chars().count())
                            .chain([self.header[i].len()])
                            .max()
                            .unwrap_or(0)
                    })
                    .collect();
                let mut s = String::new();
                let mut line = |fields: Vec<&str>| {
                    let padded: Vec<String> = fields
                        .iter()
                        .zip(&widths)
                        .map(|(f, w)| format!("{f:<w$}"))
                        .collect();
                    let _ = writeln!(s, "{}", padded.join("  ").trim_end());
                };
                line(self.header.to_vec());
                for r in &cells {
                    line(r.iter().map(String::as_str).collect());
                }
                for w in &self.warnings {
                    let _ = writeln!(s, "warning: {w}");
                }
                Ok(s.into_bytes())
            }
        }
    }
}

/// Expands the family selection and parameter grid into ordered jobs.
/// Out-of-domain points are skipped with a warning in sweep mode and are an
/// error for a single family at a single point.
type Jobs = (Vec<(Family, f64)>, Vec<(Family, f64, String)>);

fn grid_jobs(grid: &GridArgs) -> Result<Jobs, CliError> {
    let mut families: Vec<Family> = grid.families.iter().flatten().copied().collect();
    families.sort();
    families.dedup();
    let points = match (grid.param, grid.range) {
        (Some(p), _) => vec![p],
        (None, Some(r)) => r.points(),
        (None, None) => return Err(CliError::Usage("need --param or --range".into())),
    };
    let single = families.len() == 1 && grid.range.is_none();
    let mut jobs = Vec::new();
    let mut skipped = Vec::new();
    for &f in &families {
        for &p in &points {
            match f.check(p) {
                Ok(()) => jobs.push((f, p)),
                Err(e) if single => return Err(e.into()),
                Err(e) => skipped.push((f, p, e.to_string())),
            }
        }
    }
    Ok((jobs, skipped))
}

fn bounds_table(args: &BoundsArgs) -> Result<Table, CliError> {
    let (jobs, skipped) = grid_jobs(&args.grid)?;
    let k_max = args.k as usize;
    let sources: Vec<(SumSource, usize)> = match args.source {
        SourceArg::Closed => vec![(SumSource::ClosedForm, k_max.min(3))],
        SourceArg::Newton => vec![(SumSource::NewtonRecurrence, k_max)],
        SourceArg::Both => vec![
            (SumSource::ClosedForm, k_max.min(3)),
            (SumSource::NewtonRecurrence, k_max),
        ],
    };
    let computed: Vec<Vec<Result<Vec<Cell>, RadiiError>>> = jobs
        .par_iter()
        .map(|&(f, p)| {
            sources
                .iter()
                .flat_map(|&(src, kk)| (1..=kk).map(move |k| (src, k)))
                .map(|(src, k)| {
                    let b = radius_bracket(f, p, k, src)?;
                    Ok(vec![
                        Cell::Text(f.cli_name().into()),
                        Cell::Real(p),
                        Cell::Int(k),
                        Cell::Real(b.lower),
                        Cell::Real(b.upper),
                        Cell::Text(src.name().into()),
                    ])
                })
                .collect()
        })
        .collect();
    let mut table = Table {
        command: "bounds",
        header: &BOUNDS_HEADER,
        rows: Vec::new(),
        warnings: Vec::new(),
        numerical_failure: false,
    };
    for rows in computed {
        for row in rows {
            table.rows.push(row?);
        }
    }
    for (f, p, reason) in skipped {
        table.rows.push(vec![
            Cell::Text(f.cli_name().into()),
            Cell::Real(p),
            Cell::Empty,
            Cell::Empty,
            Cell::Empty,
            Cell::Text("skipped".into()),
        ]);
        table.warnings.push(format!("skipped {f} at {p}: {reason}"));
    }
    Ok(table)
}

fn radius_table(args: &RadiusArgs, policy: &SeriesPolicy) -> Result<Table, CliError> {
    let (jobs, skipped) = grid_jobs(&args.grid)?;
    let single = jobs.len() == 1 && skipped.is_empty();
    let computed: Vec<_> = jobs
        .par_iter()
        .map(|&(f, p)| {
            find_radius_with(policy, f, p)
                .and_then(|r| Ok((r, radius_bracket(f, p, 3, SumSource::ClosedForm)?)))
        })
        .collect();
    let mut table = Table {
        command: "radius",
        header: &RADIUS_HEADER,
        rows: Vec::new(),
        warnings: Vec::new(),
        numerical_failure: false,
    };
    for (&(f, p), result) in jobs.iter().zip(computed) {
        match result {
            Ok((r, b)) => table.rows.push(vec![
                Cell::Text(f.cli_name().into()),
                Cell::Real(p),
                Cell::Real(r.radius),
                Cell::Real(r.residual),
                Cell::Int(r.iterations),
                Cell::Real(b.lower),
                Cell::Real(b.upper),
            ]),
            Err(e) if single => return Err(e.into()),
            Err(e) => {
                table.numerical_failure = true;
                table.warnings.push(format!("failed {f} at {p}: {e}"));
                table.rows.push(failed_radius_row(f, p));
            }
        }
    }
    for (f, p, reason) in skipped {
        table.warnings.push(format!("skipped {f} at {p}: {reason}"));
        table.rows.push(failed_radius_row(f, p));
    }
    Ok(table)
}

fn failed_radius_row(f: Family, p: f64) -> Vec<Cell> {
    let mut row = vec![Cell::Text(f.cli_name().into()), Cell::Real(p)];
    row.extend(std::iter::repeat_n(Cell::Empty, 5));
    row
}

fn expected_text(e: &Expected) -> String {
    match *e {
        Expected::Value { value } => format!("= {}", fmt_real(value)),
        Expected::Interval { lower, upper } => {
            format!("({}, {})", fmt_real(lower), fmt_real(upper))
        }
        Expected::Above { bound } => format!("> {}", fmt_real(bound)),
        Expected::Below { bound } => format!("< {}", fmt_real(bound)),
    }
}

fn opt_real(x: Option<f64>) -> String {
    x.map(fmt_real).unwrap_or_default()
}

pub fn render_verify(report: &VerificationReport, format: Format) -> Result<Vec<u8>, CliError> {
    match format {
        Format::Json => {
            #[derive(Serialize)]
            struct Doc<'a> {
                schema_version: u32,
                command: &'static str,
                passed: usize,
                failed: usize,
                rows: &'a [crate::verification::VerificationOutcome],
            }
            let mut out = serde_json::to_vec_pretty(&Doc {
                schema_version: SCHEMA_VERSION,
                command: "verify",
                passed: report.passed,
                failed: report.failed,
                rows: &report.outcomes,
            })?;
            out.push(b'\n');
            Ok(out)
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(VERIFY_HEADER)?;
            for o in &report.outcomes {
                w.write_record([
                    o.claim_id.clone(),
                    o.family
                        .map(|f| f.cli_name().to_owned())
                        .unwrap_or_default(),
                    opt_real(o.parameter),
                    opt_real(o.argument),
                    fmt_real(o.measured),
                    expected_text(&o.expected),
                    fmt_real(o.tolerance),
                    o.passed.to_string(),
                    o.error.clone().unwrap_or_default(),
                ])?;
            }
            w.into_inner().map_err(|e| CliError::Io(e.into_error()))
        }
        Format::Text => {
            let mut s = String::new();
            for o in &report.outcomes {
                let _ = write!(
                    s,
                    "{} {}",
                    if o.passed { "PASS" } else { "FAIL" },
                    o.claim_id
                );
                if let Some(f) = o.family {
                    let _ = write!(s, " {f}");
                }
                if let Some(p) = o.parameter {
                    let _ = write!(s, " p={}", fmt_real(p));
                }
                if let Some(z) = o.argument {
                    let _ = write!(s, " z={}", fmt_real(z));
                }
                let _ = write!(
                    s,
                    " measured={} expected {} tol={}",
                    fmt_real(o.measured),
                    expected_text(&o.expected),
                    fmt_real(o.tolerance)
                );
                if let Some(e) = &o.error {
                    let _ = write!(s, " error: {e}");
                }
                s.push('\n');
            }
            let _ = writeln!(s, "{} passed, {} failed", report.passed, report.failed);
            Ok(s.into_bytes())
        }
    }
}

pub fn render_interlacing(
    reports: &[InterlacingReport],
    format: Format,
) -> Result<Vec<u8>, CliError> {
    match format {
        Format::Json => {
            let doc = json!({
                "schema_version": SCHEMA_VERSION,
                "command": "explore-interlace",
                "label": crate::verification::EVIDENCE_LABEL,
                "rows": reports,
            });
            let mut out = serde_json::to_vec_pretty(&doc)?;
            out.push(b'\n');
            Ok(out)
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(INTERLACE_HEADER)?;
            for r in reports {
                for i in 0..r.n_max {
                    w.write_record([
                        fmt_real(r.parameter),
                        (i + 1).to_string(),
                        opt_real(r.struve_zeros.get(i).copied()),
                        opt_real(r.bessel_zeros.get(i).copied()),
                        r.interlacing.to_string(),
                    ])?;
                }
            }
            w.into_inner().map_err(|e| CliError::Io(e.into_error()))
        }
        Format::Text => {
            let mut s = String::new();
            for r in reports {
                let _ = writeln!(s, "ν = {} ({}, not a verified claim)", r.parameter, r.label);
                let _ = writeln!(s, "  n  zH'-νH                   zJ'-νJ");
                for i in 0..r.n_max {
                    let _ = writeln!(
                        s,
                        "  {:<2} {:<24} {}",
                        i + 1,
                        opt_real(r.struve_zeros.get(i).copied()),
                        opt_real(r.bessel_zeros.get(i).copied())
                    );
                }
                let order: String = r
                    .merged
                    .iter()
                    .map(|(_, q)| match q {
                        crate::verification::Sequence::Struve => 'H',
                        crate::verification::Sequence::Bessel => 'J',
                    })
                    .collect();
                let _ = writeln!(s, "  merged order: {order}");
                let _ = writeln!(s, "  interlacing: {}", r.interlacing);
                if !r.struve_missing.is_empty() || !r.bessel_missing.is_empty() {
                    let _ = writeln!(
                        s,
                        "  missing: H {:?}, J {:?}",
                        r.struve_missing, r.bessel_missing
                    );
                }
            }
            Ok(s.into_bytes())
        }
    }
}

fn emit(bytes: &[u8], out: &Option<PathBuf>, stdout: &mut dyn Write) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, bytes)?,
        None => stdout.write_all(bytes)?,
    }
    Ok(())
}

/// Runs a parsed command, writing results to `stdout` (or `--out`) and
/// diagnostics to `stderr`. Returns the exit code.
pub fn run(cli: Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    match execute(cli, stdout, stderr) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

fn execute(cli: Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32, CliError> {
    let policy = SeriesPolicy::global();
    match cli.command {
        Command::Bounds(args) => {
            let table = bounds_table(&args)?;
            finish_table(table, &args.output, stdout, stderr)
        }
        Command::Radius(args) => {
            let table = radius_table(&args, policy)?;
            finish_table(table, &args.output, stdout, stderr)
        }
        Command::Verify(args) => {
            let mut config = VerificationConfig {
                only: args.only.clone(),
                policy: *policy,
                ..Default::default()
            };
            for (key, value) in &args.tolerances {
                config.tolerances.set(key, *value);
            }
            let report = run_suite(&config);
            emit(&render_verify(&report, args.format)?, &args.out, stdout)?;
            Ok(if report.all_passed() {
                EXIT_OK
            } else {
                EXIT_VERIFY_FAILED
            })
        }
        Command::ExploreInterlace(args) => {
            for &p in &args.params {
                Base::Struve.check(p)?;
            }
            let reports: Vec<_> = args
                .params
                .par_iter()
                .map(|&p| explore_interlacing_with(policy, p, args.n_max as usize))
                .collect::<Result<_, _>>()?;
            emit(
                &render_interlacing(&reports, args.format)?,
                &args.out,
                stdout,
            )?;
            Ok(EXIT_OK)
        }
    }
}

fn finish_table(
    table: Table,
    output: &OutputArgs,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<i32, CliError> {
    emit(&table.render(output.format)?, &output.out, stdout)?;
    if output.format != Format::Text {
        for w in &table.warnings {
            writeln!(stderr, "warning: {w}")?;
        }
    }
    Ok(if table.numerical_failure {
        EXIT_NUMERICAL
    } else {
        EXIT_OK
    })
}

/// Parses `args` and runs; clap usage errors exit with code 2.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(cli, &mut stdout.lock(), &mut stderr.lock())
}
