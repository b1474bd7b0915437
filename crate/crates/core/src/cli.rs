//! Command-line front end.
//!
//! Exit codes:
//!
//! | code | meaning                                         |
//! |------|-------------------------------------------------|
//! | 0    | success                                         |
//! | 1    | `verify-paper` found an unexpected status       |
//! | 2    | unknown platform, unreadable file, usage error  |
//! | 3    | spec failed validation                          |
//! | 4    | exact count refused by the digit guard          |
//!
//! `EXPRESSIVITY_MAX_DIGITS` sets the exact-mode digit guard when
//! `--max-digits` is not given.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::capacity::{capacity, transistor_equivalent, CapacityError, ExactModeConfig};
use crate::dataset::{
    builtin_platforms, builtin_years, find_builtin, load_spec_file, DatasetEntry, SpecFileError,
};
use crate::model::{CapacityResult, ProcessorSpec};
use crate::trend::{build_trend, compare, emit_csv, format_real, Figure, Quantity};
use crate::verify::verify_paper;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_UNKNOWN: i32 = 2;
pub const EXIT_INVALID: i32 = 3;
pub const EXIT_EXACT_TOO_LARGE: i32 = 4;

pub const MAX_DIGITS_ENV: &str = "EXPRESSIVITY_MAX_DIGITS";

#[derive(Parser, Debug)]
#[command(
    name = "expressivity",
    version,
    about = "Kinematic mechanization capacity of articulated platforms"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Capacity of a built-in platform or a spec file
    Compute {
        /// Built-in platform name or path to a JSON spec file
        spec: String,
        /// Multiply positions by velocity states where a group defines them
        #[arg(long)]
        dynamics: bool,
        /// Also build the exact configuration count
        #[arg(long)]
        exact: bool,
        /// Refuse exact counts with more decimal digits than this
        #[arg(long, value_name = "N")]
        max_digits: Option<u64>,
        /// Thousands separators in numbers
        #[arg(long)]
        pretty: bool,
    },
    /// Recompute every published value and report agreement
    VerifyPaper {
        #[arg(long)]
        pretty: bool,
    },
    /// Compare two capacities; `transistors:N` stands for an N-transistor chip
    Compare {
        a: String,
        b: String,
        #[arg(long)]
        dynamics: bool,
    },
    /// Emit figure data as CSV
    Trend {
        /// Figure number: 1, 2 or 3
        #[arg(long)]
        fig: Figure,
        /// Write to this file instead of stdout
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// List built-in platforms
    List {
        #[arg(long)]
        pretty: bool,
    },
}

/// Runs the CLI with the process environment.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let env = std::env::var(MAX_DIGITS_ENV).ok();
    run_with_env(args, env.as_deref(), out, err)
}

/// Runs the CLI with an explicit value for `EXPRESSIVITY_MAX_DIGITS`.
pub fn run_with_env<I, T>(
    args: I,
    max_digits_env: Option<&str>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_UNKNOWN
            } else {
                EXIT_OK
            };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let result = match cli.command {
        Command::Compute {
            spec,
            dynamics,
            exact,
            max_digits,
            pretty,
        } => cmd_compute(
            &spec,
            dynamics,
            exact,
            max_digits,
            max_digits_env,
            pretty,
            out,
            err,
        ),
        Command::VerifyPaper { pretty } => cmd_verify_paper(pretty, out),
        Command::Compare { a, b, dynamics } => cmd_compare(&a, &b, dynamics, out),
        Command::Trend { fig, out: path } => cmd_trend(fig, path.as_deref(), out),
        Command::List { pretty } => cmd_list(pretty, out),
    };
    match result {
        Ok(code) => code,
        Err(Failure { code, message }) => {
            if !message.is_empty() {
                let _ = writeln!(err, "error: {message}");
            }
            code
        }
    }
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Self {
        Self {
            code,
            message: message.into(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        // a closed pipe (`| head`) is not an error
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            return Failure::new(EXIT_OK, "");
        }
        Failure::new(EXIT_UNKNOWN, e.to_string())
    }
}

impl From<CapacityError> for Failure {
    fn from(e: CapacityError) -> Self {
        let code = match e {
            CapacityError::ExactTooLarge { .. } => EXIT_EXACT_TOO_LARGE,
            _ => EXIT_INVALID,
        };
        Failure::new(code, e.to_string())
    }
}

fn resolve(spec: &str) -> Result<DatasetEntry, Failure> {
    if let Some(e) = find_builtin(spec) {
        return Ok(e);
    }
    if !Path::new(spec).is_file() {
        return Err(Failure::new(
            EXIT_UNKNOWN,
            format!("'{spec}' is neither a built-in platform nor a readable file (see `list`)"),
        ));
    }
    load_spec_file(spec).map_err(|e| {
        let code = match e {
            SpecFileError::Invalid { .. } => EXIT_INVALID,
            _ => EXIT_UNKNOWN,
        };
        Failure::new(code, e.to_string())
    })
}

fn max_digits(flag: Option<u64>, env: Option<&str>, err: &mut dyn Write) -> u64 {
    if let Some(n) = flag {
        return n;
    }
    match env.map(|s| s.trim().parse::<u64>()) {
        Some(Ok(n)) if n >= 1 => n,
        Some(_) => {
            let _ = writeln!(
                err,
                "warning: ignoring {MAX_DIGITS_ENV}={:?}; expected a positive integer",
                env.unwrap_or_default()
            );
            ExactModeConfig::default().max_decimal_digits
        }
        None => ExactModeConfig::default().max_decimal_digits,
    }
}

/// Groups the integer part of a plain decimal string in threes.
fn separate_thousands(s: &str) -> String {
    let (sign, rest) = s.strip_prefix('-').map_or(("", s), |r| ("-", r));
    let (int, frac) = rest
        .split_once('.')
        .map_or((rest, None), |(i, f)| (i, Some(f)));
    let mut grouped = String::new();
    for (i, c) in int.chars().enumerate() {
        if i > 0 && (int.len() - i) % 3 == 0 {
            grouped.push(',');
        }
        grouped.push(c);
    }
    match frac {
        Some(f) => format!("{sign}{grouped}.{f}"),
        None => format!("{sign}{grouped}"),
    }
}

fn num(s: String, pretty: bool) -> String {
    if pretty {
        separate_thousands(&s)
    } else {
        s
    }
}

/// `238 bits (237.9), 4.1e71 configurations`
pub fn summary_line(r: &CapacityResult, pretty: bool) -> String {
    format!(
        "{} bits ({}), {:.1}e{} configurations",
        num(r.rounded_bits().to_string(), pretty),
        num(format!("{:.1}", r.bits), pretty),
        r.mantissa,
        r.decimal_exponent
    )
}

fn render_capacity(
    name: &str,
    r: &CapacityResult,
    pretty: bool,
    out: &mut dyn Write,
) -> std::io::Result<()> {
    writeln!(out, "{name}: {}", summary_line(r, pretty))?;
    writeln!(out, "bits: {}", r.bits)?;
    writeln!(out, "configurations: {}e{}", r.mantissa, r.decimal_exponent)?;
    writeln!(
        out,
        "transistor equivalent: {}",
        num(transistor_equivalent(r.bits).to_string(), pretty)
    )?;
    let width = r
        .breakdown
        .iter()
        .map(|c| c.label.len())
        .max()
        .unwrap_or(5)
        .max(5);
    writeln!(
        out,
        "{:<width$}  {:>8}  {:>8}  {:>12}",
        "group", "count", "states", "bits"
    )?;
    for c in &r.breakdown {
        writeln!(
            out,
            "{:<width$}  {:>8}  {:>8}  {:>12.4}",
            c.label, c.count, c.states, c.bits
        )?;
    }
    if let Some(exact) = &r.exact_count {
        let digits = exact.to_string();
        writeln!(out, "exact count ({} digits): {}", digits.len(), digits)?;
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn cmd_compute(
    spec: &str,
    dynamics: bool,
    exact: bool,
    max_digits_flag: Option<u64>,
    env: Option<&str>,
    pretty: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, Failure> {
    let entry = resolve(spec)?;
    let cfg =
        exact.then(|| ExactModeConfig::with_max_digits(max_digits(max_digits_flag, env, err)));
    match capacity(&entry.platform, dynamics, cfg.as_ref()) {
        Ok(r) => {
            render_capacity(entry.name(), &r, pretty, out)?;
            Ok(EXIT_OK)
        }
        Err(CapacityError::ExactTooLarge {
            predicted_digits,
            max_digits,
            partial,
        }) => {
            render_capacity(entry.name(), &partial, pretty, out)?;
            Err(Failure::new(
                EXIT_EXACT_TOO_LARGE,
                format!(
                    "exact count would have {predicted_digits} digits, over the limit of {max_digits} \
                     (raise with --max-digits or {MAX_DIGITS_ENV})"
                ),
            ))
        }
        Err(e) => Err(e.into()),
    }
}

fn cmd_verify_paper(pretty: bool, out: &mut dyn Write) -> Result<i32, Failure> {
    let report = verify_paper()?;
    writeln!(
        out,
        "{:<10}  {:>12}  {:>8}  {:>9}  {:>12}  {:>12}  {:<14}  {:<14}  result",
        "id", "computed", "printed", "delta", "computed C", "printed C", "status", "expected"
    )?;
    for r in &report.records {
        writeln!(
            out,
            "{:<10}  {:>12}  {:>8}  {:>9.3}  {:>12}  {:>12}  {:<14}  {:<14}  {}",
            r.id,
            num(format!("{:.3}", r.computed_bits), pretty),
            num(r.printed_bits.to_string(), pretty),
            r.bits_delta,
            format!("{:.2}e{}", r.computed_mantissa, r.computed_exponent),
            format!("{}e{}", r.printed_mantissa, r.printed_exponent),
            r.status.as_str(),
            r.expected.as_str(),
            if r.as_expected() { "ok" } else { "UNEXPECTED" }
        )?;
    }
    let unexpected = report.records.iter().filter(|r| !r.as_expected()).count();
    if unexpected == 0 {
        writeln!(out, "all {} entries as expected", report.records.len())?;
        Ok(EXIT_OK)
    } else {
        writeln!(out, "{unexpected} unexpected status(es)")?;
        Ok(EXIT_VERIFY_FAILED)
    }
}

fn quantity(arg: &str, dynamics: bool) -> Result<Quantity, Failure> {
    if let Some(n) = arg.strip_prefix("transistors:") {
        let count: u64 = n.trim().parse().ok().filter(|&c| c >= 1).ok_or_else(|| {
            Failure::new(EXIT_UNKNOWN, format!("bad transistor count in '{arg}'"))
        })?;
        return Ok(Quantity::processor(&ProcessorSpec::new(
            format!("{count}-transistor chip"),
            count,
        )));
    }
    let entry = resolve(arg)?;
    let r = capacity(&entry.platform, dynamics, None)?;
    Ok(Quantity::capacity(entry.platform.name, &r))
}

fn cmd_compare(a: &str, b: &str, dynamics: bool, out: &mut dyn Write) -> Result<i32, Failure> {
    let statement = compare(quantity(a, dynamics)?, quantity(b, dynamics)?);
    writeln!(out, "{statement}")?;
    Ok(EXIT_OK)
}

fn cmd_trend(fig: Figure, path: Option<&Path>, out: &mut dyn Write) -> Result<i32, Failure> {
    let rows = build_trend(&builtin_platforms(), &builtin_years())?;
    let csv = emit_csv(&rows, fig);
    match path {
        Some(p) => fs::write(p, csv)
            .map_err(|e| Failure::new(EXIT_UNKNOWN, format!("{}: {e}", p.display())))?,
        None => out.write_all(csv.as_bytes())?,
    }
    Ok(EXIT_OK)
}

fn cmd_list(pretty: bool, out: &mut dyn Write) -> Result<i32, Failure> {
    let entries = builtin_platforms();
    let width = entries.iter().map(|e| e.name().len()).max().unwrap_or(4);
    writeln!(
        out,
        "{:<width$}  {:<27}  {:>5}  {:>8}  transistors",
        "name", "provenance", "dof", "bits"
    )?;
    for e in &entries {
        let r = capacity(&e.platform, false, None)?;
        let transistors = e
            .platform
            .processor
            .as_ref()
            .map(|p| num(p.transistor_count.to_string(), pretty))
            .unwrap_or_else(|| "-".into());
        writeln!(
            out,
            "{:<width$}  {:<27}  {:>5}  {:>8}  {}",
            e.name(),
            e.provenance.as_str(),
            e.platform.dof_count(),
            num(format_real(r.bits.round()), pretty),
            transistors
        )?;
    }
    Ok(EXIT_OK)
}
