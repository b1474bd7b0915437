//! Computation-versus-mechanization trend tables and comparison statements.
//!
//! Three tables are produced, all measured in bits:
//!
//! * `fig1`: transistor count per platform over time,
//! * `fig2`: mechanical configuration count per platform over time,
//! * `fig3`: computational bits against mechanical bits.
//!
//! CSV output is deterministic: rows sorted by year (missing years last) then
//! name, LF line endings, reals with 6 significant digits, integers bare.

use std::cmp::Ordering;
use std::fmt;

use crate::capacity::{capacity, processor_bits, transistor_equivalent, CapacityError};
use crate::dataset::{DatasetEntry, YearTable};
use crate::model::{CapacityResult, ProcessorSpec};

#[derive(Debug, Clone, PartialEq)]
pub struct TrendRow {
    pub name: String,
    pub year: Option<i32>,
    pub mech_bits: f64,
    pub mech_decimal_exponent: i64,
    /// Transistor count, absent when no processor is recorded.
    pub comp_bits: Option<f64>,
    /// `log10(comp_bits) - log10(mech_bits)`.
    pub comp_to_mech_ratio_log10: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Figure {
    Fig1,
    Fig2,
    Fig3,
}

impl Figure {
    fn header(self) -> &'static [&'static str] {
        match self {
            Figure::Fig1 => &["name", "year", "transistors"],
            Figure::Fig2 => &["name", "year", "mech_decimal_exponent", "mech_bits"],
            Figure::Fig3 => &["name", "comp_bits", "mech_bits"],
        }
    }
}

impl std::str::FromStr for Figure {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.trim_start_matches("fig") {
            "1" => Ok(Figure::Fig1),
            "2" => Ok(Figure::Fig2),
            "3" => Ok(Figure::Fig3),
            _ => Err(format!("unknown figure '{s}' (expected 1, 2 or 3)")),
        }
    }
}

/// One row per entry. Years come from the platform itself, else the sidecar.
pub fn build_trend(
    entries: &[DatasetEntry],
    years: &YearTable,
) -> Result<Vec<TrendRow>, CapacityError> {
    entries
        .iter()
        .map(|e| {
            let p = &e.platform;
            let mech = capacity(p, false, None)?;
            let comp_bits = p.processor.as_ref().map(processor_bits);
            let ratio = comp_bits
                .filter(|_| mech.bits > 0.0)
                .map(|c| c.log10() - mech.bits.log10());
            Ok(TrendRow {
                name: p.name.clone(),
                year: p.year.or_else(|| years.get(&p.name).copied()),
                mech_bits: mech.bits,
                mech_decimal_exponent: mech.decimal_exponent,
                comp_bits,
                comp_to_mech_ratio_log10: ratio,
            })
        })
        .collect()
}

fn row_order(a: &TrendRow, b: &TrendRow) -> Ordering {
    match (a.year, b.year) {
        (Some(x), Some(y)) => x.cmp(&y),
        (Some(_), None) => Ordering::Less,
        (None, Some(_)) => Ordering::Greater,
        (None, None) => Ordering::Equal,
    }
    .then_with(|| a.name.cmp(&b.name))
}

/// Renders one figure's data as CSV. Figures 1 and 3 skip rows without a
/// processor.
pub fn emit_csv(rows: &[TrendRow], which: Figure) -> String {
    let mut sorted: Vec<&TrendRow> = rows
        .iter()
        .filter(|r| which == Figure::Fig2 || r.comp_bits.is_some())
        .collect();
    sorted.sort_by(|a, b| row_order(a, b));

    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    w.write_record(which.header()).expect("in-memory write");
    let year = |r: &TrendRow| r.year.map(|y| y.to_string()).unwrap_or_default();
    for r in sorted {
        let comp = r.comp_bits.unwrap_or(0.0);
        let record = match which {
            Figure::Fig1 => vec![r.name.clone(), year(r), format!("{}", comp as u64)],
            Figure::Fig2 => vec![
                r.name.clone(),
                year(r),
                r.mech_decimal_exponent.to_string(),
                format_real(r.mech_bits),
            ],
            Figure::Fig3 => vec![r.name.clone(), format_real(comp), format_real(r.mech_bits)],
        };
        w.write_record(&record).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv output is utf-8")
}

/// Six significant digits, `%g` style: fixed notation for decimal exponents in
/// `[-4, 6)`, scientific otherwise, trailing zeros removed.
pub fn format_real(v: f64) -> String {
    if v == 0.0 || !v.is_finite() {
        return if v == 0.0 { "0".into() } else { v.to_string() };
    }
    let sci = format!("{v:.5e}");
    let (mant, exp) = sci
        .split_once('e')
        .expect("scientific format has an exponent");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-4..6).contains(&exp) {
        let decimals = (5 - exp).max(0) as usize;
        strip_zeros(format!("{v:.decimals$}"))
    } else {
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{}e{}{:02}", strip_zeros(mant.to_string()), sign, exp.abs())
    }
}

fn strip_zeros(s: String) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

/// A labelled capacity in bits, from a platform result or a processor.
#[derive(Debug, Clone, PartialEq)]
pub struct Quantity {
    pub label: String,
    pub bits: f64,
}

impl Quantity {
    pub fn capacity(label: impl Into<String>, result: &CapacityResult) -> Self {
        Self {
            label: label.into(),
            bits: result.bits,
        }
    }

    pub fn processor(p: &ProcessorSpec) -> Self {
        Self {
            label: p.name.clone(),
            bits: processor_bits(p),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonStatement {
    pub a: Quantity,
    pub b: Quantity,
    /// `a.bits - b.bits`.
    pub bit_difference: f64,
    /// `a.bits / b.bits`, absent when `b` has zero bits.
    pub bits_ratio: Option<f64>,
    /// `round(log10(bits_ratio))`.
    pub orders_of_magnitude: Option<i64>,
    /// `log10` of the ratio of configuration counts.
    pub config_decimal_orders: f64,
}

impl ComparisonStatement {
    /// Bit counts within a factor of `sqrt(10)` of each other.
    pub fn same_order(&self) -> bool {
        self.orders_of_magnitude == Some(0)
    }
}

pub fn compare(a: Quantity, b: Quantity) -> ComparisonStatement {
    let bit_difference = a.bits - b.bits;
    let bits_ratio = (b.bits > 0.0 && a.bits > 0.0).then(|| a.bits / b.bits);
    ComparisonStatement {
        orders_of_magnitude: bits_ratio.map(|r| r.log10().round() as i64),
        config_decimal_orders: bit_difference * std::f64::consts::LOG10_2,
        bit_difference,
        bits_ratio,
        a,
        b,
    }
}

impl fmt::Display for ComparisonStatement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = (&self.a, &self.b);
        if self.bit_difference == 0.0 {
            return write!(
                f,
                "{} and {} have equal capacity ({} bits): zero difference",
                a.label,
                b.label,
                format_real(a.bits)
            );
        }
        let more = if self.bit_difference > 0.0 {
            "more"
        } else {
            "fewer"
        };
        write!(
            f,
            "{} encodes {} {} bits than {} ({} vs {} bits; ~{} vs ~{} transistors); ",
            a.label,
            format_real(self.bit_difference.abs()),
            more,
            b.label,
            format_real(a.bits),
            format_real(b.bits),
            transistor_equivalent(a.bits),
            transistor_equivalent(b.bits),
        )?;
        match (self.orders_of_magnitude, self.bits_ratio) {
            (Some(0), Some(r)) => write!(
                f,
                "same order of magnitude in bits (ratio {})",
                format_real(r)
            )?,
            (Some(n), Some(r)) => write!(
                f,
                "~{} order{} of magnitude {} expressive (ratio {}x in bits)",
                n.abs(),
                if n.abs() == 1 { "" } else { "s" },
                if n > 0 { "more" } else { "less" },
                format_real(r)
            )?,
            _ => write!(f, "ratio undefined (zero capacity)")?,
        }
        write!(
            f,
            "; ~10^{} times {} configurations",
            self.config_decimal_orders.abs().round() as u64,
            more
        )
    }
}
