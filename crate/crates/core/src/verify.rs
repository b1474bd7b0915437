//! Recomputes every published regression value and classifies the agreement.

use std::thread;

use crate::capacity::{eval_factorization, CapacityError};
use crate::dataset::{paper_regressions, RegressionEntry, VerifyStatus};
use crate::model::CapacityResult;

/// Largest bit difference for a `Match`.
pub const MATCH_BITS_TOLERANCE: f64 = 0.5;
/// Largest mantissa difference for a `Match`.
pub const MATCH_MANTISSA_TOLERANCE: f64 = 0.05;
/// Largest bit difference for a `RoundingMatch`.
pub const ROUNDING_BITS_TOLERANCE: f64 = 1.5;

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyRecord {
    pub id: &'static str,
    pub computed_bits: f64,
    pub printed_bits: u64,
    pub bits_delta: f64,
    pub computed_mantissa: f64,
    pub computed_exponent: i64,
    pub printed_mantissa: f64,
    pub printed_exponent: i64,
    pub status: VerifyStatus,
    pub expected: VerifyStatus,
    pub note: &'static str,
}

impl VerifyRecord {
    pub fn as_expected(&self) -> bool {
        self.status == self.expected
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyReport {
    pub records: Vec<VerifyRecord>,
}

impl VerifyReport {
    /// True when every record has its expected status.
    pub fn passed(&self) -> bool {
        self.records.iter().all(VerifyRecord::as_expected)
    }

    pub fn get(&self, id: &str) -> Option<&VerifyRecord> {
        self.records.iter().find(|r| r.id == id)
    }
}

/// Agreement between a computed capacity and printed values.
pub fn classify(
    computed: &CapacityResult,
    printed_bits: u64,
    printed_mantissa: f64,
    printed_exponent: i64,
) -> VerifyStatus {
    let delta = (computed.bits - printed_bits as f64).abs();
    if delta <= MATCH_BITS_TOLERANCE
        && computed.decimal_exponent == printed_exponent
        && (computed.mantissa - printed_mantissa).abs() <= MATCH_MANTISSA_TOLERANCE
    {
        VerifyStatus::Match
    } else if delta <= ROUNDING_BITS_TOLERANCE {
        VerifyStatus::RoundingMatch
    } else {
        VerifyStatus::Mismatch
    }
}

pub fn verify_entry(entry: &RegressionEntry) -> Result<VerifyRecord, CapacityError> {
    let r = eval_factorization(&entry.factorization, None)?;
    Ok(VerifyRecord {
        id: entry.id,
        computed_bits: r.bits,
        printed_bits: entry.printed_bits,
        bits_delta: r.bits - entry.printed_bits as f64,
        computed_mantissa: r.mantissa,
        computed_exponent: r.decimal_exponent,
        printed_mantissa: entry.printed_mantissa,
        printed_exponent: entry.printed_exponent,
        status: classify(
            &r,
            entry.printed_bits,
            entry.printed_mantissa,
            entry.printed_exponent,
        ),
        expected: entry.expected,
        note: entry.note,
    })
}

/// Evaluates every built-in regression entry, one thread per entry.
pub fn verify_paper() -> Result<VerifyReport, CapacityError> {
    let entries = paper_regressions();
    let records = thread::scope(|s| {
        let handles: Vec<_> = entries
            .iter()
            .map(|e| s.spawn(move || verify_entry(e)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("verification thread panicked"))
            .collect::<Result<Vec<_>, _>>()
    })?;
    Ok(VerifyReport { records })
}
