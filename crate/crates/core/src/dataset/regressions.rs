//! Published products of powers and the values printed next to them.
//!
//! Each entry is transcribed as printed, including the known arithmetic slips.
//! Those carry an expected status other than `Match` instead of corrected data.

use crate::model::FactorizationExpr;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerifyStatus {
    Match,
    RoundingMatch,
    Mismatch,
}

impl VerifyStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            VerifyStatus::Match => "match",
            VerifyStatus::RoundingMatch => "rounding_match",
            VerifyStatus::Mismatch => "mismatch",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RegressionEntry {
    pub id: &'static str,
    pub factorization: FactorizationExpr,
    pub printed_bits: u64,
    pub printed_mantissa: f64,
    pub printed_exponent: i64,
    pub expected: VerifyStatus,
    pub note: &'static str,
}

fn entry(
    id: &'static str,
    terms: &[(u64, u64)],
    printed_bits: u64,
    printed_mantissa: f64,
    printed_exponent: i64,
) -> RegressionEntry {
    RegressionEntry {
        id,
        factorization: FactorizationExpr::new(terms),
        printed_bits,
        printed_mantissa,
        printed_exponent,
        expected: VerifyStatus::Match,
        note: "",
    }
}

pub fn paper_regressions() -> Vec<RegressionEntry> {
    vec![
        entry("toy-simple", &[(2, 1), (3600, 2)], 25, 2.6, 7),
        entry("toy-1", &[(2, 200)], 200, 1.6, 60),
        entry("toy-2", &[(3600, 10)], 118, 3.7, 35),
        RegressionEntry {
            expected: VerifyStatus::RoundingMatch,
            note: "gripper adds one bit: 119.1 bits and 7.3e35, printed as unchanged (118, 3.7e35)",
            ..entry("toy-3", &[(3600, 10), (2, 1)], 118, 3.7, 35)
        },
        entry(
            "eq3",
            &[
                (2, 2),
                (2390, 5),
                (680, 1),
                (940, 2),
                (865, 2),
                (2090, 2),
                (1076, 1),
                (669, 4),
                (1157, 2),
                (1263, 2),
                (1211, 2),
            ],
            238,
            4.1,
            71,
        ),
        entry(
            "eq4",
            &[(2, 1383), (160, 416), (13, 6200)],
            27_372,
            4.9,
            8239,
        ),
        entry(
            "eq5",
            &[(2, 1383), (160, 1383), (13, 6200)],
            34_452,
            1.2,
            10_371,
        ),
        entry(
            "eq6",
            &[(2, 1383), (1600, 1383), (13, 6200)],
            39_046,
            1.2,
            11_754,
        ),
        RegressionEntry {
            expected: VerifyStatus::Mismatch,
            note:
                "printed product evaluates to about 30,135 bits; the printed total matches eq8-alt",
            ..entry(
                "eq8",
                &[(2, 1383), (16_000, 416), (13, 6200)],
                43_640,
                1.2,
                13_137,
            )
        },
        RegressionEntry {
            note: "velocity multiplier applied to all 1383 cannons",
            ..entry(
                "eq8-alt",
                &[(2, 1383), (16_000, 1383), (13, 6200)],
                43_640,
                1.2,
                13_137,
            )
        },
    ]
}
