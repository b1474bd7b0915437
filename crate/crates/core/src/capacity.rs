//! The capacity engine.
//!
//! A platform with groups `(M_i, R_i)` has `C = prod R_i^M_i` configurations
//! and a capacity of `K = log2(C) = sum M_i * log2(R_i)` bits. The log-domain
//! sum is always computed; the exact integer `C` is only materialized on
//! request and under a digit-count guard.
//!
//! States per DOF for a ranged joint are counted as intervals, not endpoints:
//! `-119.5..119.5` at `0.1` gives 2390 states, not 2391. Published joint tables
//! use this convention throughout.

use num_bigint::BigUint;
use num_traits::{One, Pow};
use thiserror::Error;

use crate::model::{
    validate, ActuatorGroup, CapacityResult, FactorizationExpr, GroupContribution, PlatformSpec,
    ProcessorSpec, StateSpec, Violation,
};
use crate::numeric::{compensated_sum, decimal_magnitude};

/// Relative tolerance for a range/resolution quotient to count as integral.
pub const INTEGRAL_QUOTIENT_TOLERANCE: f64 = 1e-6;

/// Largest state count accepted for a single DOF: integers above 2^53 are no
/// longer exact as `f64`.
pub const MAX_STATES: u64 = 1 << 53;

pub const DEFAULT_MAX_DECIMAL_DIGITS: u64 = 1_000_000;

#[derive(Debug, Error)]
pub enum CapacityError {
    #[error("group '{label}': range / resolution = {quotient} is not an integer")]
    NonIntegralRange { label: String, quotient: f64 },
    #[error("group '{label}': range is smaller than one resolution step")]
    EmptyRange { label: String },
    #[error("group '{label}': state count exceeds 2^53")]
    Overflow { label: String },
    #[error("invalid specification: {}", join_violations(.0))]
    Invalid(Vec<Violation>),
    #[error("exact count would have {predicted_digits} decimal digits (limit {max_digits})")]
    ExactTooLarge {
        predicted_digits: u64,
        max_digits: u64,
        /// The log-domain result, still valid.
        partial: Box<CapacityResult>,
    },
}

fn join_violations(v: &[Violation]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}

/// Guard for materializing exact configuration counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExactModeConfig {
    pub max_decimal_digits: u64,
}

impl Default for ExactModeConfig {
    fn default() -> Self {
        Self {
            max_decimal_digits: DEFAULT_MAX_DECIMAL_DIGITS,
        }
    }
}

impl ExactModeConfig {
    pub fn with_max_digits(max_decimal_digits: u64) -> Self {
        Self {
            max_decimal_digits: max_decimal_digits.max(1),
        }
    }
}

/// States per DOF: passthrough for discrete groups, `round((max - min) / resolution)`
/// for ranged ones.
pub fn states_per_dof(g: &ActuatorGroup) -> Result<u64, CapacityError> {
    match g.states {
        StateSpec::Discrete { num_states } => Ok(num_states),
        StateSpec::Ranged {
            min,
            max,
            resolution,
        } => {
            let quotient = (max - min) / resolution;
            if !quotient.is_finite() {
                return Err(CapacityError::NonIntegralRange {
                    label: g.label.clone(),
                    quotient,
                });
            }
            let nearest = quotient.round();
            if (quotient - nearest).abs() > INTEGRAL_QUOTIENT_TOLERANCE * nearest.abs().max(1.0) {
                return Err(CapacityError::NonIntegralRange {
                    label: g.label.clone(),
                    quotient,
                });
            }
            if nearest < 1.0 {
                return Err(CapacityError::EmptyRange {
                    label: g.label.clone(),
                });
            }
            if nearest > MAX_STATES as f64 {
                return Err(CapacityError::Overflow {
                    label: g.label.clone(),
                });
            }
            Ok(nearest as u64)
        }
    }
}

/// States per DOF including the velocity multiplier when `apply_dynamics` is set.
pub fn effective_states(g: &ActuatorGroup, apply_dynamics: bool) -> Result<u64, CapacityError> {
    let base = states_per_dof(g)?;
    match (apply_dynamics, g.dynamic) {
        (true, Some(d)) => base
            .checked_mul(d.velocity_states)
            .filter(|&s| s <= MAX_STATES)
            .ok_or_else(|| CapacityError::Overflow {
                label: g.label.clone(),
            }),
        _ => Ok(base),
    }
}

/// Capacity of one platform.
///
/// With `exact` set, the integer count is also built, unless its predicted
/// digit count exceeds the guard, in which case [`CapacityError::ExactTooLarge`]
/// carries the log-domain result.
pub fn capacity(
    platform: &PlatformSpec,
    apply_dynamics: bool,
    exact: Option<&ExactModeConfig>,
) -> Result<CapacityResult, CapacityError> {
    let violations = validate(platform);
    if !violations.is_empty() {
        return Err(CapacityError::Invalid(violations));
    }
    let breakdown = platform
        .groups
        .iter()
        .map(|g| {
            let states = effective_states(g, apply_dynamics)?;
            Ok(contribution(g.label.clone(), g.count, states))
        })
        .collect::<Result<Vec<_>, CapacityError>>()?;
    assemble(breakdown, exact)
}

/// Capacity of a processor in bits: its transistor count.
pub fn processor_bits(p: &ProcessorSpec) -> f64 {
    p.transistor_count as f64
}

/// Transistor count of a binary machine with the same capacity.
pub fn transistor_equivalent(bits: f64) -> u64 {
    if bits.is_finite() && bits > 0.0 {
        bits.round() as u64
    } else {
        0
    }
}

/// Capacity of several independent platforms taken together. Bits add; the
/// breakdown labels are prefixed with the platform name.
pub fn combine(platforms: &[PlatformSpec]) -> Result<CapacityResult, CapacityError> {
    let mut breakdown = Vec::new();
    for p in platforms {
        let r = capacity(p, false, None)?;
        breakdown.extend(r.breakdown.into_iter().map(|mut c| {
            c.label = format!("{}/{}", p.name, c.label);
            c
        }));
    }
    assemble(breakdown, None)
}

/// Evaluates a literal product of powers.
pub fn eval_factorization(
    f: &FactorizationExpr,
    exact: Option<&ExactModeConfig>,
) -> Result<CapacityResult, CapacityError> {
    let violations = f.validate();
    if !violations.is_empty() {
        return Err(CapacityError::Invalid(violations));
    }
    let breakdown = f
        .terms
        .iter()
        .map(|&(base, exp)| contribution(base.to_string(), exp, base))
        .collect();
    assemble(breakdown, exact)
}

fn contribution(label: String, count: u64, states: u64) -> GroupContribution {
    let bits = if count == 0 || states <= 1 {
        0.0
    } else {
        count as f64 * (states as f64).log2()
    };
    GroupContribution {
        label,
        count,
        states,
        bits,
    }
}

fn assemble(
    breakdown: Vec<GroupContribution>,
    exact: Option<&ExactModeConfig>,
) -> Result<CapacityResult, CapacityError> {
    let bits = compensated_sum(breakdown.iter().map(|c| c.bits));
    let (mantissa, decimal_exponent) = decimal_magnitude(bits);
    let mut result = CapacityResult {
        bits,
        decimal_exponent,
        mantissa,
        exact_count: None,
        breakdown,
    };
    let Some(cfg) = exact else {
        return Ok(result);
    };

    let predicted_digits = result.decimal_digits();
    if predicted_digits > cfg.max_decimal_digits {
        return Err(CapacityError::ExactTooLarge {
            predicted_digits,
            max_digits: cfg.max_decimal_digits,
            partial: Box::new(result),
        });
    }
    let count = exact_product(&result.breakdown);
    snap_exponent(&mut result, &count);
    result.exact_count = Some(count);
    Ok(result)
}

fn exact_product(breakdown: &[GroupContribution]) -> BigUint {
    breakdown.iter().fold(BigUint::one(), |acc, c| {
        if c.count == 0 || c.states == 1 {
            acc
        } else {
            acc * Pow::pow(BigUint::from(c.states), c.count)
        }
    })
}

// Near an exact power of ten the float exponent can land one off; the integer
// settles it.
fn snap_exponent(result: &mut CapacityResult, count: &BigUint) {
    let ten = BigUint::from(10u32);
    let exp = result.decimal_exponent.max(0) as u64;
    let lower = Pow::pow(&ten, exp);
    if *count < lower && exp > 0 {
        result.decimal_exponent -= 1;
        result.mantissa = (result.mantissa * 10.0).min(9.999_999_999_999);
    } else if *count >= &lower * &ten {
        result.decimal_exponent += 1;
        result.mantissa = (result.mantissa / 10.0).max(1.0);
    }
}
