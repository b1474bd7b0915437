//! Domain types shared by every other module, plus structural validation.
//!
//! Every type here is plain data. Construction never fails; [`validate`] walks a
//! [`PlatformSpec`] and reports each broken invariant as a [`Violation`].

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::capacity::states_per_dof;

/// How many states one degree of freedom in a group can take.
#[derive(Debug, Clone, PartialEq)]
pub enum StateSpec {
    /// State count given directly, e.g. an open/close gripper has 2.
    Discrete { num_states: u64 },
    /// Angular range in degrees, counted in steps of `resolution`.
    Ranged { min: f64, max: f64, resolution: f64 },
}

/// Optional velocity multiplier: each reachable position can be arrived at
/// with `velocity_states` visibly distinct speeds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Dynamics {
    pub velocity_states: u64,
}

/// `count` identical degrees of freedom that share one state description.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawGroup", into = "RawGroup")]
pub struct ActuatorGroup {
    pub label: String,
    pub count: u64,
    pub states: StateSpec,
    pub dynamic: Option<Dynamics>,
}

/// Flat on-disk form of a group: either `states`, or all of `min`, `max` and
/// `resolution`.
#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGroup {
    label: String,
    count: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    states: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    min: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    max: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    resolution: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    velocity_states: Option<u64>,
}

impl TryFrom<RawGroup> for ActuatorGroup {
    type Error = String;

    fn try_from(raw: RawGroup) -> Result<Self, String> {
        let states = match (raw.states, raw.min, raw.max, raw.resolution) {
            (Some(num_states), None, None, None) => StateSpec::Discrete { num_states },
            (None, Some(min), Some(max), Some(resolution)) => StateSpec::Ranged {
                min,
                max,
                resolution,
            },
            (Some(_), ..) => {
                return Err(format!(
                    "group '{}': `states` cannot be combined with `min`/`max`/`resolution`",
                    raw.label
                ))
            }
            (None, min, max, res) => {
                let missing: Vec<_> = [
                    ("min", min.is_none()),
                    ("max", max.is_none()),
                    ("resolution", res.is_none()),
                ]
                .into_iter()
                .filter_map(|(k, m)| m.then_some(k))
                .collect();
                return Err(format!(
                    "group '{}': need `states` or `min`/`max`/`resolution` (missing `{}`)",
                    raw.label,
                    missing.join("`, `")
                ));
            }
        };
        Ok(ActuatorGroup {
            label: raw.label,
            count: raw.count,
            states,
            dynamic: raw
                .velocity_states
                .map(|velocity_states| Dynamics { velocity_states }),
        })
    }
}

impl From<ActuatorGroup> for RawGroup {
    fn from(g: ActuatorGroup) -> Self {
        let (states, min, max, resolution) = match g.states {
            StateSpec::Discrete { num_states } => (Some(num_states), None, None, None),
            StateSpec::Ranged {
                min,
                max,
                resolution,
            } => (None, Some(min), Some(max), Some(resolution)),
        };
        RawGroup {
            label: g.label,
            count: g.count,
            states,
            min,
            max,
            resolution,
            velocity_states: g.dynamic.map(|d| d.velocity_states),
        }
    }
}

impl ActuatorGroup {
    pub fn discrete(label: impl Into<String>, count: u64, num_states: u64) -> Self {
        Self {
            label: label.into(),
            count,
            states: StateSpec::Discrete { num_states },
            dynamic: None,
        }
    }

    pub fn ranged(
        label: impl Into<String>,
        count: u64,
        min: f64,
        max: f64,
        resolution: f64,
    ) -> Self {
        Self {
            label: label.into(),
            count,
            states: StateSpec::Ranged {
                min,
                max,
                resolution,
            },
            dynamic: None,
        }
    }

    /// A ranged group whose range starts at zero, for rows that only give a span.
    pub fn span(label: impl Into<String>, count: u64, span: f64, resolution: f64) -> Self {
        Self::ranged(label, count, 0.0, span, resolution)
    }

    pub fn with_velocity_states(mut self, velocity_states: u64) -> Self {
        self.dynamic = Some(Dynamics { velocity_states });
        self
    }
}

/// Onboard computation, measured as a transistor count. Each transistor is a
/// binary degree of freedom, so the count is also the capacity in bits.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProcessorSpec {
    pub name: String,
    #[serde(rename = "transistors")]
    pub transistor_count: u64,
}

impl ProcessorSpec {
    pub fn new(name: impl Into<String>, transistor_count: u64) -> Self {
        Self {
            name: name.into(),
            transistor_count,
        }
    }
}

/// A named machine: its actuator groups and, optionally, its processor.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PlatformSpec {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub year: Option<i32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub processor: Option<ProcessorSpec>,
    pub groups: Vec<ActuatorGroup>,
}

impl PlatformSpec {
    pub fn new(name: impl Into<String>, groups: Vec<ActuatorGroup>) -> Self {
        Self {
            name: name.into(),
            year: None,
            processor: None,
            groups,
        }
    }

    pub fn with_processor(mut self, processor: ProcessorSpec) -> Self {
        self.processor = Some(processor);
        self
    }

    pub fn with_year(mut self, year: i32) -> Self {
        self.year = Some(year);
        self
    }

    /// Total number of degrees of freedom across all groups.
    pub fn dof_count(&self) -> u64 {
        self.groups.iter().map(|g| g.count).sum()
    }
}

/// One group's share of a capacity result.
#[derive(Debug, Clone, PartialEq)]
pub struct GroupContribution {
    pub label: String,
    pub count: u64,
    /// Effective states per DOF (after any velocity multiplier).
    pub states: u64,
    /// `count * log2(states)`.
    pub bits: f64,
}

/// Capacity of a platform or factorization, in bits and in decimal magnitude.
#[derive(Debug, Clone, PartialEq)]
pub struct CapacityResult {
    pub bits: f64,
    /// `floor(log10(C))` where C is the configuration count.
    pub decimal_exponent: i64,
    /// C ~= mantissa * 10^decimal_exponent, with mantissa in [1, 10).
    pub mantissa: f64,
    pub exact_count: Option<BigUint>,
    pub breakdown: Vec<GroupContribution>,
}

impl CapacityResult {
    /// Number of decimal digits in the configuration count.
    pub fn decimal_digits(&self) -> u64 {
        self.decimal_exponent.max(0) as u64 + 1
    }

    /// Bits rounded to the nearest integer, as the capacity is usually quoted.
    pub fn rounded_bits(&self) -> u64 {
        self.bits.round().max(0.0) as u64
    }
}

/// A literal product of powers, `base_1^exp_1 * base_2^exp_2 * ...`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorizationExpr {
    pub terms: Vec<(u64, u64)>,
}

impl FactorizationExpr {
    pub fn new(terms: impl Into<Vec<(u64, u64)>>) -> Self {
        Self {
            terms: terms.into(),
        }
    }

    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        if self.terms.is_empty() {
            out.push(Violation::new(None, "terms", "factorization has no terms"));
        }
        for (i, &(base, _)) in self.terms.iter().enumerate() {
            if base == 0 {
                out.push(Violation::new(
                    Some(format!("term {i}")),
                    "base",
                    "base must be at least 1",
                ));
            }
        }
        out
    }
}

impl fmt::Display for FactorizationExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (base, exp)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" x ")?;
            }
            write!(f, "{base}^{exp}")?;
        }
        Ok(())
    }
}

/// One broken invariant: which group (if any), which field, and what is wrong.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub group: Option<String>,
    pub field: String,
    pub message: String,
}

impl Violation {
    pub fn new(
        group: Option<String>,
        field: impl Into<String>,
        message: impl Into<String>,
    ) -> Self {
        Self {
            group,
            field: field.into(),
            message: message.into(),
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.group {
            Some(g) => write!(f, "group '{}': {}: {}", g, self.field, self.message),
            None => write!(f, "{}: {}", self.field, self.message),
        }
    }
}

/// Checks every invariant of a platform and returns all violations found.
///
/// Never panics, whatever the field values (NaN, infinities, zeros).
pub fn validate(platform: &PlatformSpec) -> Vec<Violation> {
    let mut out = Vec::new();

    if platform.name.trim().is_empty() {
        out.push(Violation::new(None, "name", "platform name is empty"));
    }
    if platform.groups.is_empty() {
        out.push(Violation::new(
            None,
            "groups",
            "platform has no actuator groups",
        ));
    }
    if let Some(p) = &platform.processor {
        if p.transistor_count == 0 {
            out.push(Violation::new(
                None,
                "processor.transistors",
                "transistor count must be at least 1",
            ));
        }
    }

    let mut seen = HashSet::new();
    for g in &platform.groups {
        let tag = Some(g.label.clone());
        if g.label.trim().is_empty() {
            out.push(Violation::new(tag.clone(), "label", "label is empty"));
        } else if !seen.insert(g.label.as_str()) {
            out.push(Violation::new(tag.clone(), "label", "duplicate label"));
        }
        if g.count == 0 {
            out.push(Violation::new(
                tag.clone(),
                "count",
                "count must be at least 1",
            ));
        }
        if let Some(d) = g.dynamic {
            if d.velocity_states == 0 {
                out.push(Violation::new(
                    tag.clone(),
                    "velocity_states",
                    "velocity_states must be at least 1",
                ));
            }
        }

        match g.states {
            StateSpec::Discrete { num_states } => {
                if num_states == 0 {
                    out.push(Violation::new(
                        tag,
                        "states",
                        "state count must be at least 1",
                    ));
                }
            }
            StateSpec::Ranged {
                min,
                max,
                resolution,
            } => {
                let mut ok = true;
                for (field, v) in [("min", min), ("max", max), ("resolution", resolution)] {
                    if !v.is_finite() {
                        out.push(Violation::new(tag.clone(), field, "value is not finite"));
                        ok = false;
                    }
                }
                if ok && max <= min {
                    out.push(Violation::new(tag.clone(), "max", "max must exceed min"));
                    ok = false;
                }
                if ok && resolution <= 0.0 {
                    out.push(Violation::new(
                        tag.clone(),
                        "resolution",
                        "resolution must be positive",
                    ));
                    ok = false;
                }
                if ok {
                    if let Err(e) = states_per_dof(g) {
                        out.push(Violation::new(tag, "resolution", e.to_string()));
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one(group: ActuatorGroup) -> PlatformSpec {
        PlatformSpec::new("t", vec![group])
    }

    #[test]
    fn degenerate_range_is_one_violation() {
        let v = validate(&one(ActuatorGroup::ranged("j", 1, 5.0, 5.0, 0.1)));
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].group.as_deref(), Some("j"));
        assert_eq!(v[0].field, "max");
    }

    #[test]
    fn zero_count_is_one_violation() {
        let v = validate(&one(ActuatorGroup::discrete("g", 0, 2)));
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].field, "count");
    }

    #[test]
    fn zero_resolution_named() {
        let v = validate(&one(ActuatorGroup::ranged("wrist", 1, 0.0, 10.0, 0.0)));
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].field, "resolution");
        assert!(v[0].to_string().contains("wrist"));
    }

    #[test]
    fn nan_fields_do_not_panic() {
        let v = validate(&one(ActuatorGroup::ranged(
            "x",
            1,
            f64::NAN,
            f64::INFINITY,
            f64::NAN,
        )));
        assert_eq!(v.len(), 3);
    }

    #[test]
    fn dirty_quotient_is_reported() {
        let v = validate(&one(ActuatorGroup::ranged("e1", 1, -2.864, 150.0, 0.1)));
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].field, "resolution");
    }

    #[test]
    fn range_below_resolution_is_reported() {
        let v = validate(&one(ActuatorGroup::ranged("tiny", 1, 0.0, 0.04, 0.1)));
        assert_eq!(v.len(), 1);
    }

    #[test]
    fn duplicate_labels_and_empty_groups() {
        let p = PlatformSpec::new(
            "t",
            vec![
                ActuatorGroup::discrete("a", 1, 2),
                ActuatorGroup::discrete("a", 1, 3),
            ],
        );
        assert_eq!(validate(&p).len(), 1);
        assert_eq!(validate(&PlatformSpec::new("t", vec![])).len(), 1);
    }

    #[test]
    fn zero_velocity_and_transistors() {
        let p = one(ActuatorGroup::discrete("a", 1, 2).with_velocity_states(0))
            .with_processor(ProcessorSpec::new("cpu", 0));
        let fields: Vec<_> = validate(&p).into_iter().map(|v| v.field).collect();
        assert_eq!(fields, ["processor.transistors", "velocity_states"]);
    }

    #[test]
    fn factorization_display() {
        let f = FactorizationExpr::new([(2, 3), (5, 0)]);
        assert_eq!(f.to_string(), "2^3 x 5^0");
        assert!(f.validate().is_empty());
        assert_eq!(FactorizationExpr::new([(0, 1)]).validate().len(), 1);
    }
}
