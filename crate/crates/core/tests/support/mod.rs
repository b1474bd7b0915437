//! Test-only oracles and generators, independent of the capacity engine.

#![allow(dead_code)]

pub mod published;

use expressivity::{ActuatorGroup, PlatformSpec};
use proptest::prelude::*;

/// Per-DOF state counts for a spec, computed without the engine: discrete
/// groups give their count, ranged groups are stepped through explicitly.
pub fn per_dof_states(p: &PlatformSpec, apply_dynamics: bool) -> Vec<u64> {
    let mut out = Vec::new();
    for g in &p.groups {
        let base = match g.states {
            expressivity::StateSpec::Discrete { num_states } => num_states,
            expressivity::StateSpec::Ranged {
                min,
                max,
                resolution,
            } => {
                // count the steps of width `resolution` that fit in [min, max]
                let mut steps = 0u64;
                let mut k = 1u64;
                while min + (k as f64) * resolution <= max + resolution * 1e-6 {
                    steps += 1;
                    k += 1;
                }
                steps
            }
        };
        let mult = match (apply_dynamics, g.dynamic) {
            (true, Some(d)) => d.velocity_states,
            _ => 1,
        };
        for _ in 0..g.count {
            out.push(base * mult);
        }
    }
    out
}

/// Walks every tuple in the Cartesian product of per-DOF state sets and
/// counts them. Gives up (returns None) past `limit` tuples.
pub fn enumerate_configurations(states: &[u64], limit: u64) -> Option<u64> {
    if states.contains(&0) {
        return Some(0);
    }
    let mut odometer = vec![0u64; states.len()];
    let mut seen = 0u64;
    loop {
        seen += 1;
        if seen > limit {
            return None;
        }
        let mut i = 0;
        loop {
            if i == odometer.len() {
                return Some(seen);
            }
            odometer[i] += 1;
            if odometer[i] < states[i] {
                break;
            }
            odometer[i] = 0;
            i += 1;
        }
    }
}

pub const RESOLUTIONS: [f64; 5] = [0.1, 0.25, 0.5, 1.0, 0.08];

/// A discrete or ranged group with a small state count.
pub fn small_group(label: String) -> impl Strategy<Value = ActuatorGroup> {
    let discrete = (1u64..=3, 1u64..=12).prop_map({
        let label = label.clone();
        move |(count, states)| ActuatorGroup::discrete(label.clone(), count, states)
    });
    let ranged = (1u64..=3, 0usize..RESOLUTIONS.len(), -40i64..40, 1u64..=12).prop_map(
        move |(count, ri, start, span)| {
            let res = RESOLUTIONS[ri];
            let min = start as f64 * res;
            let max = (start + span as i64) as f64 * res;
            ActuatorGroup::ranged(label.clone(), count, min, max, res)
        },
    );
    prop_oneof![discrete, ranged]
}

/// Platforms of 1..=4 small groups with at most 10^6 configurations.
pub fn small_platform() -> impl Strategy<Value = PlatformSpec> {
    (1usize..=4)
        .prop_flat_map(|n| {
            (0..n)
                .map(|i| small_group(format!("g{i}")))
                .collect::<Vec<_>>()
        })
        .prop_map(|groups| PlatformSpec::new("random", groups))
        .prop_filter("at most 10^6 configurations", |p| {
            let total: f64 = per_dof_states(p, false).iter().map(|&s| s as f64).product();
            total <= 1e6
        })
}

/// Larger ranged/discrete groups for invariants that do not enumerate.
pub fn any_group(label: String) -> impl Strategy<Value = ActuatorGroup> {
    let discrete = (1u64..=5000, 1u64..=100_000).prop_map({
        let label = label.clone();
        move |(count, states)| ActuatorGroup::discrete(label.clone(), count, states)
    });
    let ranged = (
        1u64..=500,
        0usize..RESOLUTIONS.len(),
        -2000i64..2000,
        1u64..=5000,
    )
        .prop_map(move |(count, ri, start, span)| {
            let res = RESOLUTIONS[ri];
            ActuatorGroup::ranged(
                label.clone(),
                count,
                start as f64 * res,
                (start + span as i64) as f64 * res,
                res,
            )
        });
    prop_oneof![discrete, ranged]
}

pub fn any_platform(name: &'static str) -> impl Strategy<Value = PlatformSpec> {
    (1usize..=8)
        .prop_flat_map(|n| {
            (0..n)
                .map(|i| any_group(format!("g{i}")))
                .collect::<Vec<_>>()
        })
        .prop_map(move |groups| PlatformSpec::new(name, groups))
}

pub fn rel_close(a: f64, b: f64, rel: f64) -> bool {
    (a - b).abs() <= rel * a.abs().max(b.abs()).max(1e-300)
}
