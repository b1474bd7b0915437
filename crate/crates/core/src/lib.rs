//! Information-theoretic expressivity of articulated platforms.
//!
//! A platform is described by groups of identical degrees of freedom. Its
//! *kinematic mechanization capacity* is the base-2 logarithm of the number of
//! distinct configurations it can take, reported in bits so that mechanisms
//! and processors (one bit per transistor) can be compared on the same scale.
//!
//! ```
//! use expressivity::{capacity, ActuatorGroup, PlatformSpec};
//!
//! let arm = PlatformSpec::new(
//!     "two servos and a gripper",
//!     vec![
//!         ActuatorGroup::ranged("servo", 2, 0.0, 360.0, 0.1),
//!         ActuatorGroup::discrete("gripper", 1, 2),
//!     ],
//! );
//! let r = capacity(&arm, false, None).unwrap();
//! assert_eq!(r.rounded_bits(), 25);
//! assert_eq!(r.decimal_exponent, 7);
//! ```
//!
//! Runnable walkthroughs live in `examples/`: `cargo run --example <name>`.

pub mod capacity;
pub mod cli;
pub mod dataset;
pub mod model;
pub mod numeric;
pub mod trend;
pub mod verify;

pub use capacity::{
    capacity, combine, effective_states, eval_factorization, processor_bits, states_per_dof,
    transistor_equivalent, CapacityError, ExactModeConfig,
};
pub use dataset::{
    builtin_platforms, builtin_processors, builtin_years, find_builtin, load_spec_file,
    paper_regressions, save_spec_file, DatasetEntry, Provenance, VerifyStatus,
};
pub use model::{
    validate, ActuatorGroup, CapacityResult, Dynamics, FactorizationExpr, GroupContribution,
    PlatformSpec, ProcessorSpec, StateSpec, Violation,
};
pub use numeric::decimal_magnitude;
pub use trend::{build_trend, compare, emit_csv, ComparisonStatement, Figure, Quantity, TrendRow};
pub use verify::{verify_paper, VerifyReport};
