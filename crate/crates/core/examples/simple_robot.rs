//! Two 360-degree servos at 0.1-degree resolution plus an open/closed gripper.

use expressivity::{capacity, ActuatorGroup, ExactModeConfig, PlatformSpec};

fn main() {
    let robot = PlatformSpec::new(
        "simple robot",
        vec![
            ActuatorGroup::ranged("servo", 2, 0.0, 360.0, 0.1),
            ActuatorGroup::discrete("gripper", 1, 2),
        ],
    );
    let r = capacity(&robot, false, Some(&ExactModeConfig::default())).expect("valid spec");

    println!(
        "{}: {:.2} bits (rounded {})",
        robot.name,
        r.bits,
        r.rounded_bits()
    );
    println!("configurations: {:.1}e{}", r.mantissa, r.decimal_exponent);
    println!("exact: {}", r.exact_count.expect("exact mode requested"));
    for g in &r.breakdown {
        println!(
            "  {:<8} x{} at {:>5} states = {:.3} bits",
            g.label, g.count, g.states, g.bits
        );
    }
}
