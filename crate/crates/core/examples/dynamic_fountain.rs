//! Velocity states multiply a group's position states when dynamics are on.

use expressivity::{capacity, ActuatorGroup, PlatformSpec};

fn main() {
    let nozzles = PlatformSpec::new(
        "nozzle bank",
        vec![
            ActuatorGroup::span("swivel", 100, 160.0, 1.0).with_velocity_states(100),
            ActuatorGroup::discrete("valve", 100, 2),
        ],
    );
    let still = capacity(&nozzles, false, None).expect("valid");
    let moving = capacity(&nozzles, true, None).expect("valid");
    println!("positions only: {:.2} bits", still.bits);
    println!("with velocity:  {:.2} bits", moving.bits);
    println!(
        "added:          {:.2} bits (100 x log2 100)",
        moving.bits - still.bits
    );
}
