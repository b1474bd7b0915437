//! The Bellagio fountain under its successive modelling choices.

use expressivity::{capacity, find_builtin};

fn main() {
    let variants = [
        ("bellagio_base", false),
        ("bellagio_base", true),
        ("bellagio_all_oarsmen", false),
        ("bellagio_hi_res", false),
        ("bellagio_dynamic", true),
    ];
    for (name, dynamics) in variants {
        let entry = find_builtin(name).expect("built-in");
        let r = capacity(&entry.platform, dynamics, None).expect("valid");
        let tag = if dynamics { " +velocity" } else { "" };
        println!(
            "{name:<22}{tag:<10} {:>6} DOF  {:>10.2} bits  {:.1}e{}",
            entry.platform.dof_count(),
            r.bits,
            r.mantissa,
            r.decimal_exponent
        );
    }
}
