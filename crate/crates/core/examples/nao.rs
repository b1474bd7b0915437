//! The NAO humanoid: the joint table alone, and the figure quoted with its
//! processor (which also counts the elbows).

use expressivity::{capacity, find_builtin, processor_bits, transistor_equivalent};

fn main() {
    for name in ["nao_table1", "nao_as_printed"] {
        let entry = find_builtin(name).expect("built-in");
        let r = capacity(&entry.platform, false, None).expect("valid");
        println!(
            "{name}: {} DOF, {:.3} bits, {:.1}e{} configurations, ~{} transistors",
            entry.platform.dof_count(),
            r.bits,
            r.mantissa,
            r.decimal_exponent,
            transistor_equivalent(r.bits)
        );
        if let Some(cpu) = &entry.platform.processor {
            println!(
                "  processor {} holds {} bits",
                cpu.name,
                processor_bits(cpu)
            );
        }
    }
}
