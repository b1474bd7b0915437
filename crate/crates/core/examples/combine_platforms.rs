//! Capacities add when independent platforms are treated as one system.

use expressivity::{capacity, combine, find_builtin};

fn main() {
    let names = ["Roomba", "Khepera IV", "KeepOn"];
    let platforms: Vec<_> = names
        .iter()
        .map(|n| find_builtin(n).expect("built-in").platform)
        .collect();
    for p in &platforms {
        println!(
            "{:<12} {:>8.3} bits",
            p.name,
            capacity(p, false, None).expect("valid").bits
        );
    }
    let all = combine(&platforms).expect("valid");
    println!("{:<12} {:>8.3} bits", "combined", all.bits);
    for g in &all.breakdown {
        println!("  {}", g.label);
    }
}
