//! Recomputes every published figure and shows how each one compares.

use expressivity::verify_paper;

fn main() {
    let report = verify_paper().expect("regressions evaluate");
    for r in &report.records {
        println!(
            "{:<11} printed {:>6} bits {:.1}e{:<6} computed {:>10.2} bits {:.2}e{:<6} {:<15} {}",
            r.id,
            r.printed_bits,
            r.printed_mantissa,
            r.printed_exponent,
            r.computed_bits,
            r.computed_mantissa,
            r.computed_exponent,
            r.status.as_str(),
            if r.as_expected() { "" } else { "(unexpected)" }
        );
    }
    println!("all as expected: {}", report.passed());
}
