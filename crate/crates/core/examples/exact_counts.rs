//! Exact configuration counts as big integers, and the digit guard.

use expressivity::{capacity, find_builtin, CapacityError, ExactModeConfig};

fn main() {
    let fountain = find_builtin("bellagio_base").expect("built-in").platform;

    let r = capacity(&fountain, false, Some(&ExactModeConfig::default()))
        .expect("within default guard");
    let digits = r.exact_count.as_ref().expect("exact").to_string();
    println!(
        "{} digits, leading {}..., {:.2} bits",
        digits.len(),
        &digits[..12],
        r.bits
    );

    match capacity(
        &fountain,
        false,
        Some(&ExactModeConfig::with_max_digits(1000)),
    ) {
        Err(CapacityError::ExactTooLarge {
            predicted_digits,
            max_digits,
            partial,
        }) => println!(
            "refused: {predicted_digits} digits > {max_digits}; log-domain result still {:.2} bits",
            partial.bits
        ),
        other => println!("unexpected: {other:?}"),
    }
}
