//! CSV tables for computation and mechanization over time.

use expressivity::{build_trend, builtin_platforms, builtin_years, emit_csv, Figure};

fn main() {
    let rows = build_trend(&builtin_platforms(), &builtin_years()).expect("built-ins are valid");
    for fig in [Figure::Fig1, Figure::Fig2, Figure::Fig3] {
        println!("# {fig:?}");
        print!("{}", emit_csv(&rows, fig));
    }
}
