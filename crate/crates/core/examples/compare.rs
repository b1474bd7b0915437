//! Mechanical capacity against other platforms and against processors.

use expressivity::{capacity, compare, find_builtin, ProcessorSpec, Quantity};

fn quantity(name: &str) -> Quantity {
    let platform = find_builtin(name).expect("built-in").platform;
    Quantity::capacity(name, &capacity(&platform, false, None).expect("valid"))
}

fn main() {
    println!(
        "{}",
        compare(quantity("bellagio_base"), quantity("nao_as_printed"))
    );
    println!(
        "{}",
        compare(
            quantity("nao_as_printed"),
            Quantity::processor(&ProcessorSpec::new("256-transistor chip", 256))
        )
    );
    println!(
        "{}",
        compare(
            quantity("bellagio_base"),
            Quantity::processor(&ProcessorSpec::new("Intel 8086", 29_000))
        )
    );
    let s = compare(quantity("Roomba"), quantity("ASIMO"));
    println!("{s}\n  same order: {}", s.same_order());
}
