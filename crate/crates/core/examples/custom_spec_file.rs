//! Loads a JSON spec file (default: examples/specs/two_servo_arm.json),
//! reports its capacity, and shows the errors produced by a bad file.

use std::path::Path;

use expressivity::dataset::parse_spec;
use expressivity::{capacity, load_spec_file, processor_bits};

fn main() {
    let path = std::env::args().nth(1).unwrap_or_else(|| {
        concat!(
            env!("CARGO_MANIFEST_DIR"),
            "/examples/specs/two_servo_arm.json"
        )
        .into()
    });
    let entry = match load_spec_file(&path) {
        Ok(e) => e,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(1);
        }
    };
    let r = capacity(&entry.platform, false, None).expect("validated on load");
    println!(
        "{} ({}): {:.2} bits",
        entry.name(),
        entry.provenance.as_str(),
        r.bits
    );
    if let Some(cpu) = &entry.platform.processor {
        println!("  {} holds {} bits", cpu.name, processor_bits(cpu));
    }

    let bad = r#"{"name": "bad", "groups": [
        {"label": "wrist", "count": 1, "min": 0, "max": 90, "resolution": 0},
        {"label": "elbow", "count": 0, "states": 4}
    ]}"#;
    if let Err(e) = parse_spec(bad, Path::new("inline.json")) {
        println!("rejected: {e}");
    }
}
