//! End-to-end CLI behaviour: output, exit codes, determinism.

use std::path::Path;
use std::process::Command;

use expressivity::cli::{
    run_with_env, EXIT_EXACT_TOO_LARGE, EXIT_INVALID, EXIT_OK, EXIT_UNKNOWN, MAX_DIGITS_ENV,
};

struct Outcome {
    code: i32,
    stdout: String,
    stderr: String,
}

fn cli(args: &[&str], env: Option<&str>) -> Outcome {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("expressivity").chain(args.iter().copied());
    let code = run_with_env(argv, env, &mut out, &mut err);
    Outcome {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

fn write_spec(dir: &Path, name: &str, body: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path.to_string_lossy().into_owned()
}

const SIMPLE: &str = r#"{
  "name": "simple robot",
  "groups": [
    { "label": "servo", "count": 2, "min": 0, "max": 360, "resolution": 0.1 },
    { "label": "gripper", "count": 1, "states": 2 }
  ]
}"#;

#[test]
fn compute_from_spec_file() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(dir.path(), "simple.json", SIMPLE);
    let o = cli(&["compute", &spec, "--exact"], None);
    assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
    assert!(o.stdout.contains("25 bits (24.6)"), "{}", o.stdout);
    assert!(o.stdout.contains("25920000"), "{}", o.stdout);
}

#[test]
fn compute_builtin_summary() {
    let o = cli(&["compute", "nao_as_printed"], None);
    assert_eq!(o.code, EXIT_OK);
    assert!(
        o.stdout
            .starts_with("nao_as_printed: 238 bits (237.9), 4.1e71 configurations"),
        "{}",
        o.stdout
    );
}

#[test]
fn unknown_platform_exits_2() {
    let o = cli(&["compute", "no-such-robot"], None);
    assert_eq!(o.code, EXIT_UNKNOWN);
    assert!(o.stderr.contains("no-such-robot"));
}

#[test]
fn usage_error_exits_2() {
    assert_eq!(cli(&["frobnicate"], None).code, EXIT_UNKNOWN);
    assert_eq!(cli(&["trend", "--fig", "9"], None).code, EXIT_UNKNOWN);
}

#[test]
fn malformed_json_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(dir.path(), "broken.json", "{ \"name\": ");
    let o = cli(&["compute", &spec], None);
    assert_eq!(o.code, EXIT_UNKNOWN);
    assert!(o.stderr.contains("line"), "{}", o.stderr);
}

#[test]
fn invalid_spec_exits_3_and_names_the_group() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(
        dir.path(),
        "bad.json",
        r#"{"name": "bad", "groups": [{"label": "wrist", "count": 1, "min": 0, "max": 90, "resolution": 0}]}"#,
    );
    let o = cli(&["compute", &spec], None);
    assert_eq!(o.code, EXIT_INVALID);
    assert!(o.stderr.contains("wrist"), "{}", o.stderr);
}

#[test]
fn exact_guard_from_flag_and_env() {
    let flag = cli(
        &["compute", "bellagio_base", "--exact", "--max-digits", "100"],
        None,
    );
    assert_eq!(flag.code, EXIT_EXACT_TOO_LARGE);
    assert!(flag.stderr.contains("8240"), "{}", flag.stderr);

    let env = cli(&["compute", "bellagio_base", "--exact"], Some("100"));
    assert_eq!(env.code, EXIT_EXACT_TOO_LARGE);

    // the flag wins over the environment
    let both = cli(
        &[
            "compute",
            "bellagio_base",
            "--exact",
            "--max-digits",
            "10000",
        ],
        Some("100"),
    );
    assert_eq!(both.code, EXIT_OK, "{}", both.stderr);
}

#[test]
fn bad_env_value_warns_and_uses_default() {
    let o = cli(&["compute", "nao_as_printed", "--exact"], Some("lots"));
    assert_eq!(o.code, EXIT_OK);
    assert!(o.stderr.contains(MAX_DIGITS_ENV));
}

#[test]
fn verify_paper_exits_0() {
    let o = cli(&["verify-paper"], None);
    assert_eq!(o.code, EXIT_OK, "{}", o.stdout);
    for id in ["toy-simple", "eq3", "eq8", "eq8-alt"] {
        assert!(o.stdout.contains(id), "missing {id}");
    }
}

#[test]
fn list_shows_every_builtin() {
    let o = cli(&["list"], None);
    assert_eq!(o.code, EXIT_OK);
    assert!(o.stdout.lines().count() > 22);
    assert!(o.stdout.contains("Kismet"));
    let pretty = cli(&["list", "--pretty"], None);
    assert!(pretty.stdout.contains("47,000,000"), "{}", pretty.stdout);
}

#[test]
fn compare_against_transistors() {
    let o = cli(&["compare", "bellagio_base", "nao_as_printed"], None);
    assert_eq!(o.code, EXIT_OK);
    assert!(
        o.stdout.contains("~2 orders of magnitude more expressive"),
        "{}",
        o.stdout
    );
    let t = cli(&["compare", "bellagio_base", "transistors:29000"], None);
    assert!(t.stdout.contains("same order of magnitude"), "{}", t.stdout);
    assert_eq!(
        cli(&["compare", "x", "transistors:abc"], None).code,
        EXIT_UNKNOWN
    );
}

#[test]
fn trend_file_is_byte_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for p in [&a, &b] {
        let o = cli(&["trend", "--fig", "3", "--out", p.to_str().unwrap()], None);
        assert_eq!(o.code, EXIT_OK);
    }
    let (a, b) = (std::fs::read(a).unwrap(), std::fs::read(b).unwrap());
    assert_eq!(a, b);
    let text = String::from_utf8(a).unwrap();
    assert!(text.starts_with("name,comp_bits,mech_bits\n"));
    assert!(!text.contains('\r'));
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_expressivity");
    let ok = Command::new(bin)
        .args(["compute", "Roomba"])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(EXIT_OK));
    let missing = Command::new(bin)
        .args(["compute", "/no/such/file.json"])
        .output()
        .unwrap();
    assert_eq!(missing.status.code(), Some(EXIT_UNKNOWN));
    let guarded = Command::new(bin)
        .args(["compute", "bellagio_base", "--exact"])
        .env(MAX_DIGITS_ENV, "50")
        .output()
        .unwrap();
    assert_eq!(guarded.status.code(), Some(EXIT_EXACT_TOO_LARGE));
}
