//! Platform spec files.
//!
//! A spec file is a JSON document:
//!
//! ```json
//! {
//!   "name": "two-servo arm",
//!   "year": 2016,
//!   "processor": { "name": "ATmega328", "transistors": 1000000 },
//!   "groups": [
//!     { "label": "servo", "count": 2, "min": 0, "max": 360, "resolution": 0.1 },
//!     { "label": "gripper", "count": 1, "states": 2 }
//!   ]
//! }
//! ```
//!
//! `year` and `processor` are optional; a group may add `velocity_states`.
//! Files written by [`save_spec_file`] also carry `provenance` and `notes`.
//! Field names are case-sensitive and unknown fields are rejected.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{DatasetEntry, Provenance};
use crate::model::{validate, ActuatorGroup, PlatformSpec, ProcessorSpec, Violation};

#[derive(Debug, Error)]
pub enum SpecFileError {
    #[error("{}: {source}", .path.display())]
    Io { path: PathBuf, source: io::Error },
    #[error("{}: line {line}, column {column}: {message}", .path.display())]
    Parse {
        path: PathBuf,
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{}: {} violation(s): {}", .path.display(), .violations.len(), join(.violations))]
    Invalid {
        path: PathBuf,
        violations: Vec<Violation>,
    },
}

fn join(v: &[Violation]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SpecDocument {
    name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    year: Option<i32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    processor: Option<ProcessorSpec>,
    groups: Vec<ActuatorGroup>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    provenance: Option<Provenance>,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    notes: String,
}

impl From<&DatasetEntry> for SpecDocument {
    fn from(e: &DatasetEntry) -> Self {
        let p = e.platform.clone();
        SpecDocument {
            name: p.name,
            year: p.year,
            processor: p.processor,
            groups: p.groups,
            provenance: Some(e.provenance),
            notes: e.notes.clone(),
        }
    }
}

/// Parses and validates spec text. `origin` is only used in error messages.
pub fn parse_spec(text: &str, origin: &Path) -> Result<DatasetEntry, SpecFileError> {
    let doc: SpecDocument = serde_json::from_str(text).map_err(|e| SpecFileError::Parse {
        path: origin.to_path_buf(),
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let platform = PlatformSpec {
        name: doc.name,
        year: doc.year,
        processor: doc.processor,
        groups: doc.groups,
    };
    let violations = validate(&platform);
    if !violations.is_empty() {
        return Err(SpecFileError::Invalid {
            path: origin.to_path_buf(),
            violations,
        });
    }
    Ok(DatasetEntry {
        platform,
        provenance: doc.provenance.unwrap_or(Provenance::UserSupplied),
        notes: doc.notes,
    })
}

pub fn load_spec_file(path: impl AsRef<Path>) -> Result<DatasetEntry, SpecFileError> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|source| SpecFileError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_spec(&text, path)
}

/// Pretty-printed JSON with a trailing newline.
pub fn to_spec_string(entry: &DatasetEntry) -> String {
    let mut s = serde_json::to_string_pretty(&SpecDocument::from(entry))
        .expect("spec documents always serialize");
    s.push('\n');
    s
}

pub fn save_spec_file(entry: &DatasetEntry, path: impl AsRef<Path>) -> Result<(), SpecFileError> {
    let path = path.as_ref();
    fs::write(path, to_spec_string(entry)).map_err(|source| SpecFileError::Io {
        path: path.to_path_buf(),
        source,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dataset::find_builtin;

    fn parse(text: &str) -> Result<DatasetEntry, SpecFileError> {
        parse_spec(text, Path::new("test.json"))
    }

    #[test]
    fn round_trip_nao() {
        let nao = find_builtin("nao_table1").unwrap();
        let back = parse(&to_spec_string(&nao)).unwrap();
        assert_eq!(back, nao);
    }

    #[test]
    fn zero_resolution_names_the_group() {
        let err = parse(
            r#"{"name": "bad", "groups": [{"label": "wrist", "count": 1, "min": 0, "max": 90, "resolution": 0}]}"#,
        )
        .unwrap_err();
        match err {
            SpecFileError::Invalid { violations, .. } => {
                assert_eq!(violations.len(), 1);
                assert_eq!(violations[0].group.as_deref(), Some("wrist"));
            }
            other => panic!("{other}"),
        }
    }

    #[test]
    fn violations_reported_in_batch() {
        let err = parse(
            r#"{"name": "bad", "groups": [
                {"label": "a", "count": 0, "states": 2},
                {"label": "b", "count": 1, "states": 0}
            ]}"#,
        )
        .unwrap_err();
        assert!(
            matches!(err, SpecFileError::Invalid { ref violations, .. } if violations.len() == 2)
        );
    }

    #[test]
    fn parse_errors_carry_location() {
        let err = parse("{\n  \"name\": \"x\",\n  \"groups\": [\n    {\"label\": \"a\", \"count\": 1, \"min\": 0}\n  ]\n}")
            .unwrap_err();
        match err {
            SpecFileError::Parse { line, message, .. } => {
                assert!((4..=5).contains(&line), "line {line}");
                assert!(message.contains("max"), "{message}");
            }
            other => panic!("{other}"),
        }
        let err = parse(r#"{"name": "x", "groups": [], "Groups": []}"#).unwrap_err();
        assert!(matches!(err, SpecFileError::Parse { .. }));
    }

    #[test]
    fn defaults_for_user_files() {
        let e = parse(r#"{"name": "g", "groups": [{"label": "grip", "count": 1, "states": 2, "velocity_states": 3}]}"#)
            .unwrap();
        assert_eq!(e.provenance, Provenance::UserSupplied);
        assert_eq!(e.platform.groups[0].dynamic.unwrap().velocity_states, 3);
    }

    #[test]
    fn missing_file_is_io_error() {
        assert!(matches!(
            load_spec_file("/definitely/not/here.json"),
            Err(SpecFileError::Io { .. })
        ));
    }
}
