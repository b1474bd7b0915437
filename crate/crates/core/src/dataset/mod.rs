//! Built-in platforms, processors, published regression values, and the
//! platform spec file format.

mod platforms;
mod regressions;
pub mod specfile;
mod years;

use serde::{Deserialize, Serialize};

use crate::model::{PlatformSpec, ProcessorSpec};

pub use regressions::{paper_regressions, RegressionEntry, VerifyStatus};
pub use specfile::{load_spec_file, parse_spec, save_spec_file, to_spec_string, SpecFileError};
pub use years::{builtin_years, YearTable};

/// Where a dataset entry's numbers come from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    /// Transcribed row-for-row from a published joint table.
    PaperTable,
    /// Reconstructed from a published product of powers.
    PaperEquationAsPrinted,
    /// Published values that the original authors estimated from observation.
    EstimatedByPaperAuthors,
    /// Loaded from a user file without a provenance tag.
    UserSupplied,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::PaperTable => "paper_table",
            Provenance::PaperEquationAsPrinted => "paper_equation_as_printed",
            Provenance::EstimatedByPaperAuthors => "estimated_by_paper_authors",
            Provenance::UserSupplied => "user_supplied",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DatasetEntry {
    pub platform: PlatformSpec,
    pub provenance: Provenance,
    pub notes: String,
}

impl DatasetEntry {
    pub fn name(&self) -> &str {
        &self.platform.name
    }
}

/// Every built-in platform, in a fixed order.
pub fn builtin_platforms() -> Vec<DatasetEntry> {
    platforms::all()
}

/// Looks a built-in up by name. Exact matches win; otherwise the comparison
/// ignores ASCII case.
pub fn find_builtin(name: &str) -> Option<DatasetEntry> {
    let all = builtin_platforms();
    if let Some(i) = all.iter().position(|e| e.name() == name) {
        return all.into_iter().nth(i);
    }
    all.into_iter()
        .find(|e| e.name().eq_ignore_ascii_case(name))
}

/// `(platform name, processor)` for every built-in that records one.
pub fn builtin_processors() -> Vec<(String, ProcessorSpec)> {
    builtin_platforms()
        .into_iter()
        .filter_map(|e| e.platform.processor.map(|p| (e.platform.name, p)))
        .collect()
}
