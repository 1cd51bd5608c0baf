//! Machine-readable run reports: one row per (system, algorithm).

use serde::Serialize;

use crate::engine::RunStats;
use crate::verify::VerificationReport;

/// One benchmark row. Serializes flat: the stats fields sit next to
/// `system` and `algorithm`, with `verified` null unless verification ran.
#[derive(Clone, Debug, Serialize)]
pub struct ReportRow {
    pub system: String,
    pub algorithm: String,
    #[serde(flatten)]
    pub stats: RunStats,
    pub timed_out: bool,
    pub verified: Option<VerificationReport>,
}

/// The full report for a CLI invocation.
#[derive(Clone, Debug, Default, Serialize)]
#[serde(transparent)]
pub struct BenchReport {
    pub rows: Vec<ReportRow>,
}

impl BenchReport {
    /// Every computation finished and every requested verification held.
    pub fn all_ok(&self) -> bool {
        self.rows
            .iter()
            .all(|r| !r.timed_out && r.verified.map_or(true, |v| v.is_ok()))
    }
}
