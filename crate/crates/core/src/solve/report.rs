use std::time::Duration;

use serde::{Serialize, Serializer};

use crate::graph::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Status {
    Yes,
    No,
    /// A caller-supplied resource cap ran out before the search finished.
    Unknown,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct SolveStats {
    pub subsets_examined: u64,
    pub pairs_examined: u64,
    #[serde(serialize_with = "as_seconds")]
    pub elapsed: Duration,
}

fn as_seconds<S: Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

/// Outcome of one solver run. `solution` is present exactly when `status` is
/// `Yes`; `verified` records a post-hoc check of the target on `G ⊕ S`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SolveReport {
    pub status: Status,
    pub solution: Option<VertexSet>,
    pub stats: SolveStats,
    pub verified: bool,
}

impl SolveReport {
    pub(crate) fn yes(solution: VertexSet, stats: SolveStats, verified: bool) -> Self {
        SolveReport {
            status: Status::Yes,
            solution: Some(solution),
            stats,
            verified,
        }
    }

    pub(crate) fn no(stats: SolveStats) -> Self {
        SolveReport {
            status: Status::No,
            solution: None,
            stats,
            verified: false,
        }
    }

    pub(crate) fn unknown(stats: SolveStats) -> Self {
        SolveReport {
            status: Status::Unknown,
            solution: None,
            stats,
            verified: false,
        }
    }

    pub fn is_yes(&self) -> bool {
        self.status == Status::Yes
    }

    /// Equal in everything except wall-clock time.
    pub fn same_outcome(&self, other: &SolveReport) -> bool {
        self.status == other.status
            && self.solution == other.solution
            && self.verified == other.verified
            && self.stats.subsets_examined == other.stats.subsets_examined
            && self.stats.pairs_examined == other.stats.pairs_examined
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}
