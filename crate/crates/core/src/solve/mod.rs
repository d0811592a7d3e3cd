//! Solvers for "SC to 𝒢": given `G`, find `S` with `G ⊕ S ∈ 𝒢`.

mod brute;
mod complement_class;
mod kt_free;
mod regions;
mod report;

pub use brute::{brute_solve, brute_solve_with, DEFAULT_BRUTE_CAP};
pub use complement_class::solve_complement_class;
pub use kt_free::{
    degenerate_recognizer, kt_free_recognizer, solve_kt_free, solve_kt_free_with, KtFreeOptions,
};
pub use regions::{pair_regions, EightRegions, PairRegions};
pub use report::{SolveReport, SolveStats, Status};


use thiserror::Error;

use crate::graph::GraphError;
use crate::split::SplitError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error("t must be at least 1, got {0}")]
    InvalidT(usize),
    #[error("({u}, {v}) is not a pair of distinct vertices of S")]
    BadPair { u: usize, v: usize },
    #[error("recognizer accepted a graph containing K_{t}")]
    RecognizerInconsistent { t: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Split(#[from] SplitError),
}
