use crate::graph::Graph;

use super::{SolveError, SolveReport, Status};

/// "SC to 𝒢̄" through a solver for "SC to 𝒢".
///
/// `G ⊕ S` lies in 𝒢̄ exactly when `Ḡ ⊕ S` lies in 𝒢, so the answer for `G`
/// is the base answer for `Ḡ` and a certificate carries over unchanged.
/// `in_base_class` is the membership test for 𝒢; the returned `verified`
/// flag is recomputed on the 𝒢̄ side as `complement(G ⊕ S) ∈ 𝒢`.
pub fn solve_complement_class<F, R>(
    g: &Graph,
    base_solve: F,
    in_base_class: R,
) -> Result<SolveReport, SolveError>
where
    F: FnOnce(&Graph) -> Result<SolveReport, SolveError>,
    R: Fn(&Graph) -> bool,
{
    let mut report = base_solve(&g.complement())?;
    if report.status == Status::Yes {
        let s = report
            .solution
            .as_ref()
            .expect("Yes report carries a solution");
        let flipped = g.subgraph_complement(s)?;
        report.verified = in_base_class(&flipped.complement());
    }
    Ok(report)
}
