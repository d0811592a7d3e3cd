use std::time::Instant;

use crate::graph::{is_h_free, Graph, VertexSet};

use super::{SolveReport, SolveStats};

/// Default subset budget for [`brute_solve`].
pub const DEFAULT_BRUTE_CAP: u64 = 1 << 26;

/// Tries every `S ⊆ V(G)` for "SC to H-free".
///
/// Subsets go by increasing size, and within a size by increasing bitmask,
/// so a `Yes` carries a minimum-cardinality solution. `cap` bounds the number
/// of subsets examined (default [`DEFAULT_BRUTE_CAP`]); running out gives
/// `Unknown`.
pub fn brute_solve(g: &Graph, h: &Graph, cap: Option<u64>) -> SolveReport {
    let target = PatternTarget::new(h);
    brute_solve_with(g, |x| target.accepts(x), cap)
}

/// [`brute_solve`] against an arbitrary graph class given by its membership test.
pub fn brute_solve_with<F>(g: &Graph, accepts: F, cap: Option<u64>) -> SolveReport
where
    F: Fn(&Graph) -> bool,
{
    let started = Instant::now();
    let cap = cap.unwrap_or(DEFAULT_BRUTE_CAP);
    let n = g.n();
    let mut stats = SolveStats::default();
    let mut scratch = g.clone();
    for k in 0..=n {
        // S with |S| <= 1 leaves G unchanged; examining S = ∅ covers them
        if k == 1 {
            continue;
        }
        let mut combo: Vec<usize> = (0..k).collect();
        loop {
            if stats.subsets_examined >= cap {
                stats.elapsed = started.elapsed();
                return SolveReport::unknown(stats);
            }
            stats.subsets_examined += 1;
            let s = VertexSet::from_indices(n, combo.iter().copied());
            g.subgraph_complement_into(&s, &mut scratch);
            if accepts(&scratch) {
                stats.elapsed = started.elapsed();
                return SolveReport::yes(s, stats, true);
            }
            if !next_colex(&mut combo, n) {
                break;
            }
        }
    }
    stats.elapsed = started.elapsed();
    SolveReport::no(stats)
}

/// Advances `combo` (strictly increasing indices below `n`) to the next
/// combination of the same size in colexicographic order, which is the
/// order of the corresponding bitmasks. Returns false after the last one.
pub(crate) fn next_colex(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    for i in 0..k {
        let limit = if i + 1 < k { combo[i + 1] } else { n };
        if combo[i] + 1 < limit {
            combo[i] += 1;
            for (j, c) in combo.iter_mut().enumerate().take(i) {
                *c = j;
            }
            return true;
        }
    }
    false
}

/// Membership test for "H-free", with direct clique and independent-set
/// searches when `H` is complete or edgeless.
pub(crate) enum PatternTarget<'a> {
    NoClique(usize),
    NoIndependent(usize),
    General(&'a Graph),
}

impl<'a> PatternTarget<'a> {
    pub(crate) fn new(h: &'a Graph) -> Self {
        let k = h.n();
        let pairs = k * k.saturating_sub(1) / 2;
        if k >= 1 && h.edge_count() == pairs {
            PatternTarget::NoClique(k)
        } else if k >= 2 && h.edge_count() == 0 {
            PatternTarget::NoIndependent(k)
        } else {
            PatternTarget::General(h)
        }
    }

    pub(crate) fn accepts(&self, g: &Graph) -> bool {
        match *self {
            PatternTarget::NoClique(k) => !g.has_clique(k),
            PatternTarget::NoIndependent(k) => g.find_independent_set(&g.vertices(), k).is_none(),
            PatternTarget::General(h) => is_h_free(g, h),
        }
    }
}
