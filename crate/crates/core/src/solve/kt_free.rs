use std::time::Instant;

use crate::graph::{Graph, VertexSet};
use crate::split::{enumerate_split_partitions, find_split_partition};

use super::{PairRegions, SolveError, SolveReport, SolveStats};

#[derive(Debug, Clone, Copy)]
pub struct KtFreeOptions {
    /// Cross-check that every graph the recognizer accepts is `K_t`-free, and
    /// fail with [`SolveError::RecognizerInconsistent`] otherwise.
    pub check_recognizer: bool,
}

impl Default for KtFreeOptions {
    fn default() -> Self {
        KtFreeOptions {
            check_recognizer: cfg!(debug_assertions),
        }
    }
}

/// Membership test for `K_t`-free graphs, the default recognizer.
pub fn kt_free_recognizer(t: usize) -> impl Fn(&Graph) -> bool {
    move |g: &Graph| !g.has_clique(t)
}

/// Recognizer for `d`-degenerate graphs (null graph included).
pub fn degenerate_recognizer(d: usize) -> impl Fn(&Graph) -> bool {
    move |g: &Graph| g.degeneracy().map_or(true, |k| k <= d)
}

/// Polynomial-time "SC to 𝒢" for a class 𝒢 of `K_t`-free graphs, with
/// `recognizer` deciding membership in 𝒢.
///
/// If `G ⊕ S ∈ 𝒢` with `u, v ∈ S`, each pair region of `u, v` is a
/// (t-1,t-1)-split graph whose `S`-part is the `Q` side of one of its split
/// partitions. So for every pair the candidates are `{u, v}` plus one `Q`
/// from each region's partition list. Pairs and partition 4-tuples are
/// scanned in lexicographic order and the first accepted `S` is returned.
pub fn solve_kt_free<R>(g: &Graph, t: usize, recognizer: R) -> Result<SolveReport, SolveError>
where
    R: Fn(&Graph) -> bool,
{
    solve_kt_free_with(g, t, recognizer, KtFreeOptions::default())
}

pub fn solve_kt_free_with<R>(
    g: &Graph,
    t: usize,
    recognizer: R,
    opts: KtFreeOptions,
) -> Result<SolveReport, SolveError>
where
    R: Fn(&Graph) -> bool,
{
    if t < 1 {
        return Err(SolveError::InvalidT(t));
    }
    let started = Instant::now();
    let mut stats = SolveStats::default();
    let accepts = |x: &Graph| -> Result<bool, SolveError> {
        let ok = recognizer(x);
        if ok && opts.check_recognizer && x.has_clique(t) {
            return Err(SolveError::RecognizerInconsistent { t });
        }
        Ok(ok)
    };
    let n = g.n();

    stats.subsets_examined += 1;
    if accepts(g)? {
        stats.elapsed = started.elapsed();
        return Ok(SolveReport::yes(VertexSet::empty(n), stats, true));
    }
    // only the null graph is K_1-free, and ⊕ never changes the vertex count
    if t == 1 {
        stats.elapsed = started.elapsed();
        return Ok(SolveReport::no(stats));
    }

    let side = t - 1;
    let mut scratch = g.clone();
    for u in 0..n {
        for v in u + 1..n {
            stats.pairs_examined += 1;
            let Some(lists) = region_q_lists(g, u, v, side)? else {
                continue;
            };
            let base = VertexSet::from_indices(n, [u, v]);
            for qa in &lists[0] {
                let sa = base.union(qa);
                for qb in &lists[1] {
                    let sb = sa.union(qb);
                    for qc in &lists[2] {
                        let sc = sb.union(qc);
                        for qd in &lists[3] {
                            let s = sc.union(qd);
                            stats.subsets_examined += 1;
                            g.subgraph_complement_into(&s, &mut scratch);
                            if accepts(&scratch)? {
                                stats.elapsed = started.elapsed();
                                return Ok(SolveReport::yes(s, stats, true));
                            }
                        }
                    }
                }
            }
        }
    }
    stats.elapsed = started.elapsed();
    Ok(SolveReport::no(stats))
}

/// For each pair region, the `Q` sides of all its (side,side)-split partitions
/// lifted back to `G`'s indices; `None` if some region is not (side,side)-split.
fn region_q_lists(
    g: &Graph,
    u: usize,
    v: usize,
    side: usize,
) -> Result<Option<[Vec<VertexSet>; 4]>, SolveError> {
    let regions = PairRegions::new(g, u, v);
    let mut seeds = Vec::with_capacity(4);
    for region in regions.as_array() {
        let sub = g.induced(region)?;
        match find_split_partition(&sub, side, side)? {
            Some(seed) => seeds.push((region, sub, seed)),
            None => return Ok(None),
        }
    }
    let mut lists: [Vec<VertexSet>; 4] = Default::default();
    for (slot, (region, sub, seed)) in lists.iter_mut().zip(seeds) {
        let index: Vec<usize> = region.to_vec();
        *slot = enumerate_split_partitions(&sub, side, side, &seed)?
            .into_iter()
            .map(|part| VertexSet::from_indices(g.n(), part.part_q.iter().map(|i| index[i])))
            .collect();
    }
    Ok(Some(lists))
}
