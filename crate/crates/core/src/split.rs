//! (p,q)-split graphs: recognition, enumeration of all split partitions from
//! one seed partition, and the Ramsey bounds that make enumeration finite.
//!
//! A (p,q)-split partition `(P, Q)` has `G[P]` free of `K_{p+1}` and `G[Q]`
//! free of an independent set of size `q + 1`.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, VertexSet, WORD};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SplitError {
    #[error("p and q must be at least 1 (got p={p}, q={q})")]
    InvalidArgs { p: usize, q: usize },
    #[error("seed is not a valid ({p},{q})-split partition of the graph")]
    InvalidSeed { p: usize, q: usize },
}

/// An upper bound on `R(p, q)`; `exact` when it is the known Ramsey number.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RamseyBound {
    pub p: usize,
    pub q: usize,
    pub value: usize,
    pub exact: bool,
}

// Known values R(a, b) for 3 <= a <= b.
const KNOWN: &[(usize, usize, usize)] = &[
    (3, 3, 6),
    (3, 4, 9),
    (3, 5, 14),
    (3, 6, 18),
    (3, 7, 23),
    (3, 8, 28),
    (3, 9, 36),
    (4, 4, 18),
    (4, 5, 25),
];

/// `R(p, q)` when known, otherwise the Erdős–Szekeres bound `C(p+q-2, p-1)`.
pub fn ramsey_bound(p: usize, q: usize) -> Result<RamseyBound, SplitError> {
    if p < 1 || q < 1 {
        return Err(SplitError::InvalidArgs { p, q });
    }
    let (a, b) = (p.min(q), p.max(q));
    let exact = match a {
        1 => Some(1),
        2 => Some(b),
        _ => KNOWN.iter().find(|k| k.0 == a && k.1 == b).map(|k| k.2),
    };
    let (value, exact) = match exact {
        Some(v) => (v, true),
        None => (binomial(p + q - 2, p - 1), false),
    };
    Ok(RamseyBound { p, q, value, exact })
}

fn binomial(n: usize, k: usize) -> usize {
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    usize::try_from(acc).unwrap_or(usize::MAX)
}

/// A `(P, Q)` bipartition witnessing a (p,q)-split graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct SplitPartition {
    pub p: usize,
    pub q: usize,
    #[serde(rename = "P")]
    pub part_p: VertexSet,
    #[serde(rename = "Q")]
    pub part_q: VertexSet,
}

impl SplitPartition {
    /// Checks all partition invariants against `g`.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        self.part_p.cap() == g.n()
            && self.part_q.cap() == g.n()
            && self.part_p.is_disjoint(&self.part_q)
            && self.part_p.union(&self.part_q).len() == g.n()
            && side_ok(g, self.p, self.q, &self.part_p, &self.part_q)
    }
}

fn side_ok(g: &Graph, p: usize, q: usize, part_p: &VertexSet, part_q: &VertexSet) -> bool {
    g.find_clique(part_p, p + 1).is_none() && g.find_independent_set(part_q, q + 1).is_none()
}

/// Finds some (p,q)-split partition of `g`, or `None` if `g` is not (p,q)-split.
///
/// Branching: while `G[P]` has a `K_{p+1}`, one of its vertices must go to
/// `Q`; try each in turn, pinning earlier ones to `P` so no partition is
/// reached twice. Branches whose `Q` already holds `q + 1` independent
/// vertices are cut.
pub fn find_split_partition(
    g: &Graph,
    p: usize,
    q: usize,
) -> Result<Option<SplitPartition>, SplitError> {
    if p < 1 || q < 1 {
        return Err(SplitError::InvalidArgs { p, q });
    }
    let n = g.n();
    let found = branch(g, p, q, g.vertices(), VertexSet::empty(n), VertexSet::empty(n));
    Ok(found.map(|(part_p, part_q)| SplitPartition {
        p,
        q,
        part_p,
        part_q,
    }))
}

fn branch(
    g: &Graph,
    p: usize,
    q: usize,
    part_p: VertexSet,
    pinned: VertexSet,
    part_q: VertexSet,
) -> Option<(VertexSet, VertexSet)> {
    let Some(clique) = g.find_clique(&part_p, p + 1) else {
        return Some((part_p, part_q));
    };
    let mut pinned = pinned;
    for v in clique {
        if pinned.contains(v) {
            continue;
        }
        let mut next_q = part_q.clone();
        next_q.insert(v);
        if g.find_independent_set(&next_q, q + 1).is_none() {
            let mut next_p = part_p.clone();
            next_p.remove(v);
            if let Some(found) = branch(g, p, q, next_p, pinned.clone(), next_q) {
                return Some(found);
            }
        }
        pinned.insert(v);
    }
    None
}

/// All (p,q)-split partitions of `g`, each exactly once, sorted by the `P` bitmask.
///
/// Every other partition `(P', Q')` differs from the seed by moving a set
/// `X ⊆ P` and a set `Y ⊆ Q` of fewer than `R(p+1, q+1)` vertices each, so it
/// suffices to try every such pair and keep the valid results.
pub fn enumerate_split_partitions(
    g: &Graph,
    p: usize,
    q: usize,
    seed: &SplitPartition,
) -> Result<Vec<SplitPartition>, SplitError> {
    if p < 1 || q < 1 {
        return Err(SplitError::InvalidArgs { p, q });
    }
    let seed_ok = seed.p == p && seed.q == q && seed.is_valid_for(g);
    if !seed_ok {
        return Err(SplitError::InvalidSeed { p, q });
    }
    let limit = ramsey_bound(p + 1, q + 1)?.value - 1;
    let p_side = seed.part_p.to_vec();
    let q_side = seed.part_q.to_vec();

    let n = g.n();
    let mut out = Vec::new();
    // P' determines Q' as its complement, so each P' is checked once
    let mut check = |part_p: VertexSet| {
        let part_q = part_p.complement();
        if side_ok(g, p, q, &part_p, &part_q) {
            out.push(SplitPartition {
                p,
                q,
                part_p,
                part_q,
            });
        }
    };
    if n <= WORD {
        let xs = mask_subsets_up_to(&p_side, limit);
        let ys = mask_subsets_up_to(&q_side, limit);
        let base = seed.part_p.to_mask();
        let mut cands: Vec<u64> = Vec::with_capacity(xs.len() * ys.len());
        for x in &xs {
            cands.extend(ys.iter().map(|y| (base & !x) | y));
        }
        cands.sort_unstable();
        cands.dedup();
        for new_p in cands {
            check(VertexSet::from_mask(n, new_p));
        }
    } else {
        let xs = subsets_up_to(&p_side, limit);
        let ys = subsets_up_to(&q_side, limit);
        let mut seen = HashSet::new();
        for x in &xs {
            let kept_p = seed.part_p.difference(&VertexSet::from_indices(n, x.iter().copied()));
            for y in &ys {
                let new_p = kept_p.union(&VertexSet::from_indices(n, y.iter().copied()));
                if seen.insert(new_p.clone()) {
                    check(new_p);
                }
            }
        }
    }
    out.sort_by(|a, b| a.part_p.cmp_as_mask(&b.part_p));
    Ok(out)
}

/// Bitmasks of every subset of `items` (all below 64) with at most `limit` elements.
fn mask_subsets_up_to(items: &[usize], limit: usize) -> Vec<u64> {
    let mut out = vec![0u64];
    for &v in items {
        let len = out.len();
        for i in 0..len {
            if (out[i].count_ones() as usize) < limit {
                out.push(out[i] | 1 << v);
            }
        }
    }
    out
}

/// Every subset of `items` with at most `limit` elements.
fn subsets_up_to(items: &[usize], limit: usize) -> Vec<Vec<usize>> {
    fn go(items: &[usize], start: usize, limit: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(cur.clone());
        if cur.len() == limit {
            return;
        }
        for i in start..items.len() {
            cur.push(items[i]);
            go(items, i + 1, limit, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(items, 0, limit, &mut Vec::new(), &mut out);
    out
}
