use serde::Serialize;

use crate::graph::{Graph, VertexSet};

use super::SolveError;

/// The four neighbourhood regions of a vertex pair `u, v`:
/// `N(u) ∩ N(v)`, `V ∖ (N[u] ∪ N[v])`, `N(u) ∖ N[v]` and `N(v) ∖ N[u]`.
/// Together with `{u, v}` they partition `V(G)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairRegions {
    pub both: VertexSet,
    pub neither: VertexSet,
    pub u_only: VertexSet,
    pub v_only: VertexSet,
}

impl PairRegions {
    pub fn new(g: &Graph, u: usize, v: usize) -> PairRegions {
        let nu = g.neighbors(u);
        let nv = g.neighbors(v);
        let closed_u = g.closed_neighbors(u);
        let closed_v = g.closed_neighbors(v);
        PairRegions {
            both: nu.intersection(&nv),
            neither: closed_u.union(&closed_v).complement(),
            u_only: nu.difference(&closed_v),
            v_only: nv.difference(&closed_u),
        }
    }

    /// Regions in the fixed order both, neither, u-only, v-only.
    pub fn as_array(&self) -> [&VertexSet; 4] {
        [&self.both, &self.neither, &self.u_only, &self.v_only]
    }
}

/// The eight-way split of `V(G) ∖ {u, v}` induced by a solution `S` and two
/// of its vertices: each pair region cut into its part inside `S` (the `s_*`
/// sets) and outside `S` (the `t_*` sets).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EightRegions {
    pub u: usize,
    pub v: usize,
    pub s_both: VertexSet,
    pub s_neither: VertexSet,
    pub s_u_only: VertexSet,
    pub s_v_only: VertexSet,
    pub t_both: VertexSet,
    pub t_neither: VertexSet,
    pub t_u_only: VertexSet,
    pub t_v_only: VertexSet,
}

impl EightRegions {
    pub fn s_side(&self) -> [&VertexSet; 4] {
        [&self.s_both, &self.s_neither, &self.s_u_only, &self.s_v_only]
    }

    pub fn t_side(&self) -> [&VertexSet; 4] {
        [&self.t_both, &self.t_neither, &self.t_u_only, &self.t_v_only]
    }
}

pub fn pair_regions(g: &Graph, s: &VertexSet, u: usize, v: usize) -> Result<EightRegions, SolveError> {
    if s.cap() != g.n() {
        return Err(SolveError::Graph(crate::graph::GraphError::CapMismatch {
            expected: g.n(),
            got: s.cap(),
        }));
    }
    if u == v || !s.contains(u) || !s.contains(v) {
        return Err(SolveError::BadPair { u, v });
    }
    let r = PairRegions::new(g, u, v);
    let rest = s.complement();
    Ok(EightRegions {
        u,
        v,
        s_both: r.both.intersection(s),
        s_neither: r.neither.intersection(s),
        s_u_only: r.u_only.intersection(s),
        s_v_only: r.v_only.intersection(s),
        t_both: r.both.intersection(&rest),
        t_neither: r.neither.intersection(&rest),
        t_u_only: r.u_only.intersection(&rest),
        t_v_only: r.v_only.intersection(&rest),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4_three_in_s() {
        let g = Graph::complete(4);
        let s = VertexSet::from_indices(4, [0, 1, 2]);
        let r = pair_regions(&g, &s, 0, 1).unwrap();
        assert_eq!(r.s_both.to_vec(), vec![2]);
        assert_eq!(r.t_both.to_vec(), vec![3]);
        let others = [
            &r.s_neither,
            &r.s_u_only,
            &r.s_v_only,
            &r.t_neither,
            &r.t_u_only,
            &r.t_v_only,
        ];
        assert!(others.iter().all(|x| x.is_empty()));
    }

    #[test]
    fn pair_only_solution_has_empty_s_side() {
        let g = Graph::from_edges(5, &[(0, 2), (1, 3), (2, 4), (3, 4)]).unwrap();
        let s = VertexSet::from_indices(5, [0, 1]);
        let r = pair_regions(&g, &s, 0, 1).unwrap();
        assert!(r.s_side().iter().all(|x| x.is_empty()));
        assert_eq!(r.t_u_only.to_vec(), vec![2]);
        assert_eq!(r.t_v_only.to_vec(), vec![3]);
        assert_eq!(r.t_neither.to_vec(), vec![4]);
    }

    #[test]
    fn bad_pairs() {
        let g = Graph::complete(3);
        let s = VertexSet::from_indices(3, [0, 1]);
        assert_eq!(pair_regions(&g, &s, 0, 0), Err(SolveError::BadPair { u: 0, v: 0 }));
        assert_eq!(pair_regions(&g, &s, 0, 2), Err(SolveError::BadPair { u: 0, v: 2 }));
    }

    #[test]
    fn regions_partition_vertex_set() {
        let mut state = 7u64;
        for _ in 0..300 {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let n = 2 + (state >> 60) as usize;
            let g = Graph::from_pair_mask(n, state >> 3);
            let s = VertexSet::from_mask(n, (state >> 17) | 0b11);
            let r = pair_regions(&g, &s, 0, 1).unwrap();
            let mut seen = VertexSet::from_indices(n, [0, 1]);
            let mut total = 2;
            for part in r.s_side().into_iter().chain(r.t_side()) {
                assert!(part.is_disjoint(&seen));
                seen = seen.union(part);
                total += part.len();
            }
            assert_eq!(total, n);
            let s_union = r.s_side().into_iter().fold(VertexSet::from_indices(n, [0, 1]), |a, b| a.union(b));
            assert_eq!(s_union, s);
        }
    }
}
