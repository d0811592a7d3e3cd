use proptest::prelude::*;
use subcomp::graph::{is_h_free, make_pattern, Graph, PatternSpec, VertexSet};
use subcomp::solve::{brute_solve, kt_free_recognizer, solve_kt_free, Status};

fn flip(adj: &[u32], s: u32) -> Vec<u32> {
    adj.iter()
        .enumerate()
        .map(|(v, &row)| if s >> v & 1 == 1 { row ^ (s & !(1 << v)) } else { row })
        .collect()
}

fn rows(g: &Graph) -> Vec<u32> {
    (0..g.n())
        .map(|v| (0..g.n()).filter(|&u| g.has_edge(u, v)).fold(0, |m, u| m | 1 << u))
        .collect()
}

fn triangle_free(adj: &[u32]) -> bool {
    (0..adj.len()).all(|v| {
        let later = adj[v] & !((2u32 << v) - 1);
        (0..adj.len()).filter(|&u| later >> u & 1 == 1).all(|u| adj[u] & later == 0)
    })
}

fn p3_free(adj: &[u32]) -> bool {
    (0..adj.len()).all(|v| (0..adj.len()).filter(|&u| adj[v] >> u & 1 == 1).all(|u| adj[u] | 1 << u == adj[v] | 1 << v))
}

/// Smallest solution in (cardinality, mask) order; singletons act like the empty set.
fn first_solution(adj: &[u32], free: fn(&[u32]) -> bool) -> Option<u32> {
    let n = adj.len();
    let mut all: Vec<u32> = (0..1u32 << n).filter(|s| s.count_ones() != 1).collect();
    all.sort_by_key(|&s| (s.count_ones(), s));
    all.into_iter().find(|&s| free(&flip(adj, s)))
}

#[test]
fn brute_force_returns_first_minimum_solution() {
    let cases: [(PatternSpec, fn(&[u32]) -> bool); 2] =
        [(PatternSpec::Complete(3), triangle_free), (PatternSpec::Path(3), p3_free)];
    for (spec, free) in cases {
        let h = make_pattern(&spec).unwrap();
        for n in 0..=6usize {
            for mask in 0..1u64 << (n * n.saturating_sub(1) / 2) {
                let g = Graph::from_pair_mask(n, mask);
                let report = brute_solve(&g, &h, None);
                let expected = first_solution(&rows(&g), free);
                let got = report.solution.as_ref().map(|s| s.to_mask() as u32);
                assert_eq!(got, expected, "{spec} on n={n} mask={mask:#x}");
            }
        }
    }
}

#[test]
fn reports_are_deterministic() {
    let k3 = make_pattern(&PatternSpec::Complete(3)).unwrap();
    for mask in (0..1u64 << 21).step_by(9973) {
        let g = Graph::from_pair_mask(7, mask);
        let a = solve_kt_free(&g, 3, kt_free_recognizer(3)).unwrap();
        let b = solve_kt_free(&g, 3, kt_free_recognizer(3)).unwrap();
        assert_eq!((a.status, &a.solution, a.verified), (b.status, &b.solution, b.verified));
        assert_eq!(a.stats.subsets_examined, b.stats.subsets_examined);
        let c = brute_solve(&g, &k3, None);
        let d = brute_solve(&g, &k3, None);
        assert_eq!(c.solution, d.solution);
    }
}

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
            let mask = bits.iter().enumerate().fold(0u64, |m, (i, &b)| m | u64::from(b) << i);
            Graph::from_pair_mask(n, mask)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn yes_answers_carry_valid_certificates(g in graph_strategy(10), t in 3usize..=4) {
        let report = solve_kt_free(&g, t, kt_free_recognizer(t)).unwrap();
        let kt = make_pattern(&PatternSpec::Complete(t)).unwrap();
        match report.status {
            Status::Yes => {
                let s: &VertexSet = report.solution.as_ref().unwrap();
                prop_assert!(report.verified);
                prop_assert!(is_h_free(&g.subgraph_complement(s).unwrap(), &kt));
            }
            Status::No => prop_assert!(report.solution.is_none()),
            Status::Unknown => prop_assert!(false, "the polynomial solver has no budget"),
        }
    }
}
