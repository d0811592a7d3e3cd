//! Property sweeps over small graphs and formulas, each comparing two
//! independent computations. Cases run in parallel; results are reported in
//! case order and are identical for identical seeds.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::gadget::{
    assignment_from_solution, c8_gadget, cycle_inductive, k15_gadget, p7_gadget, p8_gadget, path_inductive,
    rebuild_from_roles, solution_from_assignment, star_inductive, GadgetError, GadgetInstance,
};
use crate::graph::{g6_encode, is_h_free, make_pattern, Graph, GraphError, PatternSpec, VertexSet};
use crate::sat::{brute_sat, emit_dimacs, CnfFormula, Literal, SatError};
use crate::solve::{brute_solve, kt_free_recognizer, solve_kt_free, SolveError, Status};
use crate::split::{enumerate_split_partitions, find_split_partition, ramsey_bound, SplitError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    /// `G ⊕ S` equals the complement of `complement(G) ⊕ S`.
    Gs,
    /// Brute force for `P_3`-free on `G` agrees with `co-P_3`-free on the complement.
    Dual,
    /// Polynomial `K_t`-free solver agrees with brute force.
    KtOracle,
    /// Split-partition enumeration agrees with a scan of all bipartitions.
    Split,
    /// Formula gadgets: sizes, role rebuild and forward soundness.
    Gadget,
    /// Inductive constructions preserve yes/no answers.
    Inductive,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Gs,
        Suite::Dual,
        Suite::KtOracle,
        Suite::Split,
        Suite::Gadget,
        Suite::Inductive,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Gs => "gs",
            Suite::Dual => "dual",
            Suite::KtOracle => "kt-oracle",
            Suite::Split => "split",
            Suite::Gadget => "gadget",
            Suite::Inductive => "inductive",
        }
    }

    pub fn default_max_n(self) -> usize {
        match self {
            Suite::Gs => 5,
            Suite::Dual | Suite::KtOracle | Suite::Split | Suite::Gadget => 6,
            Suite::Inductive => 3,
        }
    }

    /// Largest `max_n` accepted. For the gadget suite this bounds the
    /// number of formula variables.
    pub fn max_n_limit(self) -> usize {
        match self {
            Suite::Gs => 10,
            Suite::Dual => 9,
            Suite::KtOracle | Suite::Split => 12,
            Suite::Gadget => 8,
            Suite::Inductive => 3,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Suite, VerifyError> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| VerifyError::UnknownSuite(s.to_string()))
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VerifyError {
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error("suite {suite} accepts max-n in {min}..={limit}, got {max_n}")]
    MaxNOutOfRange { suite: Suite, max_n: usize, min: usize, limit: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error(transparent)]
    Split(#[from] SplitError),
    #[error(transparent)]
    Gadget(#[from] GadgetError),
    #[error(transparent)]
    Sat(#[from] SatError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    pub max_n: usize,
    pub seed: u64,
    /// Random cases per vertex count above the exhaustive range, or random
    /// formulas for the gadget suite.
    pub samples: usize,
}

impl VerifyConfig {
    pub fn for_suite(suite: Suite) -> VerifyConfig {
        VerifyConfig {
            max_n: suite.default_max_n(),
            seed: 0,
            samples: if suite == Suite::Gadget { 20 } else { 1000 },
        }
    }
}

/// A failing case: the graph (graph6), an optional vertex set and what went wrong.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub case: u64,
    pub graph6: String,
    pub set: Option<VertexSet>,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifySummary {
    pub suite: Suite,
    pub max_n: usize,
    pub seed: u64,
    pub cases: u64,
    pub failures: u64,
    /// The first few failures in case order.
    pub counterexamples: Vec<Counterexample>,
    pub elapsed: f64,
}

impl VerifySummary {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

const KEPT_COUNTEREXAMPLES: usize = 10;

/// Exhaustive graph enumeration stops at this many vertices (`2^21` graphs at 7).
const EXHAUSTIVE_PAIRS: usize = 21;

pub fn run_suite(suite: Suite, cfg: &VerifyConfig) -> Result<VerifySummary, VerifyError> {
    let min = if suite == Suite::Gadget { 4 } else { 0 };
    if cfg.max_n < min || cfg.max_n > suite.max_n_limit() {
        return Err(VerifyError::MaxNOutOfRange {
            suite,
            max_n: cfg.max_n,
            min,
            limit: suite.max_n_limit(),
        });
    }
    let started = Instant::now();
    let results: Vec<Option<Counterexample>> = match suite {
        Suite::Gadget => (0..cfg.samples as u64)
            .into_par_iter()
            .map(|case| gadget_case(case, cfg))
            .collect::<Result<_, _>>()?,
        Suite::Inductive => inductive_cases(cfg.max_n)
            .into_par_iter()
            .enumerate()
            .map(|(case, (gprime, kind))| inductive_case(case as u64, &gprime, kind))
            .collect::<Result<_, _>>()?,
        _ => {
            let source = GraphSource::new(cfg.max_n, cfg.samples, exhaustive_limit(suite));
            (0..source.len())
                .into_par_iter()
                .map(|case| {
                    let g = source.graph(case, cfg.seed);
                    Ok(check_graph(suite, &g)?.map(|(set, detail)| Counterexample {
                        case,
                        graph6: g6_encode(&g),
                        set,
                        detail,
                    }))
                })
                .collect::<Result<_, VerifyError>>()?
        }
    };
    let cases = results.len() as u64;
    let failed: Vec<Counterexample> = results.into_iter().flatten().collect();
    Ok(VerifySummary {
        suite,
        max_n: cfg.max_n,
        seed: cfg.seed,
        cases,
        failures: failed.len() as u64,
        counterexamples: failed.into_iter().take(KEPT_COUNTEREXAMPLES).collect(),
        elapsed: started.elapsed().as_secs_f64(),
    })
}

fn exhaustive_limit(suite: Suite) -> usize {
    match suite {
        Suite::KtOracle => 7,
        _ => 6,
    }
}

/// All labeled graphs up to the exhaustive vertex count, then `samples`
/// random graphs for each larger vertex count up to `max_n`.
struct GraphSource {
    /// `(n, first case index, exhaustive)`
    segments: Vec<(usize, u64, bool)>,
    total: u64,
}

impl GraphSource {
    fn new(max_n: usize, samples: usize, exhaustive_n: usize) -> GraphSource {
        let mut segments = Vec::new();
        let mut total = 0u64;
        for n in 0..=max_n {
            let pairs = n * n.saturating_sub(1) / 2;
            let exhaustive = n <= exhaustive_n && pairs <= EXHAUSTIVE_PAIRS;
            segments.push((n, total, exhaustive));
            total += if exhaustive { 1u64 << pairs } else { samples as u64 };
        }
        GraphSource { segments, total }
    }

    fn len(&self) -> u64 {
        self.total
    }

    fn graph(&self, case: u64, seed: u64) -> Graph {
        let &(n, start, exhaustive) = self
            .segments
            .iter()
            .rev()
            .find(|(_, start, _)| *start <= case)
            .expect("case index in range");
        if exhaustive {
            return Graph::from_pair_mask(n, case - start);
        }
        let mut rng = case_rng(seed, case);
        let mut g = Graph::empty(n);
        for v in 1..n {
            for u in 0..v {
                if rng.gen::<bool>() {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }
}

fn case_rng(seed: u64, case: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(case);
    rng
}

fn pattern(spec: PatternSpec) -> Graph {
    make_pattern(&spec).expect("fixed patterns are valid")
}

/// Runs one graph-based suite on `g`. `Some` describes a failure, with the
/// offending vertex set when there is one. Used for sweeps and to re-check
/// dumped counterexamples.
pub fn check_graph(suite: Suite, g: &Graph) -> Result<Option<(Option<VertexSet>, String)>, VerifyError> {
    match suite {
        Suite::Gs => Ok(check_gs(g)),
        Suite::Dual => Ok(check_dual(g)),
        Suite::KtOracle => check_kt_oracle(g),
        Suite::Split => check_split(g),
        Suite::Gadget | Suite::Inductive => Err(VerifyError::UnknownSuite(format!(
            "{suite} is not a graph suite"
        ))),
    }
}

fn check_gs(g: &Graph) -> Option<(Option<VertexSet>, String)> {
    let n = g.n();
    let co = g.complement();
    for mask in 0..1u64 << n {
        let s = VertexSet::from_mask(n, mask);
        let direct = g.subgraph_complement(&s).expect("cap matches");
        let via = co.subgraph_complement(&s).expect("cap matches").complement();
        if direct != via {
            return Some((Some(s), "G ⊕ S differs from complement(complement(G) ⊕ S)".into()));
        }
    }
    None
}

fn check_dual(g: &Graph) -> Option<(Option<VertexSet>, String)> {
    let h = pattern(PatternSpec::Path(3));
    let co_h = h.complement();
    let co_g = g.complement();
    let direct = brute_solve(g, &h, None);
    let dual = brute_solve(&co_g, &co_h, None);
    if direct.status != dual.status {
        return Some((None, format!("P3 on G gives {:?}, co-P3 on complement gives {:?}", direct.status, dual.status)));
    }
    if let Some(s) = direct.solution {
        let moved = co_g.subgraph_complement(&s).expect("cap matches");
        if !is_h_free(&moved, &co_h) {
            return Some((Some(s), "solution for G does not transfer to the complement".into()));
        }
    }
    None
}

fn check_kt_oracle(g: &Graph) -> Result<Option<(Option<VertexSet>, String)>, VerifyError> {
    // t = 4 on larger graphs, where K_3-targets are rarely yes
    let t = if g.n() <= 7 { 3 } else { 3 + g.n() % 2 };
    let fast = solve_kt_free(g, t, kt_free_recognizer(t))?;
    let slow = brute_solve(g, &Graph::complete(t), None);
    if slow.status == Status::Unknown {
        return Ok(None);
    }
    if fast.status != slow.status {
        return Ok(Some((
            None,
            format!("t={t}: solver says {:?}, brute force says {:?}", fast.status, slow.status),
        )));
    }
    if let Some(s) = fast.solution {
        if g.subgraph_complement(&s)?.has_clique(t) {
            return Ok(Some((Some(s), format!("t={t}: returned set leaves a K_{t}"))));
        }
    }
    Ok(None)
}

fn check_split(g: &Graph) -> Result<Option<(Option<VertexSet>, String)>, VerifyError> {
    let n = g.n();
    for (p, q) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
        let oracle: Vec<u64> = (0..1u64 << n)
            .filter(|&mask| {
                let part_p = VertexSet::from_mask(n, mask);
                let part_q = part_p.complement();
                g.find_clique(&part_p, p + 1).is_none() && g.find_independent_set(&part_q, q + 1).is_none()
            })
            .collect();
        let seed = find_split_partition(g, p, q)?;
        let found: Vec<u64> = match &seed {
            None => Vec::new(),
            Some(seed) => enumerate_split_partitions(g, p, q, seed)?
                .iter()
                .map(|part| part.part_p.to_mask())
                .collect(),
        };
        if found != oracle {
            return Ok(Some((None, format!("({p},{q}): enumeration {found:?} vs oracle {oracle:?}"))));
        }
        if !found.is_empty() {
            let r = ramsey_bound(p + 1, q + 1)?.value;
            let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
            for &a in &found {
                for &b in &found {
                    // |P_a ∩ Q_b|, which also covers |P_b ∩ Q_a| when the pair is swapped
                    if (a & !b & all).count_ones() as usize >= r {
                        return Ok(Some((
                            Some(VertexSet::from_mask(n, b)),
                            format!("({p},{q}): two partitions differ by more than R-1 = {}", r - 1),
                        )));
                    }
                }
            }
            // (X, Y) guess count; at most n^(2R) once n >= 2
            let guesses: f64 = (0..r.min(n + 1)).map(|i| binomial(n, i)).sum::<f64>().powi(2);
            let power = (n as f64).powi(2 * r as i32);
            let count = found.len() as f64;
            if count > guesses || (n >= 2 && count > power) {
                return Ok(Some((None, format!("({p},{q}): {} partitions exceed the bound", found.len()))));
            }
        }
    }
    Ok(None)
}

fn binomial(n: usize, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// A random exact 4-CNF formula with `4..=max_vars` variables and 1 to 3
/// clauses that has an assignment with two true literals per clause.
pub fn random_satisfiable_formula<R: Rng>(rng: &mut R, max_vars: usize) -> CnfFormula {
    loop {
        let n = rng.gen_range(4..=max_vars.max(4));
        let m = rng.gen_range(1..=3);
        let clauses = (0..m)
            .map(|_| {
                sample(rng, n, 4)
                    .iter()
                    .map(|v| Literal {
                        var: v + 1,
                        positive: rng.gen(),
                    })
                    .collect()
            })
            .collect();
        let phi = CnfFormula::new(n, 4, clauses).expect("distinct variables in range");
        if matches!(brute_sat(&phi, 2), Ok(Some(_))) {
            return phi;
        }
    }
}

type Builder = fn(&CnfFormula) -> Result<GadgetInstance, GadgetError>;

pub const FORMULA_GADGETS: [(&str, Builder); 4] = [
    ("k15", k15_gadget),
    ("p7", p7_gadget),
    ("p8", p8_gadget),
    ("c8", c8_gadget),
];

fn gadget_case(case: u64, cfg: &VerifyConfig) -> Result<Option<Counterexample>, VerifyError> {
    let mut rng = case_rng(cfg.seed, case);
    let phi = random_satisfiable_formula(&mut rng, cfg.max_n);
    let a = brute_sat(&phi, 2)?.expect("formula was drawn satisfiable");
    for (name, build) in FORMULA_GADGETS {
        let inst = build(&phi)?;
        let fail = |set: Option<VertexSet>, what: &str| {
            Some(Counterexample {
                case,
                graph6: g6_encode(&inst.graph),
                set,
                detail: format!("{name}: {what}; formula:\n{}", emit_dimacs(&phi)),
            })
        };
        if inst.graph.n() != inst.expected_size() {
            return Ok(fail(None, "vertex count differs from the size formula"));
        }
        if rebuild_from_roles(&inst) != inst.graph {
            return Ok(fail(None, "role rebuild differs from the built graph"));
        }
        let s = solution_from_assignment(&inst, &a)?;
        let h = make_pattern(&inst.target())?;
        if !is_h_free(&inst.graph.subgraph_complement(&s)?, &h) {
            return Ok(fail(Some(s), "mapped assignment is not a solution"));
        }
        if assignment_from_solution(&inst, &s)? != a {
            return Ok(fail(Some(s), "assignment does not round-trip"));
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InductiveKind {
    Star,
    Path,
    Cycle,
}

impl InductiveKind {
    pub const ALL: [InductiveKind; 3] = [InductiveKind::Star, InductiveKind::Path, InductiveKind::Cycle];

    /// Least `t` for which the construction applies.
    pub fn min_t(self) -> usize {
        match self {
            InductiveKind::Star => 2,
            InductiveKind::Path => 3,
            InductiveKind::Cycle => 4,
        }
    }

    pub fn build(self, gprime: &Graph, t: usize) -> Result<GadgetInstance, GadgetError> {
        match self {
            InductiveKind::Star => star_inductive(gprime, t),
            InductiveKind::Path => path_inductive(gprime, t),
            InductiveKind::Cycle => cycle_inductive(gprime, t),
        }
    }
}

fn inductive_cases(max_n: usize) -> Vec<(Graph, InductiveKind)> {
    let mut out = Vec::new();
    for n in 0..=max_n {
        let pairs = n * n.saturating_sub(1) / 2;
        for mask in 0..1u64 << pairs {
            for kind in InductiveKind::ALL {
                out.push((Graph::from_pair_mask(n, mask), kind));
            }
        }
    }
    out
}

/// Double brute force on `(G′, source pattern)` and `(G, lifted pattern)`,
/// plus transfer of the source solution into `G`.
pub fn inductive_check(gprime: &Graph, kind: InductiveKind) -> Result<Option<(Option<VertexSet>, String)>, VerifyError> {
    let inst = kind.build(gprime, kind.min_t())?;
    let source = make_pattern(&inst.source_target().expect("inductive instance"))?;
    let target = make_pattern(&inst.target())?;
    let small = brute_solve(gprime, &source, None);
    let big = brute_solve(&inst.graph, &target, None);
    if small.status == Status::Unknown || big.status == Status::Unknown {
        return Ok(Some((None, "brute-force budget exhausted".into())));
    }
    if small.status != big.status {
        return Ok(Some((
            None,
            format!("{kind:?}: source {:?} but constructed {:?}", small.status, big.status),
        )));
    }
    if let Some(s) = small.solution {
        let lifted = VertexSet::from_indices(inst.graph.n(), s.iter());
        if !is_h_free(&inst.graph.subgraph_complement(&lifted)?, &target) {
            return Ok(Some((Some(lifted), format!("{kind:?}: source solution does not transfer"))));
        }
    }
    Ok(None)
}

fn inductive_case(case: u64, gprime: &Graph, kind: InductiveKind) -> Result<Option<Counterexample>, VerifyError> {
    Ok(inductive_check(gprime, kind)?.map(|(set, detail)| Counterexample {
        case,
        graph6: g6_encode(gprime),
        set,
        detail,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(suite: Suite, max_n: usize) -> VerifyConfig {
        VerifyConfig {
            max_n,
            ..VerifyConfig::for_suite(suite)
        }
    }

    #[test]
    fn small_sweeps_pass() {
        for (suite, max_n) in [(Suite::Gs, 4), (Suite::Dual, 4), (Suite::KtOracle, 5), (Suite::Split, 4)] {
            let summary = run_suite(suite, &cfg(suite, max_n)).unwrap();
            assert!(summary.passed(), "{suite}: {:?}", summary.counterexamples);
            let expected: u64 = (0..=max_n).map(|n| 1u64 << (n * n.saturating_sub(1) / 2)).sum();
            assert_eq!(summary.cases, expected);
        }
    }

    #[test]
    fn random_segments_are_reproducible() {
        let c = VerifyConfig { max_n: 8, seed: 9, samples: 5 };
        let a = GraphSource::new(c.max_n, c.samples, 6);
        assert_eq!(a.len(), (0..=6usize).map(|n| 1u64 << (n * n.saturating_sub(1) / 2)).sum::<u64>() + 10);
        let last = a.len() - 1;
        assert_eq!(a.graph(last, 9), a.graph(last, 9));
        assert_eq!(a.graph(last, 9).n(), 8);
        assert_ne!(a.graph(last, 9), a.graph(last, 10));
    }

    #[test]
    fn range_checks() {
        assert!(matches!(
            run_suite(Suite::Inductive, &cfg(Suite::Inductive, 4)),
            Err(VerifyError::MaxNOutOfRange { .. })
        ));
        assert!(matches!(
            run_suite(Suite::Gadget, &cfg(Suite::Gadget, 3)),
            Err(VerifyError::MaxNOutOfRange { min: 4, .. })
        ));
        assert_eq!("kt-oracle".parse::<Suite>().unwrap(), Suite::KtOracle);
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn graph_suite_dispatch() {
        let g = Graph::complete(3);
        for suite in [Suite::Gs, Suite::Dual, Suite::KtOracle, Suite::Split] {
            assert!(check_graph(suite, &g).unwrap().is_none(), "{suite}");
        }
        assert!(check_graph(Suite::Gadget, &g).is_err());
    }

    #[test]
    fn gadget_suite_small() {
        let summary = run_suite(Suite::Gadget, &VerifyConfig { max_n: 5, seed: 3, samples: 2 }).unwrap();
        assert!(summary.passed(), "{:?}", summary.counterexamples);
        assert_eq!(summary.cases, 2);
    }

    #[test]
    fn inductive_suite_two_vertices() {
        let summary = run_suite(Suite::Inductive, &cfg(Suite::Inductive, 2)).unwrap();
        assert!(summary.passed(), "{:?}", summary.counterexamples);
        assert_eq!(summary.cases, 3 * (1 + 1 + 2));
    }
}
