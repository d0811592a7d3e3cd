//! Reduction gadgets: three inductive constructions lifting a source graph
//! `G′` to a larger target pattern, and four constructions turning an exact
//! 4-CNF formula into a graph for `K_{1,5}`, `P_7`, `P_8` and `C_8`.
//!
//! Layouts are fixed. Inductive: copies of `G′` at `0..n′`, then one block
//! `W_u` per source vertex in path or cycle order. Formula gadgets: one
//! contiguous block per variable, then the clause blocks in clause order.
//! All role indices are 0-based.

mod formula;
mod inductive;
mod rules;

use std::fmt;
use std::ops::Range;

use serde::Serialize;
use serde_json::json;
use thiserror::Error;

use crate::graph::{g6_encode, Graph, GraphError, PatternSpec, VertexSet};
use crate::sat::{check_threshold, emit_dimacs, Assignment, CnfFormula, Literal, SatError};

pub use formula::{c8_gadget, k15_gadget, p7_gadget, p8_gadget};
pub use inductive::{cycle_inductive, path_inductive, star_inductive};
pub use rules::rebuild_from_roles;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GadgetError {
    #[error("{kind} construction needs t >= {min}, got {t}")]
    InvalidT { kind: GadgetKind, t: usize, min: usize },
    #[error("{kind} construction needs an exact 4-CNF formula, got width {got}")]
    WrongWidth { kind: GadgetKind, got: usize },
    #[error("assignment leaves some clause with fewer than 2 true literals")]
    NotSatisfying,
    #[error("operation is undefined for {0} instances")]
    KindMismatch(GadgetKind),
    #[error(transparent)]
    Sat(#[from] SatError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum GadgetKind {
    StarInductive,
    PathInductive,
    CycleInductive,
    K15,
    P7,
    P8,
    C8,
}

impl GadgetKind {
    pub fn is_inductive(self) -> bool {
        matches!(
            self,
            GadgetKind::StarInductive | GadgetKind::PathInductive | GadgetKind::CycleInductive
        )
    }

    pub fn size_formula(self) -> &'static str {
        match self {
            GadgetKind::StarInductive | GadgetKind::PathInductive | GadgetKind::CycleInductive => {
                "n'(t+3)"
            }
            GadgetKind::K15 => "22n+5m",
            GadgetKind::P7 => "44n+21m",
            GadgetKind::P8 => "50n+32m",
            GadgetKind::C8 => "8n+48m",
        }
    }
}

impl fmt::Display for GadgetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// What a vertex stands for in its construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Role {
    /// Copy of source vertex `v`.
    Source { v: usize },
    /// Slot of `W_owner`. In the star construction the last slot is the
    /// special vertex `owner′`.
    Attached { owner: usize, slot: usize },
    /// `u_var` (positive) or `u′_var`.
    Literal { var: usize, positive: bool },
    /// Slot of hanging set `U_{var,set}` (positive) or `U′_{var,set}`.
    Hanging { var: usize, positive: bool, set: usize, slot: usize },
    /// Slot of the 4-clique `U_var` (positive) or `U′_var` in the `C_8` gadget.
    LiteralSet { var: usize, positive: bool, slot: usize },
    /// Slot of the block of `V_clause` attached to the literals at `positions`.
    Clause { clause: usize, positions: Vec<usize>, slot: usize },
}

impl Role {
    pub fn name(&self) -> &'static str {
        match self {
            Role::Source { .. } => "source",
            Role::Attached { .. } => "attached",
            Role::Literal { .. } => "literal",
            Role::Hanging { .. } => "hanging",
            Role::LiteralSet { .. } => "literal_set",
            Role::Clause { .. } => "clause",
        }
    }

    /// Flat index list; signs are 1 for positive, 0 for negative.
    pub fn indices(&self) -> Vec<usize> {
        let b = |p: bool| usize::from(p);
        match self {
            Role::Source { v } => vec![*v],
            Role::Attached { owner, slot } => vec![*owner, *slot],
            Role::Literal { var, positive } => vec![*var, b(*positive)],
            Role::Hanging { var, positive, set, slot } => vec![*var, b(*positive), *set, *slot],
            Role::LiteralSet { var, positive, slot } => vec![*var, b(*positive), *slot],
            Role::Clause { clause, positions, slot } => {
                let mut v = vec![*clause, *slot];
                v.extend(positions);
                v
            }
        }
    }

    /// Short human-readable label such as `u'2` or `V0{1,2}.3`.
    pub fn label(&self) -> String {
        let prime = |p: bool| if p { "" } else { "'" };
        match self {
            Role::Source { v } => format!("g{v}"),
            Role::Attached { owner, slot } => format!("W{owner}.{slot}"),
            Role::Literal { var, positive } => format!("u{}{var}", prime(*positive)),
            Role::Hanging { var, positive, set, slot } => {
                format!("U{}{var},{set}.{slot}", prime(*positive))
            }
            Role::LiteralSet { var, positive, slot } => format!("U{}{var}.{slot}", prime(*positive)),
            Role::Clause { clause, positions, slot } => {
                let p: Vec<String> = positions.iter().map(|p| p.to_string()).collect();
                format!("V{clause}{{{}}}.{slot}", p.join(","))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GadgetParams {
    Inductive { source: Graph, t: usize },
    Formula { phi: CnfFormula },
}

/// A contiguous vertex range that induces `pattern` in path or cycle order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub pattern: PatternSpec,
    pub vertices: Range<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetInstance {
    pub graph: Graph,
    pub kind: GadgetKind,
    pub params: GadgetParams,
    pub roles: Vec<Role>,
    pub blocks: Vec<Block>,
}

impl GadgetInstance {
    /// The closed-form vertex count for this kind and these parameters.
    pub fn expected_size(&self) -> usize {
        expected_size(self.kind, &self.params)
    }

    /// The pattern whose freeness the generated instance targets.
    pub fn target(&self) -> PatternSpec {
        match (self.kind, &self.params) {
            (GadgetKind::StarInductive, GadgetParams::Inductive { t, .. }) => PatternSpec::Star(t + 1),
            (GadgetKind::PathInductive, GadgetParams::Inductive { t, .. }) => PatternSpec::Path(t + 2),
            (GadgetKind::CycleInductive, GadgetParams::Inductive { t, .. }) => {
                PatternSpec::Cycle(t + 2)
            }
            (GadgetKind::K15, _) => PatternSpec::Star(5),
            (GadgetKind::P7, _) => PatternSpec::Path(7),
            (GadgetKind::P8, _) => PatternSpec::Path(8),
            (GadgetKind::C8, _) => PatternSpec::Cycle(8),
            _ => unreachable!("params always match kind"),
        }
    }

    /// For inductive instances, the pattern the source graph is tested against.
    pub fn source_target(&self) -> Option<PatternSpec> {
        match (self.kind, &self.params) {
            (GadgetKind::StarInductive, GadgetParams::Inductive { t, .. }) => Some(PatternSpec::Star(*t)),
            (GadgetKind::PathInductive | GadgetKind::CycleInductive, GadgetParams::Inductive { t, .. }) => {
                Some(PatternSpec::Path(*t))
            }
            _ => None,
        }
    }

    pub fn formula(&self) -> Option<&CnfFormula> {
        match &self.params {
            GadgetParams::Formula { phi } => Some(phi),
            GadgetParams::Inductive { .. } => None,
        }
    }

    pub fn labeled_graph(&self) -> Graph {
        self.graph
            .clone()
            .with_labels(self.roles.iter().map(Role::label).collect())
            .expect("one role per vertex")
    }

    fn vertices_where(&self, pred: impl Fn(&Role) -> bool) -> VertexSet {
        VertexSet::from_indices(
            self.graph.n(),
            self.roles.iter().enumerate().filter(|(_, r)| pred(r)).map(|(v, _)| v),
        )
    }

    /// Sidecar certificate: kind, parameters, one role record per vertex and
    /// the size-formula check.
    pub fn certificate(&self) -> serde_json::Value {
        let params = match &self.params {
            GadgetParams::Inductive { source, t } => json!({
                "t": t,
                "source_vertices": source.n(),
                "source_graph6": g6_encode(source),
            }),
            GadgetParams::Formula { phi } => json!({
                "num_vars": phi.num_vars(),
                "num_clauses": phi.num_clauses(),
                "width": phi.width(),
                "dimacs": emit_dimacs(phi),
            }),
        };
        let roles: Vec<serde_json::Value> = self
            .roles
            .iter()
            .enumerate()
            .map(|(v, r)| json!({"vertex": v, "role": r.name(), "indices": r.indices(), "label": r.label()}))
            .collect();
        let expected = self.expected_size();
        let mut cert = json!({
            "kind": self.kind,
            "params": params,
            "target": self.target().to_string(),
            "graph6": g6_encode(&self.graph),
            "roles": roles,
            "size_formula_check": {
                "formula": self.kind.size_formula(),
                "expected": expected,
                "actual": self.graph.n(),
                "ok": expected == self.graph.n(),
            },
        });
        if let Some(note) = literal_adjacency_note(self.kind) {
            cert["notes"] = json!([note]);
        }
        cert
    }
}

fn literal_adjacency_note(kind: GadgetKind) -> Option<&'static str> {
    match kind {
        GadgetKind::K15 => Some("u_i and u'_i are adjacent"),
        GadgetKind::P7 | GadgetKind::P8 => Some(
            "u_i and u'_i are nonadjacent; all literal vertices form an independent set; \
             each clause vertex is adjacent to every literal vertex whose literal is not in its clause",
        ),
        _ => None,
    }
}

pub(crate) fn expected_size(kind: GadgetKind, params: &GadgetParams) -> usize {
    match params {
        GadgetParams::Inductive { source, t } => source.n() * (t + 3),
        GadgetParams::Formula { phi } => {
            let (n, m) = (phi.num_vars(), phi.num_clauses());
            match kind {
                GadgetKind::K15 => 22 * n + 5 * m,
                GadgetKind::P7 => 44 * n + 21 * m,
                GadgetKind::P8 => 50 * n + 32 * m,
                GadgetKind::C8 => 8 * n + 48 * m,
                _ => unreachable!("params always match kind"),
            }
        }
    }
}

/// The vertex set encoding `a`: the true literal vertex of every variable, or
/// for `C_8` the whole true literal set.
pub fn solution_from_assignment(inst: &GadgetInstance, a: &Assignment) -> Result<VertexSet, GadgetError> {
    let phi = inst.formula().ok_or(GadgetError::KindMismatch(inst.kind))?;
    if !check_threshold(phi, a, 2)? {
        return Err(GadgetError::NotSatisfying);
    }
    let chosen = |var: usize, positive: bool| a.values[var] == positive;
    Ok(inst.vertices_where(|r| match *r {
        Role::Literal { var, positive } | Role::LiteralSet { var, positive, .. } => chosen(var, positive),
        _ => false,
    }))
}

/// Reads an assignment off a vertex set: `X_i` is true when `u_i ∈ s`, or for
/// `C_8` when `U_i ⊆ s`. `s` is not checked to be a solution.
pub fn assignment_from_solution(inst: &GadgetInstance, s: &VertexSet) -> Result<Assignment, GadgetError> {
    let phi = inst.formula().ok_or(GadgetError::KindMismatch(inst.kind))?;
    if s.cap() != inst.graph.n() {
        return Err(GraphError::CapMismatch {
            expected: inst.graph.n(),
            got: s.cap(),
        }
        .into());
    }
    let mut values = vec![inst.kind == GadgetKind::C8; phi.num_vars()];
    for (v, role) in inst.roles.iter().enumerate() {
        match *role {
            Role::Literal { var, positive: true } => values[var] = s.contains(v),
            Role::LiteralSet { var, positive: true, .. } => values[var] &= s.contains(v),
            _ => {}
        }
    }
    Ok(Assignment::new(values))
}

/// The literal at `pos` of clause `c`, with 0-based variable index.
pub(crate) fn clause_literal(phi: &CnfFormula, c: usize, pos: usize) -> (usize, bool) {
    let Literal { var, positive } = phi.clauses()[c][pos];
    (var - 1, positive)
}

/// Accumulates roles and pattern blocks, then lays the blocks into a graph.
#[derive(Default)]
pub(crate) struct Layout {
    roles: Vec<Role>,
    blocks: Vec<Block>,
}

impl Layout {
    pub(crate) fn push(&mut self, role: Role) -> usize {
        self.roles.push(role);
        self.roles.len() - 1
    }

    pub(crate) fn block(&mut self, pattern: PatternSpec, roles: impl IntoIterator<Item = Role>) -> Range<usize> {
        let start = self.roles.len();
        self.roles.extend(roles);
        let vertices = start..self.roles.len();
        debug_assert_eq!(vertices.len(), pattern.vertex_count());
        self.blocks.push(Block {
            pattern,
            vertices: vertices.clone(),
        });
        vertices
    }

    pub(crate) fn len(&self) -> usize {
        self.roles.len()
    }

    /// The graph holding exactly the block edges.
    pub(crate) fn finish(self) -> Result<(Graph, Vec<Role>, Vec<Block>), GraphError> {
        let mut g = Graph::empty(self.roles.len());
        for block in &self.blocks {
            let h = crate::graph::make_pattern(&block.pattern)?;
            for (a, b) in h.edges() {
                g.add_edge(block.vertices.start + a, block.vertices.start + b);
            }
        }
        Ok((g, self.roles, self.blocks))
    }
}

pub(crate) fn span(n: usize, r: &Range<usize>) -> VertexSet {
    VertexSet::from_indices(n, r.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{find_induced, make_pattern};

    fn phi_fixture() -> CnfFormula {
        CnfFormula::from_ints(4, 4, &[&[1, -2, 3, -4]]).unwrap()
    }

    fn blocks_induce_their_patterns(inst: &GadgetInstance) {
        for block in &inst.blocks {
            let set = span(inst.graph.n(), &block.vertices);
            let sub = inst.graph.induced(&set).unwrap();
            let h = make_pattern(&block.pattern).unwrap();
            assert_eq!(sub.edge_count(), h.edge_count(), "{}", block.pattern);
            assert!(find_induced(&sub, &h).is_some(), "{}", block.pattern);
        }
    }

    #[test]
    fn every_builder_matches_role_rebuild() {
        let gp = make_pattern(&"P3".parse().unwrap()).unwrap();
        let phi = phi_fixture();
        let insts = [
            star_inductive(&gp, 2).unwrap(),
            path_inductive(&gp, 3).unwrap(),
            cycle_inductive(&gp, 4).unwrap(),
            k15_gadget(&phi).unwrap(),
            p7_gadget(&phi).unwrap(),
            p8_gadget(&phi).unwrap(),
            c8_gadget(&phi).unwrap(),
        ];
        for inst in &insts {
            assert_eq!(inst.roles.len(), inst.graph.n());
            assert_eq!(inst.graph.n(), inst.expected_size(), "{}", inst.kind);
            assert_eq!(rebuild_from_roles(inst), inst.graph, "{}", inst.kind);
            blocks_induce_their_patterns(inst);
        }
    }

    #[test]
    fn mapping_round_trip() {
        let phi = phi_fixture();
        let a = Assignment::new(vec![true, false, false, true]);
        for inst in [k15_gadget(&phi).unwrap(), c8_gadget(&phi).unwrap()] {
            let s = solution_from_assignment(&inst, &a).unwrap();
            let per_var = if inst.kind == GadgetKind::C8 { 4 } else { 1 };
            assert_eq!(s.len(), 4 * per_var);
            assert_eq!(assignment_from_solution(&inst, &s).unwrap(), a);
            let empty = VertexSet::empty(inst.graph.n());
            assert_eq!(assignment_from_solution(&inst, &empty).unwrap(), Assignment::all(4, false));
        }
    }

    #[test]
    fn all_true_mapping_sizes() {
        let phi = phi_fixture();
        let a = Assignment::all(4, true);
        let k15 = k15_gadget(&phi).unwrap();
        let s = solution_from_assignment(&k15, &a).unwrap();
        let expect: Vec<usize> = (0..4).map(|i| 22 * i).collect();
        assert_eq!(s.to_vec(), expect);
        let c8 = c8_gadget(&phi).unwrap();
        assert_eq!(solution_from_assignment(&c8, &a).unwrap().len(), 16);
    }

    #[test]
    fn mapping_errors() {
        let phi = phi_fixture();
        let inst = p7_gadget(&phi).unwrap();
        // x1 false, x2 true, x3 false, x4 true: no literal of the clause is true
        let bad = Assignment::new(vec![false, true, false, true]);
        assert_eq!(solution_from_assignment(&inst, &bad), Err(GadgetError::NotSatisfying));
        let star = star_inductive(&Graph::complete(1), 2).unwrap();
        assert_eq!(
            solution_from_assignment(&star, &Assignment::all(0, true)),
            Err(GadgetError::KindMismatch(GadgetKind::StarInductive))
        );
        assert!(matches!(
            assignment_from_solution(&inst, &VertexSet::empty(3)),
            Err(GadgetError::Graph(GraphError::CapMismatch { .. }))
        ));
    }

    #[test]
    fn certificate_shape() {
        let inst = p8_gadget(&phi_fixture()).unwrap();
        let cert = inst.certificate();
        assert_eq!(cert["kind"], "P8");
        assert_eq!(cert["size_formula_check"]["expected"], 232);
        assert_eq!(cert["size_formula_check"]["ok"], true);
        assert_eq!(cert["roles"].as_array().unwrap().len(), 232);
        assert_eq!(cert["roles"][0]["role"], "literal");
        assert_eq!(cert["roles"][0]["indices"], json!([0, 1]));
        assert!(cert["notes"].is_array());
        let star = star_inductive(&Graph::complete(1), 2).unwrap();
        assert_eq!(star.certificate()["params"]["source_graph6"], "@");
    }
}
