//! Adjacency of two vertices decided from their roles alone. This is a
//! second, pairwise statement of every construction, checked against the
//! block-and-join builders.

use crate::graph::Graph;
use crate::sat::CnfFormula;

use super::{clause_literal, GadgetInstance, GadgetKind, GadgetParams, Role};

/// Rebuilds the instance graph from `kind`, `params` and `roles`.
pub fn rebuild_from_roles(inst: &GadgetInstance) -> Graph {
    let n = inst.roles.len();
    let mut g = Graph::empty(n);
    for a in 0..n {
        for b in a + 1..n {
            if adjacent(inst.kind, &inst.params, &inst.roles[a], &inst.roles[b]) {
                g.add_edge(a, b);
            }
        }
    }
    g
}

/// Adjacent in the complement of a path on `len` vertices, by path position.
fn co_path(x: usize, y: usize) -> bool {
    x.abs_diff(y) != 1
}

/// Adjacent in the complement of a cycle on `len` vertices.
fn co_cycle(x: usize, y: usize, len: usize) -> bool {
    let d = x.abs_diff(y);
    d != 1 && d != len - 1
}

fn adjacent(kind: GadgetKind, params: &GadgetParams, a: &Role, b: &Role) -> bool {
    match params {
        GadgetParams::Inductive { source, t } => inductive(kind, source, *t, a, b),
        GadgetParams::Formula { phi } => match kind {
            GadgetKind::K15 => k15(phi, a, b),
            GadgetKind::P7 | GadgetKind::P8 => path_family(phi, a, b),
            GadgetKind::C8 => c8(phi, a, b),
            _ => unreachable!("params always match kind"),
        },
    }
}

fn inductive(kind: GadgetKind, source: &Graph, t: usize, a: &Role, b: &Role) -> bool {
    let width = t + 2;
    match (a, b) {
        (Role::Source { v: x }, Role::Source { v: y }) => source.has_edge(*x, *y),
        (Role::Source { v }, Role::Attached { owner, slot }) | (Role::Attached { owner, slot }, Role::Source { v }) => {
            *owner == *v && !(kind == GadgetKind::StarInductive && *slot == width - 1)
        }
        (Role::Attached { owner: o1, slot: s1 }, Role::Attached { owner: o2, slot: s2 }) => {
            if o1 != o2 {
                return kind == GadgetKind::CycleInductive;
            }
            match kind {
                GadgetKind::StarInductive => true,
                GadgetKind::PathInductive => co_path(*s1, *s2),
                _ => co_cycle(*s1, *s2, width),
            }
        }
        _ => false,
    }
}

/// The literal `(var, positive)` occupies some position of clause `c` listed in `positions`.
fn attached_literal(phi: &CnfFormula, c: usize, positions: &[usize], var: usize, positive: bool) -> bool {
    positions.iter().any(|&p| clause_literal(phi, c, p) == (var, positive))
}

fn in_clause(phi: &CnfFormula, c: usize, var: usize, positive: bool) -> bool {
    attached_literal(phi, c, &[0, 1, 2, 3], var, positive)
}

fn k15(phi: &CnfFormula, a: &Role, b: &Role) -> bool {
    use Role::*;
    match (a, b) {
        (Literal { var: i, .. }, Literal { var: j, .. }) => i == j,
        (Literal { var: i, .. }, Hanging { var: j, set, .. }) | (Hanging { var: j, set, .. }, Literal { var: i, .. }) => {
            i == j && *set == 0
        }
        (Hanging { var: i, set: s, .. }, Hanging { var: j, set: r, .. }) => i == j && (s == r || *s == 0 || *r == 0),
        (Clause { .. }, Clause { .. }) => true,
        (Clause { clause, positions, .. }, Literal { var, positive })
        | (Literal { var, positive }, Clause { clause, positions, .. }) => {
            attached_literal(phi, *clause, positions, *var, *positive)
        }
        _ => false,
    }
}

fn path_family(phi: &CnfFormula, a: &Role, b: &Role) -> bool {
    use Role::*;
    match (a, b) {
        (Literal { .. }, Literal { .. }) => false,
        (Literal { var: i, positive: p }, Hanging { var: j, positive: q, set, .. })
        | (Hanging { var: j, positive: q, set, .. }, Literal { var: i, positive: p }) => {
            i != j || (p == q && *set == 0)
        }
        (
            Hanging { var: i, positive: p, set: s, slot: x },
            Hanging { var: j, positive: q, set: r, slot: y },
        ) => {
            if i != j {
                true
            } else if p != q {
                false
            } else if s == r {
                co_path(*x, *y)
            } else {
                s.abs_diff(*r) == 1
            }
        }
        (Hanging { .. }, Clause { .. }) | (Clause { .. }, Hanging { .. }) => true,
        (Clause { clause, positions, .. }, Literal { var, positive })
        | (Literal { var, positive }, Clause { clause, positions, .. }) => {
            if in_clause(phi, *clause, *var, *positive) {
                attached_literal(phi, *clause, positions, *var, *positive)
            } else {
                true
            }
        }
        (
            Clause { clause: c, positions: pa, slot: x },
            Clause { clause: d, positions: pb, slot: y },
        ) => {
            if c != d {
                true
            } else {
                pa == pb && co_path(*x, *y)
            }
        }
        _ => false,
    }
}

fn c8(phi: &CnfFormula, a: &Role, b: &Role) -> bool {
    use Role::*;
    // position of a literal-set vertex on its variable's cycle
    let cyc = |positive: bool, slot: usize| 2 * slot + usize::from(!positive);
    match (a, b) {
        (
            LiteralSet { var: i, positive: p, slot: x },
            LiteralSet { var: j, positive: q, slot: y },
        ) => i == j && co_cycle(cyc(*p, *x), cyc(*q, *y), 8),
        (Clause { clause, positions, .. }, LiteralSet { var, positive, .. })
        | (LiteralSet { var, positive, .. }, Clause { clause, positions, .. }) => {
            attached_literal(phi, *clause, positions, *var, *positive)
        }
        (
            Clause { clause: c, positions: pa, slot: x },
            Clause { clause: d, positions: pb, slot: y },
        ) => {
            if c != d {
                true
            } else {
                pa == pb && co_cycle(*x, *y, 8)
            }
        }
        _ => false,
    }
}
