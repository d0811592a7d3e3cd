use std::ops::Range;

use crate::graph::{PatternSpec, VertexSet};
use crate::sat::CnfFormula;

use super::{clause_literal, span, GadgetError, GadgetInstance, GadgetKind, GadgetParams, Layout, Role};

fn require_width4(phi: &CnfFormula, kind: GadgetKind) -> Result<(), GadgetError> {
    if phi.width() != 4 {
        return Err(GadgetError::WrongWidth { kind, got: phi.width() });
    }
    Ok(())
}

fn co(spec: PatternSpec) -> PatternSpec {
    PatternSpec::complement_of(spec)
}

fn instance(
    kind: GadgetKind,
    phi: &CnfFormula,
    g: crate::graph::Graph,
    roles: Vec<Role>,
    blocks: Vec<super::Block>,
) -> GadgetInstance {
    GadgetInstance {
        graph: g,
        kind,
        params: GadgetParams::Formula { phi: phi.clone() },
        roles,
        blocks,
    }
}

/// `K_{1,5}` gadget. Per variable, 22 vertices: `u_i`, `u′_i`, then the four
/// 5-cliques `U_{i,0..4}`. Per clause, a 5-clique `V_i`.
pub fn k15_gadget(phi: &CnfFormula) -> Result<GadgetInstance, GadgetError> {
    let kind = GadgetKind::K15;
    require_width4(phi, kind)?;
    let mut layout = Layout::default();
    let mut literal = Vec::new();
    let mut hanging = Vec::new();
    for var in 0..phi.num_vars() {
        let u = layout.push(Role::Literal { var, positive: true });
        let u_bar = layout.push(Role::Literal { var, positive: false });
        literal.push([u_bar, u]);
        let sets: Vec<Range<usize>> = (0..4)
            .map(|set| {
                let roles = (0..5).map(move |slot| Role::Hanging { var, positive: true, set, slot });
                layout.block(PatternSpec::Complete(5), roles)
            })
            .collect();
        hanging.push(sets);
    }
    let clauses: Vec<Range<usize>> = (0..phi.num_clauses())
        .map(|clause| {
            let roles = (0..5).map(move |slot| Role::Clause { clause, positions: vec![0, 1, 2, 3], slot });
            layout.block(PatternSpec::Complete(5), roles)
        })
        .collect();
    let (mut g, roles, blocks) = layout.finish()?;
    let n = g.n();
    let one = |v: usize| VertexSet::from_indices(n, [v]);

    for (var, sets) in hanging.iter().enumerate() {
        let [u_bar, u] = literal[var];
        g.add_edge(u, u_bar);
        let first = span(n, &sets[0]);
        g.join(&VertexSet::from_indices(n, [u, u_bar]), &first);
        for rest in &sets[1..] {
            g.join(&first, &span(n, rest));
        }
    }
    let all_clauses = VertexSet::from_indices(n, clauses.iter().flat_map(|r| r.clone()));
    g.join(&all_clauses, &all_clauses);
    for (c, block) in clauses.iter().enumerate() {
        for pos in 0..4 {
            let (var, positive) = clause_literal(phi, c, pos);
            g.join(&span(n, block), &one(literal[var][usize::from(positive)]));
        }
    }
    Ok(instance(kind, phi, g, roles, blocks))
}

/// `P_7` gadget. Per variable, 44 vertices: `u_i`, `u′_i`, then hanging
/// chains `U_{i,0..3}` and `U′_{i,0..3}` of `P̄_7` blocks. Per clause, blocks
/// for literal positions {0,1}, {1,2} and {2,3}.
pub fn p7_gadget(phi: &CnfFormula) -> Result<GadgetInstance, GadgetError> {
    path_gadget(phi, GadgetKind::P7, 7, &[&[0, 1], &[1, 2], &[2, 3]])
}

/// `P_8` gadget: as [`p7_gadget`] with `P̄_8` blocks and an extra clause
/// block for position {0}, placed first. 50 vertices per variable.
pub fn p8_gadget(phi: &CnfFormula) -> Result<GadgetInstance, GadgetError> {
    path_gadget(phi, GadgetKind::P8, 8, &[&[0], &[0, 1], &[1, 2], &[2, 3]])
}

fn path_gadget(
    phi: &CnfFormula,
    kind: GadgetKind,
    b: usize,
    clause_blocks: &[&[usize]],
) -> Result<GadgetInstance, GadgetError> {
    require_width4(phi, kind)?;
    let pattern = co(PatternSpec::Path(b));
    let mut layout = Layout::default();
    let mut literal = Vec::new();
    // per variable: whole block range, then chains indexed by sign
    let mut var_blocks: Vec<(Range<usize>, [Vec<Range<usize>>; 2])> = Vec::new();
    for var in 0..phi.num_vars() {
        let start = layout.len();
        let u = layout.push(Role::Literal { var, positive: true });
        let u_bar = layout.push(Role::Literal { var, positive: false });
        literal.push([u_bar, u]);
        let mut chains: [Vec<Range<usize>>; 2] = Default::default();
        for positive in [true, false] {
            chains[usize::from(positive)] = (0..3)
                .map(|set| {
                    let roles = (0..b).map(move |slot| Role::Hanging { var, positive, set, slot });
                    layout.block(pattern.clone(), roles)
                })
                .collect();
        }
        var_blocks.push((start..layout.len(), chains));
    }
    let mut clause_sets: Vec<Vec<(Range<usize>, &[usize])>> = Vec::new();
    for clause in 0..phi.num_clauses() {
        let blocks = clause_blocks
            .iter()
            .map(|&positions| {
                let roles = (0..b).map(|slot| Role::Clause { clause, positions: positions.to_vec(), slot });
                (layout.block(pattern.clone(), roles), positions)
            })
            .collect();
        clause_sets.push(blocks);
    }
    let (mut g, roles, blocks) = layout.finish()?;
    let n = g.n();
    let one = |v: usize| VertexSet::from_indices(n, [v]);

    for (var, (range, chains)) in var_blocks.iter().enumerate() {
        let outside = span(n, range).complement();
        for positive in [false, true] {
            let chain = &chains[usize::from(positive)];
            g.join(&one(literal[var][usize::from(positive)]), &span(n, &chain[0]));
            for pair in chain.windows(2) {
                g.join(&span(n, &pair[0]), &span(n, &pair[1]));
            }
            for set in chain {
                g.join(&span(n, set), &outside);
            }
        }
    }
    let whole = |c: usize| {
        VertexSet::from_indices(n, clause_sets[c].iter().flat_map(|(r, _)| r.clone()))
    };
    for c in 0..clause_sets.len() {
        let vc = whole(c);
        let mut in_clause = VertexSet::empty(n);
        for pos in 0..4 {
            let (var, positive) = clause_literal(phi, c, pos);
            in_clause.insert(literal[var][usize::from(positive)]);
        }
        let all_literals = VertexSet::from_indices(n, literal.iter().flatten().copied());
        g.join(&vc, &all_literals.difference(&in_clause));
        for (block, positions) in &clause_sets[c] {
            for &pos in positions.iter() {
                let (var, positive) = clause_literal(phi, c, pos);
                g.join(&span(n, block), &one(literal[var][usize::from(positive)]));
            }
        }
        for d in c + 1..clause_sets.len() {
            g.join(&vc, &whole(d));
        }
    }
    Ok(instance(kind, phi, g, roles, blocks))
}

/// `C_8` gadget. Per variable, one `C̄_8` block in cycle order whose even
/// slots are `U_i` and odd slots `U′_i`. Per clause, six `C̄_8` blocks, one
/// for each pair of literal positions in lexicographic order.
pub fn c8_gadget(phi: &CnfFormula) -> Result<GadgetInstance, GadgetError> {
    let kind = GadgetKind::C8;
    require_width4(phi, kind)?;
    let pattern = co(PatternSpec::Cycle(8));
    let mut layout = Layout::default();
    let var_blocks: Vec<Range<usize>> = (0..phi.num_vars())
        .map(|var| {
            let roles = (0..8).map(move |c| Role::LiteralSet { var, positive: c % 2 == 0, slot: c / 2 });
            layout.block(pattern.clone(), roles)
        })
        .collect();
    let pairs: Vec<[usize; 2]> = (0..4).flat_map(|s| (s + 1..4).map(move |t| [s, t])).collect();
    let clause_sets: Vec<Vec<(Range<usize>, [usize; 2])>> = (0..phi.num_clauses())
        .map(|clause| {
            pairs
                .iter()
                .map(|&pair| {
                    let roles = (0..8).map(move |slot| Role::Clause { clause, positions: pair.to_vec(), slot });
                    (layout.block(pattern.clone(), roles), pair)
                })
                .collect()
        })
        .collect();
    let (mut g, roles, blocks) = layout.finish()?;
    let n = g.n();
    // U_i: even cycle slots, U′_i: odd
    let literal_set = |var: usize, positive: bool| {
        let r = &var_blocks[var];
        let parity = usize::from(!positive);
        VertexSet::from_indices(n, r.clone().filter(|v| (v - r.start) % 2 == parity))
    };
    let whole = |c: usize| {
        VertexSet::from_indices(n, clause_sets[c].iter().flat_map(|(r, _)| r.clone()))
    };
    for (c, set) in clause_sets.iter().enumerate() {
        for (block, pair) in set {
            for &pos in pair {
                let (var, positive) = clause_literal(phi, c, pos);
                g.join(&span(n, block), &literal_set(var, positive));
            }
        }
        for d in c + 1..clause_sets.len() {
            g.join(&whole(c), &whole(d));
        }
    }
    Ok(instance(kind, phi, g, roles, blocks))
}
