use crate::graph::{Graph, PatternSpec, VertexSet};

use super::{span, GadgetError, GadgetInstance, GadgetKind, GadgetParams, Layout, Role};

/// Attaches to every vertex `u` of `gprime` a clique `W_u` of `t + 2`
/// vertices; `u` sees all of `W_u` except its last slot.
pub fn star_inductive(gprime: &Graph, t: usize) -> Result<GadgetInstance, GadgetError> {
    build(gprime, t, GadgetKind::StarInductive)
}

/// Attaches to every vertex `u` a block `W_u` inducing the complement of
/// `P_{t+2}`, all-adjacent to `u`.
pub fn path_inductive(gprime: &Graph, t: usize) -> Result<GadgetInstance, GadgetError> {
    build(gprime, t, GadgetKind::PathInductive)
}

/// Like [`path_inductive`] with complements of `C_{t+2}`, and distinct blocks
/// all-adjacent to each other.
pub fn cycle_inductive(gprime: &Graph, t: usize) -> Result<GadgetInstance, GadgetError> {
    build(gprime, t, GadgetKind::CycleInductive)
}

fn build(gprime: &Graph, t: usize, kind: GadgetKind) -> Result<GadgetInstance, GadgetError> {
    let (min, pattern) = match kind {
        GadgetKind::StarInductive => (2, PatternSpec::Complete(t + 2)),
        GadgetKind::PathInductive => (3, PatternSpec::complement_of(PatternSpec::Path(t + 2))),
        GadgetKind::CycleInductive => (4, PatternSpec::complement_of(PatternSpec::Cycle(t + 2))),
        _ => unreachable!("only inductive kinds are built here"),
    };
    if t < min {
        return Err(GadgetError::InvalidT { kind, t, min });
    }
    let n0 = gprime.n();
    let width = t + 2;
    let mut layout = Layout::default();
    for v in 0..n0 {
        layout.push(Role::Source { v });
    }
    let blocks: Vec<_> = (0..n0)
        .map(|owner| layout.block(pattern.clone(), (0..width).map(|slot| Role::Attached { owner, slot })))
        .collect();
    let (mut g, roles, placed) = layout.finish()?;
    let n = g.n();

    for (u, v) in gprime.edges() {
        g.add_edge(u, v);
    }
    for (u, w) in blocks.iter().enumerate() {
        let mut attach = span(n, w);
        if kind == GadgetKind::StarInductive {
            attach.remove(w.end - 1);
        }
        g.join(&VertexSet::from_indices(n, [u]), &attach);
    }
    if kind == GadgetKind::CycleInductive {
        for (i, wi) in blocks.iter().enumerate() {
            for wj in &blocks[i + 1..] {
                g.join(&span(n, wi), &span(n, wj));
            }
        }
    }

    Ok(GadgetInstance {
        graph: g,
        kind,
        params: GadgetParams::Inductive {
            source: gprime.unlabeled(),
            t,
        },
        roles,
        blocks: placed,
    })
}
