use std::fmt;
use std::str::FromStr;

use super::{Graph, GraphError};

/// Named pattern graphs.
///
/// Text form: `K3` (complete), `I3` (edgeless, also `E3`), `P4` (path), `C5`
/// (cycle), `K1,5` or `S5` (star with 5 leaves), and a `~` or `co-` prefix
/// for the complement.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum PatternSpec {
    Complete(usize),
    Empty(usize),
    Path(usize),
    Cycle(usize),
    /// `K_{1,t}`: `t + 1` vertices, center is vertex 0.
    Star(usize),
    ComplementOf(Box<PatternSpec>),
}

impl PatternSpec {
    pub fn complement_of(spec: PatternSpec) -> PatternSpec {
        PatternSpec::ComplementOf(Box::new(spec))
    }

    pub fn vertex_count(&self) -> usize {
        match self {
            PatternSpec::Complete(t)
            | PatternSpec::Empty(t)
            | PatternSpec::Path(t)
            | PatternSpec::Cycle(t) => *t,
            PatternSpec::Star(t) => t + 1,
            PatternSpec::ComplementOf(inner) => inner.vertex_count(),
        }
    }

    fn validate(&self) -> Result<(), GraphError> {
        let bad = |msg: String| Err(GraphError::InvalidPattern(msg));
        match self {
            PatternSpec::Cycle(t) if *t < 3 => bad(format!("C{t} needs at least 3 vertices")),
            PatternSpec::Complete(0) | PatternSpec::Empty(0) | PatternSpec::Path(0) => {
                bad(format!("{self} has no vertices"))
            }
            PatternSpec::Star(0) => bad("star needs at least one leaf".into()),
            PatternSpec::ComplementOf(inner) => inner.validate(),
            _ => Ok(()),
        }
    }
}

/// Builds the canonical graph: path and cycle vertices in traversal order,
/// star center at vertex 0.
pub fn make_pattern(spec: &PatternSpec) -> Result<Graph, GraphError> {
    spec.validate()?;
    let g = match spec {
        PatternSpec::Complete(t) => Graph::complete(*t),
        PatternSpec::Empty(t) => Graph::empty(*t),
        PatternSpec::Path(t) => {
            let mut g = Graph::empty(*t);
            for v in 1..*t {
                g.add_edge(v - 1, v);
            }
            g
        }
        PatternSpec::Cycle(t) => {
            let mut g = make_pattern(&PatternSpec::Path(*t))?;
            g.add_edge(t - 1, 0);
            g
        }
        PatternSpec::Star(t) => {
            let mut g = Graph::empty(t + 1);
            for v in 1..=*t {
                g.add_edge(0, v);
            }
            g
        }
        PatternSpec::ComplementOf(inner) => make_pattern(inner)?.complement(),
    };
    Ok(g)
}

impl fmt::Display for PatternSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PatternSpec::Complete(t) => write!(f, "K{t}"),
            PatternSpec::Empty(t) => write!(f, "I{t}"),
            PatternSpec::Path(t) => write!(f, "P{t}"),
            PatternSpec::Cycle(t) => write!(f, "C{t}"),
            PatternSpec::Star(t) => write!(f, "K1,{t}"),
            PatternSpec::ComplementOf(inner) => write!(f, "~{inner}"),
        }
    }
}

impl FromStr for PatternSpec {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let err = || GraphError::InvalidPattern(format!("cannot parse pattern {s:?}"));
        if let Some(rest) = s.strip_prefix('~').or_else(|| s.strip_prefix("co-")) {
            return Ok(PatternSpec::complement_of(rest.parse()?));
        }
        let num = |t: &str| t.parse::<usize>().map_err(|_| err());
        let spec = if let Some(rest) = s.strip_prefix("K1,") {
            PatternSpec::Star(num(rest)?)
        } else {
            let mut chars = s.chars();
            let head = chars.next().ok_or_else(err)?;
            let t = num(chars.as_str())?;
            match head.to_ascii_uppercase() {
                'K' => PatternSpec::Complete(t),
                'I' | 'E' => PatternSpec::Empty(t),
                'P' => PatternSpec::Path(t),
                'C' => PatternSpec::Cycle(t),
                'S' => PatternSpec::Star(t),
                _ => return Err(err()),
            }
        };
        spec.validate()?;
        Ok(spec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::find_induced;

    fn isomorphic(a: &Graph, b: &Graph) -> bool {
        a.n() == b.n() && a.edge_count() == b.edge_count() && find_induced(a, b).is_some()
    }

    #[test]
    fn triangle_and_star() {
        let k3 = make_pattern(&PatternSpec::Complete(3)).unwrap();
        assert_eq!(k3.edge_count(), 3);
        let star = make_pattern(&PatternSpec::Star(5)).unwrap();
        assert_eq!((star.n(), star.edge_count(), star.degree(0)), (6, 5, 5));
    }

    #[test]
    fn self_complementary_patterns() {
        let p4 = make_pattern(&PatternSpec::Path(4)).unwrap();
        let co_p4 = make_pattern(&PatternSpec::complement_of(PatternSpec::Path(4))).unwrap();
        assert_ne!(p4, co_p4);
        assert!(isomorphic(&p4, &co_p4));
        let c5 = make_pattern(&PatternSpec::Cycle(5)).unwrap();
        assert!(isomorphic(&c5, &c5.complement()));
        // P5 is not self-complementary
        let p5 = make_pattern(&PatternSpec::Path(5)).unwrap();
        assert!(!isomorphic(&p5, &p5.complement()));
    }

    #[test]
    fn invalid_sizes() {
        assert!(make_pattern(&PatternSpec::Cycle(2)).is_err());
        assert!(make_pattern(&PatternSpec::Star(0)).is_err());
        assert!(make_pattern(&PatternSpec::complement_of(PatternSpec::Cycle(1))).is_err());
        assert!(make_pattern(&PatternSpec::Complete(1)).is_ok());
    }

    #[test]
    fn parse_and_display() {
        for text in ["K3", "I4", "P7", "C8", "K1,5", "~P3", "~~C5"] {
            let spec: PatternSpec = text.parse().unwrap();
            assert_eq!(spec.to_string(), text);
        }
        assert_eq!("S5".parse::<PatternSpec>().unwrap(), PatternSpec::Star(5));
        assert_eq!(
            "co-K3".parse::<PatternSpec>().unwrap(),
            PatternSpec::complement_of(PatternSpec::Complete(3))
        );
        assert!("C2".parse::<PatternSpec>().is_err());
        assert!("X3".parse::<PatternSpec>().is_err());
        assert!("K".parse::<PatternSpec>().is_err());
    }
}
