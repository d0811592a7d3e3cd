//! Standard header-less graph6: size word, then the upper triangle of the
//! adjacency matrix column by column in 6-bit groups offset by 63.

use super::{Graph, GraphError};

const MAX_N: usize = (1 << 36) - 1;

pub fn g6_encode(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(8 + (n * n) / 12);
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | g.has_edge(u, v) as u8;
            k += 1;
            if k == 6 {
                out.push(acc + 63);
                acc = 0;
                k = 0;
            }
        }
    }
    if k > 0 {
        out.push((acc << (6 - k)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

pub fn g6_decode(input: &[u8]) -> Result<Graph, GraphError> {
    let bad = |offset: usize, reason: &str| GraphError::MalformedG6 {
        offset,
        reason: reason.to_string(),
    };
    let value = |i: usize| -> Result<usize, GraphError> {
        match input.get(i) {
            Some(&b) if (63..=126).contains(&b) => Ok((b - 63) as usize),
            Some(_) => Err(bad(i, "byte outside 63..=126")),
            None => Err(bad(i, "truncated size word")),
        }
    };
    let (n, mut pos) = match input.first() {
        None => return Err(bad(0, "empty input")),
        Some(&126) if input.get(1) == Some(&126) => {
            let mut n = 0;
            for i in 2..8 {
                n = n << 6 | value(i)?;
            }
            (n, 8)
        }
        Some(&126) => {
            let mut n = 0;
            for i in 1..4 {
                n = n << 6 | value(i)?;
            }
            (n, 4)
        }
        Some(_) => (value(0)?, 1),
    };
    if n > MAX_N {
        return Err(bad(0, "vertex count too large"));
    }
    let pairs = n * n.saturating_sub(1) / 2;
    let needed = pairs.div_ceil(6);
    if input.len() < pos + needed {
        return Err(bad(input.len(), "truncated adjacency data"));
    }
    if input.len() > pos + needed {
        return Err(bad(pos + needed, "trailing bytes"));
    }
    let mut g = Graph::empty(n);
    let (mut u, mut v) = (0, 1);
    let mut k = 0;
    while k < pairs {
        let chunk = value(pos)?;
        for bit in (0..6).rev() {
            if k == pairs {
                if chunk & ((1 << (bit + 1)) - 1) != 0 {
                    return Err(bad(pos, "nonzero padding bits"));
                }
                break;
            }
            if chunk >> bit & 1 == 1 {
                g.add_edge(u, v);
            }
            k += 1;
            u += 1;
            if u == v {
                u = 0;
                v += 1;
            }
        }
        pos += 1;
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{low_mask, make_pattern, PatternSpec};
    use proptest::prelude::*;

    #[test]
    fn known_encodings() {
        assert_eq!(g6_encode(&Graph::complete(3)), "Bw");
        assert_eq!(g6_encode(&Graph::empty(0)), "?");
        // 5-vertex graph with edges 0-2, 0-4, 1-3, 3-4
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(g6_encode(&g), "DQc");
        assert_eq!(g6_decode(b"DQc").unwrap(), g);
    }

    #[test]
    fn long_size_word() {
        let g = make_pattern(&PatternSpec::Path(100)).unwrap();
        let s = g6_encode(&g);
        assert_eq!(&s.as_bytes()[..4], &[126, 63, 64, 63 + 36]);
        assert_eq!(g6_decode(s.as_bytes()).unwrap(), g);
    }

    #[test]
    fn malformed_inputs_report_offsets() {
        assert!(matches!(g6_decode(b""), Err(GraphError::MalformedG6 { offset: 0, .. })));
        assert!(matches!(g6_decode(b"B"), Err(GraphError::MalformedG6 { offset: 1, .. })));
        assert!(matches!(g6_decode(b"Bw?"), Err(GraphError::MalformedG6 { offset: 2, .. })));
        assert!(matches!(g6_decode(b"B "), Err(GraphError::MalformedG6 { offset: 1, .. })));
        // K3 with a padding bit set
        assert!(matches!(g6_decode(b"Bx"), Err(GraphError::MalformedG6 { offset: 1, .. })));
    }

    #[test]
    fn exhaustive_round_trip_up_to_seven() {
        for n in 0..=7usize {
            let pairs = n * n.saturating_sub(1) / 2;
            for mask in 0..=low_mask(pairs) {
                let g = Graph::from_pair_mask(n, mask);
                assert_eq!(g6_decode(g6_encode(&g).as_bytes()).unwrap(), g);
            }
        }
    }

    proptest! {
        #[test]
        fn random_round_trip(n in 0usize..=70, seed in any::<u64>()) {
            let mut g = Graph::empty(n);
            let mut s = seed | 1;
            for v in 1..n {
                for u in 0..v {
                    s ^= s << 13; s ^= s >> 7; s ^= s << 17;
                    if s & 1 == 1 { g.add_edge(u, v); }
                }
            }
            prop_assert_eq!(g6_decode(g6_encode(&g).as_bytes()).unwrap(), g);
        }
    }
}
