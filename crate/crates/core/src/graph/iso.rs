use super::{low_mask, Graph, VertexSet, WORD};

/// An injective map from pattern vertices to host vertices witnessing an
/// induced copy: `map[i]` is the image of pattern vertex `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    pub map: Vec<usize>,
}

impl Embedding {
    /// The image as a vertex set of a host with `cap` vertices.
    pub fn vertex_set(&self, cap: usize) -> VertexSet {
        VertexSet::from_indices(cap, self.map.iter().copied())
    }
}

/// Finds an induced copy of `h` in `g`.
///
/// Pattern vertices are placed in index order and host candidates tried in
/// ascending order, so the returned embedding is the lexicographically least
/// one. A null pattern embeds trivially.
pub fn find_induced(g: &Graph, h: &Graph) -> Option<Embedding> {
    let mut search = Search::new(g, h, false)?;
    if search.extend(0) {
        Some(Embedding { map: search.map })
    } else {
        None
    }
}

/// `g` has no induced subgraph isomorphic to `h`.
pub fn is_h_free(g: &Graph, h: &Graph) -> bool {
    // for vertex-transitive patterns, some copy has pattern vertex 0 on its least host vertex
    let root_min = h.n() > 1 && is_vertex_transitive(h);
    match Search::new(g, h, root_min) {
        Some(mut search) => !search.extend(0),
        None => true,
    }
}

fn is_vertex_transitive(h: &Graph) -> bool {
    (1..h.n()).all(|v| {
        let mut search = Search::new(h, h, false).expect("pattern fits in itself");
        search.pin_first(v);
        search.extend(0)
    })
}

struct Search<'a> {
    g: &'a Graph,
    h: &'a Graph,
    words: usize,
    /// `dom[j * hn + k]`: remaining host candidates for pattern vertex `k`
    /// once pattern vertices `0..j` are placed (`k >= j`).
    dom: Vec<Vec<u64>>,
    map: Vec<usize>,
    root_min: bool,
    valid: Vec<u64>,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, h: &'a Graph, root_min: bool) -> Option<Search<'a>> {
        let (n, hn) = (g.n(), h.n());
        if hn > n {
            return None;
        }
        let words = g.word_count().max(1);
        let gdeg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
        let mut dom = vec![vec![0u64; words]; (hn + 1) * hn.max(1)];
        for j in 0..hn {
            let dj = h.degree(j);
            let codj = hn - 1 - dj;
            for (v, &d) in gdeg.iter().enumerate() {
                if d >= dj && n - 1 - d >= codj {
                    dom[j][v / WORD] |= 1 << (v % WORD);
                }
            }
        }
        let valid = (0..words)
            .map(|w| low_mask(n.saturating_sub(w * WORD).min(WORD)))
            .collect();
        Some(Search {
            g,
            h,
            words,
            dom,
            map: Vec::with_capacity(hn),
            root_min,
            valid,
        })
    }

    /// Restricts pattern vertex 0 to host vertex `v`.
    fn pin_first(&mut self, v: usize) {
        let d = &mut self.dom[0];
        let keep = d[v / WORD] & (1 << (v % WORD));
        d.iter_mut().for_each(|w| *w = 0);
        d[v / WORD] = keep;
    }

    fn extend(&mut self, j: usize) -> bool {
        let hn = self.h.n();
        if j == hn {
            return true;
        }
        let here = j * hn;
        let next = (j + 1) * hn;
        let cand = self.dom[here + j].clone();
        for w in 0..self.words {
            let mut bits = cand[w];
            while bits != 0 {
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                let v = w * WORD + b;
                if self.narrow(j, v, here, next) {
                    self.map.push(v);
                    if self.extend(j + 1) {
                        return true;
                    }
                    self.map.pop();
                }
            }
        }
        false
    }

    /// Fills the next level's domains after placing pattern vertex `j` on
    /// `v`; false if some later pattern vertex is left without candidates.
    fn narrow(&mut self, j: usize, v: usize, here: usize, next: usize) -> bool {
        let hn = self.h.n();
        let row = self.g.row(v);
        for k in j + 1..hn {
            let adj = self.h.has_edge(j, k);
            let mut any = 0u64;
            for w in 0..self.words {
                let mut x = self.dom[here + k][w];
                x &= if adj { row[w] } else { !row[w] & self.valid[w] };
                if self.root_min && j == 0 {
                    // only hosts above the root
                    let lo = w * WORD;
                    x &= if v >= lo + WORD {
                        0
                    } else if v < lo {
                        !0
                    } else {
                        !low_mask(v - lo + 1)
                    };
                }
                if w == v / WORD {
                    x &= !(1 << (v % WORD));
                }
                self.dom[next + k][w] = x;
                any |= x;
            }
            if any == 0 {
                return false;
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::make_pattern;

    fn pat(s: &str) -> Graph {
        make_pattern(&s.parse().unwrap()).unwrap()
    }

    /// Exhaustive check over all injective maps; independent of the search above.
    fn brute_contains(g: &Graph, h: &Graph) -> bool {
        fn go(g: &Graph, h: &Graph, map: &mut Vec<usize>) -> bool {
            let j = map.len();
            if j == h.n() {
                return true;
            }
            for v in 0..g.n() {
                if map.contains(&v) {
                    continue;
                }
                if (0..j).all(|i| h.has_edge(i, j) == g.has_edge(map[i], v)) {
                    map.push(v);
                    if go(g, h, map) {
                        return true;
                    }
                    map.pop();
                }
            }
            false
        }
        go(g, h, &mut Vec::new())
    }

    #[test]
    fn spec_examples() {
        assert!(find_induced(&pat("C5"), &pat("K3")).is_none());
        let e = find_induced(&pat("K4"), &pat("K3")).unwrap();
        assert_eq!(e.map, vec![0, 1, 2]);
        assert_eq!(find_induced(&pat("P7"), &pat("P7")).unwrap().map, (0..7).collect::<Vec<_>>());
        assert!(find_induced(&pat("P6"), &pat("P7")).is_none());
    }

    #[test]
    fn witness_is_induced_and_lex_least() {
        // C6 contains P4 first at 0-1-2-3
        let e = find_induced(&pat("C6"), &pat("P4")).unwrap();
        assert_eq!(e.map, vec![0, 1, 2, 3]);
        // induced, not just a subgraph: K4 contains P3 as a subgraph but not induced
        assert!(find_induced(&pat("K4"), &pat("P3")).is_none());
        assert!(find_induced(&Graph::empty(3), &Graph::empty(0)).is_some());
    }

    #[test]
    fn matches_exhaustive_on_bitmask_graphs() {
        let patterns = ["K3", "I3", "P3", "P4", "C4", "C5", "K1,3", "~P3", "~C5", "K2", "I2", "K1"];
        let mut state = 0x9e3779b97f4a7c15u64;
        for n in 0..=8usize {
            let pairs = n * n.saturating_sub(1) / 2;
            for _ in 0..60 {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                let g = Graph::from_pair_mask(n, state & low_mask(pairs));
                for p in patterns {
                    let h = pat(p);
                    let got = find_induced(&g, &h);
                    let truth = brute_contains(&g, &h);
                    assert_eq!(got.is_some(), truth, "{p} in {g:?}");
                    assert_eq!(is_h_free(&g, &h), !truth, "{p} in {g:?}");
                    if let Some(e) = got {
                        for i in 0..h.n() {
                            for j in 0..h.n() {
                                if i != j {
                                    assert_eq!(h.has_edge(i, j), g.has_edge(e.map[i], e.map[j]));
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn transitivity_detection() {
        for p in ["K4", "I3", "C5", "C8", "~C8", "K1"] {
            assert!(is_vertex_transitive(&pat(p)), "{p}");
        }
        for p in ["P3", "P7", "K1,5", "~P7"] {
            assert!(!is_vertex_transitive(&pat(p)), "{p}");
        }
    }

    #[test]
    fn multiword_host() {
        let mut g = Graph::empty(150);
        for v in 100..106 {
            g.add_edge(v, v + 1);
        }
        let e = find_induced(&g, &pat("P7")).unwrap();
        assert_eq!(e.map, (100..107).collect::<Vec<_>>());
        assert!(find_induced(&g, &pat("P8")).is_none());
    }
}
