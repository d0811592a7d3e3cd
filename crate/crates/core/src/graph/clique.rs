use super::{low_mask, Graph, VertexSet, WORD};

impl Graph {
    /// Lexicographically least `k`-clique inside `within`, if any.
    pub fn find_clique(&self, within: &VertexSet, k: usize) -> Option<Vec<usize>> {
        self.find_uniform(within, k, false)
    }

    /// Lexicographically least independent set of size `k` inside `within`.
    pub fn find_independent_set(&self, within: &VertexSet, k: usize) -> Option<Vec<usize>> {
        self.find_uniform(within, k, true)
    }

    /// Whole graph contains `K_k`.
    pub fn has_clique(&self, k: usize) -> bool {
        self.find_clique(&self.vertices(), k).is_some()
    }

    fn find_uniform(&self, within: &VertexSet, k: usize, independent: bool) -> Option<Vec<usize>> {
        assert_eq!(within.cap(), self.n(), "vertex set over a different graph");
        let mut acc = Vec::with_capacity(k);
        let found = match within.words() {
            [] => k == 0,
            [word] => self.grow_word(*word, k, independent, &mut acc),
            words => self.grow(words, k, independent, &mut acc),
        };
        if found {
            Some(acc)
        } else {
            None
        }
    }

    /// [`Self::grow`] for graphs on at most one word of vertices.
    fn grow_word(&self, cand: u64, k: usize, independent: bool, acc: &mut Vec<usize>) -> bool {
        let need = k - acc.len();
        if need == 0 {
            return true;
        }
        let mut bits = cand;
        while bits.count_ones() as usize >= need {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let row = self.row(v)[0];
            let adj = if independent { !row } else { row };
            acc.push(v);
            if self.grow_word(bits & adj, k, independent, acc) {
                return true;
            }
            acc.pop();
        }
        false
    }

    fn grow(&self, cand: &[u64], k: usize, independent: bool, acc: &mut Vec<usize>) -> bool {
        if acc.len() == k {
            return true;
        }
        let need = k - acc.len();
        let mut left: usize = cand.iter().map(|w| w.count_ones() as usize).sum();
        let mut next = vec![0u64; cand.len()];
        for (w, &word) in cand.iter().enumerate() {
            let mut bits = word;
            while bits != 0 {
                if left < need {
                    return false;
                }
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                left -= 1;
                let v = w * WORD + b;
                let row = self.row(v);
                for i in 0..cand.len() {
                    // only vertices above v, so each set is visited once
                    let above = if i < w {
                        0
                    } else if i == w {
                        !low_mask(b + 1)
                    } else {
                        u64::MAX
                    };
                    let adj = if independent { !row[i] } else { row[i] };
                    next[i] = cand[i] & adj & above;
                }
                acc.push(v);
                if self.grow(&next, k, independent, acc) {
                    return true;
                }
                acc.pop();
            }
        }
        false
    }
}
