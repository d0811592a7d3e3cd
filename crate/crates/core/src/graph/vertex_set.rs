use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub(crate) const WORD: usize = 64;

#[inline]
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(WORD)
}

/// A subset of the vertices `0..cap` of some graph, stored as a bitmask.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    cap: usize,
    bits: Vec<u64>,
}

impl VertexSet {
    pub fn empty(cap: usize) -> Self {
        VertexSet {
            cap,
            bits: vec![0; words_for(cap)],
        }
    }

    pub fn full(cap: usize) -> Self {
        let mut s = Self::empty(cap);
        for (i, w) in s.bits.iter_mut().enumerate() {
            let lo = i * WORD;
            let hi = (lo + WORD).min(cap);
            *w = low_mask(hi - lo);
        }
        s
    }

    /// Builds a set from vertex indices. Indices `>= cap` are a caller bug and panic.
    pub fn from_indices<I: IntoIterator<Item = usize>>(cap: usize, it: I) -> Self {
        let mut s = Self::empty(cap);
        for v in it {
            s.insert(v);
        }
        s
    }

    /// Set from the low `cap` bits of `mask`. Requires `cap <= 64`.
    pub fn from_mask(cap: usize, mask: u64) -> Self {
        assert!(cap <= WORD, "from_mask needs cap <= 64");
        let mut s = Self::empty(cap);
        if cap > 0 {
            s.bits[0] = mask & low_mask(cap);
        }
        s
    }

    pub(crate) fn from_words(cap: usize, bits: Vec<u64>) -> Self {
        debug_assert_eq!(bits.len(), words_for(cap));
        VertexSet { cap, bits }
    }

    /// The low word of the set. Only meaningful when `cap <= 64`.
    pub fn to_mask(&self) -> u64 {
        self.bits.first().copied().unwrap_or(0)
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.bits
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.cap && self.bits[v / WORD] >> (v % WORD) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        assert!(v < self.cap, "vertex {v} out of range for cap {}", self.cap);
        self.bits[v / WORD] |= 1 << (v % WORD);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        if v < self.cap {
            self.bits[v / WORD] &= !(1 << (v % WORD));
        }
    }

    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.bits,
            idx: 0,
            cur: self.bits.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.zip(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        self.zip(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        self.zip(other, |a, b| a & !b)
    }

    pub fn complement(&self) -> VertexSet {
        Self::full(self.cap).difference(self)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.bits.iter().zip(&other.bits).all(|(a, b)| a & b == 0)
    }

    /// Ordering by the set read as a binary number (vertex 0 least significant).
    pub fn cmp_as_mask(&self, other: &VertexSet) -> std::cmp::Ordering {
        self.bits.iter().rev().cmp(other.bits.iter().rev())
    }

    fn zip(&self, other: &VertexSet, f: impl Fn(u64, u64) -> u64) -> VertexSet {
        assert_eq!(self.cap, other.cap, "vertex sets over different graphs");
        VertexSet {
            cap: self.cap,
            bits: self.bits.iter().zip(&other.bits).map(|(&a, &b)| f(a, b)).collect(),
        }
    }
}

#[inline]
pub(crate) fn low_mask(k: usize) -> u64 {
    if k >= WORD {
        u64::MAX
    } else {
        (1u64 << k) - 1
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    idx: usize,
    cur: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.cur != 0 {
                let b = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some(self.idx * WORD + b);
            }
            self.idx += 1;
            if self.idx >= self.words.len() {
                return None;
            }
            self.cur = self.words[self.idx];
        }
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = Iter<'a>;
    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

// Serialized as a plain sorted index list; the cap comes from the graph it travels with.
impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

/// Deserializes an index list into a set whose cap is one past the largest index.
/// Callers re-cap it with [`VertexSet::with_cap`] once the graph is known.
impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let idx = Vec::<usize>::deserialize(d)?;
        let cap = idx.iter().max().map_or(0, |m| m + 1);
        Ok(VertexSet::from_indices(cap, idx))
    }
}

impl VertexSet {
    /// Same members over a different cap; `None` if a member does not fit.
    pub fn with_cap(&self, cap: usize) -> Option<VertexSet> {
        if self.iter().any(|v| v >= cap) {
            return None;
        }
        Some(VertexSet::from_indices(cap, self.iter()))
    }
}
