//! Dense bitset over `{0, …, n−1}`.

use std::fmt;

use crate::error::{Error, Result};

const WORD: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    n: u64,
    words: Vec<u64>,
    len: u64,
}

impl VertexSet {
    pub fn new(n: u64) -> Self {
        VertexSet { n, words: vec![0; words_for(n)], len: 0 }
    }

    pub fn full(n: u64) -> Self {
        let mut s = VertexSet { n, words: vec![!0; words_for(n)], len: n };
        s.clear_tail();
        s
    }

    /// Build from members; any member `>= n` is an error.
    pub fn from_members<I: IntoIterator<Item = u64>>(n: u64, members: I) -> Result<Self> {
        let mut s = VertexSet::new(n);
        for v in members {
            if v >= n {
                return Err(Error::invalid(format!("vertex {v} out of range for n = {n}")));
            }
            s.insert(v);
        }
        Ok(s)
    }

    pub(crate) fn from_words(n: u64, words: Vec<u64>) -> Self {
        debug_assert_eq!(words.len(), words_for(n));
        let mut s = VertexSet { n, words, len: 0 };
        s.clear_tail();
        s.len = s.words.iter().map(|w| w.count_ones() as u64).sum();
        s
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }

    fn clear_tail(&mut self) {
        let rem = (self.n as usize) % WORD;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    pub fn modulus(&self) -> u64 {
        self.n
    }

    pub fn len(&self) -> u64 {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn is_full(&self) -> bool {
        self.len == self.n
    }

    pub fn contains(&self, v: u64) -> bool {
        v < self.n && self.words[v as usize / WORD] >> (v as usize % WORD) & 1 == 1
    }

    /// Returns true if `v` was newly added. Panics if `v >= n`.
    pub fn insert(&mut self, v: u64) -> bool {
        assert!(v < self.n, "vertex {v} out of range for n = {}", self.n);
        let (w, b) = (v as usize / WORD, v as usize % WORD);
        let fresh = self.words[w] >> b & 1 == 0;
        if fresh {
            self.words[w] |= 1 << b;
            self.len += 1;
        }
        fresh
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        assert_eq!(self.n, other.n, "vertex set modulus mismatch");
        let mut len = 0;
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= *b;
            len += a.count_ones() as u64;
        }
        self.len = len;
    }

    /// `self ∖ other`.
    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        assert_eq!(self.n, other.n, "vertex set modulus mismatch");
        let words = self.words.iter().zip(&other.words).map(|(a, b)| a & !b).collect();
        VertexSet::from_words(self.n, words)
    }

    pub fn complement(&self) -> VertexSet {
        VertexSet::from_words(self.n, self.words.iter().map(|w| !w).collect())
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.n == other.n && self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    /// Members in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let b = bits.trailing_zeros() as u64;
                bits &= bits - 1;
                Some(wi as u64 * WORD as u64 + b)
            })
        })
    }

    pub fn to_vec(&self) -> Vec<u64> {
        self.iter().collect()
    }
}

pub(crate) fn words_for(n: u64) -> usize {
    (n as usize).div_ceil(WORD)
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VertexSet(n={}, ", self.n)?;
        f.debug_set().entries(self.iter()).finish()?;
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_contains_len() {
        let mut s = VertexSet::new(130);
        assert!(s.insert(0));
        assert!(s.insert(64));
        assert!(s.insert(129));
        assert!(!s.insert(64));
        assert_eq!(s.len(), 3);
        assert!(s.contains(129) && !s.contains(128) && !s.contains(500));
        assert_eq!(s.to_vec(), vec![0, 64, 129]);
    }

    #[test]
    fn full_complement_difference() {
        for n in [0u64, 1, 63, 64, 65, 200] {
            let full = VertexSet::full(n);
            assert_eq!(full.len(), n);
            assert_eq!(full.iter().count() as u64, n);
            assert!(full.complement().is_empty());
            let odd = VertexSet::from_members(n, (0..n).filter(|v| v % 2 == 1)).unwrap();
            let even = full.difference(&odd);
            assert_eq!(even.len() + odd.len(), n);
            assert!(even.is_disjoint(&odd));
            assert_eq!(odd.complement(), even);
            let mut u = odd.clone();
            u.union_with(&even);
            assert!(u.is_full());
            assert!(odd.is_subset(&u));
        }
    }

    #[test]
    fn out_of_range_member_rejected() {
        assert!(VertexSet::from_members(5, [1, 5]).is_err());
    }
}
