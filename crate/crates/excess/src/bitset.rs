//! Fixed-capacity bitsets used for vertex sets and facet masks.
//!
//! Every set carries its capacity (the universe size fixed when the owning
//! polytope is built); binary operations require equal capacities. Ordering
//! is lexicographic on the ascending list of members, which is the order the
//! rest of the crate uses whenever "sorted" output is promised.

use smallvec::SmallVec;
use std::fmt;

const WORD_BITS: usize = 64;

#[inline]
fn word_count(bits: usize) -> usize {
    bits.div_ceil(WORD_BITS)
}

/// A subset of `{0, .., capacity-1}` backed by 64-bit words.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitSet {
    words: SmallVec<[u64; 1]>,
    capacity: u32,
}

impl BitSet {
    /// The empty subset of a universe with `capacity` elements.
    pub fn empty(capacity: usize) -> Self {
        BitSet {
            words: smallvec::smallvec![0; word_count(capacity)],
            capacity: capacity as u32,
        }
    }

    /// The full universe `{0, .., capacity-1}`.
    pub fn full(capacity: usize) -> Self {
        let mut s = Self::empty(capacity);
        for w in s.words.iter_mut() {
            *w = u64::MAX;
        }
        s.clear_tail();
        s
    }

    pub fn from_indices(capacity: usize, indices: &[usize]) -> Self {
        let mut s = Self::empty(capacity);
        for &i in indices {
            s.insert(i);
        }
        s
    }

    #[inline]
    pub fn capacity(&self) -> usize {
        self.capacity as usize
    }

    // Bits at positions >= capacity must stay zero so that Eq/Hash/len work.
    #[inline]
    fn clear_tail(&mut self) {
        let cap = self.capacity as usize;
        if !cap.is_multiple_of(WORD_BITS) {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << (cap % WORD_BITS)) - 1;
            }
        }
        if cap == 0 {
            self.words.clear();
        }
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        debug_assert!(i < self.capacity());
        self.words[i / WORD_BITS] |= 1u64 << (i % WORD_BITS);
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        debug_assert!(i < self.capacity());
        self.words[i / WORD_BITS] &= !(1u64 << (i % WORD_BITS));
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        if i >= self.capacity() {
            return false;
        }
        self.words[i / WORD_BITS] >> (i % WORD_BITS) & 1 == 1
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_subset(&self, other: &BitSet) -> bool {
        debug_assert_eq!(self.capacity, other.capacity);
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & !b == 0)
    }

    pub fn is_superset(&self, other: &BitSet) -> bool {
        other.is_subset(self)
    }

    pub fn intersect_with(&mut self, other: &BitSet) {
        debug_assert_eq!(self.capacity, other.capacity);
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a &= b;
        }
    }

    pub fn union_with(&mut self, other: &BitSet) {
        debug_assert_eq!(self.capacity, other.capacity);
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a |= b;
        }
    }

    pub fn intersection(&self, other: &BitSet) -> BitSet {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn union(&self, other: &BitSet) -> BitSet {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    /// Elements of `self` not in `other`.
    pub fn difference(&self, other: &BitSet) -> BitSet {
        debug_assert_eq!(self.capacity, other.capacity);
        let mut s = self.clone();
        for (a, b) in s.words.iter_mut().zip(other.words.iter()) {
            *a &= !b;
        }
        s
    }

    pub fn complement(&self) -> BitSet {
        let mut s = self.clone();
        for w in s.words.iter_mut() {
            *w = !*w;
        }
        s.clear_tail();
        s
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<usize> {
        for (k, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(k * WORD_BITS + w.trailing_zeros() as usize);
            }
        }
        None
    }

    /// Members in ascending order.
    pub fn iter(&self) -> Iter<'_> {
        Iter {
            set: self,
            word: 0,
            bits: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

pub struct Iter<'a> {
    set: &'a BitSet,
    word: usize,
    bits: u64,
}

impl<'a> Iterator for Iter<'a> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.bits != 0 {
                let b = self.bits.trailing_zeros() as usize;
                self.bits &= self.bits - 1;
                return Some(self.word * WORD_BITS + b);
            }
            self.word += 1;
            if self.word >= self.set.words.len() {
                return None;
            }
            self.bits = self.set.words[self.word];
        }
    }
}

impl Ord for BitSet {
    // Lexicographic on ascending member lists: {0,1} < {0,2} < {1}.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for BitSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for BitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

impl FromIterator<usize> for BitSet {
    /// Collects into a set whose capacity is one past the largest member.
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let items: Vec<usize> = iter.into_iter().collect();
        let cap = items.iter().max().map_or(0, |m| m + 1);
        BitSet::from_indices(cap, &items)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let mut s = BitSet::empty(70);
        s.insert(0);
        s.insert(65);
        s.insert(3);
        assert_eq!(s.len(), 3);
        assert!(s.contains(65));
        assert!(!s.contains(64));
        assert_eq!(s.to_vec(), vec![0, 3, 65]);
        s.remove(3);
        assert_eq!(s.to_vec(), vec![0, 65]);
    }

    #[test]
    fn full_and_complement() {
        let s = BitSet::full(67);
        assert_eq!(s.len(), 67);
        let e = s.complement();
        assert!(e.is_empty());
        let t = BitSet::from_indices(67, &[1, 66]);
        assert_eq!(t.complement().len(), 65);
    }

    #[test]
    fn lexicographic_order() {
        let a = BitSet::from_indices(8, &[0, 1]);
        let b = BitSet::from_indices(8, &[0, 2]);
        let c = BitSet::from_indices(8, &[1]);
        let d = BitSet::from_indices(8, &[0]);
        assert!(a < b);
        assert!(b < c);
        assert!(d < a); // prefix is smaller
        assert!(a < c);
    }

    #[test]
    fn subset_relations() {
        let a = BitSet::from_indices(10, &[1, 4]);
        let b = BitSet::from_indices(10, &[1, 4, 7]);
        assert!(a.is_subset(&b));
        assert!(!b.is_subset(&a));
        assert!(a.is_subset(&a));
        assert_eq!(a.intersection(&b), a);
        assert_eq!(a.union(&b), b);
        assert_eq!(b.difference(&a).to_vec(), vec![7]);
    }
}
