//! Dense fixed-domain bitsets used for subgroup membership over element indices.

use std::cmp::Ordering;
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitSet {
    nbits: usize,
    words: Vec<u64>,
}

impl BitSet {
    pub fn new(nbits: usize) -> Self {
        Self {
            nbits,
            words: vec![0u64; nbits.div_ceil(64)],
        }
    }

    pub fn singleton(nbits: usize, bit: usize) -> Self {
        let mut s = Self::new(nbits);
        s.insert(bit);
        s
    }

    /// Size of the domain, not the number of set bits.
    pub fn domain(&self) -> usize {
        self.nbits
    }

    pub fn contains(&self, bit: usize) -> bool {
        debug_assert!(bit < self.nbits);
        self.words[bit / 64] & (1u64 << (bit % 64)) != 0
    }

    /// Returns true if the bit was newly set.
    pub fn insert(&mut self, bit: usize) -> bool {
        debug_assert!(bit < self.nbits);
        let w = &mut self.words[bit / 64];
        let mask = 1u64 << (bit % 64);
        let fresh = *w & mask == 0;
        *w |= mask;
        fresh
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_subset(&self, other: &BitSet) -> bool {
        debug_assert_eq!(self.nbits, other.nbits);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn intersection(&self, other: &BitSet) -> BitSet {
        debug_assert_eq!(self.nbits, other.nbits);
        BitSet {
            nbits: self.nbits,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    pub fn union_with(&mut self, other: &BitSet) {
        debug_assert_eq!(self.nbits, other.nbits);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    /// Smallest member of `self \ other`, if any.
    pub fn difference_min(&self, other: &BitSet) -> Option<usize> {
        debug_assert_eq!(self.nbits, other.nbits);
        for (i, (a, b)) in self.words.iter().zip(&other.words).enumerate() {
            let diff = a & !b;
            if diff != 0 {
                return Some(i * 64 + diff.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let bit = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(i * 64 + bit)
                }
            })
        })
    }

    /// Member-list lexicographic order: at the first element present in one
    /// set and absent in the other, the containing set sorts first.
    pub fn cmp_members(&self, other: &BitSet) -> Ordering {
        debug_assert_eq!(self.nbits, other.nbits);
        for (a, b) in self.words.iter().zip(&other.words) {
            let diff = a ^ b;
            if diff != 0 {
                let bit = 1u64 << diff.trailing_zeros();
                return if a & bit != 0 {
                    Ordering::Less
                } else {
                    Ordering::Greater
                };
            }
        }
        Ordering::Equal
    }

    /// Hex encoding, little-endian bytes: element 0 is the low bit of the
    /// first byte pair.
    pub fn to_hex(&self) -> String {
        let nbytes = self.nbits.div_ceil(8);
        let mut out = String::with_capacity(nbytes * 2);
        for byte in 0..nbytes {
            let word = self.words[byte / 8];
            let b = (word >> ((byte % 8) * 8)) as u8;
            out.push_str(&format!("{b:02x}"));
        }
        out
    }
}

impl fmt::Debug for BitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_contains_count() {
        let mut s = BitSet::new(130);
        assert!(s.insert(0));
        assert!(s.insert(129));
        assert!(!s.insert(0));
        assert!(s.contains(0));
        assert!(s.contains(129));
        assert!(!s.contains(64));
        assert_eq!(s.count_ones(), 2);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 129]);
    }

    #[test]
    fn subset_and_intersection() {
        let mut a = BitSet::new(70);
        let mut b = BitSet::new(70);
        for i in [0, 3, 65] {
            a.insert(i);
            b.insert(i);
        }
        b.insert(20);
        assert!(a.is_subset(&b));
        assert!(!b.is_subset(&a));
        assert_eq!(a.intersection(&b), a);
        assert_eq!(b.difference_min(&a), Some(20));
        assert_eq!(a.difference_min(&b), None);
    }

    #[test]
    fn member_lex_order() {
        let a = BitSet::singleton(10, 1);
        let mut b = BitSet::singleton(10, 1);
        b.insert(2);
        // {1,2} contains 2 where {1} does not, so it sorts first.
        assert_eq!(b.cmp_members(&a), Ordering::Less);
        assert_eq!(a.cmp_members(&a.clone()), Ordering::Equal);
        let c = BitSet::singleton(10, 0);
        assert_eq!(c.cmp_members(&a), Ordering::Less);
    }

    #[test]
    fn hex_is_little_endian_bytes() {
        let mut s = BitSet::new(12);
        s.insert(0);
        s.insert(9);
        assert_eq!(s.to_hex(), "0102");
    }
}
