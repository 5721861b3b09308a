//! Fixed-width sets of positive roots.
//!
//! The largest positive system handled here is E8 with 120 roots, so a single
//! `u128` covers every case.

use std::fmt;

pub const MAX_ROOTS: usize = 128;

#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootSet(u128);

impl RootSet {
    pub const EMPTY: RootSet = RootSet(0);

    pub fn from_bits(bits: u128) -> Self {
        RootSet(bits)
    }

    pub fn bits(self) -> u128 {
        self.0
    }

    pub fn singleton(i: usize) -> Self {
        debug_assert!(i < MAX_ROOTS);
        RootSet(1u128 << i)
    }

    /// The set `{0, 1, .., n-1}`.
    pub fn full(n: usize) -> Self {
        if n >= MAX_ROOTS {
            RootSet(u128::MAX)
        } else {
            RootSet((1u128 << n) - 1)
        }
    }

    pub fn contains(self, i: usize) -> bool {
        i < MAX_ROOTS && self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1u128 << i;
    }

    pub fn remove(&mut self, i: usize) {
        self.0 &= !(1u128 << i);
    }

    pub fn with(self, i: usize) -> Self {
        RootSet(self.0 | 1u128 << i)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        RootSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        RootSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        RootSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: Self) -> bool {
        self.0 & other.0 != 0
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> Iter {
        Iter(self.0)
    }
}

impl FromIterator<usize> for RootSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = RootSet::EMPTY;
        for i in iter {
            s.insert(i);
        }
        s
    }
}

impl IntoIterator for RootSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

pub struct Iter(u128);

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

impl fmt::Debug for RootSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn edges_of_the_word() {
        let s = RootSet::singleton(0).with(119).with(127);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 119, 127]);
        assert_eq!(s.len(), 3);
        assert_eq!(RootSet::full(120).len(), 120);
        assert_eq!(RootSet::full(128).len(), 128);
        assert!(RootSet::EMPTY.is_subset(s));
    }

    proptest! {
        #[test]
        fn iter_roundtrips(bits in any::<u128>()) {
            let s = RootSet::from_bits(bits);
            let back: RootSet = s.iter().collect();
            prop_assert_eq!(back, s);
            prop_assert_eq!(s.iter().len(), s.len());
        }

        #[test]
        fn set_algebra(a in any::<u128>(), b in any::<u128>()) {
            let (a, b) = (RootSet::from_bits(a), RootSet::from_bits(b));
            prop_assert!(a.intersection(b).is_subset(a));
            prop_assert!(a.is_subset(a.union(b)));
            prop_assert_eq!(a.difference(b).intersects(b), false);
        }
    }
}
