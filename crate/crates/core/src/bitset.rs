//! Fixed-width vertex subsets backed by machine words.

use std::fmt;

const WORD_BITS: usize = 64;

/// A subset of `{0, .., nbits-1}` stored as a packed bit vector.
///
/// One word covers graphs up to 64 vertices; larger graphs transparently use
/// more words. Unused high bits of the last word are kept at zero so that
/// `Eq`/`Hash` are structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    nbits: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn new(nbits: usize) -> Self {
        VertexSet {
            nbits,
            words: vec![0; nbits.div_ceil(WORD_BITS)],
        }
    }

    pub fn full(nbits: usize) -> Self {
        let mut set = VertexSet::new(nbits);
        for word in &mut set.words {
            *word = u64::MAX;
        }
        set.mask_tail();
        set
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(nbits: usize, indices: I) -> Self {
        let mut set = VertexSet::new(nbits);
        for i in indices {
            set.insert(i);
        }
        set
    }

    fn mask_tail(&mut self) {
        let tail = self.nbits % WORD_BITS;
        if tail != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << tail) - 1;
            }
        }
        if self.nbits == 0 {
            self.words.clear();
        }
    }

    pub fn nbits(&self) -> usize {
        self.nbits
    }

    pub fn insert(&mut self, i: usize) {
        debug_assert!(i < self.nbits);
        self.words[i / WORD_BITS] |= 1u64 << (i % WORD_BITS);
    }

    pub fn remove(&mut self, i: usize) {
        debug_assert!(i < self.nbits);
        self.words[i / WORD_BITS] &= !(1u64 << (i % WORD_BITS));
    }

    pub fn contains(&self, i: usize) -> bool {
        debug_assert!(i < self.nbits);
        self.words[i / WORD_BITS] >> (i % WORD_BITS) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        debug_assert_eq!(self.nbits, other.nbits);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn is_strict_subset(&self, other: &VertexSet) -> bool {
        self.is_subset(other) && self != other
    }

    pub fn intersects(&self, other: &VertexSet) -> bool {
        debug_assert_eq!(self.nbits, other.nbits);
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn union_assign(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.nbits, other.nbits);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_assign(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.nbits, other.nbits);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn subtract_assign(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.nbits, other.nbits);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn complement(&self) -> VertexSet {
        let mut out = self.clone();
        for word in &mut out.words {
            *word = !*word;
        }
        out.mask_tail();
        out
    }

    /// Member indices in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &word)| {
            let mut bits = word;
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let b = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    Some(wi * WORD_BITS + b)
                }
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Drops every set that strictly contains another set in the slice.
///
/// The result keeps the relative order of the survivors. For `>=`-covering
/// constraints over nonnegative variables a superset row is implied by any of
/// its subsets, so this is an exact reduction; the same holds for hitting
/// sets.
pub fn drop_strict_supersets(sets: &[VertexSet]) -> Vec<VertexSet> {
    let mut keep = Vec::new();
    'outer: for (i, s) in sets.iter().enumerate() {
        for (j, t) in sets.iter().enumerate() {
            if i != j && t.is_strict_subset(s) {
                continue 'outer;
            }
        }
        keep.push(s.clone());
    }
    keep
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_contains_len() {
        let mut s = VertexSet::new(70);
        assert!(s.is_empty());
        s.insert(0);
        s.insert(63);
        s.insert(64);
        s.insert(69);
        assert_eq!(s.len(), 4);
        assert!(s.contains(64));
        assert!(!s.contains(65));
        assert_eq!(s.to_vec(), vec![0, 63, 64, 69]);
        s.remove(63);
        assert_eq!(s.to_vec(), vec![0, 64, 69]);
    }

    #[test]
    fn complement_masks_tail_bits() {
        let s = VertexSet::from_indices(70, [0, 69]);
        let c = s.complement();
        assert_eq!(c.len(), 68);
        assert!(!c.contains(0));
        assert!(!c.contains(69));
        assert!(c.contains(1));
        assert_eq!(c.complement(), s);
    }

    #[test]
    fn subset_and_intersection() {
        let a = VertexSet::from_indices(10, [1, 3, 5]);
        let b = VertexSet::from_indices(10, [1, 3, 5, 7]);
        assert!(a.is_subset(&b));
        assert!(a.is_strict_subset(&b));
        assert!(!b.is_subset(&a));
        assert!(a.is_subset(&a));
        assert!(!a.is_strict_subset(&a));
        assert!(a.intersects(&b));
        assert!(!a.intersects(&VertexSet::from_indices(10, [0, 2])));
    }

    #[test]
    fn superset_elimination_keeps_minimal_antichain() {
        let rows = vec![
            VertexSet::from_indices(6, [0, 1, 2, 3]),
            VertexSet::from_indices(6, [0, 1]),
            VertexSet::from_indices(6, [2, 3]),
            VertexSet::from_indices(6, [4, 5]),
        ];
        let kept = drop_strict_supersets(&rows);
        assert_eq!(kept, rows[1..].to_vec());
    }

    #[test]
    fn duplicate_sets_survive_elimination() {
        let rows = vec![
            VertexSet::from_indices(4, [0, 1]),
            VertexSet::from_indices(4, [0, 1]),
        ];
        assert_eq!(drop_strict_supersets(&rows).len(), 2);
    }

    #[test]
    fn full_set() {
        let s = VertexSet::full(65);
        assert_eq!(s.len(), 65);
        assert_eq!(s.complement(), VertexSet::new(65));
    }
}
