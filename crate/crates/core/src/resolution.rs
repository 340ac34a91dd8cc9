//! Bidegrees, shift multisets, and free resolutions carried by their shifts.

use alloc::vec::Vec;

/// A pair of degrees `(x, y)` grading bihomogeneous forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Bidegree {
    pub x: usize,
    pub y: usize,
}

impl Bidegree {
    pub const fn new(x: usize, y: usize) -> Self {
        Bidegree { x, y }
    }

    /// Coarsening to the total degree `x + y`.
    pub fn total(self) -> usize {
        self.x + self.y
    }
}

/// A multiset of bidegrees; repetitions are significant.
///
/// Entries are kept in insertion order and sorted lexicographically only
/// when a canonical form is requested.  Equality is multiset equality.
#[derive(Clone, Debug, Default)]
pub struct ShiftMultiset {
    entries: Vec<Bidegree>,
}

impl ShiftMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, shift: Bidegree) {
        self.entries.push(shift);
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = Bidegree> + '_ {
        self.entries.iter().copied()
    }

    /// Entries sorted lexicographically ascending, repeats adjacent.
    pub fn sorted(&self) -> Vec<Bidegree> {
        let mut v = self.entries.clone();
        v.sort_unstable();
        v
    }

    /// Multiplicity of one bidegree in the multiset.
    pub fn multiplicity(&self, shift: Bidegree) -> usize {
        self.entries.iter().filter(|&&s| s == shift).count()
    }

    pub fn sum_x(&self) -> usize {
        self.entries.iter().map(|s| s.x).sum()
    }

    pub fn sum_y(&self) -> usize {
        self.entries.iter().map(|s| s.y).sum()
    }

    /// Largest total degree appearing, if any.
    pub fn max_total(&self) -> Option<usize> {
        self.entries.iter().map(|s| s.total()).max()
    }

    /// True when this multiset contains `other` with multiplicity.
    pub fn contains_multiset(&self, other: &ShiftMultiset) -> bool {
        let mut mine = self.sorted();
        for s in other.sorted() {
            match mine.binary_search(&s) {
                Ok(k) => {
                    mine.remove(k);
                }
                Err(_) => return false,
            }
        }
        true
    }
}

impl PartialEq for ShiftMultiset {
    fn eq(&self, other: &Self) -> bool {
        self.sorted() == other.sorted()
    }
}

impl Eq for ShiftMultiset {}

impl FromIterator<Bidegree> for ShiftMultiset {
    fn from_iter<T: IntoIterator<Item = Bidegree>>(iter: T) -> Self {
        ShiftMultiset { entries: iter.into_iter().collect() }
    }
}

impl FromIterator<(usize, usize)> for ShiftMultiset {
    fn from_iter<T: IntoIterator<Item = (usize, usize)>>(iter: T) -> Self {
        iter.into_iter().map(|(x, y)| Bidegree::new(x, y)).collect()
    }
}

impl Extend<Bidegree> for ShiftMultiset {
    fn extend<T: IntoIterator<Item = Bidegree>>(&mut self, iter: T) {
        self.entries.extend(iter);
    }
}

/// Shifts of the free modules resolving a bihomogeneous ideal.
///
/// `s0` holds the generator degrees, `s1` the first syzygies, and `s2` the
/// second syzygies; `s2` is empty exactly in the arithmetically
/// Cohen-Macaulay case.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeResolution {
    pub s0: ShiftMultiset,
    pub s1: ShiftMultiset,
    pub s2: ShiftMultiset,
}

impl FreeResolution {
    /// Rank accounting: `|s0| - |s1| + |s2| = 1`.
    pub fn rank_balanced(&self) -> bool {
        self.s0.len() as i64 - self.s1.len() as i64 + self.s2.len() as i64 == 1
    }

    /// Coordinatewise shift-sum alternation vanishes.
    pub fn shift_sums_balanced(&self) -> bool {
        let x = self.s0.sum_x() as i64 - self.s1.sum_x() as i64 + self.s2.sum_x() as i64;
        let y = self.s0.sum_y() as i64 - self.s1.sum_y() as i64 + self.s2.sum_y() as i64;
        x == 0 && y == 0
    }

    /// Total Betti numbers `(|s0|, |s1|, |s2|)`.
    pub fn betti(&self) -> (usize, usize, usize) {
        (self.s0.len(), self.s1.len(), self.s2.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiset_semantics() {
        let a: ShiftMultiset = [(4, 6), (4, 6), (2, 10)].into_iter().collect();
        let b: ShiftMultiset = [(2, 10), (4, 6), (4, 6)].into_iter().collect();
        let c: ShiftMultiset = [(2, 10), (4, 6)].into_iter().collect();
        assert_eq!(a, b);
        assert_ne!(a, c);
        assert_eq!(a.multiplicity(Bidegree::new(4, 6)), 2);
        assert!(a.contains_multiset(&c));
        assert!(!c.contains_multiset(&a));
    }

    #[test]
    fn sorted_is_lex_ascending() {
        let a: ShiftMultiset = [(4, 6), (0, 12), (4, 2), (0, 3)].into_iter().collect();
        let sorted = a.sorted();
        assert_eq!(
            sorted,
            alloc::vec![
                Bidegree::new(0, 3),
                Bidegree::new(0, 12),
                Bidegree::new(4, 2),
                Bidegree::new(4, 6)
            ]
        );
    }
}
