//! Partitions and the descent statistics the resolution algorithm consumes.
//!
//! All indices exposed here are 1-based, matching the usual matrix position
//! conventions `(i, j)`.

use alloc::vec::Vec;

use crate::{Error, Result};

/// A weakly decreasing tuple of positive integers.
///
/// The partition `lambda = (lambda_1, ..., lambda_r)` records how many
/// points of the support sit on each of the `r` ruling lines of the first
/// factor, largest first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Validates a raw list of parts.
    pub fn new(parts: impl Into<Vec<usize>>) -> Result<Self> {
        let parts = parts.into();
        if parts.is_empty() {
            return Err(Error::EmptyInput);
        }
        for (k, &p) in parts.iter().enumerate() {
            if p == 0 {
                return Err(Error::NonPositivePart { index: k + 1 });
            }
        }
        if let Some(k) = parts.windows(2).position(|w| w[0] < w[1]) {
            return Err(Error::NotWeaklyDecreasing { index: k + 2 });
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from values already known to be valid.
    ///
    /// Panics when the input is not a valid partition.
    pub(crate) fn from_sorted(mut values: Vec<usize>) -> Self {
        values.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(values).expect("values must form a partition")
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The number of parts `r`.
    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    /// The part `lambda_i`, 1-based.
    pub fn part(&self, i: usize) -> usize {
        self.parts[i - 1]
    }

    /// The largest part `lambda_1`.
    pub fn width(&self) -> usize {
        self.parts[0]
    }

    /// The smallest part `lambda_r`.
    pub fn last(&self) -> usize {
        *self.parts.last().unwrap()
    }

    /// The integer being partitioned.
    pub fn sum(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The conjugate partition, `lambda*_i = #{ j | lambda_j >= i }`.
    pub fn conjugate(&self) -> Partition {
        let parts = (1..=self.width())
            .map(|i| self.parts.iter().filter(|&&p| p >= i).count())
            .collect();
        Partition { parts }
    }

    /// Indices `i >= 2` with `lambda_i < lambda_{i-1}`, ascending.
    pub fn descents(&self) -> impl Iterator<Item = usize> + '_ {
        self.parts
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[1] < w[0])
            .map(|(k, _)| k + 2)
    }

    /// The descent count `d(lambda)`.
    pub fn descent_count(&self) -> usize {
        self.descents().count()
    }

    /// The smallest descent index `i*`, if any.
    pub fn first_descent(&self) -> Option<usize> {
        self.descents().next()
    }

    /// True when all parts are equal, i.e. `d(lambda) = 0`.
    pub fn is_constant(&self) -> bool {
        self.parts.iter().all(|&p| p == self.parts[0])
    }

    /// All partitions with at most `max_rows` parts, each part at most
    /// `max_width`, in lexicographic order.
    pub fn enumerate_box(max_rows: usize, max_width: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut stack: Vec<usize> = Vec::new();
        fn rec(out: &mut Vec<Partition>, stack: &mut Vec<usize>, max_rows: usize, cap: usize) {
            if !stack.is_empty() {
                out.push(Partition { parts: stack.clone() });
            }
            if stack.len() == max_rows {
                return;
            }
            for next in (1..=cap).rev() {
                stack.push(next);
                rec(out, stack, max_rows, next);
                stack.pop();
            }
        }
        rec(&mut out, &mut stack, max_rows, max_width);
        out.sort_unstable();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn pt(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn validation() {
        assert_eq!(pt(&[6, 5, 3, 1, 1]).parts(), &[6, 5, 3, 1, 1]);
        assert_eq!(pt(&[1]).parts(), &[1]);
        assert_eq!(Partition::new(alloc::vec![]), Err(Error::EmptyInput));
        assert_eq!(
            Partition::new(alloc::vec![3, 0]),
            Err(Error::NonPositivePart { index: 2 })
        );
        assert_eq!(
            Partition::new(alloc::vec![3, 4]),
            Err(Error::NotWeaklyDecreasing { index: 2 })
        );
    }

    #[test]
    fn conjugates() {
        assert_eq!(pt(&[6, 5, 3, 1, 1]).conjugate(), pt(&[5, 3, 3, 2, 2, 1]));
        assert_eq!(pt(&[3]).conjugate(), pt(&[1, 1, 1]));
        assert_eq!(pt(&[2, 2]).conjugate(), pt(&[2, 2]));
    }

    #[test]
    fn descent_statistics() {
        assert_eq!(pt(&[6, 5, 3, 1, 1]).descent_count(), 3);
        assert_eq!(pt(&[4, 4, 4]).descent_count(), 0);
        assert_eq!(pt(&[5, 4, 3, 2, 1]).descent_count(), 4);

        assert_eq!(pt(&[6, 5, 3, 1, 1]).first_descent(), Some(2));
        assert_eq!(pt(&[4, 4, 4]).first_descent(), None);
        assert_eq!(pt(&[3, 3, 1]).first_descent(), Some(3));
    }

    #[test]
    fn box_enumeration() {
        let all = Partition::enumerate_box(2, 2);
        assert_eq!(all, alloc::vec![pt(&[1]), pt(&[1, 1]), pt(&[2]), pt(&[2, 1]), pt(&[2, 2])]);
        // partitions fitting in an n x n box, empty one excluded
        assert_eq!(Partition::enumerate_box(4, 4).len(), 69);
        assert_eq!(Partition::enumerate_box(8, 8).len(), 12869);
    }

    fn arb_partition(max_rows: usize, max_width: usize) -> impl Strategy<Value = Partition> {
        proptest::collection::vec(1..=max_width, 1..=max_rows).prop_map(|mut v| {
            v.sort_unstable_by(|a, b| b.cmp(a));
            Partition::new(v).unwrap()
        })
    }

    proptest! {
        #[test]
        fn conjugate_is_an_involution(p in arb_partition(9, 9)) {
            prop_assert_eq!(p.conjugate().conjugate(), p);
        }

        #[test]
        fn conjugate_preserves_sum(p in arb_partition(9, 9)) {
            prop_assert_eq!(p.conjugate().sum(), p.sum());
        }

        #[test]
        fn descent_count_counts_distinct_values(p in arb_partition(9, 9)) {
            let mut distinct = p.parts().to_vec();
            distinct.dedup();
            prop_assert_eq!(p.descent_count(), distinct.len() - 1);
        }

        #[test]
        fn first_descent_exists_iff_descents(p in arb_partition(9, 9)) {
            prop_assert_eq!(p.first_descent().is_some(), p.descent_count() > 0);
        }
    }
}
