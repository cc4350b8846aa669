//! Signed element sets: circuits, cocircuits, cuts and cycles are all a
//! support split into disjoint positive and negative parts.

use alloc::collections::BTreeSet;

/// A set of element ids partitioned into positive and negative parts.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct SignedSet {
    pub positive: BTreeSet<usize>,
    pub negative: BTreeSet<usize>,
}

impl SignedSet {
    pub fn new(positive: BTreeSet<usize>, negative: BTreeSet<usize>) -> Self {
        debug_assert!(positive.is_disjoint(&negative));
        SignedSet { positive, negative }
    }

    pub fn from_slices(positive: &[usize], negative: &[usize]) -> Self {
        Self::new(positive.iter().copied().collect(), negative.iter().copied().collect())
    }

    pub fn support(&self) -> BTreeSet<usize> {
        self.positive.union(&self.negative).copied().collect()
    }

    pub fn len(&self) -> usize {
        self.positive.len() + self.negative.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positive.is_empty() && self.negative.is_empty()
    }

    pub fn contains(&self, e: usize) -> bool {
        self.positive.contains(&e) || self.negative.contains(&e)
    }

    /// The largest element of the support; panics on empty sets.
    pub fn max_element(&self) -> usize {
        self.support()
            .into_iter()
            .next_back()
            .expect("signed set must be nonempty")
    }

    /// Largest element with respect to an explicit order (a permutation of
    /// element ids, smallest rank first).
    pub fn max_element_under(&self, order: &[usize]) -> usize {
        let support = self.support();
        order
            .iter()
            .rev()
            .copied()
            .find(|e| support.contains(e))
            .expect("order must cover the support")
    }

    /// True when both ids are in the same part.
    pub fn parallel(&self, a: usize, b: usize) -> bool {
        (self.positive.contains(&a) && self.positive.contains(&b))
            || (self.negative.contains(&a) && self.negative.contains(&b))
    }

    pub fn flipped(&self) -> SignedSet {
        SignedSet {
            positive: self.negative.clone(),
            negative: self.positive.clone(),
        }
    }

    /// Canonical orientation: the smallest support element is positive.
    pub fn canonical(&self) -> SignedSet {
        match self.support().into_iter().next() {
            Some(min) if self.negative.contains(&min) => self.flipped(),
            _ => self.clone(),
        }
    }

    /// Equality disregarding the global sign choice.
    pub fn same_up_to_flip(&self, other: &SignedSet) -> bool {
        self == other || self.flipped() == *other
    }

    /// Orthogonality of signed sets: disjoint supports, or both the
    /// agreeing and the disagreeing overlap are nonempty.
    pub fn orthogonal(&self, other: &SignedSet) -> bool {
        let agree = self.positive.intersection(&other.positive).next().is_some()
            || self.negative.intersection(&other.negative).next().is_some();
        let disagree = self.positive.intersection(&other.negative).next().is_some()
            || self.negative.intersection(&other.positive).next().is_some();
        (!agree && !disagree) || (agree && disagree)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orthogonal_disjoint_sets() {
        let a = SignedSet::from_slices(&[1], &[2]);
        let b = SignedSet::from_slices(&[3], &[4]);
        assert!(a.orthogonal(&b));
    }

    #[test]
    fn orthogonal_cycle_against_cut() {
        // 2-cycle: cycle {e1+, e2+} vs cut {e1+, e2-}
        let cycle = SignedSet::from_slices(&[1, 2], &[]);
        let cut = SignedSet::from_slices(&[1], &[2]);
        assert!(cycle.orthogonal(&cut));
    }

    #[test]
    fn orthogonal_is_false_against_itself() {
        // the agreeing overlap is the whole support and the disagreeing
        // overlap is empty, for any sign mix
        let mixed = SignedSet::from_slices(&[1], &[2]);
        assert!(!mixed.orthogonal(&mixed));
        let all_positive = SignedSet::from_slices(&[1, 2], &[]);
        assert!(!all_positive.orthogonal(&all_positive));
        // against its own flip the overlaps swap but the verdict is the same
        assert!(!mixed.orthogonal(&mixed.flipped()));
    }

    #[test]
    fn canonical_makes_smallest_positive() {
        let s = SignedSet::from_slices(&[5], &[2]);
        let c = s.canonical();
        assert!(c.positive.contains(&2));
        assert!(c.negative.contains(&5));
        assert!(s.same_up_to_flip(&c));
    }
}
