//! Bit-indexed element sets.
//!
//! Elements are non-negative integers below [`MAX_ELEMENTS`]; every subset is
//! a fixed-width bitmask, so set algebra is O(1) and iteration order is always
//! ascending. That ascending order is the tie-breaking order used by every
//! algorithm in this crate.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;

/// Hard cap on element identifiers (exclusive).
pub const MAX_ELEMENTS: u32 = 128;

/// A subset of the element universe, encoded as a bitmask.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Subset(u128);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn singleton(e: u32) -> Subset {
        debug_assert!(e < MAX_ELEMENTS);
        Subset(1u128 << e)
    }

    /// Builds a subset from element identifiers. Identifiers must be below
    /// [`MAX_ELEMENTS`]; duplicates collapse.
    pub fn from_elements<I: IntoIterator<Item = u32>>(elems: I) -> Subset {
        let mut bits = 0u128;
        for e in elems {
            debug_assert!(e < MAX_ELEMENTS);
            bits |= 1u128 << e;
        }
        Subset(bits)
    }

    pub fn bits(self) -> u128 {
        self.0
    }

    pub fn from_bits(bits: u128) -> Subset {
        Subset(bits)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, e: u32) -> bool {
        e < MAX_ELEMENTS && self.0 >> e & 1 == 1
    }

    #[must_use]
    pub fn with(self, e: u32) -> Subset {
        debug_assert!(e < MAX_ELEMENTS);
        Subset(self.0 | 1u128 << e)
    }

    #[must_use]
    pub fn without(self, e: u32) -> Subset {
        Subset(self.0 & !(1u128 << e))
    }

    pub fn insert(&mut self, e: u32) {
        debug_assert!(e < MAX_ELEMENTS);
        self.0 |= 1u128 << e;
    }

    pub fn remove(&mut self, e: u32) {
        self.0 &= !(1u128 << e);
    }

    #[must_use]
    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    #[must_use]
    pub fn intersect(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    #[must_use]
    pub fn minus(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    #[must_use]
    pub fn symmetric_difference(self, other: Subset) -> Subset {
        Subset(self.0 ^ other.0)
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Subset) -> bool {
        self.0 & other.0 == 0
    }

    pub fn min_element(self) -> Option<u32> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros())
        }
    }

    /// The `k` smallest elements (all of them if `k ≥ len`).
    #[must_use]
    pub fn first_n(self, k: usize) -> Subset {
        let mut out = Subset::EMPTY;
        for e in self.iter().take(k) {
            out.insert(e);
        }
        out
    }

    /// Ascending iteration over elements.
    pub fn iter(self) -> SubsetIter {
        SubsetIter(self.0)
    }

    pub fn elements(self) -> Vec<u32> {
        self.iter().collect()
    }

    /// Lexicographic order on the ascending element sequences, so
    /// {0,3} < {1,2}. Distinct from the numeric order on bitmasks.
    pub fn lex_le(self, other: Subset) -> bool {
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return true;
        }
        let low = diff & diff.wrapping_neg();
        self.0 & low != 0
    }

    /// All subsets of `self` in ascending bitmask order (the canonical
    /// enumeration order).
    pub fn subsets(self) -> Submasks {
        Submasks { universe: self.0, next: Some(0) }
    }
}

impl FromIterator<u32> for Subset {
    fn from_iter<I: IntoIterator<Item = u32>>(iter: I) -> Subset {
        Subset::from_elements(iter)
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for Subset {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for Subset {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Subset, D::Error> {
        let elems = Vec::<u32>::deserialize(deserializer)?;
        let mut out = Subset::EMPTY;
        for e in elems {
            if e >= MAX_ELEMENTS {
                return Err(D::Error::custom(format!(
                    "element {e} exceeds the supported maximum {}",
                    MAX_ELEMENTS - 1
                )));
            }
            out.insert(e);
        }
        Ok(out)
    }
}

pub struct SubsetIter(u128);

impl Iterator for SubsetIter {
    type Item = u32;

    fn next(&mut self) -> Option<u32> {
        if self.0 == 0 {
            None
        } else {
            let e = self.0.trailing_zeros();
            self.0 &= self.0 - 1;
            Some(e)
        }
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for SubsetIter {}

/// Iterator over all submasks of a universe in ascending bitmask order.
pub struct Submasks {
    universe: u128,
    next: Option<u128>,
}

impl Iterator for Submasks {
    type Item = Subset;

    fn next(&mut self) -> Option<Subset> {
        let cur = self.next?;
        self.next = if cur == self.universe {
            None
        } else {
            // Increment within the universe coordinates: filling the
            // complement with ones makes +1 carry across non-universe bits.
            Some((cur | !self.universe).wrapping_add(1) & self.universe)
        };
        Some(Subset(cur))
    }
}

/// The ground set of a matroid: a fixed finite set of element identifiers.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GroundSet(Subset);

impl GroundSet {
    pub const EMPTY: GroundSet = GroundSet(Subset::EMPTY);

    pub fn new(elements: Subset) -> GroundSet {
        GroundSet(elements)
    }

    /// The canonical dense ground set {0, …, n-1}.
    pub fn dense(n: usize) -> GroundSet {
        assert!(n <= MAX_ELEMENTS as usize);
        if n == 0 {
            GroundSet::EMPTY
        } else {
            GroundSet(Subset((!0u128) >> (128 - n)))
        }
    }

    pub fn mask(self) -> Subset {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.len()
    }

    pub fn is_empty(self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(self, e: u32) -> bool {
        self.0.contains(e)
    }

    pub fn contains_subset(self, s: Subset) -> bool {
        s.is_subset_of(self.0)
    }

    pub fn iter(self) -> SubsetIter {
        self.0.iter()
    }

    pub fn subsets(self) -> Submasks {
        self.0.subsets()
    }

    pub fn max_element(self) -> Option<u32> {
        if self.0.is_empty() {
            None
        } else {
            Some(127 - self.0.bits().leading_zeros())
        }
    }
}

impl fmt::Debug for GroundSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for GroundSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A set of part indices of a partition matroid.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Default)]
pub struct PartSet(u128);

impl PartSet {
    pub const EMPTY: PartSet = PartSet(0);

    pub fn all_below(n: usize) -> PartSet {
        assert!(n <= 128);
        if n == 0 {
            PartSet(0)
        } else {
            PartSet((!0u128) >> (128 - n))
        }
    }

    pub fn singleton(i: usize) -> PartSet {
        PartSet(1u128 << i)
    }

    pub fn contains(self, i: usize) -> bool {
        i < 128 && self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1u128 << i;
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset_of(self, other: PartSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_superset_of(self, other: PartSet) -> bool {
        other.0 & !self.0 == 0 && self.0 != other.0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        SubsetIter(self.0).map(|i| i as usize)
    }
}

impl fmt::Debug for PartSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}
