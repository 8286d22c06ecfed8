//! Partition matroids: finite direct sums of uniform matroids on disjoint
//! parts, kept in partition form so part structure stays accessible.

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::set::{GroundSet, PartSet, Subset};
use crate::zoo::UniformMatroid;
use serde::{Deserialize, Serialize};

/// One part: a block of elements with its independence cap.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Part {
    pub elements: Subset,
    pub cap: usize,
}

/// The direct sum of uniform matroids `U_{E_i, n_i}` over pairwise disjoint
/// parts. A set is independent iff each per-part trace respects its cap.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionMatroid {
    parts: Vec<Part>,
    ground: GroundSet,
}

impl PartitionMatroid {
    /// Parts must be nonempty, pairwise disjoint, and have `cap ≤ |part|`.
    pub fn new(parts: Vec<Part>) -> Result<PartitionMatroid> {
        let mut union = Subset::EMPTY;
        for (i, part) in parts.iter().enumerate() {
            if part.elements.is_empty() {
                return Err(Error::InvalidArgument(format!("part {i} is empty")));
            }
            if part.cap > part.elements.len() {
                return Err(Error::InvalidArgument(format!(
                    "part {i}: cap {} exceeds part size {}",
                    part.cap,
                    part.elements.len()
                )));
            }
            let overlap = union.intersect(part.elements);
            if !overlap.is_empty() {
                return Err(Error::Overlap { what: "partition parts", overlap });
            }
            union = union.union(part.elements);
        }
        Ok(PartitionMatroid { parts, ground: GroundSet::new(union) })
    }

    /// Single-part partition equivalent to one uniform matroid.
    pub fn single(u: &UniformMatroid) -> PartitionMatroid {
        if u.ground().is_empty() {
            return PartitionMatroid { parts: Vec::new(), ground: GroundSet::EMPTY };
        }
        PartitionMatroid {
            parts: vec![Part { elements: u.ground().mask(), cap: u.rank_cap() }],
            ground: u.ground(),
        }
    }

    pub fn parts(&self) -> &[Part] {
        &self.parts
    }

    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    /// Union of the element blocks of the given part indices.
    pub fn part_union(&self, set: PartSet) -> Subset {
        let mut out = Subset::EMPTY;
        for i in set.iter() {
            out = out.union(self.parts[i].elements);
        }
        out
    }

    /// Sub-partition keeping exactly the listed parts, in original order.
    pub fn restrict_to_parts(&self, keep: PartSet) -> PartitionMatroid {
        let parts: Vec<Part> =
            keep.iter().map(|i| self.parts[i]).collect();
        let ground = GroundSet::new(self.part_union(keep));
        PartitionMatroid { parts, ground }
    }

    /// Deletes every part whose block lies inside `w`. When `w` is exactly a
    /// union of parts this realizes both the deletion and the contraction of
    /// `w`, which coincide for direct sums.
    pub fn without_parts_in(&self, w: Subset) -> PartitionMatroid {
        let parts: Vec<Part> =
            self.parts.iter().copied().filter(|p| !p.elements.is_subset_of(w)).collect();
        let mut union = Subset::EMPTY;
        for p in &parts {
            union = union.union(p.elements);
        }
        PartitionMatroid { parts, ground: GroundSet::new(union) }
    }

    /// Indices of parts saturated by `s` (trace at least the cap); for an
    /// independent `s` these are exactly the parts it spans.
    pub fn saturated_parts(&self, s: Subset) -> PartSet {
        let mut out = PartSet::EMPTY;
        for (i, p) in self.parts.iter().enumerate() {
            if s.intersect(p.elements).len() >= p.cap {
                out.insert(i);
            }
        }
        out
    }
}

impl Matroid for PartitionMatroid {
    fn ground(&self) -> GroundSet {
        self.ground
    }

    #[inline]
    fn indep(&self, s: Subset) -> bool {
        self.parts.iter().all(|p| s.intersect(p.elements).len() <= p.cap)
    }

    fn rank_set(&self, x: Subset) -> usize {
        self.parts.iter().map(|p| x.intersect(p.elements).len().min(p.cap)).sum()
    }

    fn span_set(&self, x: Subset) -> Subset {
        let mut out = x;
        for p in &self.parts {
            if x.intersect(p.elements).len() >= p.cap {
                out = out.union(p.elements);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_singleton_caps() -> PartitionMatroid {
        PartitionMatroid::new(vec![
            Part { elements: Subset::from_elements([0, 1]), cap: 1 },
            Part { elements: Subset::from_elements([2, 3]), cap: 1 },
        ])
        .unwrap()
    }

    #[test]
    fn per_part_caps() {
        let n = two_singleton_caps();
        assert!(n.indep(Subset::from_elements([0, 2])));
        assert!(!n.indep(Subset::from_elements([0, 1])));
        assert_eq!(n.rank_set(n.ground().mask()), 2);
    }

    #[test]
    fn overrides_match_generic_definitions() {
        let n = PartitionMatroid::new(vec![
            Part { elements: Subset::from_elements([0, 1, 2]), cap: 2 },
            Part { elements: Subset::from_elements([3, 4]), cap: 1 },
        ])
        .unwrap();
        for x in n.ground().subsets() {
            assert_eq!(n.rank_set(x), n.greedy_basis(x).len());
            let r = n.greedy_basis(x).len();
            let mut generic = x;
            for e in n.ground().mask().minus(x).iter() {
                if n.greedy_basis(x.with(e)).len() == r {
                    generic.insert(e);
                }
            }
            assert_eq!(n.span_set(x), generic);
        }
    }

    #[test]
    fn construction_validates() {
        assert!(PartitionMatroid::new(vec![Part { elements: Subset::EMPTY, cap: 0 }]).is_err());
        assert!(PartitionMatroid::new(vec![Part {
            elements: Subset::from_elements([0, 1]),
            cap: 3
        }])
        .is_err());
        let overlapping = PartitionMatroid::new(vec![
            Part { elements: Subset::from_elements([0, 1]), cap: 1 },
            Part { elements: Subset::from_elements([1, 2]), cap: 1 },
        ]);
        assert!(matches!(overlapping, Err(Error::Overlap { .. })));
    }

    #[test]
    fn removing_parts_matches_contraction() {
        use crate::minor::minor;
        use std::sync::Arc;
        let n = two_singleton_caps();
        let w = Subset::from_elements([0, 1]);
        let removed = n.without_parts_in(w);
        let contracted =
            minor(Arc::new(n.clone()), w, Subset::EMPTY).unwrap();
        let deleted = minor(Arc::new(n), Subset::EMPTY, w).unwrap();
        assert_eq!(removed.ground(), contracted.ground());
        for s in removed.ground().subsets() {
            assert_eq!(removed.indep(s), contracted.indep(s));
            assert_eq!(removed.indep(s), deleted.indep(s));
        }
    }
}
