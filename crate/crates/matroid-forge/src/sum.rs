//! Direct sums of matroids on disjoint ground sets.

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::set::{GroundSet, Subset};
use std::sync::Arc;

/// Direct sum: a set is independent iff its trace on every summand's ground
/// set is independent there.
pub struct DirectSum {
    parts: Vec<Arc<dyn Matroid>>,
    ground: GroundSet,
}

impl DirectSum {
    pub fn new(parts: Vec<Arc<dyn Matroid>>) -> Result<DirectSum> {
        let mut union = Subset::EMPTY;
        for part in &parts {
            let mask = part.ground().mask();
            let overlap = union.intersect(mask);
            if !overlap.is_empty() {
                return Err(Error::Overlap { what: "direct-sum ground sets", overlap });
            }
            union = union.union(mask);
        }
        Ok(DirectSum { parts, ground: GroundSet::new(union) })
    }

    pub fn parts(&self) -> &[Arc<dyn Matroid>] {
        &self.parts
    }
}

impl Matroid for DirectSum {
    fn ground(&self) -> GroundSet {
        self.ground
    }

    fn indep(&self, s: Subset) -> bool {
        self.parts.iter().all(|p| p.indep(s.intersect(p.ground().mask())))
    }

    fn rank_set(&self, x: Subset) -> usize {
        self.parts.iter().map(|p| p.rank_set(x.intersect(p.ground().mask()))).sum()
    }
}

/// Convenience constructor mirroring the sum notation.
pub fn direct_sum(parts: Vec<Arc<dyn Matroid>>) -> Result<DirectSum> {
    DirectSum::new(parts)
}
