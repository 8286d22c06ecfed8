//! Uniform matroids: independence is a cardinality cap.

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::set::{GroundSet, Subset};

/// `U_{E,n}`: a set is independent iff it has at most `rank_cap` elements.
/// The free matroid on `E` is the `rank_cap = |E|` case.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct UniformMatroid {
    ground: GroundSet,
    rank_cap: usize,
}

impl UniformMatroid {
    pub fn new(ground: GroundSet, rank_cap: usize) -> Result<UniformMatroid> {
        if rank_cap > ground.len() {
            return Err(Error::InvalidArgument(format!(
                "uniform rank cap {rank_cap} exceeds ground size {}",
                ground.len()
            )));
        }
        Ok(UniformMatroid { ground, rank_cap })
    }

    pub fn free(ground: GroundSet) -> UniformMatroid {
        UniformMatroid { ground, rank_cap: ground.len() }
    }

    pub fn rank_cap(&self) -> usize {
        self.rank_cap
    }

    pub fn is_free(&self) -> bool {
        self.rank_cap == self.ground.len()
    }
}

impl Matroid for UniformMatroid {
    fn ground(&self) -> GroundSet {
        self.ground
    }

    #[inline]
    fn indep(&self, s: Subset) -> bool {
        s.len() <= self.rank_cap
    }

    fn rank_set(&self, x: Subset) -> usize {
        x.len().min(self.rank_cap)
    }

    fn span_set(&self, x: Subset) -> Subset {
        if x.len() >= self.rank_cap {
            self.ground.mask()
        } else {
            x
        }
    }
}
