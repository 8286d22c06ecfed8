//! Matroids given by an explicit family of independent sets.

use crate::axioms::{check_axioms, AxiomReport, AxiomViolation};
use crate::config::Thresholds;
use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::set::{GroundSet, Subset};

/// Largest element identifier an explicit family may use. The family is
/// stored as a bitset indexed by subset encoding, so memory is 2^(max+1) bits.
pub const EXPLICIT_MAX_ELEMENT: u32 = 20;

/// A matroid stored as the full list of its independent sets.
///
/// Construction enforces that the family contains the empty set, is downward
/// closed, and stays within the ground set. Full axiom validation (including
/// augmentation) is [`ExplicitMatroid::validate`] / [`check_axioms`].
#[derive(Clone)]
pub struct ExplicitMatroid {
    ground: GroundSet,
    words: Box<[u64]>,
}

impl ExplicitMatroid {
    pub fn new(ground: GroundSet, family: &[Subset]) -> Result<ExplicitMatroid> {
        let mut m = ExplicitMatroid::empty_family(ground)?;
        for &s in family {
            if !ground.contains_subset(s) {
                return Err(Error::OutOfGround { subset: s, ground });
            }
            m.set_bit(s);
        }
        if !m.indep(Subset::EMPTY) {
            let mut report = AxiomReport::default();
            report.violations.push(AxiomViolation::EmptySetMissing);
            return Err(Error::InvalidMatroid(report));
        }
        for &s in family {
            for e in s.iter() {
                if !m.indep(s.without(e)) {
                    let mut report = AxiomReport::default();
                    report.violations.push(AxiomViolation::DownwardClosure {
                        member: s,
                        subset: s.without(e),
                    });
                    return Err(Error::InvalidMatroid(report));
                }
            }
        }
        Ok(m)
    }

    fn empty_family(ground: GroundSet) -> Result<ExplicitMatroid> {
        if let Some(max) = ground.max_element() {
            if max > EXPLICIT_MAX_ELEMENT {
                return Err(Error::CapacityExceeded {
                    what: "explicit matroid element identifier",
                    size: max as usize,
                    limit: EXPLICIT_MAX_ELEMENT as usize,
                });
            }
        }
        let bits = 1usize << (ground.max_element().map_or(0, |m| m + 1));
        let words = vec![0u64; bits.div_ceil(64)].into_boxed_slice();
        Ok(ExplicitMatroid { ground, words })
    }

    /// Snapshot of an arbitrary oracle as an explicit family.
    pub fn from_matroid(m: &dyn Matroid) -> Result<ExplicitMatroid> {
        let mut out = ExplicitMatroid::empty_family(m.ground())?;
        for s in m.ground().subsets() {
            if m.indep(s) {
                out.set_bit(s);
            }
        }
        Ok(out)
    }

    fn set_bit(&mut self, s: Subset) {
        let code = s.bits() as usize;
        self.words[code >> 6] |= 1u64 << (code & 63);
    }

    /// The independent sets in ascending canonical order.
    pub fn family(&self) -> Vec<Subset> {
        self.ground.subsets().filter(|&s| self.indep(s)).collect()
    }

    /// The maximal independent sets in ascending canonical order.
    pub fn bases(&self) -> Vec<Subset> {
        self.family()
            .into_iter()
            .filter(|&b| {
                self.ground.mask().minus(b).iter().all(|e| !self.indep(b.with(e)))
            })
            .collect()
    }

    /// Full axiom check of the stored family.
    pub fn validate(&self, thresholds: &Thresholds) -> Result<AxiomReport> {
        check_axioms(self.ground, &self.family(), thresholds)
    }

    /// The dual matroid: a set is independent iff its complement spans.
    /// Equivalently, the bases of the dual are the complements of the bases.
    /// The input family is axiom-checked first, so the ground set must stay
    /// within the axiom-check threshold.
    pub fn dual(&self, thresholds: &Thresholds) -> Result<ExplicitMatroid> {
        let report = self.validate(thresholds)?;
        if !report.passed() {
            return Err(Error::InvalidMatroid(report));
        }
        let full = self.ground.mask();
        let total_rank = self.rank_set(full);
        let mut out = ExplicitMatroid::empty_family(self.ground)?;
        for s in self.ground.subsets() {
            if self.rank_set(full.minus(s)) == total_rank {
                out.set_bit(s);
            }
        }
        Ok(out)
    }
}

impl Matroid for ExplicitMatroid {
    fn ground(&self) -> GroundSet {
        self.ground
    }

    #[inline]
    fn indep(&self, s: Subset) -> bool {
        let code = s.bits() as usize;
        self.words[code >> 6] >> (code & 63) & 1 == 1
    }
}
