//! Minors: contraction of a set relative to a fixed basis, plus deletion.

use crate::error::{Error, Result};
use crate::matroid::{check_domain, Matroid};
use crate::set::{GroundSet, Subset};
use std::sync::Arc;

/// A minor `base/contracted − deleted`, realized against a recorded maximal
/// independent subset of the contracted set. A set `I ⊆ E∖(X∪D)` is
/// independent here iff `I ∪ basis(X)` is independent in the base matroid;
/// the predicate does not depend on which maximal basis was recorded.
#[derive(Clone)]
pub struct MinorSpec {
    base: Arc<dyn Matroid>,
    contracted: Subset,
    contracted_basis: Subset,
    deleted: Subset,
    ground: GroundSet,
}

impl MinorSpec {
    /// Minor with the canonical (ascending greedy) basis of the contracted set.
    pub fn new(base: Arc<dyn Matroid>, contract: Subset, delete: Subset) -> Result<MinorSpec> {
        let basis = base.greedy_basis(contract);
        MinorSpec::with_basis(base, contract, basis, delete)
    }

    /// Minor relative to a caller-chosen maximal independent subset of
    /// `contract`.
    pub fn with_basis(
        base: Arc<dyn Matroid>,
        contract: Subset,
        basis: Subset,
        delete: Subset,
    ) -> Result<MinorSpec> {
        let outer = base.ground();
        check_domain(outer, contract)?;
        check_domain(outer, delete)?;
        let overlap = contract.intersect(delete);
        if !overlap.is_empty() {
            return Err(Error::Overlap { what: "contracted and deleted sets", overlap });
        }
        if !basis.is_subset_of(contract) || !base.indep(basis) {
            return Err(Error::InvalidBasis { basis, contracted: contract });
        }
        for e in contract.minus(basis).iter() {
            if base.indep(basis.with(e)) {
                return Err(Error::InvalidBasis { basis, contracted: contract });
            }
        }
        let ground = GroundSet::new(outer.mask().minus(contract).minus(delete));
        Ok(MinorSpec { base, contracted: contract, contracted_basis: basis, deleted: delete, ground })
    }

    pub fn base(&self) -> &Arc<dyn Matroid> {
        &self.base
    }

    pub fn contracted(&self) -> Subset {
        self.contracted
    }

    pub fn contracted_basis(&self) -> Subset {
        self.contracted_basis
    }

    pub fn deleted(&self) -> Subset {
        self.deleted
    }
}

impl Matroid for MinorSpec {
    fn ground(&self) -> GroundSet {
        self.ground
    }

    fn indep(&self, s: Subset) -> bool {
        self.base.indep(s.union(self.contracted_basis))
    }
}

/// `m / contract − delete` with the canonical contraction basis.
pub fn minor(m: Arc<dyn Matroid>, contract: Subset, delete: Subset) -> Result<MinorSpec> {
    MinorSpec::new(m, contract, delete)
}

/// Restriction `m ↾ x`.
pub fn restrict(m: Arc<dyn Matroid>, x: Subset) -> Result<MinorSpec> {
    let delete = m.ground().mask().minus(x);
    check_domain(m.ground(), x)?;
    MinorSpec::new(m, Subset::EMPTY, delete)
}

/// Contraction `m / x`.
pub fn contract(m: Arc<dyn Matroid>, x: Subset) -> Result<MinorSpec> {
    MinorSpec::new(m, x, Subset::EMPTY)
}

/// Deletion `m − x`.
pub fn delete(m: Arc<dyn Matroid>, x: Subset) -> Result<MinorSpec> {
    MinorSpec::new(m, Subset::EMPTY, x)
}
