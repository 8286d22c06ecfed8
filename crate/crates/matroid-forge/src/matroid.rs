//! The independence-oracle interface and the operations derived from it.

use crate::error::{Error, Result};
use crate::set::{GroundSet, Subset};
use std::collections::HashMap;
use std::sync::Mutex;

pub(crate) fn check_domain(ground: GroundSet, s: Subset) -> Result<()> {
    if ground.contains_subset(s) {
        Ok(())
    } else {
        Err(Error::OutOfGround { subset: s, ground })
    }
}

/// A finite matroid presented by an independence oracle.
///
/// Implementations must satisfy the usual independence axioms: the empty set
/// is independent, independence is downward closed, and independent sets
/// augment. Queries are pure, so shared references may be used from multiple
/// threads.
pub trait Matroid: Send + Sync {
    fn ground(&self) -> GroundSet;

    /// Independence oracle. Callers must pass `s ⊆ ground()`; the result is
    /// unspecified otherwise.
    fn indep(&self, s: Subset) -> bool;

    /// Checked independence query.
    fn is_independent(&self, s: Subset) -> Result<bool> {
        check_domain(self.ground(), s)?;
        Ok(self.indep(s))
    }

    /// The greedy maximal independent subset of `x`: scan `x` in ascending
    /// element order and keep every element that preserves independence.
    /// Unchecked counterpart of [`Matroid::max_independent_subset`].
    fn greedy_basis(&self, x: Subset) -> Subset {
        let mut basis = Subset::EMPTY;
        for e in x.iter() {
            if self.indep(basis.with(e)) {
                basis.insert(e);
            }
        }
        basis
    }

    /// Rank of `x` without the domain check. All maximal independent subsets
    /// of a set share one size, so the greedy size is the rank. Override
    /// point for cached implementations.
    fn rank_set(&self, x: Subset) -> usize {
        self.greedy_basis(x).len()
    }

    fn rank(&self, x: Subset) -> Result<usize> {
        check_domain(self.ground(), x)?;
        Ok(self.rank_set(x))
    }

    fn max_independent_subset(&self, x: Subset) -> Result<Subset> {
        check_domain(self.ground(), x)?;
        Ok(self.greedy_basis(x))
    }

    /// Closure of `x` without the domain check: `x` together with every
    /// outside element whose addition does not raise the rank.
    fn span_set(&self, x: Subset) -> Subset {
        let r = self.rank_set(x);
        let mut out = x;
        for e in self.ground().mask().minus(x).iter() {
            if self.rank_set(x.with(e)) == r {
                out.insert(e);
            }
        }
        out
    }

    fn span(&self, x: Subset) -> Result<Subset> {
        check_domain(self.ground(), x)?;
        Ok(self.span_set(x))
    }

    /// Whether `x` spans the whole ground set.
    fn is_spanning(&self, x: Subset) -> Result<bool> {
        check_domain(self.ground(), x)?;
        Ok(self.rank_set(x) == self.rank_set(self.ground().mask()))
    }
}

impl<M: Matroid + ?Sized> Matroid for &M {
    fn ground(&self) -> GroundSet {
        (**self).ground()
    }
    fn indep(&self, s: Subset) -> bool {
        (**self).indep(s)
    }
    fn rank_set(&self, x: Subset) -> usize {
        (**self).rank_set(x)
    }
    fn span_set(&self, x: Subset) -> Subset {
        (**self).span_set(x)
    }
}

impl<M: Matroid + ?Sized> Matroid for std::sync::Arc<M> {
    fn ground(&self) -> GroundSet {
        (**self).ground()
    }
    fn indep(&self, s: Subset) -> bool {
        (**self).indep(s)
    }
    fn rank_set(&self, x: Subset) -> usize {
        (**self).rank_set(x)
    }
    fn span_set(&self, x: Subset) -> Subset {
        (**self).span_set(x)
    }
}

/// Borrowing view of `base` with `fixed` contracted and the ground narrowed
/// to `window`. `fixed` must be independent in `base` and disjoint from
/// `window`. Zero-allocation workhorse behind the intersection procedures.
pub(crate) struct ContractedWindow<'a, M: Matroid + ?Sized> {
    pub base: &'a M,
    pub fixed: Subset,
    pub window: GroundSet,
}

impl<'a, M: Matroid + ?Sized> ContractedWindow<'a, M> {
    pub fn new(base: &'a M, fixed: Subset, window: Subset) -> Self {
        debug_assert!(fixed.is_disjoint(window));
        debug_assert!(base.indep(fixed));
        ContractedWindow { base, fixed, window: GroundSet::new(window) }
    }
}

impl<M: Matroid + ?Sized> Matroid for ContractedWindow<'_, M> {
    fn ground(&self) -> GroundSet {
        self.window
    }

    fn indep(&self, s: Subset) -> bool {
        self.base.indep(s.union(self.fixed))
    }
}

/// Wrapper that memoizes rank queries per subset, bounded by an entry cap.
/// Once the cap is reached new results are computed but not stored. The
/// cache is internally synchronized, so shared use stays safe.
pub struct CachedRank<M: Matroid> {
    inner: M,
    cache: Mutex<HashMap<u128, usize>>,
    cap: usize,
}

impl<M: Matroid> CachedRank<M> {
    pub fn new(inner: M, cap: usize) -> Self {
        CachedRank { inner, cache: Mutex::new(HashMap::new()), cap }
    }

    pub fn into_inner(self) -> M {
        self.inner
    }

    pub fn cached_entries(&self) -> usize {
        self.cache.lock().unwrap().len()
    }
}

impl<M: Matroid> Matroid for CachedRank<M> {
    fn ground(&self) -> GroundSet {
        self.inner.ground()
    }

    fn indep(&self, s: Subset) -> bool {
        self.inner.indep(s)
    }

    fn rank_set(&self, x: Subset) -> usize {
        if let Some(&r) = self.cache.lock().unwrap().get(&x.bits()) {
            return r;
        }
        let r = self.inner.rank_set(x);
        let mut cache = self.cache.lock().unwrap();
        if cache.len() < self.cap {
            cache.insert(x.bits(), r);
        }
        r
    }
}
