//! Uniform-matroid recognition and the base-exchange construction.

use crate::config::Thresholds;
use crate::error::{Error, Result};
use crate::matroid::{check_domain, Matroid};
use crate::set::Subset;
use crate::zoo::UniformMatroid;

/// Verdict of [`classify_uniform`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum UniformClass {
    /// Every subset is independent.
    Free,
    /// Independence is exactly the size cap `n` with `n < |E|`.
    UniformRank(usize),
    /// Not uniform; the witness is a subset that is neither independent nor
    /// spanning.
    NotUniform { witness: Subset },
}

/// Trichotomy for a single subset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SetStatus {
    Independent,
    Spanning,
    Neither(Subset),
}

/// Exactly one of: the set is independent, the set spans, or neither (with
/// the set returned as witness). In a uniform matroid the third branch is
/// unreachable — every subset is independent or spanning.
pub fn independent_or_spanning(m: &dyn Matroid, f: Subset) -> Result<SetStatus> {
    check_domain(m.ground(), f)?;
    if m.indep(f) {
        Ok(SetStatus::Independent)
    } else if m.rank_set(f) == m.rank_set(m.ground().mask()) {
        Ok(SetStatus::Spanning)
    } else {
        Ok(SetStatus::Neither(f))
    }
}

/// Decides whether `m` is uniform by scanning all subsets in canonical
/// order. A matroid is uniform iff every subset is independent or spanning,
/// and a finite uniform matroid is free or a pure size cap, so the first
/// subset that is neither refutes uniformity.
pub fn classify_uniform(m: &dyn Matroid, thresholds: &Thresholds) -> Result<UniformClass> {
    let ground = m.ground();
    if ground.len() > thresholds.circuits {
        return Err(Error::CapacityExceeded {
            what: "uniform classification ground set",
            size: ground.len(),
            limit: thresholds.circuits,
        });
    }
    let total_rank = m.rank_set(ground.mask());
    for s in ground.subsets() {
        if !m.indep(s) && m.rank_set(s) != total_rank {
            return Ok(UniformClass::NotUniform { witness: s });
        }
    }
    if total_rank == ground.len() {
        Ok(UniformClass::Free)
    } else {
        debug_assert!(
            ground.subsets().all(|s| m.indep(s) == (s.len() <= total_rank)),
            "independent-or-spanning held but independence is not a size cap"
        );
        Ok(UniformClass::UniformRank(total_rank))
    }
}

/// Outcome of [`base_exchange_with_uniform`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BaseExchange {
    /// An `m`-independent base of the uniform matroid.
    UniformBase(Subset),
    /// A base of `m` that is independent in the uniform matroid.
    MatroidBase(Subset),
}

impl BaseExchange {
    pub fn set(&self) -> Subset {
        match *self {
            BaseExchange::UniformBase(s) | BaseExchange::MatroidBase(s) => s,
        }
    }
}

/// For matroids `m` and `u` on the same ground set with `u` uniform, there is
/// either an `m`-independent base of `u` or a `u`-independent base of `m`.
/// Take the canonical greedy base `B` of `m`: if it fits under the cap it is
/// `u`-independent, otherwise its first `cap` elements form a base of `u`.
pub fn base_exchange_with_uniform(
    m: &(impl Matroid + ?Sized),
    u: &UniformMatroid,
) -> Result<BaseExchange> {
    if m.ground() != u.ground() {
        return Err(Error::GroundMismatch { left: m.ground(), right: u.ground() });
    }
    let base = m.greedy_basis(m.ground().mask());
    if base.len() <= u.rank_cap() {
        Ok(BaseExchange::MatroidBase(base))
    } else {
        Ok(BaseExchange::UniformBase(base.first_n(u.rank_cap())))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::set::GroundSet;
    use crate::zoo::GraphicMatroid;

    fn th() -> Thresholds {
        Thresholds::default()
    }

    /// Two parallel edges 0,1 on u–v plus edge 2 on v–w.
    fn parallel_multigraph() -> GraphicMatroid {
        GraphicMatroid::new(&[(0, 0, 1), (1, 0, 1), (2, 1, 2)]).unwrap()
    }

    #[test]
    fn uniform_classification() {
        let u = UniformMatroid::new(GroundSet::dense(5), 2).unwrap();
        assert_eq!(classify_uniform(&u, &th()).unwrap(), UniformClass::UniformRank(2));
        let free = UniformMatroid::free(GroundSet::dense(3));
        assert_eq!(classify_uniform(&free, &th()).unwrap(), UniformClass::Free);
    }

    #[test]
    fn multigraph_is_not_uniform() {
        // {0,1} is dependent yet does not span edge 2.
        let g = parallel_multigraph();
        assert_eq!(
            classify_uniform(&g, &th()).unwrap(),
            UniformClass::NotUniform { witness: Subset::from_elements([0, 1]) }
        );
    }

    #[test]
    fn trichotomy() {
        let u = UniformMatroid::new(GroundSet::dense(4), 2).unwrap();
        assert_eq!(
            independent_or_spanning(&u, Subset::singleton(1)).unwrap(),
            SetStatus::Independent
        );
        assert_eq!(
            independent_or_spanning(&u, Subset::from_elements([0, 1, 2])).unwrap(),
            SetStatus::Spanning
        );
        let g = parallel_multigraph();
        let f = Subset::from_elements([0, 1]);
        assert_eq!(independent_or_spanning(&g, f).unwrap(), SetStatus::Neither(f));
    }

    #[test]
    fn exchange_free_against_rank_one() {
        let free = UniformMatroid::free(GroundSet::dense(4));
        let u1 = UniformMatroid::new(GroundSet::dense(4), 1).unwrap();
        assert_eq!(
            base_exchange_with_uniform(&free, &u1).unwrap(),
            BaseExchange::UniformBase(Subset::singleton(0))
        );
    }

    #[test]
    fn exchange_rank_one_against_free() {
        let m = UniformMatroid::new(GroundSet::dense(4), 1).unwrap();
        let free = UniformMatroid::free(GroundSet::dense(4));
        assert_eq!(
            base_exchange_with_uniform(&m, &free).unwrap(),
            BaseExchange::MatroidBase(Subset::singleton(0))
        );
    }

    #[test]
    fn exchange_multigraph_against_rank_two() {
        let g = parallel_multigraph();
        let u2 = UniformMatroid::new(g.ground(), 2).unwrap();
        assert_eq!(
            base_exchange_with_uniform(&g, &u2).unwrap(),
            BaseExchange::MatroidBase(Subset::from_elements([0, 2]))
        );
    }

    #[test]
    fn exchange_result_always_has_the_advertised_property() {
        let g = parallel_multigraph();
        for cap in 0..=3 {
            let u = UniformMatroid::new(g.ground(), cap).unwrap();
            match base_exchange_with_uniform(&g, &u).unwrap() {
                BaseExchange::MatroidBase(b) => {
                    assert!(u.indep(b));
                    assert!(g.indep(b));
                    assert_eq!(b.len(), g.rank_set(g.ground().mask()));
                }
                BaseExchange::UniformBase(b) => {
                    assert!(g.indep(b));
                    assert_eq!(b.len(), cap);
                }
            }
        }
    }

    #[test]
    fn ground_mismatch_is_rejected() {
        let m = UniformMatroid::new(GroundSet::dense(3), 1).unwrap();
        let u = UniformMatroid::new(GroundSet::dense(4), 1).unwrap();
        assert!(matches!(
            base_exchange_with_uniform(&m, &u),
            Err(Error::GroundMismatch { .. })
        ));
    }
}
