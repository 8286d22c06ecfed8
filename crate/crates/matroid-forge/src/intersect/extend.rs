//! Growing a common independent set to a maximal one, part by part, and the
//! span characterization of maximality.

use crate::error::{Error, Result};
use crate::matroid::{ContractedWindow, Matroid};
use crate::set::{GroundSet, Subset};
use crate::zoo::{base_exchange_with_uniform, PartitionMatroid, UniformMatroid};

fn require_common_independent<M: Matroid + ?Sized>(
    m: &M,
    n: &PartitionMatroid,
    i: Subset,
) -> Result<()> {
    if m.ground() != n.ground() {
        return Err(Error::GroundMismatch { left: m.ground(), right: n.ground() });
    }
    if !m.ground().contains_subset(i) {
        return Err(Error::OutOfGround { subset: i, ground: m.ground() });
    }
    if !m.indep(i) || !n.indep(i) {
        return Err(Error::NotCommonIndependent { set: i });
    }
    Ok(())
}

/// Extends a common independent set of `m` and `n` to a maximal one.
///
/// For each part in order, the contraction of the current set restricted to
/// the part's remaining elements is played against the contracted uniform
/// part via the base exchange; the returned set joins the current set. After
/// a part's step that part is spanned on one side and stays spanned, so the
/// result is maximal.
pub fn extend_to_maximal<M: Matroid + ?Sized>(
    m: &M,
    n: &PartitionMatroid,
    i: Subset,
) -> Result<Subset> {
    require_common_independent(m, n, i)?;
    let mut current = i;
    for part in n.parts() {
        let window = part.elements.minus(current);
        let cap_rem = part.cap - current.intersect(part.elements).len();
        let view = ContractedWindow::new(m, current, window);
        let contracted_uniform = UniformMatroid::new(GroundSet::new(window), cap_rem)?;
        let gained = base_exchange_with_uniform(&view, &contracted_uniform)?.set();
        current = current.union(gained);
    }
    debug_assert!(m.indep(current) && n.indep(current));
    Ok(current)
}

/// Maximality characterization: a common independent set is maximal iff
/// every part is spanned by it in at least one of the two matroids. On the
/// partition side a part is spanned exactly when its cap is saturated; on
/// the `m` side, since the set is independent, an outside element is spanned
/// exactly when adding it breaks independence.
pub fn is_maximal_common<M: Matroid + ?Sized>(
    m: &M,
    n: &PartitionMatroid,
    i: Subset,
) -> Result<bool> {
    require_common_independent(m, n, i)?;
    for part in n.parts() {
        if i.intersect(part.elements).len() >= part.cap {
            continue;
        }
        if part.elements.minus(i).iter().any(|e| m.indep(i.with(e))) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo::Part;

    fn free(n: usize) -> UniformMatroid {
        UniformMatroid::free(GroundSet::dense(n))
    }

    fn uniform(n: usize, cap: usize) -> UniformMatroid {
        UniformMatroid::new(GroundSet::dense(n), cap).unwrap()
    }

    fn two_singleton_caps() -> PartitionMatroid {
        PartitionMatroid::new(vec![
            Part { elements: Subset::from_elements([0, 1]), cap: 1 },
            Part { elements: Subset::from_elements([2, 3]), cap: 1 },
        ])
        .unwrap()
    }

    /// Brute maximality: no outside element keeps the set common independent.
    fn literally_maximal<M: Matroid + ?Sized>(m: &M, n: &PartitionMatroid, i: Subset) -> bool {
        m.ground()
            .mask()
            .minus(i)
            .iter()
            .all(|e| !(m.indep(i.with(e)) && n.indep(i.with(e))))
    }

    #[test]
    fn free_matroid_with_two_parts_from_empty() {
        let m = free(4);
        let n = two_singleton_caps();
        assert_eq!(
            extend_to_maximal(&m, &n, Subset::EMPTY).unwrap(),
            Subset::from_elements([0, 2])
        );
    }

    #[test]
    fn already_maximal_is_a_fixed_point() {
        let m = free(4);
        let n = two_singleton_caps();
        let maximal = extend_to_maximal(&m, &n, Subset::EMPTY).unwrap();
        assert_eq!(extend_to_maximal(&m, &n, maximal).unwrap(), maximal);
        let other = Subset::from_elements([1, 3]);
        assert!(is_maximal_common(&m, &n, other).unwrap());
        assert_eq!(extend_to_maximal(&m, &n, other).unwrap(), other);
    }

    #[test]
    fn growth_stops_once_the_base_matroid_is_spanned() {
        // M = U_{E,1}, N = U_{E,2} on three elements: {0} spans E in M.
        let m = uniform(3, 1);
        let n = PartitionMatroid::single(&uniform(3, 2));
        assert_eq!(extend_to_maximal(&m, &n, Subset::EMPTY).unwrap(), Subset::singleton(0));
    }

    #[test]
    fn extension_is_maximal_and_contains_the_input() {
        let m = uniform(4, 2);
        let n = two_singleton_caps();
        for i in m.ground().subsets() {
            if !(m.indep(i) && n.indep(i)) {
                continue;
            }
            let big = extend_to_maximal(&m, &n, i).unwrap();
            assert!(i.is_subset_of(big));
            assert!(is_maximal_common(&m, &n, big).unwrap());
            assert!(literally_maximal(&m, &n, big));
        }
    }

    #[test]
    fn characterization_matches_literal_maximality() {
        let m = uniform(4, 2);
        let n = two_singleton_caps();
        for i in m.ground().subsets() {
            if m.indep(i) && n.indep(i) {
                assert_eq!(
                    is_maximal_common(&m, &n, i).unwrap(),
                    literally_maximal(&m, &n, i),
                    "at {i}"
                );
            }
        }
    }

    #[test]
    fn empty_set_on_free_pair_is_not_maximal() {
        let m = free(1);
        let n = PartitionMatroid::single(&free(1));
        assert!(!is_maximal_common(&m, &n, Subset::EMPTY).unwrap());
    }

    #[test]
    fn a_base_of_n_is_maximal() {
        let m = free(4);
        let n = two_singleton_caps();
        // {1, 3} saturates every part.
        assert!(is_maximal_common(&m, &n, Subset::from_elements([1, 3])).unwrap());
    }

    #[test]
    fn dependent_input_is_rejected() {
        let m = uniform(4, 1);
        let n = two_singleton_caps();
        let err = extend_to_maximal(&m, &n, Subset::from_elements([0, 2]));
        assert!(matches!(err, Err(Error::NotCommonIndependent { .. })));
        assert!(is_maximal_common(&m, &n, Subset::from_elements([0, 1])).is_err());
    }
}
