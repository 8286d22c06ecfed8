//! Circuit listing for small ground sets.

use crate::config::Thresholds;
use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::set::Subset;

/// All inclusion-minimal dependent sets, each once, in ascending canonical
/// (bitmask) order. A set is a circuit iff it is dependent while all its
/// one-element-smaller subsets are independent.
pub fn circuits(m: &dyn Matroid, thresholds: &Thresholds) -> Result<Vec<Subset>> {
    let ground = m.ground();
    if ground.len() > thresholds.circuits {
        return Err(Error::CapacityExceeded {
            what: "circuit enumeration ground set",
            size: ground.len(),
            limit: thresholds.circuits,
        });
    }
    let mut out = Vec::new();
    for s in ground.subsets() {
        if !m.indep(s) && s.iter().all(|e| m.indep(s.without(e))) {
            out.push(s);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::set::GroundSet;
    use crate::zoo::{GraphicMatroid, UniformMatroid};

    #[test]
    fn uniform_circuits_are_all_next_size_subsets() {
        let th = Thresholds::default();
        let u = UniformMatroid::new(GroundSet::dense(5), 2).unwrap();
        let cs = circuits(&u, &th).unwrap();
        assert!(cs.iter().all(|c| c.len() == 3));
        assert_eq!(cs.len(), 10);
    }

    #[test]
    fn triangle_has_one_circuit() {
        let th = Thresholds::default();
        let g = GraphicMatroid::new(&[(0, 0, 1), (1, 1, 2), (2, 2, 0)]).unwrap();
        assert_eq!(circuits(&g, &th).unwrap(), vec![Subset::from_elements([0, 1, 2])]);
    }

    #[test]
    fn free_matroid_has_none() {
        let th = Thresholds::default();
        let u = UniformMatroid::new(GroundSet::dense(4), 4).unwrap();
        assert!(circuits(&u, &th).unwrap().is_empty());
    }

    #[test]
    fn threshold_is_enforced() {
        let th = Thresholds::default();
        let u = UniformMatroid::new(GroundSet::dense(17), 2).unwrap();
        assert!(matches!(circuits(&u, &th), Err(Error::CapacityExceeded { .. })));
    }
}
