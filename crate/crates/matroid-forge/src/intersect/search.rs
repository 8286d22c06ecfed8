//! The witness search: peel off part unions whose restriction has a
//! partition-independent base, then finish with a covering base.

use crate::error::{Error, Result};
use crate::intersect::{
    condition_report, covering_base_unchecked, verify_witness, IntersectOptions, SearchLog,
    TraceEvent, Witness,
};
use crate::matroid::{CachedRank, Matroid};
use crate::minor::MinorSpec;
use crate::set::Subset;
use crate::zoo::PartitionMatroid;
use std::sync::Arc;

/// A witness plus the log of the search that produced it.
#[derive(Debug)]
pub struct WitnessRun {
    pub witness: Witness,
    pub log: SearchLog,
}

/// Produces a witness for the intersection property of `(m, n)` with the
/// default options.
pub fn intersection_witness(m: Arc<dyn Matroid>, n: &PartitionMatroid) -> Result<Witness> {
    Ok(intersection_witness_with(m, n, &IntersectOptions::default())?.witness)
}

/// Recursion on the number of parts. If some union `W` of parts admits a
/// base `B` of the restriction that is independent in the partition matroid,
/// recurse on the contraction by `W` (relative to `B`) against the partition
/// without those parts — for partition matroids deletion and contraction of
/// a part union coincide — and put `B` on the base-matroid side of the
/// sub-witness. Otherwise a covering base alone is a witness via the trivial
/// bipartition.
pub fn intersection_witness_with(
    m: Arc<dyn Matroid>,
    n: &PartitionMatroid,
    opts: &IntersectOptions,
) -> Result<WitnessRun> {
    if m.ground() != n.ground() {
        return Err(Error::GroundMismatch { left: m.ground(), right: n.ground() });
    }
    let mut log = SearchLog::new(opts.collect_trace);
    let witness = witness_rec(m.clone(), n, opts, &mut log, 0)?;
    debug_assert!(verify_witness(&*m, n, &witness).ok());
    Ok(WitnessRun { witness, log })
}

fn witness_rec(
    m: Arc<dyn Matroid>,
    n: &PartitionMatroid,
    opts: &IntersectOptions,
    log: &mut SearchLog,
    depth: usize,
) -> Result<Witness> {
    if n.num_parts() == 0 {
        debug_assert!(m.ground().is_empty());
        log.push(TraceEvent::WitnessAssembled {
            depth,
            m_side: Subset::EMPTY,
            n_side: Subset::EMPTY,
        });
        return Ok(Witness::empty());
    }

    let report = condition_report(&*m, n)?;
    let witness = match (report.violating_w, report.base) {
        (Some(w), Some(base)) => {
            log.push(TraceEvent::ConditionViolated { depth, w, base });
            // Contract relative to the violating base itself, so the
            // sub-witness unions with it verbatim.
            let contracted = MinorSpec::with_basis(m, w, base, Subset::EMPTY)?;
            let cached: Arc<dyn Matroid> =
                Arc::new(CachedRank::new(contracted, opts.thresholds.rank_cache_cap));
            let sub_n = n.without_parts_in(w);
            let sub = witness_rec(cached, &sub_n, opts, log, depth + 1)?;
            Witness {
                set: sub.set.union(base),
                m_side: sub.m_side.union(base),
                n_side: sub.n_side,
            }
        }
        _ => {
            log.push(TraceEvent::ConditionHolds { depth });
            let base = covering_base_unchecked(&*m, n, Subset::EMPTY, opts, log, depth)?;
            Witness { set: base, m_side: Subset::EMPTY, n_side: base }
        }
    };
    log.push(TraceEvent::WitnessAssembled {
        depth,
        m_side: witness.m_side,
        n_side: witness.n_side,
    });
    Ok(witness)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::edmonds::brute_force_max_common;
    use crate::intersect::verify_witness;
    use crate::set::GroundSet;
    use crate::zoo::{GraphicMatroid, Part, UniformMatroid};

    #[test]
    fn trivial_instance_has_the_empty_witness() {
        let m = UniformMatroid::free(GroundSet::EMPTY);
        let n = PartitionMatroid::single(&m);
        let w = intersection_witness(Arc::new(m), &n).unwrap();
        assert_eq!(w, Witness::empty());
    }

    #[test]
    fn rank_two_against_rank_one() {
        let m = UniformMatroid::new(GroundSet::dense(3), 2).unwrap();
        let n = PartitionMatroid::single(&UniformMatroid::new(GroundSet::dense(3), 1).unwrap());
        let w = intersection_witness(Arc::new(m), &n).unwrap();
        assert_eq!(w.set, Subset::singleton(0));
        assert_eq!(w.m_side, Subset::EMPTY);
        assert_eq!(w.n_side, Subset::singleton(0));
    }

    #[test]
    fn triangle_against_two_parts_reaches_the_brute_force_size() {
        let g = GraphicMatroid::new(&[(0, 0, 1), (1, 1, 2), (2, 2, 0)]).unwrap();
        let n = PartitionMatroid::new(vec![
            Part { elements: Subset::from_elements([0, 1]), cap: 1 },
            Part { elements: Subset::singleton(2), cap: 1 },
        ])
        .unwrap();
        let w = intersection_witness(Arc::new(g.clone()), &n).unwrap();
        assert_eq!(w.set.len(), 2);
        let report = verify_witness(&g, &n, &w);
        assert!(report.ok(), "{:?}", report.failures);
        let brute = brute_force_max_common(&g, &n, &Default::default()).unwrap();
        assert_eq!(w.set.len(), brute.len());
    }

    #[test]
    fn ground_mismatch_is_rejected() {
        let m = UniformMatroid::free(GroundSet::dense(3));
        let n = PartitionMatroid::single(&UniformMatroid::free(GroundSet::dense(2)));
        assert!(matches!(
            intersection_witness(Arc::new(m), &n),
            Err(Error::GroundMismatch { .. })
        ));
    }

    #[test]
    fn trace_records_phases() {
        let m = UniformMatroid::new(GroundSet::dense(3), 1).unwrap();
        let n = PartitionMatroid::single(&m);
        let opts = IntersectOptions { collect_trace: true, ..Default::default() };
        let run = intersection_witness_with(Arc::new(m), &n, &opts).unwrap();
        assert!(run
            .log
            .trace
            .iter()
            .any(|e| matches!(e, TraceEvent::ConditionViolated { .. })));
        assert!(run
            .log
            .trace
            .iter()
            .any(|e| matches!(e, TraceEvent::WitnessAssembled { depth: 0, .. })));
    }
}
