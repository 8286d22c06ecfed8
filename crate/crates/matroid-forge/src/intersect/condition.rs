//! Scan for a part union whose restriction of the base matroid has a base
//! independent in the partition matroid.

use crate::edmonds::max_common_independent;
use crate::error::{Error, Result};
use crate::matroid::{ContractedWindow, Matroid};
use crate::set::{PartSet, Subset};
use crate::zoo::PartitionMatroid;
use serde::Serialize;

/// Part-count cap: the scan visits every nonempty union of parts.
const MAX_PARTS_FOR_SCAN: usize = 20;

/// Outcome of [`condition_report`]. When `holds` is false, `base` is a base
/// of the restriction of the base matroid to `violating_w` that is
/// independent in the partition matroid.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionReport {
    pub holds: bool,
    pub violating_w: Option<Subset>,
    pub base: Option<Subset>,
}

/// Visits the nonempty unions `W` of parts in increasing index order and
/// decides for each whether the restriction `m ↾ W` admits a base that is
/// independent in `n`. That holds exactly when the maximum common
/// independent set of the two restrictions reaches `rank_m(W)`, which the
/// augmenting-path oracle decides in polynomial time. The first violation is
/// returned along with its base; `holds` is true when no union violates.
pub fn condition_report(m: &dyn Matroid, n: &PartitionMatroid) -> Result<ConditionReport> {
    if m.ground() != n.ground() {
        return Err(Error::GroundMismatch { left: m.ground(), right: n.ground() });
    }
    let parts = n.num_parts();
    if parts > MAX_PARTS_FOR_SCAN {
        return Err(Error::CapacityExceeded {
            what: "condition scan part count",
            size: parts,
            limit: MAX_PARTS_FOR_SCAN,
        });
    }
    for mask in 1u128..(1u128 << parts) {
        let mut union_set = PartSet::EMPTY;
        for i in 0..parts {
            if mask >> i & 1 == 1 {
                union_set.insert(i);
            }
        }
        let w = n.part_union(union_set);
        let restricted_m = ContractedWindow::new(m, Subset::EMPTY, w);
        let restricted_n = n.restrict_to_parts(union_set);
        let optimum = max_common_independent(&restricted_m, &restricted_n)?;
        if optimum.size() == m.rank_set(w) {
            return Ok(ConditionReport {
                holds: false,
                violating_w: Some(w),
                base: Some(optimum.set),
            });
        }
    }
    Ok(ConditionReport { holds: true, violating_w: None, base: None })
}
