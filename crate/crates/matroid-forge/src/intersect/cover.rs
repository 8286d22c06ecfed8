//! Constructing a base of the partition matroid that is independent in the
//! base matroid and spans a prescribed common independent set there.

use crate::error::{Error, Result};
use crate::intersect::{
    condition_report, extend_to_maximal, maximize_spanned_parts, spanned_parts, IntersectOptions,
    SearchLog, TraceEvent,
};
use crate::matroid::{ContractedWindow, Matroid};
use crate::set::{PartSet, Subset};
use crate::zoo::PartitionMatroid;

/// Given matroids `m` and partition `n` on one ground set such that no
/// nonempty union of parts lets `m`'s restriction have an `n`-independent
/// base, produces an `m`-independent base `B` of `n` with `j ⊆ span_m(B)`
/// for any common independent `j`. The precondition is verified up front;
/// a violating union is reported as an error.
pub fn covering_base(
    m: &dyn Matroid,
    n: &PartitionMatroid,
    j: Subset,
    opts: &IntersectOptions,
    log: &mut SearchLog,
) -> Result<Subset> {
    let report = condition_report(m, n)?;
    if let Some(w) = report.violating_w {
        return Err(Error::ConditionViolated { w });
    }
    if !m.indep(j) || !n.indep(j) {
        return Err(Error::NotCommonIndependent { set: j });
    }
    covering_base_unchecked(m, n, j, opts, log, 0)
}

/// Recursion body; callers guarantee the no-violating-union precondition,
/// which the recursive restriction inherits (a violation inside a union of
/// kept parts would violate it for the whole instance).
pub(crate) fn covering_base_unchecked(
    m: &dyn Matroid,
    n: &PartitionMatroid,
    j: Subset,
    opts: &IntersectOptions,
    log: &mut SearchLog,
    depth: usize,
) -> Result<Subset> {
    if n.num_parts() == 0 {
        debug_assert!(j.is_empty());
        return Ok(Subset::EMPTY);
    }

    let i = maximize_spanned_parts(m, n, j, opts, log)?;
    let spanned = spanned_parts(m, n, i)?;
    log.push(TraceEvent::PartsMaximized {
        depth,
        set: i,
        spanned: spanned.iter().collect(),
    });
    if spanned == PartSet::all_below(n.num_parts()) {
        // A common independent set spanning all of E in m is an
        // n-independent base of m, so the full ground violates the
        // precondition.
        return Err(Error::ConditionViolated { w: m.ground().mask() });
    }

    // Recurse on the spanned parts; the rest of `i` keeps its span.
    let inner_ground = n.part_union(spanned);
    let sub_n = n.restrict_to_parts(spanned);
    let sub_m = ContractedWindow::new(m, Subset::EMPTY, inner_ground);
    let inner_base =
        covering_base_unchecked(&sub_m, &sub_n, i.intersect(inner_ground), opts, log, depth + 1)?;

    // Maximal m-independent subset of (i ∖ inner) ∪ inner_base seeded with
    // the recursive base, then grown to a maximal common independent set.
    let mut seed = inner_base;
    for e in i.minus(inner_ground).iter() {
        if m.indep(seed.with(e)) {
            seed.insert(e);
        }
    }
    let base = extend_to_maximal(m, n, seed)?;
    log.push(TraceEvent::CoveringBase { depth, base });

    debug_assert!(m.indep(base));
    debug_assert!(n.indep(base));
    debug_assert_eq!(n.saturated_parts(base), PartSet::all_below(n.num_parts()));
    Ok(base)
}
