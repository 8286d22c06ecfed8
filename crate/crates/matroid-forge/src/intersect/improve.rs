//! Maximizing the set of parts spanned on the base-matroid side.

use crate::error::{Error, Result};
use crate::intersect::{IntersectOptions, SearchLog};
use crate::matroid::Matroid;
use crate::set::{PartSet, Subset};
use crate::zoo::PartitionMatroid;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

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

/// Indices of parts entirely inside `span_m(i)`, for a common independent
/// `i`. Since `i` is independent, an element outside it is spanned exactly
/// when adding it breaks independence.
pub fn spanned_parts<M: Matroid + ?Sized>(
    m: &M,
    n: &PartitionMatroid,
    i: Subset,
) -> Result<PartSet> {
    require_common_independent(m, n, i)?;
    Ok(spanned_parts_unchecked(m, n, i))
}

fn spanned_parts_unchecked<M: Matroid + ?Sized>(
    m: &M,
    n: &PartitionMatroid,
    i: Subset,
) -> PartSet {
    let mut out = PartSet::EMPTY;
    for (k, part) in n.parts().iter().enumerate() {
        if part.elements.minus(i).iter().all(|e| !m.indep(i.with(e))) {
            out.insert(k);
        }
    }
    out
}

/// `true` when `target ⊆ span_m(of)` for an `m`-independent `of`.
fn spans_all<M: Matroid + ?Sized>(m: &M, of: Subset, target: Subset) -> bool {
    target.minus(of).iter().all(|e| !m.indep(of.with(e)))
}

/// Starting from the common independent set `j`, finds a common independent
/// `i` with `span_m(i) ⊇ j` whose spanned part set cannot grow: every common
/// independent `k` with `span_m(k) ⊇ i` spans exactly the same parts.
///
/// Each improvement step looks for a common independent `k` with
/// `span_m(k) ⊇ i` spanning strictly more parts; the spanned set grows
/// strictly, so at most one step per part occurs. The candidate search is
/// exhaustive in canonical order up to `thresholds.theta` ground elements.
/// Above that, restarts of the part-extension procedure over seeded random
/// element orders serve as candidates; when the restart budget runs out the
/// current set is treated as maximal and the log is flagged.
pub fn maximize_spanned_parts<M: Matroid + ?Sized>(
    m: &M,
    n: &PartitionMatroid,
    j: Subset,
    opts: &IntersectOptions,
    log: &mut SearchLog,
) -> Result<Subset> {
    require_common_independent(m, n, j)?;
    let ground = m.ground();
    let exhaustive = ground.len() <= opts.thresholds.theta;
    let mut rng = ChaCha8Rng::seed_from_u64(opts.theta_seed);
    let mut current = j;

    'improve: loop {
        let spanned = spanned_parts_unchecked(m, n, current);
        if exhaustive {
            for k in ground.subsets() {
                if m.indep(k)
                    && n.indep(k)
                    && spans_all(m, k, current)
                    && spanned_parts_unchecked(m, n, k).is_proper_superset_of(spanned)
                {
                    current = k;
                    continue 'improve;
                }
            }
            return Ok(current);
        }
        for _ in 0..opts.thresholds.theta_restarts {
            let k = extend_shuffled(m, n, current, &mut rng);
            if spanned_parts_unchecked(m, n, k).is_proper_superset_of(spanned) {
                current = k;
                continue 'improve;
            }
        }
        log.heuristic_gave_up = true;
        return Ok(current);
    }
}

/// Part-by-part extension like `extend_to_maximal`, but scanning parts and
/// elements in a shuffled order. The result still contains the input and is
/// a maximal common independent set.
fn extend_shuffled<M: Matroid + ?Sized>(
    m: &M,
    n: &PartitionMatroid,
    i: Subset,
    rng: &mut ChaCha8Rng,
) -> Subset {
    let mut part_order: Vec<usize> = (0..n.num_parts()).collect();
    part_order.shuffle(rng);
    let mut current = i;
    for part_idx in part_order {
        let part = n.parts()[part_idx];
        let window = part.elements.minus(current);
        let cap_rem = part.cap - current.intersect(part.elements).len();
        let mut order: Vec<u32> = window.elements();
        order.shuffle(rng);
        let mut gained = Subset::EMPTY;
        for e in order {
            if gained.len() == cap_rem {
                break;
            }
            if m.indep(current.union(gained).with(e)) {
                gained.insert(e);
            }
        }
        // When the matroid side ran out first the part is m-spanned; either
        // way the part ends spanned on one side, as in the canonical order.
        current = current.union(gained);
    }
    current
}
