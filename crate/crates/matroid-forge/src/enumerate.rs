//! Exhaustive enumeration of all labeled matroids on small ground sets.
//!
//! Families over `GroundSet::dense(n)` with `n ≤ 7` are encoded as `u128`
//! bitmaps: bit `s` is set when the subset with mask `s` is independent.
//!
//! A family is a finite matroid iff it contains the empty set, is downward
//! closed, and satisfies adjacent-level augmentation: for members `I`, `J`
//! with `|J| = |I| + 1` some element of `J ∖ I` extends `I` inside the
//! family. The enumerator builds families level by level (level k holds the
//! independent k-sets), choosing each next level among the downward-complete
//! candidates and pruning as soon as some required augmentation can no
//! longer be satisfied by the remaining candidates.

use crate::error::{Error, Result};
use crate::explicit::ExplicitMatroid;
use crate::matroid::Matroid;
use crate::set::{GroundSet, Subset};

/// Largest ground size the `u128` family encoding supports.
pub const MAX_ENUMERATION_GROUND: usize = 7;

/// Zero-cost matroid view over a family bitmap.
#[derive(Copy, Clone)]
pub struct FamilyMatroid {
    ground: GroundSet,
    bits: u128,
}

impl FamilyMatroid {
    pub fn new(n: usize, bits: u128) -> FamilyMatroid {
        assert!(n <= MAX_ENUMERATION_GROUND);
        FamilyMatroid { ground: GroundSet::dense(n), bits }
    }

    pub fn bits(&self) -> u128 {
        self.bits
    }

    pub fn to_explicit(&self) -> ExplicitMatroid {
        ExplicitMatroid::from_matroid(self).expect("enumeration grounds fit the explicit cap")
    }
}

impl Matroid for FamilyMatroid {
    fn ground(&self) -> GroundSet {
        self.ground
    }

    #[inline]
    fn indep(&self, s: Subset) -> bool {
        self.bits >> (s.bits() as u32) & 1 == 1
    }
}

/// Membership test in a family bitmap.
#[inline]
pub fn family_contains(bits: u128, s: Subset) -> bool {
    bits >> (s.bits() as u32) & 1 == 1
}

/// Direct check of the finite matroid axioms on a family bitmap; the
/// independent formulation the enumerator is tested against.
pub fn is_finite_matroid_family(n: usize, bits: u128) -> bool {
    assert!(n <= MAX_ENUMERATION_GROUND);
    if bits & 1 == 0 {
        return false;
    }
    let full = (1u32 << n) - 1;
    // downward closure
    for s in 0..=full {
        if family_contains(bits, Subset::from_bits(s as u128)) {
            let mut rest = s;
            while rest != 0 {
                let e = rest & rest.wrapping_neg();
                if !family_contains(bits, Subset::from_bits((s ^ e) as u128)) {
                    return false;
                }
                rest ^= e;
            }
        }
    }
    // adjacent-level augmentation
    for i in 0..=full {
        if !family_contains(bits, Subset::from_bits(i as u128)) {
            continue;
        }
        for j in 0..=full {
            if j.count_ones() != i.count_ones() + 1
                || !family_contains(bits, Subset::from_bits(j as u128))
            {
                continue;
            }
            let mut ok = false;
            let mut gain = j & !i;
            while gain != 0 {
                let e = gain & gain.wrapping_neg();
                if family_contains(bits, Subset::from_bits((i | e) as u128)) {
                    ok = true;
                    break;
                }
                gain ^= e;
            }
            if !ok {
                return false;
            }
        }
    }
    true
}

/// All labeled matroids on `{0, …, n−1}` as family bitmaps, in a fixed
/// deterministic order.
pub fn labeled_matroids(n: usize) -> Result<Vec<u128>> {
    if n > MAX_ENUMERATION_GROUND {
        return Err(Error::CapacityExceeded {
            what: "matroid enumeration ground set",
            size: n,
            limit: MAX_ENUMERATION_GROUND,
        });
    }
    let mut out = Vec::new();
    let level0 = vec![0u32];
    descend(n, &level0, 1, &mut out);
    Ok(out)
}

fn descend(n: usize, level: &[u32], family: u128, out: &mut Vec<u128>) {
    let candidates = next_level_candidates(n, level, family);

    // need[a][j]: candidate indices that would satisfy the augmentation of
    // level member a against chosen candidate j.
    let t = candidates.len();
    let mut index_of = [usize::MAX; 128];
    for (j, &c) in candidates.iter().enumerate() {
        index_of[c as usize] = j;
    }
    let mut need = vec![0u64; level.len() * t];
    for (a, &i) in level.iter().enumerate() {
        for (j, &c) in candidates.iter().enumerate() {
            let mut mask = 0u64;
            let mut gain = c & !i;
            while gain != 0 {
                let e = gain & gain.wrapping_neg();
                let target = (i | e) as usize;
                if target < 128 && index_of[target] != usize::MAX {
                    mask |= 1u64 << index_of[target];
                }
                gain ^= e;
            }
            need[a * t + j] = mask;
        }
    }

    choose(n, level, family, &candidates, &need, 0, 0u64, &[], out);
}

/// Masks of size |level member| + 1 whose every one-smaller subset is in the
/// family.
fn next_level_candidates(n: usize, level: &[u32], family: u128) -> Vec<u32> {
    let size = level.first().map_or(0, |m| m.count_ones()) + 1;
    let full = (1u32 << n) - 1;
    let mut out = Vec::new();
    'masks: for s in 0..=full {
        if s.count_ones() != size {
            continue;
        }
        let mut rest = s;
        while rest != 0 {
            let e = rest & rest.wrapping_neg();
            if family >> (s ^ e) & 1 == 0 {
                continue 'masks;
            }
            rest ^= e;
        }
        out.push(s);
    }
    out
}

#[allow(clippy::too_many_arguments)]
fn choose(
    n: usize,
    level: &[u32],
    family: u128,
    candidates: &[u32],
    need: &[u64],
    idx: usize,
    chosen: u64,
    pending: &[u64],
    out: &mut Vec<u128>,
) {
    let t = candidates.len();
    if idx == t {
        debug_assert!(pending.is_empty());
        if chosen == 0 {
            out.push(family);
        } else {
            let next_level: Vec<u32> =
                (0..t).filter(|&j| chosen >> j & 1 == 1).map(|j| candidates[j]).collect();
            let mut next_family = family;
            for &c in &next_level {
                next_family |= 1u128 << c;
            }
            descend(n, &next_level, next_family, out);
        }
        return;
    }

    let future_after =
        if idx + 1 >= t { 0u64 } else { ((1u64 << t) - 1) & !((1u64 << (idx + 1)) - 1) };

    // Exclude candidates[idx]: every pending requirement must stay
    // satisfiable by the remaining candidates.
    if pending.iter().all(|&nd| nd & future_after != 0) {
        choose(n, level, family, candidates, need, idx + 1, chosen, pending, out);
    }

    // Include candidates[idx].
    let bit = 1u64 << idx;
    let chosen_now = chosen | bit;
    let mut new_pending: Vec<u64> = pending.iter().copied().filter(|&nd| nd & bit == 0).collect();
    let mut feasible = true;
    for a in 0..level.len() {
        let nd = need[a * t + idx];
        if nd & chosen_now != 0 {
            continue;
        }
        if nd & future_after == 0 {
            feasible = false;
            break;
        }
        new_pending.push(nd);
    }
    if feasible {
        choose(n, level, family, candidates, need, idx + 1, chosen_now, &new_pending, out);
    }
}

/// All partition matroids on `{0, …, n−1}` with at most `max_parts` parts:
/// every unordered partition into nonempty blocks (restricted growth
/// strings) paired with every cap assignment `0..=|block|` per block.
pub fn all_partition_matroids(n: usize, max_parts: usize) -> Vec<crate::zoo::PartitionMatroid> {
    use crate::zoo::{Part, PartitionMatroid};
    if n == 0 || max_parts == 0 {
        return vec![PartitionMatroid::new(Vec::new()).expect("empty partition")];
    }

    fn emit(blocks: &[Subset], out: &mut Vec<PartitionMatroid>) {
        let mut caps = vec![0usize; blocks.len()];
        loop {
            let parts: Vec<Part> = blocks
                .iter()
                .zip(&caps)
                .map(|(&elements, &cap)| Part { elements, cap })
                .collect();
            out.push(PartitionMatroid::new(parts).expect("enumerated partitions are valid"));
            let mut j = 0;
            loop {
                if j == blocks.len() {
                    return;
                }
                caps[j] += 1;
                if caps[j] <= blocks[j].len() {
                    break;
                }
                caps[j] = 0;
                j += 1;
            }
        }
    }

    fn rec(
        element: usize,
        n: usize,
        max_parts: usize,
        blocks: &mut Vec<Subset>,
        out: &mut Vec<PartitionMatroid>,
    ) {
        if element == n {
            emit(blocks, out);
            return;
        }
        for b in 0..blocks.len().min(max_parts) {
            blocks[b].insert(element as u32);
            rec(element + 1, n, max_parts, blocks, out);
            blocks[b].remove(element as u32);
        }
        if blocks.len() < max_parts {
            blocks.push(Subset::singleton(element as u32));
            rec(element + 1, n, max_parts, blocks, out);
            blocks.pop();
        }
    }

    let mut out = Vec::new();
    let mut blocks = vec![Subset::singleton(0)];
    rec(1, n, max_parts, &mut blocks, &mut out);
    out
}

/// All downward-closed families containing the empty set, for cross-checking
/// the enumerator and the axiom checker on tiny grounds.
pub fn downward_closed_families(n: usize) -> Result<Vec<u128>> {
    if n > 5 {
        return Err(Error::CapacityExceeded {
            what: "downward-closed family enumeration ground set",
            size: n,
            limit: 5,
        });
    }
    let full = (1u32 << n) - 1;
    let mut out = Vec::new();
    // Masks in ascending numeric order list submasks before supersets, so a
    // single left-to-right pass with a closure test enumerates every downset.
    fn rec(next: u32, full: u32, bits: u128, out: &mut Vec<u128>) {
        if next > full {
            out.push(bits);
            return;
        }
        rec(next + 1, full, bits, out);
        let mut rest = next;
        let mut closed = true;
        while rest != 0 {
            let e = rest & rest.wrapping_neg();
            if bits >> (next ^ e) & 1 == 0 {
                closed = false;
                break;
            }
            rest ^= e;
        }
        if closed {
            rec(next + 1, full, bits | 1u128 << next, out);
        }
    }
    rec(1, full, 1u128, &mut out);
    Ok(out)
}
