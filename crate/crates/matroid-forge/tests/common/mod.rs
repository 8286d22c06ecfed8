//! Shared test support: naive oracles independent of the library's
//! implementation paths, plus deterministic partition samples.

#![allow(dead_code)]

use matroid_forge::zoo::{Part, PartitionMatroid};
use matroid_forge::{GroundSet, Matroid, Subset};

/// Rank by full enumeration of independent subsets.
pub fn naive_rank(m: &dyn Matroid, x: Subset) -> usize {
    x.subsets().filter(|&s| m.indep(s)).map(|s| s.len()).max().unwrap_or(0)
}

/// Span via the rank definition computed with [`naive_rank`].
pub fn naive_span(m: &dyn Matroid, x: Subset) -> Subset {
    let r = naive_rank(m, x);
    let mut out = x;
    for e in m.ground().mask().minus(x).iter() {
        if naive_rank(m, x.with(e)) == r {
            out.insert(e);
        }
    }
    out
}

/// Span via the contraction definition: `x` plus the elements that become
/// loops after contracting `x` relative to any maximal basis.
pub fn span_by_contraction(m: &dyn Matroid, x: Subset) -> Subset {
    let mut basis = Subset::EMPTY;
    for e in x.iter() {
        if m.indep(basis.with(e)) {
            basis.insert(e);
        }
    }
    let mut out = x;
    for e in m.ground().mask().minus(x).iter() {
        if !m.indep(basis.with(e)) {
            out.insert(e);
        }
    }
    out
}

/// Largest common independent set size by full enumeration.
pub fn naive_max_common(m1: &dyn Matroid, m2: &dyn Matroid) -> usize {
    m1.ground()
        .subsets()
        .filter(|&s| m1.indep(s) && m2.indep(s))
        .map(|s| s.len())
        .max()
        .unwrap_or(0)
}

/// Literal maximality of a common independent set.
pub fn literally_maximal(m: &dyn Matroid, n: &PartitionMatroid, i: Subset) -> bool {
    m.ground().mask().minus(i).iter().all(|e| !(m.indep(i.with(e)) && n.indep(i.with(e))))
}

/// A handful of deterministic partition matroids on the given ground set.
pub fn sample_partitions(ground: GroundSet) -> Vec<PartitionMatroid> {
    let n = ground.len();
    let elements: Vec<u32> = ground.iter().collect();
    let mut out = Vec::new();
    if n == 0 {
        out.push(PartitionMatroid::new(Vec::new()).unwrap());
        return out;
    }
    // single part at a few caps
    for cap in [0, 1, n.div_ceil(2), n] {
        let part = Part { elements: ground.mask(), cap };
        out.push(PartitionMatroid::new(vec![part]).unwrap());
    }
    // two-way split
    if n >= 2 {
        let (a, b) = elements.split_at(n / 2);
        let left = Subset::from_elements(a.iter().copied());
        let right = Subset::from_elements(b.iter().copied());
        for (ca, cb) in [(1, 1), (a.len(), 1), (0, b.len())] {
            out.push(
                PartitionMatroid::new(vec![
                    Part { elements: left, cap: ca.min(a.len()) },
                    Part { elements: right, cap: cb.min(b.len()) },
                ])
                .unwrap(),
            );
        }
    }
    // three-way split
    if n >= 3 {
        let third = n / 3;
        let first = Subset::from_elements(elements[..third].iter().copied());
        let second = Subset::from_elements(elements[third..2 * third].iter().copied());
        let rest = Subset::from_elements(elements[2 * third..].iter().copied());
        if !first.is_empty() && !second.is_empty() && !rest.is_empty() {
            out.push(
                PartitionMatroid::new(vec![
                    Part { elements: first, cap: 1.min(first.len()) },
                    Part { elements: second, cap: second.len() },
                    Part { elements: rest, cap: rest.len().div_ceil(2) },
                ])
                .unwrap(),
            );
        }
    }
    out
}

/// Deduplicated (name, matroid) pairs from the corpus limited by ground size.
pub fn corpus(max: usize) -> Vec<(String, std::sync::Arc<dyn Matroid>)> {
    matroid_forge::zoo::corpus(max)
}
