//! Construction and verification of intersection-property witnesses for a
//! matroid paired with a partition matroid.

mod condition;
mod cover;
mod extend;
mod improve;
mod search;

pub use condition::{condition_report, ConditionReport};
pub use cover::covering_base;
pub(crate) use cover::covering_base_unchecked;
pub use extend::{extend_to_maximal, is_maximal_common};
pub use improve::{maximize_spanned_parts, spanned_parts};
pub use search::{intersection_witness, intersection_witness_with, WitnessRun};

use crate::config::Thresholds;
use crate::matroid::Matroid;
use crate::set::Subset;
use crate::zoo::PartitionMatroid;
use serde::{Deserialize, Serialize};

/// A common independent set split into a side whose span is taken in the
/// base matroid and a side whose span is taken in the partition matroid.
/// A valid witness has disjoint sides covering `set`, is independent in both
/// matroids, and its two spans cover the ground set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    #[serde(rename = "I")]
    pub set: Subset,
    #[serde(rename = "I_M")]
    pub m_side: Subset,
    #[serde(rename = "I_N")]
    pub n_side: Subset,
}

impl Witness {
    pub fn empty() -> Witness {
        Witness { set: Subset::EMPTY, m_side: Subset::EMPTY, n_side: Subset::EMPTY }
    }
}

/// Tuning knobs for the witness search.
#[derive(Clone, Debug, Default)]
pub struct IntersectOptions {
    pub thresholds: Thresholds,
    /// Seed for the randomized-extension heuristic used above the
    /// exhaustive-improvement threshold.
    pub theta_seed: u64,
    pub collect_trace: bool,
}

/// Events recorded while the witness search runs (one entry per phase).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "event", rename_all = "snake_case")]
pub enum TraceEvent {
    ConditionViolated { depth: usize, w: Subset, base: Subset },
    ConditionHolds { depth: usize },
    PartsMaximized { depth: usize, set: Subset, spanned: Vec<usize> },
    CoveringBase { depth: usize, base: Subset },
    WitnessAssembled { depth: usize, m_side: Subset, n_side: Subset },
}

/// Collector for trace events and search diagnostics.
#[derive(Clone, Debug, Default)]
pub struct SearchLog {
    pub trace: Vec<TraceEvent>,
    /// Set when the randomized improvement pass exhausted its restart budget;
    /// the returned set is then only best-effort maximal for spanned parts.
    pub heuristic_gave_up: bool,
    collect: bool,
}

impl SearchLog {
    pub fn new(collect_trace: bool) -> SearchLog {
        SearchLog { collect: collect_trace, ..SearchLog::default() }
    }

    pub(crate) fn push(&mut self, event: TraceEvent) {
        if self.collect {
            self.trace.push(event);
        }
    }
}

/// Per-check outcome of [`verify_witness`]; failures are data, not errors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub bipartition: bool,
    pub independent_in_m: bool,
    pub independent_in_n: bool,
    pub span_cover: bool,
    pub min_max: bool,
    /// `A = span_M(I_M)`, the min-max certificate set.
    pub certificate: Subset,
    pub size: usize,
    pub failures: Vec<String>,
}

impl VerificationReport {
    pub fn ok(&self) -> bool {
        self.bipartition
            && self.independent_in_m
            && self.independent_in_n
            && self.span_cover
            && self.min_max
    }
}

/// Checks every witness invariant plus optimality: with `A = span_M(I_M)`,
/// a valid witness satisfies `rank_M(A) + rank_N(E∖A) = |I|`, which pins
/// `|I|` to the maximum common independent set size.
pub fn verify_witness(m: &dyn Matroid, n: &PartitionMatroid, w: &Witness) -> VerificationReport {
    let ground = m.ground();
    let mut failures = Vec::new();

    let in_ground = ground.contains_subset(w.set)
        && ground.contains_subset(w.m_side)
        && ground.contains_subset(w.n_side)
        && n.ground() == ground;
    let bipartition = in_ground
        && w.m_side.is_disjoint(w.n_side)
        && w.m_side.union(w.n_side) == w.set;
    if !bipartition {
        failures.push("bipartition: sides must be disjoint, cover I, and stay in the ground set".into());
    }

    let independent_in_m = in_ground && m.indep(w.set);
    if !independent_in_m {
        failures.push("independence: I is not independent in M".into());
    }
    let independent_in_n = in_ground && n.indep(w.set);
    if !independent_in_n {
        failures.push("independence: I is not independent in N".into());
    }

    let (span_cover, min_max, certificate) = if in_ground {
        let a = m.span_set(w.m_side);
        let cover = a.union(n.span_set(w.n_side)) == ground.mask();
        if !cover {
            failures.push("span cover: span_M(I_M) ∪ span_N(I_N) misses part of E".into());
        }
        let equal = m.rank_set(a) + n.rank_set(ground.mask().minus(a)) == w.set.len();
        if !equal {
            failures.push("min-max: rank_M(A) + rank_N(E∖A) differs from |I|".into());
        }
        (cover, equal, a)
    } else {
        failures.push("domain: witness sets leave the ground set".into());
        (false, false, Subset::EMPTY)
    };

    VerificationReport {
        bipartition,
        independent_in_m,
        independent_in_n,
        span_cover,
        min_max,
        certificate,
        size: w.set.len(),
        failures,
    }
}
