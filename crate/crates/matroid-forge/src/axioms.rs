//! Exhaustive independence-axiom checking for small set families.

use crate::config::Thresholds;
use crate::error::{Error, Result};
use crate::set::{GroundSet, Subset};
use serde::Serialize;
use std::fmt;

/// One axiom violation together with a concrete witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "axiom", rename_all = "snake_case")]
pub enum AxiomViolation {
    /// (i) the empty set is missing.
    EmptySetMissing,
    /// (ii) `member` is in the family but `subset` is not.
    DownwardClosure { member: Subset, subset: Subset },
    /// (iii) `from` is not maximal, `maximal` is, yet no element of
    /// `maximal ∖ from` extends `from` inside the family.
    MaximalAugmentation { from: Subset, maximal: Subset },
    /// (iv) `member` has no maximal superset within `within`.
    MaximalExtension { within: Subset, member: Subset },
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomViolation::EmptySetMissing => write!(f, "(i) empty set missing"),
            AxiomViolation::DownwardClosure { member, subset } => {
                write!(f, "(ii) {subset} ⊆ {member} is not in the family")
            }
            AxiomViolation::MaximalAugmentation { from, maximal } => {
                write!(f, "(iii) {from} cannot be augmented from maximal {maximal}")
            }
            AxiomViolation::MaximalExtension { within, member } => {
                write!(f, "(iv) {member} has no maximal extension within {within}")
            }
        }
    }
}

/// Outcome of [`check_axioms`]: empty iff the family is a matroid.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub violations: Vec<AxiomViolation>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            write!(f, "all axioms hold")
        } else {
            for (i, v) in self.violations.iter().enumerate() {
                if i > 0 {
                    write!(f, "; ")?;
                }
                write!(f, "{v}")?;
            }
            Ok(())
        }
    }
}

/// Checks the independence axioms on an explicit family:
/// (i) the empty set belongs to the family, (ii) the family is downward
/// closed, (iii) every non-maximal member can be augmented from every
/// maximal member, and (iv) within every `X ⊆ E` each member extends to a
/// maximal member. Violations are reported with witnesses rather than
/// raised as errors; only exceeding the ground-size threshold is an error.
pub fn check_axioms(
    ground: GroundSet,
    family: &[Subset],
    thresholds: &Thresholds,
) -> Result<AxiomReport> {
    if ground.len() > thresholds.axioms {
        return Err(Error::CapacityExceeded {
            what: "axiom check ground set",
            size: ground.len(),
            limit: thresholds.axioms,
        });
    }
    for &s in family {
        if !ground.contains_subset(s) {
            return Err(Error::OutOfGround { subset: s, ground });
        }
    }

    let mut members: Vec<Subset> = family.to_vec();
    members.sort();
    members.dedup();
    let contains = |s: Subset| members.binary_search(&s).is_ok();

    let mut report = AxiomReport::default();

    // (i)
    if !contains(Subset::EMPTY) {
        report.violations.push(AxiomViolation::EmptySetMissing);
    }

    // (ii)
    'closure: for &s in &members {
        for e in s.iter() {
            if !contains(s.without(e)) {
                report
                    .violations
                    .push(AxiomViolation::DownwardClosure { member: s, subset: s.without(e) });
                break 'closure;
            }
        }
    }

    // (iii): maximal within the whole family.
    let is_maximal =
        |s: Subset| ground.mask().minus(s).iter().all(|e| !contains(s.with(e)));
    let maximal: Vec<Subset> = members.iter().copied().filter(|&s| is_maximal(s)).collect();
    'augment: for &i in &members {
        if is_maximal(i) {
            continue;
        }
        for &j in &maximal {
            let extends = j.minus(i).iter().any(|e| contains(i.with(e)));
            if !extends {
                report.violations.push(AxiomViolation::MaximalAugmentation { from: i, maximal: j });
                break 'augment;
            }
        }
    }

    // (iv): always satisfiable on finite families, but checked literally.
    'extension: for x in ground.subsets() {
        let within: Vec<Subset> = members.iter().copied().filter(|s| s.is_subset_of(x)).collect();
        for &i in &within {
            let mut reached_maximal = false;
            for &m in &within {
                if i.is_subset_of(m) && x.minus(m).iter().all(|e| !contains(m.with(e))) {
                    reached_maximal = true;
                    break;
                }
            }
            if !reached_maximal {
                report.violations.push(AxiomViolation::MaximalExtension { within: x, member: i });
                break 'extension;
            }
        }
    }

    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn th() -> Thresholds {
        Thresholds::default()
    }

    #[test]
    fn size_capped_family_passes() {
        // All subsets of size ≤ 1 on {0,1}.
        let ground = GroundSet::dense(2);
        let family = [Subset::EMPTY, Subset::singleton(0), Subset::singleton(1)];
        let report = check_axioms(ground, &family, &th()).unwrap();
        assert!(report.passed());
    }

    #[test]
    fn missing_subset_is_reported_with_witness() {
        let ground = GroundSet::dense(2);
        let family = [Subset::EMPTY, Subset::singleton(0), Subset::from_elements([0, 1])];
        let report = check_axioms(ground, &family, &th()).unwrap();
        assert!(report.violations.contains(&AxiomViolation::DownwardClosure {
            member: Subset::from_elements([0, 1]),
            subset: Subset::singleton(1),
        }));
    }

    #[test]
    fn uniform_family_passes() {
        let ground = GroundSet::dense(5);
        let family: Vec<Subset> = ground.subsets().filter(|s| s.len() <= 2).collect();
        assert!(check_axioms(ground, &family, &th()).unwrap().passed());
    }

    #[test]
    fn uneven_bases_fail_augmentation() {
        // Bases {0,1} and {2}: {0} cannot be augmented from {2}.
        let ground = GroundSet::dense(3);
        let family = [
            Subset::EMPTY,
            Subset::singleton(0),
            Subset::singleton(1),
            Subset::singleton(2),
            Subset::from_elements([0, 1]),
        ];
        let report = check_axioms(ground, &family, &th()).unwrap();
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, AxiomViolation::MaximalAugmentation { .. })));
    }

    #[test]
    fn missing_empty_set() {
        let ground = GroundSet::dense(1);
        let report = check_axioms(ground, &[Subset::singleton(0)], &th()).unwrap();
        assert!(report.violations.contains(&AxiomViolation::EmptySetMissing));
    }

    #[test]
    fn threshold_is_enforced() {
        let ground = GroundSet::dense(9);
        let err = check_axioms(ground, &[Subset::EMPTY], &th());
        assert!(matches!(err, Err(Error::CapacityExceeded { .. })));
    }

    #[test]
    fn out_of_ground_member_is_an_error() {
        let ground = GroundSet::dense(2);
        let err = check_axioms(ground, &[Subset::EMPTY, Subset::singleton(5)], &th());
        assert!(matches!(err, Err(Error::OutOfGround { .. })));
    }
}
