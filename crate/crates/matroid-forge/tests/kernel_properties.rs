//! Kernel invariants: closure behavior, rank shape, minor algebra, duality.

mod common;

use common::{naive_rank, naive_span, span_by_contraction};
use matroid_forge::enumerate::{labeled_matroids, FamilyMatroid};
use matroid_forge::{
    check_axioms, direct_sum, CachedRank, ExplicitMatroid, GroundSet, Matroid, MinorSpec, Subset,
    Thresholds,
};
use proptest::prelude::*;
use std::sync::Arc;

#[test]
fn span_is_a_closure_operator_on_the_zoo() {
    for (name, m) in common::corpus(10) {
        for x in m.ground().subsets() {
            let span = m.span_set(x);
            assert!(x.is_subset_of(span), "{name}: extensive at {x}");
            assert_eq!(m.span_set(span), span, "{name}: idempotent at {x}");
        }
        for y in m.ground().subsets() {
            let span_y = m.span_set(y);
            for x in y.subsets() {
                assert!(m.span_set(x).is_subset_of(span_y), "{name}: monotone at {x} ⊆ {y}");
            }
        }
    }
}

#[test]
fn span_matches_the_naive_and_contraction_definitions() {
    for (name, m) in common::corpus(8) {
        for x in m.ground().subsets() {
            let span = m.span_set(x);
            assert_eq!(span, naive_span(&*m, x), "{name}: naive span at {x}");
            assert_eq!(span, span_by_contraction(&*m, x), "{name}: contraction span at {x}");
        }
    }
}

#[test]
fn rank_is_monotone_and_submodular() {
    let mut subjects: Vec<(String, Arc<dyn Matroid>)> = common::corpus(8);
    for n in 0..=5usize {
        for (k, &bits) in labeled_matroids(n).unwrap().iter().enumerate().step_by(17) {
            subjects.push((format!("enumerated_{n}_{k}"), Arc::new(FamilyMatroid::new(n, bits))));
        }
    }
    for (name, m) in subjects {
        for x in m.ground().subsets() {
            let rx = m.rank_set(x);
            assert_eq!(rx, naive_rank(&*m, x), "{name}: rank at {x}");
            for y in m.ground().subsets() {
                let ry = m.rank_set(y);
                assert!(
                    rx + ry >= m.rank_set(x.union(y)) + m.rank_set(x.intersect(y)),
                    "{name}: submodularity at {x}, {y}"
                );
                if x.is_subset_of(y) {
                    assert!(rx <= ry, "{name}: monotonicity at {x} ⊆ {y}");
                }
            }
        }
    }
}

#[test]
fn contraction_is_independent_of_the_basis_choice() {
    for (name, m) in common::corpus(8) {
        let arc: Arc<dyn Matroid> = m;
        for x in arc.ground().subsets() {
            // all maximal independent subsets of x
            let bases: Vec<Subset> = x
                .subsets()
                .filter(|&b| {
                    arc.indep(b) && x.minus(b).iter().all(|e| !arc.indep(b.with(e)))
                })
                .collect();
            let reference =
                MinorSpec::with_basis(arc.clone(), x, bases[0], Subset::EMPTY).unwrap();
            for &basis in &bases[1..] {
                let other = MinorSpec::with_basis(arc.clone(), x, basis, Subset::EMPTY).unwrap();
                for s in reference.ground().subsets() {
                    assert_eq!(
                        reference.indep(s),
                        other.indep(s),
                        "{name}: contraction of {x} differs between bases {} and {basis}",
                        bases[0]
                    );
                }
            }
        }
    }
}

#[test]
fn contraction_and_deletion_commute() {
    for (name, m) in common::corpus(8) {
        let arc: Arc<dyn Matroid> = m;
        let ground = arc.ground().mask();
        for x in arc.ground().subsets() {
            for y in ground.minus(x).subsets() {
                let contract_then_delete = MinorSpec::new(
                    Arc::new(MinorSpec::new(arc.clone(), x, Subset::EMPTY).unwrap()),
                    Subset::EMPTY,
                    y,
                )
                .unwrap();
                let delete_then_contract = MinorSpec::new(
                    Arc::new(MinorSpec::new(arc.clone(), Subset::EMPTY, y).unwrap()),
                    x,
                    Subset::EMPTY,
                )
                .unwrap();
                assert_eq!(contract_then_delete.ground(), delete_then_contract.ground());
                for s in contract_then_delete.ground().subsets() {
                    assert_eq!(
                        contract_then_delete.indep(s),
                        delete_then_contract.indep(s),
                        "{name}: minors disagree at X={x}, Y={y}, S={s}"
                    );
                }
            }
        }
    }
}

#[test]
fn dual_is_an_involution_with_complement_bases() {
    let thresholds = Thresholds::default();
    let mut subjects: Vec<(String, ExplicitMatroid)> = Vec::new();
    for (name, m) in common::corpus(8) {
        subjects.push((name, ExplicitMatroid::from_matroid(&*m).unwrap()));
    }
    for n in 0..=5usize {
        for (k, &bits) in labeled_matroids(n).unwrap().iter().enumerate().step_by(23) {
            subjects.push((format!("enumerated_{n}_{k}"), FamilyMatroid::new(n, bits).to_explicit()));
        }
    }
    for (name, explicit) in subjects {
        let dual = explicit.dual(&thresholds).unwrap();
        let back = dual.dual(&thresholds).unwrap();
        for s in explicit.ground().subsets() {
            assert_eq!(explicit.indep(s), back.indep(s), "{name}: involution at {s}");
        }
        let full = explicit.ground().mask();
        let mut complements: Vec<Subset> =
            explicit.bases().into_iter().map(|b| full.minus(b)).collect();
        complements.sort();
        assert_eq!(dual.bases(), complements, "{name}: dual bases");
    }
}

#[test]
fn zoo_constructors_pass_the_axiom_check() {
    let thresholds = Thresholds::default();
    for (name, m) in common::corpus(8) {
        let family = ExplicitMatroid::from_matroid(&*m).unwrap();
        let report = check_axioms(m.ground(), &family.family(), &thresholds).unwrap();
        assert!(report.passed(), "{name}: {report}");
    }
}

#[test]
fn direct_sum_rank_is_additive() {
    let u1 = matroid_forge::UniformMatroid::new(GroundSet::new(Subset::from_elements([0, 1, 2])), 2)
        .unwrap();
    let tri = matroid_forge::GraphicMatroid::new(&[(3, 0, 1), (4, 1, 2), (5, 2, 0)]).unwrap();
    let sum = direct_sum(vec![Arc::new(u1), Arc::new(tri)]).unwrap();
    for x in sum.ground().subsets() {
        let per_part: usize =
            sum.parts().iter().map(|p| p.rank_set(x.intersect(p.ground().mask()))).sum();
        assert_eq!(sum.rank_set(x), per_part);
        assert_eq!(sum.rank_set(x), naive_rank(&sum, x));
    }
}

#[test]
fn cached_rank_is_transparent_and_thread_safe() {
    let (_, m) = common::corpus(8).pop().unwrap();
    let explicit = ExplicitMatroid::from_matroid(&*m).unwrap();
    let cached = Arc::new(CachedRank::new(explicit.clone(), 1 << 10));
    let subsets: Vec<Subset> = explicit.ground().subsets().collect();
    std::thread::scope(|scope| {
        for chunk in subsets.chunks(subsets.len().div_ceil(4).max(1)) {
            let cached = Arc::clone(&cached);
            let explicit = &explicit;
            scope.spawn(move || {
                for &s in chunk {
                    assert_eq!(cached.rank_set(s), explicit.rank_set(s));
                    assert_eq!(cached.rank_set(s), explicit.rank_set(s));
                }
            });
        }
    });
}

proptest! {
    #[test]
    fn greedy_is_maximal_on_random_subsets(which in 0usize..18, bits in any::<u128>()) {
        let all = common::corpus(10);
        let (_, m) = &all[which % all.len()];
        let x = Subset::from_bits(bits).intersect(m.ground().mask());
        let basis = m.greedy_basis(x);
        prop_assert!(m.indep(basis));
        prop_assert!(basis.is_subset_of(x));
        for e in x.minus(basis).iter() {
            prop_assert!(!m.indep(basis.with(e)));
        }
    }

    #[test]
    fn span_never_raises_rank(which in 0usize..18, bits in any::<u128>()) {
        let all = common::corpus(10);
        let (_, m) = &all[which % all.len()];
        let x = Subset::from_bits(bits).intersect(m.ground().mask());
        prop_assert_eq!(m.rank_set(m.span_set(x)), m.rank_set(x));
    }
}
