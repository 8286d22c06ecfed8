//! Built-in exhaustive small-scale suites. Independent instances are
//! dispatched to parallel workers; results aggregate by instance index so
//! output stays deterministic.

use crate::Format;
use matroid_forge::enumerate::{
    all_partition_matroids, downward_closed_families, is_finite_matroid_family, labeled_matroids,
    FamilyMatroid,
};
use matroid_forge::generate::{generate, GeneratorSpec, MatroidFamily};
use matroid_forge::instance::serialize_instance;
use matroid_forge::zoo::corpus;
use matroid_forge::{
    brute_force_max_common, check_axioms, classify_uniform, extend_to_maximal,
    intersection_witness, is_maximal_common, max_common_independent, verify_witness,
    ExplicitMatroid, GroundSet, Matroid, MinorSpec, Subset, Thresholds, UniformClass,
};
use rayon::prelude::*;
use serde::Serialize;
use std::process::ExitCode;
use std::sync::Arc;

#[derive(Serialize)]
struct SuiteResult {
    name: &'static str,
    passed: bool,
    detail: String,
}

pub fn run(format: Format) -> ExitCode {
    let suites: Vec<SuiteResult> = vec![
        kernel_properties(),
        axiom_checker(),
        uniform_procedures(),
        lemma_suite(),
        witness_soundness(),
        determinism(),
    ];
    let all_passed = suites.iter().all(|s| s.passed);
    match format {
        Format::Json => {
            println!("{}", serde_json::to_string_pretty(&suites).expect("suites serialize"))
        }
        Format::Text => {
            for s in &suites {
                println!("[{}] {}: {}", if s.passed { "ok" } else { "FAILED" }, s.name, s.detail);
            }
            println!("selftest: {}", if all_passed { "all suites passed" } else { "FAILURES" });
        }
    }
    if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(2)
    }
}

fn kernel_properties() -> SuiteResult {
    let mut checks = 0usize;
    let mut failures = Vec::new();
    let thresholds = Thresholds::default();
    for (name, m) in corpus(6) {
        let ground = m.ground().mask();
        for x in m.ground().subsets() {
            let span = m.span_set(x);
            checks += 2;
            if !x.is_subset_of(span) {
                failures.push(format!("{name}: span not extensive at {x}"));
            }
            if m.span_set(span) != span {
                failures.push(format!("{name}: span not idempotent at {x}"));
            }
        }
        // monotone over nested pairs
        for y in m.ground().subsets() {
            let span_y = m.span_set(y);
            for x in y.subsets() {
                checks += 1;
                if !m.span_set(x).is_subset_of(span_y) {
                    failures.push(format!("{name}: span not monotone at {x} ⊆ {y}"));
                }
            }
        }
        // rank submodularity over all pairs
        for x in m.ground().subsets() {
            for y in m.ground().subsets() {
                checks += 1;
                if m.rank_set(x) + m.rank_set(y)
                    < m.rank_set(x.union(y)) + m.rank_set(x.intersect(y))
                {
                    failures.push(format!("{name}: submodularity fails at {x}, {y}"));
                }
            }
        }
        // contraction and deletion commute
        let arc: Arc<dyn Matroid> = m.clone();
        for x in m.ground().subsets() {
            for y in ground.minus(x).subsets() {
                let a = MinorSpec::new(arc.clone(), x, y).expect("valid minor");
                let b = MinorSpec::new(
                    Arc::new(MinorSpec::new(arc.clone(), Subset::EMPTY, y).expect("deletion")),
                    x,
                    Subset::EMPTY,
                )
                .expect("contraction");
                for s in a.ground().subsets() {
                    checks += 1;
                    if a.indep(s) != b.indep(s) {
                        failures.push(format!("{name}: minors disagree at {x}/{y}/{s}"));
                    }
                }
            }
        }
        // dual involution on explicit snapshots
        if let Ok(explicit) = ExplicitMatroid::from_matroid(&*m) {
            if let Ok(dual) = explicit.dual(&thresholds) {
                let back = dual.dual(&thresholds).expect("dual of a matroid is a matroid");
                for s in m.ground().subsets() {
                    checks += 1;
                    if back.indep(s) != explicit.indep(s) {
                        failures.push(format!("{name}: dual is not an involution at {s}"));
                    }
                }
            }
        }
    }
    result("kernel-properties", checks, failures)
}

fn axiom_checker() -> SuiteResult {
    let mut checks = 0usize;
    let mut failures = Vec::new();
    let thresholds = Thresholds::default();
    for n in 0..=4usize {
        for &family_bits in &downward_closed_families(n).expect("small ground") {
            let ground = GroundSet::dense(n);
            let family: Vec<Subset> =
                ground.subsets().filter(|s| family_bits >> s.bits() & 1 == 1).collect();
            let report = check_axioms(ground, &family, &thresholds).expect("within threshold");
            checks += 1;
            if report.passed() != is_finite_matroid_family(n, family_bits) {
                failures.push(format!("axiom checker disagrees on n={n}, family {family_bits:#x}"));
            }
        }
    }
    let counts: Vec<usize> =
        (0..=5).map(|n| labeled_matroids(n).expect("small ground").len()).collect();
    checks += 1;
    if counts != [1, 2, 5, 16, 68, 406] {
        failures.push(format!("labeled matroid counts {counts:?}"));
    }
    result("axiom-checker", checks, failures)
}

fn uniform_procedures() -> SuiteResult {
    let thresholds = Thresholds::default();
    let outcomes: Vec<(usize, Vec<String>)> = (0..=5usize)
        .into_par_iter()
        .map(|n| {
            let mut checks = 0usize;
            let mut failures = Vec::new();
            let full = GroundSet::dense(n);
            for &bits in &labeled_matroids(n).expect("small ground") {
                let m = FamilyMatroid::new(n, bits);
                let exchange_uniform = full.subsets().all(|i| {
                    !m.indep(i)
                        || i.iter().all(|e| {
                            full.mask().minus(i).iter().all(|f| m.indep(i.without(e).with(f)))
                        })
                });
                let indep_or_spanning = full
                    .subsets()
                    .all(|f| m.indep(f) || m.rank_set(f) == m.rank_set(full.mask()));
                checks += 1;
                if exchange_uniform != indep_or_spanning {
                    failures.push(format!("uniformity characterizations disagree at n={n}, {bits:#x}"));
                }
                // brute-force shape classifier
                let total = m.rank_set(full.mask());
                let shape_uniform = full.subsets().all(|s| m.indep(s) == (s.len() <= total));
                let classified = classify_uniform(&m, &thresholds).expect("within threshold");
                let agrees = match classified {
                    UniformClass::Free => shape_uniform && total == n,
                    UniformClass::UniformRank(r) => shape_uniform && r == total && total < n,
                    UniformClass::NotUniform { .. } => !shape_uniform,
                };
                checks += 1;
                if !agrees {
                    failures.push(format!("classifier disagrees at n={n}, {bits:#x}"));
                }
                if !indep_or_spanning && shape_uniform {
                    failures.push(format!("shape uniform but not ind-or-span at n={n}"));
                }
            }
            (checks, failures)
        })
        .collect();
    let checks = outcomes.iter().map(|(c, _)| c).sum();
    let failures = outcomes.into_iter().flat_map(|(_, f)| f).collect();
    result("uniform-procedures", checks, failures)
}

fn lemma_suite() -> SuiteResult {
    let outcomes: Vec<(usize, Vec<String>)> = (0..=5usize)
        .into_par_iter()
        .map(|n| {
            let mut checks = 0usize;
            let mut failures = Vec::new();
            let stride = if n == 5 { 7 } else { 1 };
            let partitions = all_partition_matroids(n, 3);
            for &bits in labeled_matroids(n).expect("small ground").iter().step_by(stride) {
                let m = FamilyMatroid::new(n, bits);
                for part in &partitions {
                    for i in m.ground().subsets() {
                        if !(m.indep(i) && part.indep(i)) {
                            continue;
                        }
                        checks += 1;
                        let ext = extend_to_maximal(&m, part, i).expect("common independent");
                        let literal_max = m.ground().mask().minus(ext).iter().all(|e| {
                            !(m.indep(ext.with(e)) && part.indep(ext.with(e)))
                        });
                        if !i.is_subset_of(ext) || !literal_max {
                            failures.push(format!("extension fails at n={n}, {bits:#x}, I={i}"));
                        }
                        let literal_i = m.ground().mask().minus(i).iter().all(|e| {
                            !(m.indep(i.with(e)) && part.indep(i.with(e)))
                        });
                        if is_maximal_common(&m, part, i).expect("common independent") != literal_i
                        {
                            failures.push(format!("maximality characterization fails at n={n}, I={i}"));
                        }
                    }
                }
            }
            (checks, failures)
        })
        .collect();
    let checks = outcomes.iter().map(|(c, _)| c).sum();
    let failures = outcomes.into_iter().flat_map(|(_, f)| f).collect();
    result("lemma-suite", checks, failures)
}

fn witness_soundness() -> SuiteResult {
    let thresholds = Thresholds::default();
    let outcomes: Vec<(usize, Vec<String>)> = (0..100u64)
        .into_par_iter()
        .map(|seed| {
            let mut failures = Vec::new();
            let family = MatroidFamily::ALL[(seed % 4) as usize];
            let size = 3 + (seed as usize * 7) % 14;
            let spec = GeneratorSpec {
                seed,
                family,
                size: if family == MatroidFamily::Explicit { size.min(7) } else { size },
                parts: 1 + (seed as usize) % 5,
                ..Default::default()
            };
            let file = generate(&spec).expect("generator bounds hold");
            let (m, n) = file.instantiate(&thresholds).expect("generated instances parse");
            let witness = intersection_witness(m.clone(), &n).expect("witness search");
            let report = verify_witness(&*m, &n, &witness);
            if !report.ok() {
                failures.push(format!("seed {seed}: verification failed {:?}", report.failures));
            }
            let oracle = max_common_independent(&*m, &n).expect("oracle");
            if oracle.size() != witness.set.len() {
                failures.push(format!(
                    "seed {seed}: witness size {} oracle {}",
                    witness.set.len(),
                    oracle.size()
                ));
            }
            if m.ground().len() <= 12 {
                let brute = brute_force_max_common(&*m, &n, &thresholds).expect("within threshold");
                if brute.len() != witness.set.len() {
                    failures.push(format!("seed {seed}: brute force disagrees"));
                }
            }
            (1usize, failures)
        })
        .collect();
    let checks = outcomes.iter().map(|(c, _)| c).sum();
    let failures = outcomes.into_iter().flat_map(|(_, f)| f).collect();
    result("witness-soundness", checks, failures)
}

fn determinism() -> SuiteResult {
    let mut failures = Vec::new();
    let spec = GeneratorSpec { seed: 42, family: MatroidFamily::Graphic, size: 7, ..Default::default() };
    let a = serialize_instance(&generate(&spec).expect("bounds"));
    let b = serialize_instance(&generate(&spec).expect("bounds"));
    if a != b {
        failures.push("generator output differs between runs".to_string());
    }
    let (m, n) = matroid_forge::instance::parse_instance(&a, &Thresholds::default())
        .expect("generated instance parses");
    let w1 = intersection_witness(m.clone(), &n).expect("witness");
    let w2 = intersection_witness(m, &n).expect("witness");
    if w1 != w2 {
        failures.push("witness search is not deterministic".to_string());
    }
    result("determinism", 2, failures)
}

fn result(name: &'static str, checks: usize, failures: Vec<String>) -> SuiteResult {
    SuiteResult {
        name,
        passed: failures.is_empty(),
        detail: if failures.is_empty() {
            format!("{checks} checks")
        } else {
            failures.join("; ")
        },
    }
}
