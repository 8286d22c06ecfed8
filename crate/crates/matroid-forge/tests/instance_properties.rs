//! Harness invariants: serialization round trips and generation determinism.

use matroid_forge::generate::{generate, GeneratorSpec, MatroidFamily};
use matroid_forge::instance::{serialize_instance, InstanceFile};
use matroid_forge::{Matroid, Thresholds};
use proptest::prelude::*;

fn spec_from(seed: u64, family_idx: usize, size: usize, parts: usize) -> GeneratorSpec {
    let family = MatroidFamily::ALL[family_idx % 4];
    GeneratorSpec {
        seed,
        family,
        size: match family {
            MatroidFamily::Explicit => 1 + size % 7,
            MatroidFamily::Graphic => 2 + size % 8,
            _ => 1 + size % 16,
        },
        parts: 1 + parts % 5,
        ..Default::default()
    }
}

proptest! {
    #[test]
    fn parse_of_serialize_is_identity(seed in 0u64..5000, family in 0usize..4, size in 0usize..20, parts in 0usize..8) {
        let spec = spec_from(seed, family, size, parts);
        let file = generate(&spec).unwrap();
        let text = serialize_instance(&file);
        let back: InstanceFile = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(&back, &file);
        // and the round-tripped document instantiates to the same predicate
        let thresholds = Thresholds::default();
        let (m1, n1) = file.instantiate(&thresholds).unwrap();
        let (m2, n2) = back.instantiate(&thresholds).unwrap();
        prop_assert_eq!(m1.ground(), m2.ground());
        prop_assert_eq!(n1, n2);
        for s in m1.ground().subsets() {
            prop_assert_eq!(m1.indep(s), m2.indep(s));
        }
    }

    #[test]
    fn generation_is_a_pure_function_of_the_spec(seed in 0u64..5000, family in 0usize..4, size in 0usize..20, parts in 0usize..8) {
        let spec = spec_from(seed, family, size, parts);
        prop_assert_eq!(generate(&spec).unwrap(), generate(&spec).unwrap());
    }
}

#[test]
fn generated_elements_stay_within_the_documented_bounds() {
    for seed in 0..200u64 {
        let spec = spec_from(seed, seed as usize, seed as usize, seed as usize);
        let file = generate(&spec).unwrap();
        assert!(file.elements.len() <= 20, "seed {seed}");
        let (_, n) = file.instantiate(&Thresholds::default()).unwrap();
        assert!(n.num_parts() <= 5, "seed {seed}");
        for part in n.parts() {
            assert!(part.cap <= part.elements.len());
        }
    }
}
