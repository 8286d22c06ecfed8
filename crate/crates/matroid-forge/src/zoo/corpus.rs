//! A fixed corpus of small sample matroids used by the exhaustive property
//! suites and the CLI self-test.

use crate::matroid::Matroid;
use crate::minor::MinorSpec;
use crate::set::{GroundSet, Subset};
use crate::sum::DirectSum;
use crate::zoo::{GraphicMatroid, LinearMatroidGf2, Part, PartitionMatroid, UniformMatroid};
use std::sync::Arc;

fn uniform(n: usize, cap: usize) -> Arc<dyn Matroid> {
    Arc::new(UniformMatroid::new(GroundSet::dense(n), cap).unwrap())
}

/// Named sample matroids of assorted families, sizes 0 through 10, filtered
/// to grounds of at most `max_elements` elements.
pub fn corpus(max_elements: usize) -> Vec<(String, Arc<dyn Matroid>)> {
    let mut out: Vec<(String, Arc<dyn Matroid>)> = Vec::new();
    let mut add = |name: &str, m: Arc<dyn Matroid>| out.push((name.to_string(), m));

    add("trivial", uniform(0, 0));
    add("u_1_1", uniform(1, 1));
    add("u_3_0", uniform(3, 0));
    add("free_3", uniform(3, 3));
    add("u_4_1", uniform(4, 1));
    add("u_5_2", uniform(5, 2));
    add("u_8_3", uniform(8, 3));
    add("u_10_4", uniform(10, 4));

    add(
        "graphic_triangle",
        Arc::new(GraphicMatroid::new(&[(0, 0, 1), (1, 1, 2), (2, 2, 0)]).unwrap()),
    );
    add(
        "graphic_parallel_pair",
        Arc::new(GraphicMatroid::new(&[(0, 0, 1), (1, 0, 1), (2, 1, 2)]).unwrap()),
    );
    add(
        "graphic_path_4",
        Arc::new(GraphicMatroid::new(&[(0, 0, 1), (1, 1, 2), (2, 2, 3)]).unwrap()),
    );
    add(
        "graphic_k4",
        Arc::new(
            GraphicMatroid::new(&[(0, 0, 1), (1, 0, 2), (2, 0, 3), (3, 1, 2), (4, 1, 3), (5, 2, 3)])
                .unwrap(),
        ),
    );
    add(
        "graphic_loops_and_bridges",
        Arc::new(GraphicMatroid::new(&[(0, 0, 0), (1, 0, 1), (2, 1, 2), (3, 2, 2), (4, 0, 2)]).unwrap()),
    );
    add(
        "graphic_two_triangles",
        Arc::new(
            GraphicMatroid::new(&[
                (0, 0, 1),
                (1, 1, 2),
                (2, 2, 0),
                (3, 3, 4),
                (4, 4, 5),
                (5, 5, 3),
                (6, 2, 3),
            ])
            .unwrap(),
        ),
    );

    add(
        "gf2_basis_plus_sums",
        Arc::new(
            LinearMatroidGf2::new(3, &[(0, 0b001), (1, 0b010), (2, 0b100), (3, 0b011), (4, 0b111)])
                .unwrap(),
        ),
    );
    add(
        "gf2_fano",
        Arc::new(
            LinearMatroidGf2::new(
                3,
                &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7)],
            )
            .unwrap(),
        ),
    );
    add(
        "gf2_with_loop",
        Arc::new(LinearMatroidGf2::new(2, &[(0, 0b00), (1, 0b01), (2, 0b10), (3, 0b11)]).unwrap()),
    );

    add(
        "partition_two_pairs",
        Arc::new(
            PartitionMatroid::new(vec![
                Part { elements: Subset::from_elements([0, 1]), cap: 1 },
                Part { elements: Subset::from_elements([2, 3]), cap: 1 },
            ])
            .unwrap(),
        ),
    );
    add(
        "partition_mixed_caps",
        Arc::new(
            PartitionMatroid::new(vec![
                Part { elements: Subset::from_elements([0, 1, 2]), cap: 2 },
                Part { elements: Subset::from_elements([3, 4, 5]), cap: 1 },
                Part { elements: Subset::from_elements([6]), cap: 0 },
            ])
            .unwrap(),
        ),
    );

    {
        let triangle: Arc<dyn Matroid> =
            Arc::new(GraphicMatroid::new(&[(0, 0, 1), (1, 1, 2), (2, 2, 0)]).unwrap());
        add(
            "triangle_contract_edge",
            Arc::new(MinorSpec::new(triangle.clone(), Subset::singleton(0), Subset::EMPTY).unwrap()),
        );
        add(
            "triangle_delete_edge",
            Arc::new(MinorSpec::new(triangle, Subset::EMPTY, Subset::singleton(2)).unwrap()),
        );
        let k4: Arc<dyn Matroid> = Arc::new(
            GraphicMatroid::new(&[(0, 0, 1), (1, 0, 2), (2, 0, 3), (3, 1, 2), (4, 1, 3), (5, 2, 3)])
                .unwrap(),
        );
        add(
            "k4_contract_delete",
            Arc::new(MinorSpec::new(k4, Subset::singleton(0), Subset::singleton(5)).unwrap()),
        );
    }

    {
        let left: Arc<dyn Matroid> =
            Arc::new(GraphicMatroid::new(&[(0, 0, 1), (1, 1, 2), (2, 2, 0)]).unwrap());
        let right: Arc<dyn Matroid> = Arc::new(
            UniformMatroid::new(GroundSet::new(Subset::from_elements([3, 4, 5])), 2).unwrap(),
        );
        add("sum_triangle_uniform", Arc::new(DirectSum::new(vec![left, right]).unwrap()));
    }

    out.retain(|(_, m)| m.ground().len() <= max_elements);
    out
}
