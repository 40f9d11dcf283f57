//! Worked examples from the literature, embedded as data, and the checks
//! that recompute them.

use serde::Serialize;

use crate::arrays::{astz_stats, Astz, Csspp, StatProfile};
use crate::bijection::{astz_to_partition, partition_to_astz, BijectionConfig, BijectionError};
use crate::enumeration::{
    enumerate_astz, enumerate_csspp_shape, EnumError, EnumFilter, ScaleGuard,
};

/// The (9, 4) running example with one left 1-column at position -2.
pub fn running_example_astz() -> Astz {
    let z = |k: usize| vec![0i64; k];
    let rows = vec![
        [z(19), vec![1]].concat(),
        [z(16), vec![1, 0]].concat(),
        [z(13), vec![1, 0, 0]].concat(),
        [z(11), vec![1, -1, 1]].concat(),
        [z(11), vec![1]].concat(),
        vec![0, 0, 0, 0, 0, 1, 0, 0, 0, 0],
        vec![0, 1, 0, 0, -1, 0, 0, 1],
        vec![0, 0, 0, 0, 0, 1],
        vec![0, 0, 0, 1],
    ];
    Astz::new(4, rows).expect("running example is valid")
}

pub const RUNNING_EXAMPLE_PARTITION: [u32; 8] = [11, 9, 7, 6, 5, 4, 1, 1];

/// A (5, 5)-ASTZ with three left 1-columns.
pub fn three_path_astz() -> Astz {
    let rows = vec![
        vec![0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0],
        vec![0, 1, 0, 0, 0, -1, 0, 1, 0, 0, 0],
        vec![0, 0, 0, 0, 1, 0, 0, 0, 0],
        vec![1, 0, 0, 0, 0, -1, 1],
        vec![1, 0, -1, 0, 1],
    ];
    Astz::new(5, rows).expect("example is valid")
}

/// The twelve (5, 2) pairs of weight M R Q with j = 5, as (partition, rows).
pub fn mrq_pair_data() -> Vec<(Vec<u32>, Vec<Vec<i64>>)> {
    vec![
        (
            vec![6, 6, 6, 3, 1],
            vec![
                vec![0, 0, 0, 0, 0, 0, 0, 1, 0, 0],
                vec![0, 0, 0, 0, 1, 0, -1, 1],
                vec![0, 0, 0, 0, 0, 1],
                vec![0, 0, 0, 1],
                vec![1, 0],
            ],
        ),
        (
            vec![6, 6, 6, 2, 1],
            vec![
                vec![0, 0, 0, 0, 0, 0, 1, 0, 0, 0],
                vec![0, 0, 0, 0, 1, -1, 0, 1],
                vec![0, 0, 0, 0, 0, 1],
                vec![0, 0, 0, 1],
                vec![1, 0],
            ],
        ),
        (
            vec![6, 6, 5, 3, 1],
            vec![
                vec![0, 0, 0, 0, 0, 0, 0, 1, 0, 0],
                vec![0, 0, 0, 0, 0, 1, -1, 1],
                vec![0, 0, 0, 0, 0, 1],
                vec![1, 0, 0, 0],
                vec![0, 1],
            ],
        ),
        (
            vec![6, 6, 5, 2, 1],
            vec![
                vec![0, 0, 0, 0, 0, 0, 1, 0, 0, 0],
                vec![0, 0, 0, 0, 0, 0, 0, 1],
                vec![0, 0, 0, 1, -1, 1],
                vec![0, 0, 0, 1],
                vec![1, 0],
            ],
        ),
        (
            vec![6, 6, 4, 3, 1],
            vec![
                vec![0, 0, 0, 0, 0, 0, 0, 0, 1, 0],
                vec![0, 0, 0, 0, 1, 0, 0, 0],
                vec![0, 0, 0, 0, 0, 1],
                vec![1, 0, -1, 1],
                vec![0, 1],
            ],
        ),
        (
            vec![6, 6, 4, 2, 1],
            vec![
                vec![0, 0, 0, 0, 0, 0, 0, 0, 1, 0],
                vec![0, 0, 0, 1, 0, 0, 0, 0],
                vec![0, 0, 0, 0, 0, 1],
                vec![1, -1, 0, 1],
                vec![0, 1],
            ],
        ),
        (
            vec![6, 5, 5, 3, 1],
            vec![
                vec![0, 0, 0, 0, 0, 0, 0, 0, 1, 0],
                vec![0, 0, 0, 0, 0, 1, 0, 0],
                vec![1, 0, 0, 0, -1, 1],
                vec![0, 0, 0, 1],
                vec![0, 1],
            ],
        ),
        (
            vec![6, 5, 5, 2, 1],
            vec![
                vec![0, 0, 0, 0, 0, 0, 0, 0, 1, 0],
                vec![0, 0, 0, 0, 1, 0, 0, 0],
                vec![1, 0, 0, -1, 0, 1],
                vec![0, 0, 0, 1],
                vec![0, 1],
            ],
        ),
        (
            vec![6, 5, 4, 3, 1],
            vec![
                vec![0, 0, 0, 0, 0, 0, 0, 1, 0, 0],
                vec![0, 0, 0, 0, 0, 0, 0, 1],
                vec![0, 0, 0, 1, 0, 0],
                vec![1, 0, -1, 1],
                vec![0, 1],
            ],
        ),
        (
            vec![6, 5, 4, 2, 1],
            vec![
                vec![0, 0, 0, 0, 0, 0, 0, 1, 0, 0],
                vec![0, 0, 0, 0, 0, 0, 0, 1],
                vec![0, 0, 1, 0, 0, 0],
                vec![1, -1, 0, 1],
                vec![0, 1],
            ],
        ),
        (
            vec![6, 4, 4, 3, 1],
            vec![
                vec![0, 0, 0, 0, 0, 0, 0, 0, 1, 0],
                vec![0, 0, 0, 1, 0, 0, 0, 0],
                vec![1, 0, -1, 0, 0, 1],
                vec![0, 0, 0, 1],
                vec![0, 1],
            ],
        ),
        (
            vec![6, 4, 4, 2, 1],
            vec![
                vec![0, 0, 0, 0, 0, 0, 0, 0, 1, 0],
                vec![0, 0, 1, 0, 0, 0, 0, 0],
                vec![1, -1, 0, 0, 0, 1],
                vec![0, 0, 0, 1],
                vec![0, 1],
            ],
        ),
    ]
}

/// One recomputed pair: the printed objects, what the maps produce, and
/// whether both directions agree with the printed data.
#[derive(Debug, Clone, Serialize)]
pub struct PairCheck {
    pub astz: Astz,
    pub partition: Csspp,
    pub i: usize,
    pub j: usize,
    pub stats: StatProfile,
    pub forward: Csspp,
    pub inverse: Astz,
    pub matches: bool,
}

fn check_pair(a: Astz, expected: Csspp, n: usize) -> Result<PairCheck, BijectionError> {
    let cfg = BijectionConfig::CANONICAL;
    let forward = astz_to_partition(&a, &cfg)?;
    let inverse = partition_to_astz(&expected, n, &cfg)?;
    let (i, j) = a.single_indices().expect("examples have one left 1-column");
    let stats = astz_stats(&a)?;
    let matches = forward == expected && inverse == a;
    Ok(PairCheck {
        astz: a,
        partition: expected,
        i,
        j,
        stats,
        forward,
        inverse,
        matches,
    })
}

pub fn running_example() -> Result<PairCheck, BijectionError> {
    let c = Csspp::partition(3, RUNNING_EXAMPLE_PARTITION.to_vec())?;
    check_pair(running_example_astz(), c, 9)
}

pub fn mrq_pairs() -> Result<Vec<PairCheck>, BijectionError> {
    mrq_pair_data()
        .into_iter()
        .map(|(parts, rows)| {
            let a = Astz::new(2, rows)?;
            let c = Csspp::partition(1, parts)?;
            check_pair(a, c, 5)
        })
        .collect()
}

/// Counts behind the r = 2 obstruction: (3, 2)-ASTZs with right 0-columns
/// exactly at positions 1 and 3, against class-1 CSSPPs of shape (3, 1).
#[derive(Debug, Clone, Serialize)]
pub struct Obstruction {
    pub astz: usize,
    pub csspp: usize,
    pub astz_objects: Vec<Astz>,
    pub csspp_objects: Vec<Csspp>,
}

pub fn obstruction() -> Result<Obstruction, EnumError> {
    let filter = EnumFilter {
        right_zero: Some(vec![1, 3]),
        ..Default::default()
    };
    let astz_objects = enumerate_astz(3, 2, &filter, ScaleGuard::DESK)?;
    let mut csspp_objects = enumerate_csspp_shape(&[3, 1], 1);
    csspp_objects.sort();
    Ok(Obstruction {
        astz: astz_objects.len(),
        csspp: csspp_objects.len(),
        astz_objects,
        csspp_objects,
    })
}
