mod common;

use astz_core::algebra::{poly_det, Monomial, MultiPoly};
use astz_core::arrays::{astz_stats, Csspp};
use astz_core::bijection::{
    astz_to_partition, partition_to_astz, reflection_forward, reflection_inverse, BijectionConfig,
    Reflection, Rotation,
};
use astz_core::paths::{LatticePath, Point, Step};
use common::naive_partition_stats;
use num_bigint::BigInt;
use proptest::prelude::*;

fn poly() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec(((0u32..3, 0u32..3, 0u32..3, 0u32..3), -4i64..=4), 0..5).prop_map(
        |terms| {
            terms
                .into_iter()
                .map(|((m, r, p, q), c)| MultiPoly::term(Monomial::new(m, r, p, q), c))
                .sum()
        },
    )
}

fn point() -> impl Strategy<Value = (i64, i64, i64, i64)> {
    (-3i64..=3, -3i64..=3, -3i64..=3, -3i64..=3)
}

fn leibniz(mat: &[Vec<MultiPoly>]) -> MultiPoly {
    let n = mat.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total = MultiPoly::zero();
    // Heap's algorithm; the sign flips with every swap
    fn heap(
        k: usize,
        perm: &mut Vec<usize>,
        sign: &mut i64,
        mat: &[Vec<MultiPoly>],
        total: &mut MultiPoly,
    ) {
        if k <= 1 {
            let term = perm
                .iter()
                .enumerate()
                .fold(MultiPoly::constant(*sign), |acc, (r, &c)| &acc * &mat[r][c]);
            *total += &term;
            return;
        }
        for i in 0..k {
            heap(k - 1, perm, sign, mat, total);
            if i + 1 < k {
                let j = if k.is_multiple_of(2) { i } else { 0 };
                perm.swap(j, k - 1);
                *sign = -*sign;
            }
        }
    }
    heap(n, &mut perm, &mut 1, mat, &mut total);
    total
}

fn matrix() -> impl Strategy<Value = Vec<Vec<MultiPoly>>> {
    (1usize..=4).prop_flat_map(|n| prop::collection::vec(prop::collection::vec(poly(), n), n))
}

/// A one-row class-k partition with j parts.
fn one_row() -> impl Strategy<Value = (u32, Vec<u32>)> {
    (1u32..=5, 1usize..=10).prop_flat_map(|(k, j)| {
        let first = j as u32 + k;
        prop::collection::vec(1..=first, j - 1).prop_map(move |mut rest| {
            rest.sort_unstable_by(|a, b| b.cmp(a));
            let mut parts = vec![first];
            parts.extend(rest);
            (k, parts)
        })
    })
}

fn config(k: u32) -> impl Strategy<Value = BijectionConfig> {
    (1..=k, any::<bool>(), any::<bool>()).prop_map(|(d, cw, v)| {
        BijectionConfig::new(
            d,
            if cw {
                Rotation::Clockwise
            } else {
                Rotation::Counterclockwise
            },
            if v {
                Reflection::VerticalAxis
            } else {
                Reflection::HorizontalAxis
            },
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn ring_laws(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &MultiPoly::one(), a.clone());
        prop_assert_eq!(-(-a.clone()), a);
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in poly(), b in poly(), x in point()) {
        let v = [x.0, x.1, x.2, x.3].map(BigInt::from);
        let ev = |p: &MultiPoly| p.eval(&v[0], &v[1], &v[2], &v[3]);
        prop_assert_eq!(ev(&(&a * &b)), ev(&a) * ev(&b));
        prop_assert_eq!(ev(&(&a + &b)), ev(&a) + ev(&b));
    }

    #[test]
    fn text_form_round_trips(a in poly()) {
        let text = a.to_string();
        prop_assert_eq!(text.parse::<MultiPoly>().unwrap(), a);
    }

    #[test]
    fn determinant_matches_permutation_expansion(m in matrix()) {
        prop_assert_eq!(poly_det(&m).unwrap(), leibniz(&m));
    }

    #[test]
    fn lattice_path_text_round_trips(x in -9i64..9, y in -9i64..9, steps in prop::collection::vec(0u8..3, 0..20)) {
        let steps: Vec<Step> = steps.into_iter().map(|s| [Step::R, Step::U, Step::D][s as usize]).collect();
        let p = LatticePath::new(Point::new(x, y), steps);
        prop_assert_eq!(p.to_string().parse::<LatticePath>().unwrap(), p);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn bijection_round_trips_on_large_partitions(
        (k, parts, cfg, extra) in one_row().prop_flat_map(|(k, parts)| (Just(k), Just(parts), config(k), 0usize..3))
    ) {
        let n = parts.len() + extra;
        let c = Csspp::partition(k, parts.clone()).unwrap();
        let a = partition_to_astz(&c, n, &cfg).unwrap();
        prop_assert_eq!(a.n(), n);
        prop_assert_eq!(a.l() as u32, k + 1);
        prop_assert_eq!(a.single_indices().map(|(_, j)| j), Some(parts.len()));
        let s = astz_stats(&a).unwrap();
        let o = naive_partition_stats(&parts, k, cfg.d);
        prop_assert_eq!((s.mu, s.p, s.q), (o.mu, o.p, o.q));
        prop_assert_eq!(astz_to_partition(&a, &cfg).unwrap(), c);
    }

    #[test]
    fn reflection_round_trips_on_large_partitions((k, parts) in one_row(), extra in 0usize..3, cw in any::<bool>(), d0 in 0u32..5) {
        let d = 1 + d0 % k;
        let rot = if cw { Rotation::Clockwise } else { Rotation::Counterclockwise };
        let n = parts.len() + extra;
        let c = Csspp::partition(k, parts.clone()).unwrap();
        let a = reflection_inverse(&c, n, rot, d).unwrap();
        let s = astz_stats(&a).unwrap();
        let o = naive_partition_stats(&parts, k, d);
        prop_assert_eq!((s.p, s.q), (o.p, o.q));
        prop_assert_eq!(reflection_forward(&a, rot, d).unwrap(), c);
    }
}

#[test]
fn configurations_are_distinct_and_in_range() {
    for l in 2..=6usize {
        let all = BijectionConfig::all(l);
        let distinct: std::collections::HashSet<_> = all.iter().collect();
        assert_eq!(distinct.len(), 4 * (l - 1));
        assert!(all.iter().all(|c| (1..l as u32).contains(&c.d)));
    }
    assert_eq!(BijectionConfig::default(), BijectionConfig::CANONICAL);
}
