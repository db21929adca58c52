mod common;

use braidfloor::bounds::{integer, knot_chi, rational};
use braidfloor::report::{connected_chi_lower, verify_braid};
use braidfloor::sample::{random_band_word, random_word, run_campaign};
use braidfloor::{
    catalogue, corollary_rhs, dehornoy_floor, floor_genus_lower, lemma2_residual, lemma3_bound,
    theorem_rhs, VertexCensus,
};
use common::{w, word};
use proptest::prelude::*;
use rand::Rng;

fn census() -> impl Strategy<Value = VertexCensus> {
    prop::collection::vec(((0u32..5, 0u32..5), 0u64..6), 0..8).prop_map(|entries| {
        let mut c = VertexCensus::new();
        for ((a, b), k) in entries {
            if a + b >= 1 {
                c.add(a, b, k);
            }
        }
        c
    })
}

/// Vertex types whose coefficient in the identity is listed explicitly or
/// through the valence >= 4 sum.
fn covered_census() -> impl Strategy<Value = VertexCensus> {
    let types = [
        (1u32, 0u32),
        (0, 2),
        (0, 3),
        (2, 1),
        (3, 0),
        (1, 2),
        (2, 0),
        (4, 0),
        (2, 2),
        (1, 3),
        (0, 4),
        (3, 2),
    ];
    prop::collection::vec((0..types.len(), 0u64..6), 0..8).prop_map(move |entries| {
        let mut c = VertexCensus::new();
        for (t, k) in entries {
            c.add(types[t].0, types[t].1, k);
        }
        c
    })
}

/// Euler characteristic from the vertex-by-vertex count: each vertex of
/// type (a, b) contributes 1 - a/2 - b/4, scaled by 4.
fn four_chi(c: &VertexCensus) -> i64 {
    c.entries()
        .map(|((a, b), k)| (4 - 2 * a as i64 - b as i64) * k as i64)
        .sum()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn lemma2_is_linear(c1 in census(), c2 in census(), x1 in -20i64..20, x2 in -20i64..20) {
        prop_assert_eq!(
            lemma2_residual(&c1.merged(&c2), x1 + x2),
            lemma2_residual(&c1, x1) + lemma2_residual(&c2, x2)
        );
    }

    #[test]
    fn lemma2_vanishes_on_consistent_censuses(c in covered_census()) {
        // the residual is affine in chi with slope -4, so it vanishes exactly
        // when 4 chi equals the vertex-by-vertex count
        prop_assert_eq!(lemma2_residual(&c, 0), four_chi(&c));
        prop_assert_eq!(lemma2_residual(&c, 1), four_chi(&c) - 4);
    }

    #[test]
    fn theorem_and_corollary_agree(n in 2usize..40, g in 0u64..60) {
        prop_assert_eq!(theorem_rhs(n, knot_chi(g)), corollary_rhs(n, g));
    }

    #[test]
    fn lemma3_half_integers(a in 0u64..50, b in 0u64..50) {
        prop_assume!(a + b >= 1);
        let twice = lemma3_bound(a, b) * integer(2);
        prop_assert_eq!(twice, integer(2 * a as i64 + b as i64 - 1));
    }

    #[test]
    fn verification_holds(x in word(6, 30)) {
        let r = verify_braid(&x).unwrap();
        prop_assert!(r.all_hold(), "{:?}", r.failures().collect::<Vec<_>>());
        prop_assert!(connected_chi_lower(&x) <= braidfloor::invariants::bennequin_chi(&x));
    }
}

#[test]
fn lemma2_disk_example() {
    assert_eq!(lemma2_residual(&VertexCensus::new().with(1, 0, 2), 1), 0);
    assert_eq!(four_chi(&VertexCensus::new().with(1, 0, 2)), 4);
}

#[test]
fn catalogue_respects_the_corollary() {
    for e in catalogue().unwrap() {
        let n = e.braid.strands();
        let f = dehornoy_floor(&e.braid).unwrap().floor as u64;
        assert!(floor_genus_lower(n, f) <= e.exact_genus, "{}", e.name);
        assert!(
            integer(f as i64) < corollary_rhs(n, e.exact_genus),
            "{}",
            e.name
        );
        assert!(
            integer(f as i64) < theorem_rhs(n, knot_chi(e.exact_genus)),
            "{}",
            e.name
        );
    }
}

#[test]
fn catalogue_floors() {
    let floors: Vec<_> = catalogue()
        .unwrap()
        .iter()
        .map(|e| (e.name, dehornoy_floor(&e.braid).unwrap().floor))
        .collect();
    assert_eq!(
        floors,
        [
            ("unknot", 0),
            ("trefoil", 1),
            ("figure-eight", 0),
            ("T(2,5)", 2),
            ("T(2,7)", 3),
            ("T(3,4)", 1)
        ]
    );
    assert_eq!(corollary_rhs(3, 3), rational(7, 2));
}

#[test]
fn band_products_stay_below_m_over_n() {
    let hits = run_campaign(11, 2000, |rng, _| {
        let n = rng.gen_range(3..=6);
        let m = rng.gen_range(1..=20);
        let p = random_band_word(rng, n, m).unwrap();
        let g = random_word(rng, n, 8).unwrap();
        let f = dehornoy_floor(&p.conjugate(&g).unwrap()).unwrap().floor;
        f * n < m
    });
    assert!(hits.iter().all(|&ok| ok));
}

#[test]
fn band_product_bound_fails_in_b2_for_even_m() {
    // sigma_1 is the only band generator of B_2 and sigma_1^2 is the full twist,
    // so sigma_1^m has floor m/2 exactly when m is even
    for m in 1..=20usize {
        let f = dehornoy_floor(&w(2, &vec![1; m])).unwrap().floor;
        assert_eq!(f * 2 < m, m % 2 == 1, "m={m}");
    }
}
