mod common;

use common::{connected_graph, graph_without_isolated};
use injcolor_core::coloring::{chi, ColoringMode};
use injcolor_core::formulas::{
    corona_value_set, direct_product_bounds, gcd, lexicographic_bounds, sylvester,
    sylvester_guarantee,
};
use injcolor_core::products::{product, ProductKind};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn direct_bounds_contain_solver_value(g in connected_graph(3, 5), h in connected_graph(3, 5)) {
        let bounds = direct_product_bounds(&g, &h, None).unwrap();
        let p = product(ProductKind::Direct, &g, &h).unwrap();
        let (value, _) = chi(ColoringMode::Injective, &p, None).unwrap();
        prop_assert!(bounds.value.contains(value), "{:?} vs {}", bounds.value, value);
    }

    #[test]
    fn lexicographic_bounds_hold(g in connected_graph(2, 5), h in graph_without_isolated(2, 3)) {
        let result = lexicographic_bounds(&g, &h, None).unwrap();
        let p = product(ProductKind::Lexicographic, &g, &h).unwrap();
        let (ci, _) = chi(ColoringMode::Injective, &p, None).unwrap();
        let (c2, _) = chi(ColoringMode::TwoDistance, &p, None).unwrap();
        prop_assert_eq!(ci, c2);
        prop_assert_eq!(result.injective_equals_two_distance, Some(true));
        prop_assert!(result.value.contains(ci));
    }

    #[test]
    fn corona_value_in_candidate_set(g in graph_without_isolated(2, 5), h in graph_without_isolated(2, 3)) {
        let result = corona_value_set(&g, &h, None).unwrap();
        let p = product(ProductKind::Corona, &g, &h).unwrap();
        let (value, _) = chi(ColoringMode::Injective, &p, None).unwrap();
        prop_assert!(result.value.contains(value));
    }
}

#[test]
fn sylvester_guarantee_exhaustive() {
    for r in 2..=12u64 {
        for s in r + 1..=12 {
            if gcd(r, s) != 1 {
                continue;
            }
            assert!(sylvester_guarantee(r, s).unwrap(), "({r}, {s})");
            for t in 0..=2 * r * s {
                let brute = (0..=t / r).any(|a| (t - a * r) % s == 0);
                let result = sylvester(r, s, t);
                assert_eq!(result.member, brute, "t = {t}, ({r}, {s})");
                if let Some((a, b)) = result.witness {
                    assert_eq!(a * r + b * s, t);
                }
                if t >= (r - 1) * (s - 1) {
                    assert!(result.member);
                }
            }
            assert!(!sylvester(r, s, r * s - r - s).member);
        }
    }
}
