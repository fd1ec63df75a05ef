use injcolor_core::coloring::{chi, is_valid, ColoringMode};
use injcolor_core::formulas::chi_i_direct_cycles;
use injcolor_core::graph::cycle;
use injcolor_core::patterns::direct_cycle_coloring;
use injcolor_core::products::{product, ProductKind};

#[test]
fn exact_solver_matches_formula_up_to_ten() {
    for m in 3..=10 {
        for n in 3..=10 {
            let g = product(ProductKind::Direct, &cycle(m), &cycle(n)).unwrap();
            let start = std::time::Instant::now();
            let (value, witness) = chi(ColoringMode::Injective, &g, None).unwrap();
            let expected = chi_i_direct_cycles(m, n).unwrap().value.exact().unwrap();
            assert_eq!(value, expected, "C{m} x C{n}");
            assert!(is_valid(ColoringMode::Injective, &g, &witness).unwrap());
            eprintln!("C{m} x C{n}: {value} in {:?}", start.elapsed());
        }
    }
}

#[test]
fn constructive_witnesses_up_to_fourteen() {
    for m in 3..=14 {
        for n in 3..=14 {
            let (g, c) = direct_cycle_coloring(m, n).unwrap();
            assert!(is_valid(ColoringMode::Injective, &g, &c).unwrap());
            let expected = chi_i_direct_cycles(m, n).unwrap().value.exact().unwrap();
            assert_eq!(c.color_count() as u32, expected, "C{m} x C{n}");
        }
    }
}
