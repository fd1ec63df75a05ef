mod common;

use common::graph;
use injcolor_core::graph::{combine, induced, isomorphic_small, path, CombineMode, Graph};
use injcolor_core::products::{decode, encode, product, ProductKind};
use proptest::prelude::*;

/// `(g, h) ↦ (h, g)` in row-major ids.
fn swap_coordinates(p: &Graph, g_order: usize, h_order: usize) -> Graph {
    let map = |id| {
        let (g, h) = decode(id, h_order);
        encode(h, g, g_order)
    };
    let edges: Vec<_> = p.edges().map(|(u, v)| (map(u), map(v))).collect();
    Graph::from_edges(p.n(), &edges).unwrap()
}

proptest! {
    #[test]
    fn degree_laws(g in graph(1, 6), h in graph(1, 6)) {
        let nh = h.n();
        let cart = product(ProductKind::Cartesian, &g, &h).unwrap();
        let direct = product(ProductKind::Direct, &g, &h).unwrap();
        let strong = product(ProductKind::Strong, &g, &h).unwrap();
        let lex = product(ProductKind::Lexicographic, &g, &h).unwrap();
        for a in 0..g.n() {
            for b in 0..nh {
                let (dg, dh) = (g.degree(a), h.degree(b));
                let id = encode(a, b, nh);
                prop_assert_eq!(cart.degree(id), dg + dh);
                prop_assert_eq!(direct.degree(id), dg * dh);
                prop_assert_eq!(strong.degree(id), dg * dh + dg + dh);
                prop_assert_eq!(lex.degree(id), nh * dg + dh);
            }
        }
    }

    #[test]
    fn strong_is_cartesian_plus_direct(g in graph(1, 6), h in graph(1, 6)) {
        let cart = product(ProductKind::Cartesian, &g, &h).unwrap();
        let direct = product(ProductKind::Direct, &g, &h).unwrap();
        prop_assert_eq!(
            product(ProductKind::Strong, &g, &h).unwrap(),
            combine(CombineMode::EdgeUnion, &cart, &direct).unwrap()
        );
    }

    #[test]
    fn standard_products_commute(g in graph(1, 6), h in graph(1, 6)) {
        for kind in [ProductKind::Cartesian, ProductKind::Direct, ProductKind::Strong] {
            let gh = product(kind, &g, &h).unwrap();
            let hg = product(kind, &h, &g).unwrap();
            prop_assert_eq!(swap_coordinates(&gh, g.n(), h.n()), hg);
        }
    }

    #[test]
    fn corona_contains_base(g in graph(1, 6), h in graph(0, 4)) {
        let c = product(ProductKind::Corona, &g, &h).unwrap();
        prop_assert_eq!(c.n(), g.n() * (1 + h.n()));
        let base: Vec<_> = (0..g.n()).collect();
        prop_assert_eq!(induced(&c, &base).unwrap(), g.clone());
        for i in 0..g.n() {
            let copy: Vec<_> = (0..h.n()).map(|j| g.n() + i * h.n() + j).collect();
            prop_assert_eq!(&induced(&c, &copy).unwrap(), &h);
            for &v in &copy {
                prop_assert!(c.has_edge(i, v));
            }
        }
    }
}

#[test]
fn lexicographic_is_not_commutative() {
    let (p3, k2) = (path(3), path(2));
    let a = product(ProductKind::Lexicographic, &p3, &Graph::empty(2)).unwrap();
    let b = product(ProductKind::Lexicographic, &Graph::empty(2), &p3).unwrap();
    assert!(!isomorphic_small(&a, &b).unwrap());
    let a = product(ProductKind::Lexicographic, &p3, &k2).unwrap();
    let b = product(ProductKind::Lexicographic, &k2, &p3).unwrap();
    assert_eq!(a.n(), b.n());
    assert_ne!(a.edge_count(), b.edge_count());
}
