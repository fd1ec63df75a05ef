//! The four standard graph products and the corona operation.
//!
//! Standard products use the row-major codec: vertex `(g, h)` has id
//! `g * |V(H)| + h`. The corona keeps `G` on ids `0..|V(G)|` and places the
//! copy `H_i` attached to vertex `i` on the contiguous block starting at
//! `|V(G)| + i * |V(H)|`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ProductKind {
    Cartesian,
    Direct,
    Strong,
    Lexicographic,
    /// A graph operation rather than a standard product; see the module docs
    /// for its vertex layout.
    Corona,
}

impl ProductKind {
    pub const ALL: [ProductKind; 5] = [
        ProductKind::Cartesian,
        ProductKind::Direct,
        ProductKind::Strong,
        ProductKind::Lexicographic,
        ProductKind::Corona,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ProductKind::Cartesian => "cartesian",
            ProductKind::Direct => "direct",
            ProductKind::Strong => "strong",
            ProductKind::Lexicographic => "lexicographic",
            ProductKind::Corona => "corona",
        }
    }
}

impl std::str::FromStr for ProductKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ProductKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown product kind {s:?}")))
    }
}

/// Row-major id of `(g, h)` in a standard product with second factor order `h_order`.
#[inline]
pub fn encode(g: usize, h: usize, h_order: usize) -> usize {
    g * h_order + h
}

/// Inverse of [`encode`].
#[inline]
pub fn decode(id: usize, h_order: usize) -> (usize, usize) {
    (id / h_order, id % h_order)
}

pub fn product(kind: ProductKind, g: &Graph, h: &Graph) -> Result<Graph> {
    if kind == ProductKind::Corona {
        return corona(g, h);
    }
    if g.is_empty() || h.is_empty() {
        return Err(Error::EmptyFactor);
    }
    let (ng, nh) = (g.n(), h.n());
    let total = ng
        .checked_mul(nh)
        .filter(|&t| t <= MAX_VERTICES)
        .ok_or(Error::TooLarge {
            what: "product order",
            limit: MAX_VERTICES,
            actual: ng.saturating_mul(nh),
        })?;
    let mut adj = vec![Vec::new(); total];
    for gu in 0..ng {
        for hu in 0..nh {
            let list = &mut adj[encode(gu, hu, nh)];
            let g_adjacent = g.neighbors(gu);
            let h_adjacent = h.neighbors(hu);
            let same_h = |list: &mut Vec<usize>| {
                list.extend(g_adjacent.iter().map(|&gv| encode(gv, hu, nh)))
            };
            let same_g = |list: &mut Vec<usize>| {
                list.extend(h_adjacent.iter().map(|&hv| encode(gu, hv, nh)))
            };
            let both = |list: &mut Vec<usize>| {
                for &gv in g_adjacent {
                    list.extend(h_adjacent.iter().map(|&hv| encode(gv, hv, nh)));
                }
            };
            match kind {
                ProductKind::Cartesian => {
                    same_h(list);
                    same_g(list);
                }
                ProductKind::Direct => both(list),
                ProductKind::Strong => {
                    same_h(list);
                    same_g(list);
                    both(list);
                }
                ProductKind::Lexicographic => {
                    for &gv in g_adjacent {
                        list.extend((0..nh).map(|hv| encode(gv, hv, nh)));
                    }
                    same_g(list);
                }
                ProductKind::Corona => unreachable!(),
            }
        }
    }
    Ok(Graph::from_adjacency_unchecked(adj))
}

fn corona(g: &Graph, h: &Graph) -> Result<Graph> {
    if g.is_empty() {
        return Err(Error::Precondition(
            "corona needs a base graph with at least one vertex".into(),
        ));
    }
    let (ng, nh) = (g.n(), h.n());
    let total = ng + ng * nh;
    if total > MAX_VERTICES {
        return Err(Error::TooLarge {
            what: "product order",
            limit: MAX_VERTICES,
            actual: total,
        });
    }
    let mut adj: Vec<Vec<usize>> = (0..ng).map(|v| g.neighbors(v).to_vec()).collect();
    adj.resize(total, Vec::new());
    for i in 0..ng {
        let base = ng + i * nh;
        for hv in 0..nh {
            let id = base + hv;
            adj[i].push(id);
            adj[id].push(i);
            adj[id].extend(h.neighbors(hv).iter().map(|&w| base + w));
        }
    }
    Ok(Graph::from_adjacency_unchecked(adj))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{combine, complete, cycle, induced, isomorphic_small, path, CombineMode};

    #[test]
    fn direct_k2_k2_is_two_edges() {
        let g = product(ProductKind::Direct, &complete(2), &complete(2)).unwrap();
        // (0,0)(1,1) = 0-3 and (0,1)(1,0) = 1-2
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 3), (1, 2)]);
    }

    #[test]
    fn strong_c3_c3_is_k9() {
        let g = product(ProductKind::Strong, &cycle(3), &cycle(3)).unwrap();
        assert_eq!(g.n(), 9);
        assert!((0..9).all(|v| g.degree(v) == 8));
    }

    #[test]
    fn lexicographic_p3_k2() {
        let g = product(ProductKind::Lexicographic, &path(3), &complete(2)).unwrap();
        assert_eq!(g.n(), 6);
        for h in 0..2 {
            let center = encode(1, h, 2);
            for outer in [0, 1, 4, 5] {
                assert!(g.has_edge(center, outer));
            }
        }
        assert!(!g.has_edge(0, 4));
        assert_eq!(g.edge_count(), 2 * 4 + 3);
    }

    #[test]
    fn corona_k3_k2() {
        let g = product(ProductKind::Corona, &complete(3), &complete(2)).unwrap();
        assert_eq!(g.n(), 9);
        assert_eq!(g.edge_count(), 12);
        // H_1 occupies ids 5 and 6.
        assert!(g.has_edge(1, 5) && g.has_edge(1, 6) && g.has_edge(5, 6));
        assert!(!g.has_edge(0, 5));
    }

    #[test]
    fn empty_factor_rejected() {
        assert_eq!(
            product(ProductKind::Strong, &Graph::empty(0), &cycle(3)),
            Err(Error::EmptyFactor)
        );
        assert!(product(ProductKind::Corona, &Graph::empty(0), &cycle(3)).is_err());
        assert_eq!(
            product(ProductKind::Corona, &cycle(3), &Graph::empty(0)).unwrap(),
            cycle(3)
        );
    }

    #[test]
    fn strong_is_union_of_cartesian_and_direct() {
        let (g, h) = (cycle(3), cycle(3));
        let union = combine(
            CombineMode::EdgeUnion,
            &product(ProductKind::Cartesian, &g, &h).unwrap(),
            &product(ProductKind::Direct, &g, &h).unwrap(),
        )
        .unwrap();
        assert_eq!(union, product(ProductKind::Strong, &g, &h).unwrap());
    }

    #[test]
    fn lexicographic_is_not_commutative() {
        let (g, h) = (path(3), complete(2));
        let gh = product(ProductKind::Lexicographic, &g, &h).unwrap();
        let hg = product(ProductKind::Lexicographic, &h, &g).unwrap();
        assert!(!isomorphic_small(&gh, &hg).unwrap());
    }

    #[test]
    fn corona_contains_base() {
        let g = path(4);
        let c = product(ProductKind::Corona, &g, &cycle(3)).unwrap();
        assert_eq!(induced(&c, &[0, 1, 2, 3]).unwrap(), g);
    }

    #[test]
    fn parse_kind() {
        assert_eq!(
            "strong".parse::<ProductKind>().unwrap(),
            ProductKind::Strong
        );
        assert!("tensor".parse::<ProductKind>().is_err());
    }
}
