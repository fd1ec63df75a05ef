//! Neighborhood-derived graphs on the same vertex set as their source.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{remove_isolated, Graph};
use crate::products::{encode, product, ProductKind};

/// Largest `|V(G)| * |V(H)|` accepted by [`check_two_step_factorization`].
pub const FACTORIZATION_LIMIT: usize = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TransformMode {
    /// `u ~ v` iff `N(u) ∩ N(v) ≠ ∅`.
    TwoStep,
    /// `u ~ v` iff `N[u] ∩ N[v] ≠ ∅`.
    ClosedNeighborhood,
    /// `u ~ v` iff `1 <= dist(u, v) <= 2`.
    Square,
}

impl std::str::FromStr for TransformMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "two-step" => Ok(TransformMode::TwoStep),
            "closed-neighborhood" => Ok(TransformMode::ClosedNeighborhood),
            "square" => Ok(TransformMode::Square),
            _ => Err(Error::InvalidParameter(format!("unknown transform {s:?}"))),
        }
    }
}

pub fn neighborhood_graph(mode: TransformMode, g: &Graph) -> Graph {
    match mode {
        TransformMode::TwoStep => two_step(g),
        TransformMode::ClosedNeighborhood => closed_neighborhood(g),
        TransformMode::Square => square(g),
    }
}

/// `N(G)`: every vertex makes a clique of its open neighborhood.
pub fn two_step(g: &Graph) -> Graph {
    let mut adj = vec![Vec::new(); g.n()];
    for w in 0..g.n() {
        let nbrs = g.neighbors(w);
        for &u in nbrs {
            adj[u].extend(nbrs.iter().filter(|&&v| v != u));
        }
    }
    Graph::from_adjacency_unchecked(adj)
}

/// `N_c(G)`: every vertex makes a clique of its closed neighborhood.
pub fn closed_neighborhood(g: &Graph) -> Graph {
    let mut adj = vec![Vec::new(); g.n()];
    for w in 0..g.n() {
        let closed: Vec<usize> = std::iter::once(w)
            .chain(g.neighbors(w).iter().copied())
            .collect();
        for &u in &closed {
            adj[u].extend(closed.iter().filter(|&&v| v != u));
        }
    }
    Graph::from_adjacency_unchecked(adj)
}

/// `G²` by a two-hop search from every vertex.
pub fn square(g: &Graph) -> Graph {
    let n = g.n();
    let mut mark = vec![usize::MAX; n];
    let mut adj = Vec::with_capacity(n);
    for s in 0..n {
        mark[s] = s;
        let mut reach = Vec::new();
        for &u in g.neighbors(s) {
            if mark[u] != s {
                mark[u] = s;
                reach.push(u);
            }
            for &v in g.neighbors(u) {
                if mark[v] != s {
                    mark[v] = s;
                    reach.push(v);
                }
            }
        }
        adj.push(reach);
    }
    Graph::from_adjacency_unchecked(adj)
}

/// Outcome of comparing `N(G × H)` against `N(G⁻) ⊠ N(H⁻)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Factorization {
    pub holds: bool,
    /// Isolated vertices of `N(G × H)`.
    pub isolated_count: usize,
}

/// Checks that `N(G × H)` and `N(G⁻) ⊠ N(H⁻)`, embedded back into the ids of
/// `G × H` through the identity map on surviving pairs, have the same edges.
pub fn check_two_step_factorization(g: &Graph, h: &Graph) -> Result<Factorization> {
    let size = g.n().saturating_mul(h.n());
    if size > FACTORIZATION_LIMIT {
        return Err(Error::TooLarge {
            what: "two-step factorization",
            limit: FACTORIZATION_LIMIT,
            actual: size,
        });
    }
    if g.is_empty() || h.is_empty() {
        return Ok(Factorization {
            holds: true,
            isolated_count: 0,
        });
    }
    let left = two_step(&product(ProductKind::Direct, g, h)?);
    let isolated_count = left.isolated_vertices().len();

    let (g_reduced, _) = remove_isolated(g);
    let (h_reduced, _) = remove_isolated(h);
    let g_kept: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) > 0).collect();
    let h_kept: Vec<usize> = (0..h.n()).filter(|&v| h.degree(v) > 0).collect();

    let mut right_edges: Vec<(usize, usize)> = Vec::new();
    if !g_reduced.is_empty() && !h_reduced.is_empty() {
        let right = product(
            ProductKind::Strong,
            &two_step(&g_reduced),
            &two_step(&h_reduced),
        )?;
        let nh = h_reduced.n();
        let lift = |id: usize| encode(g_kept[id / nh], h_kept[id % nh], h.n());
        right_edges = right
            .edges()
            .map(|(a, b)| {
                let (x, y) = (lift(a), lift(b));
                (x.min(y), x.max(y))
            })
            .collect();
        right_edges.sort_unstable();
    }
    let left_edges: Vec<(usize, usize)> = left.edges().collect();
    Ok(Factorization {
        holds: left_edges == right_edges,
        isolated_count,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{combine, complete, cycle, isomorphic_small, CombineMode, Graph};

    #[test]
    fn two_step_c4() {
        let t = two_step(&cycle(4));
        assert_eq!(t.edges().collect::<Vec<_>>(), vec![(0, 2), (1, 3)]);
    }

    #[test]
    fn two_step_odd_cycle_is_a_cycle() {
        assert!(isomorphic_small(&two_step(&cycle(7)), &cycle(7)).unwrap());
        assert!(isomorphic_small(&two_step(&cycle(5)), &cycle(5)).unwrap());
    }

    #[test]
    fn two_step_k2_is_edgeless() {
        assert_eq!(two_step(&complete(2)), Graph::empty(2));
    }

    #[test]
    fn two_step_c8_is_two_c4() {
        let c4 = cycle(4);
        let two_c4 = combine(CombineMode::DisjointUnion, &c4, &c4).unwrap();
        assert!(isomorphic_small(&two_step(&cycle(8)), &two_c4).unwrap());
        let comps = two_step(&cycle(8)).components();
        assert_eq!(comps, vec![vec![0, 2, 4, 6], vec![1, 3, 5, 7]]);
    }

    #[test]
    fn closed_neighborhood_equals_square() {
        let g = Graph::from_edges(7, &[(0, 1), (1, 2), (2, 3), (1, 4)]).unwrap();
        assert_eq!(closed_neighborhood(&g), square(&g));
    }

    #[test]
    fn factorization_examples() {
        let f = check_two_step_factorization(&cycle(5), &cycle(5)).unwrap();
        assert_eq!(
            f,
            Factorization {
                holds: true,
                isolated_count: 0
            }
        );

        let f = check_two_step_factorization(&complete(2), &cycle(3)).unwrap();
        assert_eq!(
            f,
            Factorization {
                holds: true,
                isolated_count: 0
            }
        );
        let c3 = cycle(3);
        let two_c3 = combine(CombineMode::DisjointUnion, &c3, &c3).unwrap();
        let left = two_step(&product(ProductKind::Direct, &complete(2), &c3).unwrap());
        assert!(isomorphic_small(&left, &two_c3).unwrap());

        let f = check_two_step_factorization(&complete(1), &cycle(4)).unwrap();
        assert!(f.holds);
        assert_eq!(f.isolated_count, 4);
    }

    #[test]
    fn factorization_with_isolated_vertices() {
        let g = Graph::from_edges(4, &[(0, 2), (2, 3)]).unwrap();
        let h = Graph::from_edges(3, &[(1, 2)]).unwrap();
        let f = check_two_step_factorization(&g, &h).unwrap();
        assert!(f.holds);
        assert!(f.isolated_count > 0);
    }

    #[test]
    fn factorization_guard() {
        assert!(matches!(
            check_two_step_factorization(&cycle(101), &cycle(100)),
            Err(Error::TooLarge { .. })
        ));
    }
}
