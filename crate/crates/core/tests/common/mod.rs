#![allow(dead_code)]

use injcolor_core::graph::Graph;
use proptest::prelude::*;

/// Graphs on `min_n..=max_n` vertices with independently chosen edges.
pub fn graph(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(
            move |bits| {
                let mut edges = Vec::new();
                let mut it = bits.into_iter();
                for u in 0..n {
                    for v in u + 1..n {
                        if it.next().unwrap() {
                            edges.push((u, v));
                        }
                    }
                }
                Graph::from_edges(n, &edges).unwrap()
            },
        )
    })
}

pub fn graph_without_isolated(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    graph(min_n, max_n).prop_filter("no isolated vertices", |g| g.isolated_vertices().is_empty())
}

pub fn connected_graph(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    graph(min_n, max_n).prop_filter("connected", |g| g.is_connected())
}

/// Applies a vertex permutation.
pub fn relabel(g: &Graph, perm: &[usize]) -> Graph {
    let edges: Vec<_> = g.edges().map(|(u, v)| (perm[u], perm[v])).collect();
    Graph::from_edges(g.n(), &edges).unwrap()
}

/// Smallest `k` admitting a proper `k`-coloring, by plain backtracking in
/// vertex order with no heuristics.
pub fn brute_force_chromatic(g: &Graph) -> u32 {
    fn extend(g: &Graph, v: usize, k: u32, color: &mut Vec<u32>) -> bool {
        if v == g.n() {
            return true;
        }
        for c in 1..=k {
            if g.neighbors(v).iter().all(|&w| w > v || color[w] != c) {
                color[v] = c;
                if extend(g, v + 1, k, color) {
                    return true;
                }
            }
        }
        color[v] = 0;
        false
    }
    (0..=g.n() as u32)
        .find(|&k| extend(g, 0, k, &mut vec![0; g.n()]))
        .unwrap()
}
