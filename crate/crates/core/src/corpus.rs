//! Deterministic graph corpora for property checks and the acceptance suite.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::graph::{build_named, Graph, GraphFamily};
use crate::rng::SplitMix64;

/// Largest order handled by [`nonisomorphic_graphs`].
pub const ENUMERATION_LIMIT: usize = 6;

/// `count` random `G(n, p)` families with `n` uniform in `1..=max_n` and
/// `p` uniform in `[0.15, 0.85)`.
pub fn random_families(seed: u64, count: usize, max_n: usize) -> Vec<GraphFamily> {
    let mut rng = SplitMix64::new(seed);
    (0..count)
        .map(|_| {
            let n = rng.range_inclusive(1, max_n.max(1) as u64) as usize;
            let p = 0.15 + 0.7 * rng.next_f64();
            GraphFamily::RandomGnp {
                n,
                p,
                seed: rng.next_u64(),
            }
        })
        .collect()
}

pub fn random_graphs(seed: u64, count: usize, max_n: usize) -> Vec<Graph> {
    random_families(seed, count, max_n)
        .iter()
        .map(|f| build_named(f).expect("corpus family is valid"))
        .collect()
}

/// `count` random trees with orders uniform in `min_n..=max_n`.
pub fn random_trees(seed: u64, count: usize, min_n: usize, max_n: usize) -> Vec<Graph> {
    let mut rng = SplitMix64::new(seed);
    (0..count)
        .map(|_| {
            let n = rng.range_inclusive(min_n.max(1) as u64, max_n.max(min_n) as u64) as usize;
            build_named(&GraphFamily::RandomTree {
                n,
                seed: rng.next_u64(),
            })
            .expect("tree order")
        })
        .collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// One representative per isomorphism class of graphs on `n` vertices,
/// each labeled by its smallest edge mask, in increasing mask order.
fn all_classes(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mut bit = vec![vec![0usize; n]; n];
    for (i, &(u, v)) in pairs.iter().enumerate() {
        bit[u][v] = i;
        bit[v][u] = i;
    }
    let perms = permutations(n);
    let mut canon = BTreeSet::new();
    for mask in 0u32..1 << pairs.len() {
        let best = perms
            .iter()
            .map(|p| {
                pairs
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| mask >> i & 1 == 1)
                    .fold(0u32, |m, (_, &(u, v))| m | 1 << bit[p[u]][p[v]])
            })
            .min()
            .unwrap_or(0);
        canon.insert(best);
    }
    canon
        .into_iter()
        .map(|mask| {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            Graph::from_edges(n, &edges).expect("enumerated edges are valid")
        })
        .collect()
}

/// All graphs on `n <= 6` vertices up to isomorphism.
pub fn nonisomorphic_graphs(n: usize) -> Result<&'static [Graph]> {
    static CLASSES: OnceLock<Vec<Vec<Graph>>> = OnceLock::new();
    if n > ENUMERATION_LIMIT {
        return Err(Error::TooLarge {
            what: "graph enumeration",
            limit: ENUMERATION_LIMIT,
            actual: n,
        });
    }
    let all = CLASSES.get_or_init(|| (0..=ENUMERATION_LIMIT).map(all_classes).collect());
    Ok(&all[n])
}

/// Connected graphs on `min_n..=max_n` vertices up to isomorphism.
pub fn connected_graphs(min_n: usize, max_n: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in min_n..=max_n {
        out.extend(
            nonisomorphic_graphs(n)?
                .iter()
                .filter(|g| g.is_connected())
                .cloned(),
        );
    }
    Ok(out)
}

/// Graphs without isolated vertices on `min_n..=max_n` vertices, up to isomorphism.
pub fn graphs_without_isolated(min_n: usize, max_n: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in min_n.max(1)..=max_n {
        out.extend(
            nonisomorphic_graphs(n)?
                .iter()
                .filter(|g| g.isolated_vertices().is_empty())
                .cloned(),
        );
    }
    Ok(out)
}

/// `count` distinct index pairs from `0..a × 0..b`, in increasing order,
/// or all pairs when there are at most `count`.
pub fn sample_pairs(a: usize, b: usize, count: usize, seed: u64) -> Vec<(usize, usize)> {
    let total = a * b;
    let mut ids: Vec<usize> = (0..total).collect();
    if total > count {
        let mut rng = SplitMix64::new(seed);
        for i in 0..count {
            let j = i + rng.below((total - i) as u64) as usize;
            ids.swap(i, j);
        }
        ids.truncate(count);
        ids.sort_unstable();
    }
    ids.into_iter().map(|id| (id / b, id % b)).collect()
}
