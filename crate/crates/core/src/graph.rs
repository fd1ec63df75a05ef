//! Immutable simple undirected graphs on dense vertex ids `0..n`.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rng::SplitMix64;

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 1 << 16;

/// Largest order accepted by [`isomorphic_small`].
pub const ISOMORPHISM_LIMIT: usize = 10;

/// A finite simple undirected graph.
///
/// Vertices are `0..n`. Every neighbor list is strictly increasing, no vertex
/// lists itself, and `u` lists `v` exactly when `v` lists `u`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Self {
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from an edge list, rejecting self-loops, duplicate
    /// edges (in either orientation) and out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooLarge {
                what: "graph order",
                limit: MAX_VERTICES,
                actual: n,
            });
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                let v = w[0];
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
        }
        Ok(Self { adj })
    }

    /// Builds from raw adjacency lists, sorting and deduplicating them.
    /// Callers guarantee symmetry and the absence of self-loops.
    pub(crate) fn from_adjacency_unchecked(mut adj: Vec<Vec<usize>>) -> Self {
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        let g = Self { adj };
        debug_assert!(g.validate().is_ok(), "{:?}", g.validate());
        g
    }

    /// Re-checks every representation invariant.
    pub fn validate(&self) -> Result<()> {
        let n = self.n();
        for (u, list) in self.adj.iter().enumerate() {
            for w in list.windows(2) {
                if w[0] >= w[1] {
                    return Err(Error::DuplicateEdge(u.min(w[0]), u.max(w[0])));
                }
            }
            for &v in list {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                if v == u {
                    return Err(Error::SelfLoop(u));
                }
                if self.adj[v].binary_search(&u).is_err() {
                    return Err(Error::InvalidParameter(format!(
                        "asymmetric adjacency between {u} and {v}"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        (0..self.n()).filter(|&v| self.adj[v].is_empty()).collect()
    }

    /// Connected components, each sorted, listed by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            queue.push_back(start);
            let mut comp = Vec::new();
            while let Some(u) = queue.pop_front() {
                comp.push(u);
                for &v in &self.adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        queue.push_back(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }
}

/// A named graph family with its parameters.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum GraphFamily {
    Path {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    Complete {
        n: usize,
    },
    /// One center (vertex 0) joined to `n - 1` leaves.
    Star {
        n: usize,
    },
    Empty {
        n: usize,
    },
    /// Vertex `i >= 1` attaches to a uniform earlier vertex.
    RandomTree {
        n: usize,
        seed: u64,
    },
    /// Each pair `u < v`, in lexicographic order, is an edge when the next
    /// uniform draw is below `p`.
    RandomGnp {
        n: usize,
        p: f64,
        seed: u64,
    },
}

impl GraphFamily {
    pub fn order(&self) -> usize {
        match *self {
            GraphFamily::Path { n }
            | GraphFamily::Cycle { n }
            | GraphFamily::Complete { n }
            | GraphFamily::Star { n }
            | GraphFamily::Empty { n }
            | GraphFamily::RandomTree { n, .. }
            | GraphFamily::RandomGnp { n, .. } => n,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.order();
        if n > MAX_VERTICES {
            return Err(Error::TooLarge {
                what: "graph order",
                limit: MAX_VERTICES,
                actual: n,
            });
        }
        match *self {
            GraphFamily::Cycle { n } if n < 3 => Err(Error::InvalidParameter(format!(
                "a cycle needs at least 3 vertices, got {n}"
            ))),
            GraphFamily::Path { n }
            | GraphFamily::Complete { n }
            | GraphFamily::Star { n }
            | GraphFamily::RandomTree { n, .. }
                if n == 0 =>
            {
                Err(Error::InvalidParameter(
                    "family needs at least one vertex".into(),
                ))
            }
            GraphFamily::RandomGnp { p, .. } if !(0.0..=1.0).contains(&p) => Err(
                Error::InvalidParameter(format!("probability {p} is outside [0, 1]")),
            ),
            _ => Ok(()),
        }
    }
}

/// Instantiates a named family. Random families are deterministic per seed.
pub fn build_named(family: &GraphFamily) -> Result<Graph> {
    family.validate()?;
    let mut edges = Vec::new();
    let n = family.order();
    match *family {
        GraphFamily::Path { n } => edges.extend((1..n).map(|v| (v - 1, v))),
        GraphFamily::Cycle { n } => {
            edges.extend((1..n).map(|v| (v - 1, v)));
            edges.push((0, n - 1));
        }
        GraphFamily::Complete { n } => {
            for u in 0..n {
                edges.extend((u + 1..n).map(|v| (u, v)));
            }
        }
        GraphFamily::Star { n } => edges.extend((1..n).map(|v| (0, v))),
        GraphFamily::Empty { .. } => {}
        GraphFamily::RandomTree { n, seed } => {
            let mut rng = SplitMix64::new(seed);
            for v in 1..n {
                edges.push((rng.below(v as u64) as usize, v));
            }
        }
        GraphFamily::RandomGnp { n, p, seed } => {
            let mut rng = SplitMix64::new(seed);
            for u in 0..n {
                for v in u + 1..n {
                    if rng.next_f64() < p {
                        edges.push((u, v));
                    }
                }
            }
        }
    }
    Graph::from_edges(n, &edges)
}

pub fn path(n: usize) -> Graph {
    build_named(&GraphFamily::Path { n }).expect("path order")
}

/// The cycle `C_n`; panics when `n < 3`.
pub fn cycle(n: usize) -> Graph {
    build_named(&GraphFamily::Cycle { n }).expect("cycle order")
}

pub fn complete(n: usize) -> Graph {
    if n == 0 {
        return Graph::empty(0);
    }
    build_named(&GraphFamily::Complete { n }).expect("complete order")
}

pub fn star(n: usize) -> Graph {
    build_named(&GraphFamily::Star { n }).expect("star order")
}

/// `G⁻`: the graph with isolated vertices removed, relabeled in increasing
/// original order, plus the original ids of the removed vertices.
pub fn remove_isolated(g: &Graph) -> (Graph, Vec<usize>) {
    let removed = g.isolated_vertices();
    let kept: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) > 0).collect();
    let reduced = induced(g, &kept).expect("kept ids are in range");
    (reduced, removed)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CombineMode {
    /// `G + H`; the vertices of `H` are shifted by `|V(G)|`.
    DisjointUnion,
    /// `G ⊔ H` on a shared vertex set.
    EdgeUnion,
}

pub fn combine(mode: CombineMode, g: &Graph, h: &Graph) -> Result<Graph> {
    match mode {
        CombineMode::DisjointUnion => {
            let offset = g.n();
            let mut adj: Vec<Vec<usize>> = g.adj.clone();
            adj.extend(
                h.adj
                    .iter()
                    .map(|list| list.iter().map(|&v| v + offset).collect()),
            );
            if adj.len() > MAX_VERTICES {
                return Err(Error::TooLarge {
                    what: "graph order",
                    limit: MAX_VERTICES,
                    actual: adj.len(),
                });
            }
            Ok(Graph { adj })
        }
        CombineMode::EdgeUnion => {
            if g.n() != h.n() {
                return Err(Error::SizeMismatch {
                    left: g.n(),
                    right: h.n(),
                });
            }
            let adj = g
                .adj
                .iter()
                .zip(&h.adj)
                .map(|(a, b)| a.iter().chain(b).copied().collect())
                .collect();
            Ok(Graph::from_adjacency_unchecked(adj))
        }
    }
}

/// `G[S]`, relabeled in increasing original order. Duplicates in `subset`
/// are ignored.
pub fn induced(g: &Graph, subset: &[usize]) -> Result<Graph> {
    let mut members = subset.to_vec();
    members.sort_unstable();
    members.dedup();
    if let Some(&v) = members.iter().find(|&&v| v >= g.n()) {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            n: g.n(),
        });
    }
    let mut index = vec![usize::MAX; g.n()];
    for (i, &v) in members.iter().enumerate() {
        index[v] = i;
    }
    let adj = members
        .iter()
        .map(|&v| {
            g.neighbors(v)
                .iter()
                .filter_map(|&w| (index[w] != usize::MAX).then_some(index[w]))
                .collect()
        })
        .collect();
    Ok(Graph { adj })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphStats {
    pub max_degree: usize,
    pub min_degree: usize,
    pub components: Vec<Vec<usize>>,
}

impl GraphStats {
    pub fn component_count(&self) -> usize {
        self.components.len()
    }
}

pub fn stats(g: &Graph) -> GraphStats {
    GraphStats {
        max_degree: g.max_degree(),
        min_degree: g.min_degree(),
        components: g.components(),
    }
}

/// Exact isomorphism test by backtracking, for graphs of at most
/// [`ISOMORPHISM_LIMIT`] vertices.
pub fn isomorphic_small(g: &Graph, h: &Graph) -> Result<bool> {
    let n = g.n().max(h.n());
    if n > ISOMORPHISM_LIMIT {
        return Err(Error::TooLarge {
            what: "isomorphism test",
            limit: ISOMORPHISM_LIMIT,
            actual: n,
        });
    }
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return Ok(false);
    }
    let degrees = |x: &Graph| {
        let mut d: Vec<usize> = (0..x.n()).map(|v| x.degree(v)).collect();
        d.sort_unstable();
        d
    };
    if degrees(g) != degrees(h) {
        return Ok(false);
    }
    let mut map = vec![usize::MAX; g.n()];
    let mut used = vec![false; h.n()];
    Ok(extend_isomorphism(g, h, 0, &mut map, &mut used))
}

fn extend_isomorphism(
    g: &Graph,
    h: &Graph,
    v: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if v == g.n() {
        return true;
    }
    for w in 0..h.n() {
        if used[w] || h.degree(w) != g.degree(v) {
            continue;
        }
        let consistent = (0..v).all(|u| g.has_edge(u, v) == h.has_edge(map[u], w));
        if !consistent {
            continue;
        }
        map[v] = w;
        used[w] = true;
        if extend_isomorphism(g, h, v + 1, map, used) {
            return true;
        }
        used[w] = false;
    }
    map[v] = usize::MAX;
    false
}
