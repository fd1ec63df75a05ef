//! Coloring verification in three modes and an exact chromatic number
//! solver (DSATUR branch and bound seeded with a maximum clique).
//!
//! The injective and 2-distance chromatic numbers are obtained by solving
//! the ordinary chromatic number of the two-step graph and of the square,
//! respectively.

use std::cmp::Reverse;
use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::bitset::Bitset;
use crate::error::{Error, Result};
use crate::graph::{induced, Graph};
use crate::rng::SplitMix64;
use crate::transforms::{square, two_step};

/// Per-instance budget used by the command line front end.
pub const DEFAULT_BUDGET: Duration = Duration::from_secs(60);

/// Exact maximum clique is used up to this order; a greedy clique above it.
pub const EXACT_CLIQUE_LIMIT: usize = 200;

/// Search nodes allowed for the `⌈n / α⌉` lower bound of one component.
pub const FRACTIONAL_BOUND_NODES: u64 = 1 << 20;

/// Tabu search moves tried per color count before the exact search.
pub const TABU_ITERATIONS: u64 = 200_000;

/// Components up to this order get the fractional lower bound.
pub const FRACTIONAL_ORDER_LIMIT: usize = 64;

/// Maximal independent sets enumerated for the fractional bound.
pub const FRACTIONAL_SET_LIMIT: usize = 5_000;

/// `Bounds::independence` is only computed up to this order.
pub const INDEPENDENCE_LIMIT: usize = 20;

/// A total vertex coloring with 1-based colors.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawColoring")]
pub struct Coloring {
    colors: Vec<u32>,
}

#[derive(Deserialize)]
struct RawColoring {
    colors: Vec<u32>,
}

impl TryFrom<RawColoring> for Coloring {
    type Error = Error;

    fn try_from(raw: RawColoring) -> Result<Self> {
        Coloring::new(raw.colors)
    }
}

impl Coloring {
    pub fn new(colors: Vec<u32>) -> Result<Self> {
        if let Some(v) = colors.iter().position(|&c| c == 0) {
            return Err(Error::InvalidParameter(format!(
                "vertex {v} has color 0; colors are 1-based"
            )));
        }
        Ok(Self { colors })
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn color(&self, v: usize) -> u32 {
        self.colors[v]
    }

    /// Number of distinct colors in use.
    pub fn color_count(&self) -> usize {
        self.colors.iter().collect::<BTreeSet<_>>().len()
    }

    /// Color classes in increasing color order.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let distinct: Vec<u32> = self
            .colors
            .iter()
            .copied()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let mut classes = vec![Vec::new(); distinct.len()];
        for (v, c) in self.colors.iter().enumerate() {
            let i = distinct.binary_search(c).expect("color present");
            classes[i].push(v);
        }
        classes
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ColoringMode {
    Proper,
    Injective,
    TwoDistance,
}

impl ColoringMode {
    pub fn name(self) -> &'static str {
        match self {
            ColoringMode::Proper => "proper",
            ColoringMode::Injective => "injective",
            ColoringMode::TwoDistance => "two-distance",
        }
    }
}

impl std::str::FromStr for ColoringMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "proper" => Ok(ColoringMode::Proper),
            "injective" => Ok(ColoringMode::Injective),
            "two-distance" => Ok(ColoringMode::TwoDistance),
            _ => Err(Error::InvalidParameter(format!(
                "unknown coloring mode {s:?}"
            ))),
        }
    }
}

/// First witness of an invalid coloring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Violation {
    /// Adjacent vertices share a color.
    MonochromaticEdge { u: usize, v: usize },
    /// `center` sees color repeated on its neighbors `u < w`.
    RepeatedAroundVertex { center: usize, u: usize, w: usize },
    /// Vertices at distance at most two share a color.
    CloseSameColor { u: usize, v: usize },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            Violation::MonochromaticEdge { u, v } => {
                write!(f, "adjacent vertices {u} and {v} share a color")
            }
            Violation::RepeatedAroundVertex { center, u, w } => {
                write!(
                    f,
                    "vertex {center} has neighbors {u} and {w} of the same color"
                )
            }
            Violation::CloseSameColor { u, v } => {
                write!(
                    f,
                    "vertices {u} and {v} are within distance two and share a color"
                )
            }
        }
    }
}

/// Checks `c` against `g` in the given mode; `Ok(None)` means valid.
///
/// Violations are reported in lexicographic order: by edge for proper
/// colorings, by `(center, u, w)` for injective ones and by `(u, v)` for
/// 2-distance colorings.
pub fn verify(mode: ColoringMode, g: &Graph, c: &Coloring) -> Result<Option<Violation>> {
    if c.len() != g.n() {
        return Err(Error::LengthMismatch {
            expected: g.n(),
            actual: c.len(),
        });
    }
    let col = c.colors();
    let found = match mode {
        ColoringMode::Proper => g
            .edges()
            .find(|&(u, v)| col[u] == col[v])
            .map(|(u, v)| Violation::MonochromaticEdge { u, v }),
        ColoringMode::Injective => (0..g.n()).find_map(|center| {
            let nbrs = g.neighbors(center);
            nbrs.iter().enumerate().find_map(|(i, &u)| {
                nbrs[i + 1..]
                    .iter()
                    .find(|&&w| col[w] == col[u])
                    .map(|&w| Violation::RepeatedAroundVertex { center, u, w })
            })
        }),
        ColoringMode::TwoDistance => (0..g.n()).find_map(|u| {
            let mut near = BTreeSet::new();
            for &x in g.neighbors(u) {
                near.insert(x);
                near.extend(g.neighbors(x).iter().copied());
            }
            near.range(u + 1..)
                .find(|&&v| col[v] == col[u])
                .map(|&v| Violation::CloseSameColor { u, v })
        }),
    };
    Ok(found)
}

pub fn is_valid(mode: ColoringMode, g: &Graph, c: &Coloring) -> Result<bool> {
    Ok(verify(mode, g, c)?.is_none())
}

/// Standard chromatic bounds of a graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Bounds {
    /// Clique number (exact up to [`EXACT_CLIQUE_LIMIT`] vertices).
    pub clique_lower: u32,
    /// Colors used by one DSATUR pass.
    pub greedy_upper: u32,
    /// Independence number, for graphs of at most [`INDEPENDENCE_LIMIT`] vertices.
    pub independence: Option<u32>,
}

pub fn bounds(g: &Graph) -> Bounds {
    let clique = if g.n() <= EXACT_CLIQUE_LIMIT {
        max_clique(g)
    } else {
        greedy_clique(g)
    };
    let greedy = dsatur_greedy(g);
    Bounds {
        clique_lower: clique.len() as u32,
        greedy_upper: greedy.iter().copied().max().unwrap_or(0),
        independence: (g.n() <= INDEPENDENCE_LIMIT).then(|| independence_number(g)),
    }
}

/// A maximum clique, by branch and bound with greedy-coloring bounds.
/// Ties resolve deterministically.
pub fn max_clique(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let rows: Vec<Bitset> = (0..n)
        .map(|v| {
            let mut row = Bitset::new(n);
            for &w in g.neighbors(v) {
                row.insert(w);
            }
            row
        })
        .collect();
    let search = run_clique_search(&rows, None);
    let mut best = search.best;
    best.sort_unstable();
    best
}

/// Maximum independent set size, via a maximum clique of the complement.
pub fn independence_number(g: &Graph) -> u32 {
    capped_independence(g, None).expect("uncapped search completes")
}

/// [`independence_number`] with a cap on search nodes; `None` once it is hit.
fn capped_independence(g: &Graph, node_limit: Option<u64>) -> Option<u32> {
    let n = g.n();
    let rows: Vec<Bitset> = (0..n)
        .map(|v| {
            let mut row = Bitset::new(n);
            for w in (0..n).filter(|&w| w != v && !g.has_edge(v, w)) {
                row.insert(w);
            }
            row
        })
        .collect();
    let search = run_clique_search(&rows, node_limit);
    (!search.aborted).then_some(search.best.len() as u32)
}

fn run_clique_search(rows: &[Bitset], node_limit: Option<u64>) -> CliqueSearch<'_> {
    let n = rows.len();
    let mut all = Bitset::new(n);
    for v in 0..n {
        all.insert(v);
    }
    let mut search = CliqueSearch {
        rows,
        best: Vec::new(),
        nodes: 0,
        node_limit,
        aborted: false,
    };
    if n > 0 {
        search.expand(&mut Vec::new(), all);
    }
    search
}

struct CliqueSearch<'a> {
    rows: &'a [Bitset],
    best: Vec<usize>,
    nodes: u64,
    node_limit: Option<u64>,
    aborted: bool,
}

impl CliqueSearch<'_> {
    fn expand(&mut self, current: &mut Vec<usize>, mut candidates: Bitset) {
        self.nodes += 1;
        if self.node_limit.is_some_and(|limit| self.nodes > limit) {
            self.aborted = true;
        }
        let (order, bound) = self.color_sort(&candidates);
        for i in (0..order.len()).rev() {
            if self.aborted || current.len() + bound[i] <= self.best.len() {
                return;
            }
            let v = order[i];
            current.push(v);
            let next = candidates.intersect(&self.rows[v]);
            if next.is_empty() {
                if current.len() > self.best.len() {
                    self.best = current.clone();
                }
            } else {
                self.expand(current, next);
            }
            current.pop();
            candidates.remove(v);
        }
    }

    /// Greedy coloring of the candidates; `bound[i]` is the color of
    /// `order[i]`, nondecreasing along `order`.
    fn color_sort(&self, candidates: &Bitset) -> (Vec<usize>, Vec<usize>) {
        let mut order = Vec::new();
        let mut bound = Vec::new();
        let mut uncolored = candidates.clone();
        let mut color = 0;
        while !uncolored.is_empty() {
            color += 1;
            let mut open = uncolored.clone();
            while let Some(v) = open.first() {
                open.remove(v);
                open.subtract_in_place(&self.rows[v]);
                uncolored.remove(v);
                order.push(v);
                bound.push(color);
            }
        }
        (order, bound)
    }
}

fn greedy_clique(g: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (Reverse(g.degree(v)), v));
    let mut clique: Vec<usize> = Vec::new();
    for v in order {
        if clique.iter().all(|&u| g.has_edge(u, v)) {
            clique.push(v);
        }
    }
    clique.sort_unstable();
    clique
}

/// One DSATUR pass: saturation desc, degree desc, id asc; lowest feasible
/// color. Returns 1-based colors.
pub fn dsatur_greedy(g: &Graph) -> Vec<u32> {
    let n = g.n();
    let mut color = vec![0u32; n];
    let mut seen: Vec<BTreeSet<u32>> = vec![BTreeSet::new(); n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| color[v] == 0)
            .max_by_key(|&v| (seen[v].len(), g.degree(v), Reverse(v)))
            .expect("an uncolored vertex remains");
        let c = (1..)
            .find(|c| !seen[v].contains(c))
            .expect("some color is free");
        color[v] = c;
        for &w in g.neighbors(v) {
            seen[w].insert(c);
        }
    }
    color
}

/// Exact chromatic number with a proper-coloring witness.
///
/// Isolated vertices get color 1 up front; every other component is solved
/// separately and the colors are reused across components. A component
/// whose lower bound (the largest of its clique number, `⌈n / α⌉` and
/// `⌈χ_f⌉`) and upper bound (DSATUR, then tabu search) differ is settled by
/// iterative deepening over `k` with a DSATUR decision search. `budget` caps the
/// wall-clock time of the whole call.
pub fn exact_chromatic(g: &Graph, budget: Option<Duration>) -> Result<(u32, Coloring)> {
    let deadline = budget.map(|b| Instant::now() + b);
    let n = g.n();
    let mut colors = vec![1u32; n];
    if n == 0 {
        return Ok((0, Coloring { colors }));
    }
    let components: Vec<Vec<usize>> = g.components().into_iter().filter(|c| c.len() > 1).collect();
    let subgraphs: Vec<Graph> = components
        .iter()
        .map(|c| induced(g, c).expect("component ids are in range"))
        .collect();
    let seeds: Vec<(Vec<usize>, Vec<u32>)> = subgraphs
        .iter()
        .map(|sub| {
            let clique = if sub.n() <= EXACT_CLIQUE_LIMIT {
                max_clique(sub)
            } else {
                greedy_clique(sub)
            };
            (clique, dsatur_greedy(sub))
        })
        .collect();
    let global_lower = seeds.iter().map(|(q, _)| q.len() as u32).max().unwrap_or(1);
    let global_upper = seeds
        .iter()
        .map(|(_, c)| c.iter().copied().max().unwrap_or(1))
        .max()
        .unwrap_or(1);

    let mut chi = 1u32;
    for ((members, sub), (clique, greedy)) in components.iter().zip(&subgraphs).zip(seeds) {
        let mut lower = clique.len() as u32;
        let upper = greedy.iter().copied().max().unwrap_or(1);
        if lower < upper && sub.n() <= EXACT_CLIQUE_LIMIT {
            if let Some(alpha) = capped_independence(sub, Some(FRACTIONAL_BOUND_NODES)) {
                lower = lower.max((sub.n() as u32).div_ceil(alpha));
            }
        }
        let mut local = greedy;
        let mut local_chi = upper;
        while local_chi > lower {
            match tabu_coloring(sub, local_chi - 1, TABU_ITERATIONS, deadline) {
                Ok(Some(found)) => {
                    local = found;
                    local_chi -= 1;
                }
                Ok(None) => break,
                Err(()) => {
                    return Err(Error::BudgetExhausted {
                        lower: global_lower.max(chi).max(lower),
                        upper: global_upper.max(chi),
                    })
                }
            }
        }
        if lower < local_chi {
            if let Some(f) = fractional_chromatic_lower(sub) {
                // The LP is solved in floating point; the tolerance only
                // guards values that are integral up to rounding.
                lower = lower.max((f - 1e-6).ceil() as u32);
            }
        }
        for k in lower..local_chi {
            let mut search = KColoring::new(sub, k, deadline);
            match search.solve(&clique) {
                Ok(true) => {
                    local = search.color;
                    local_chi = k;
                    break;
                }
                Ok(false) => {}
                Err(()) => {
                    return Err(Error::BudgetExhausted {
                        lower: global_lower.max(chi).max(k),
                        upper: global_upper.max(chi),
                    })
                }
            }
        }
        chi = chi.max(local_chi);
        for (i, &v) in members.iter().enumerate() {
            colors[v] = local[i];
        }
    }
    Ok((chi, Coloring { colors }))
}

/// A certified lower bound on the fractional chromatic number `χ_f(g)`.
///
/// Solves `max Σ y_v` subject to `y(I) <= 1` for every maximal independent
/// set `I`, then divides by the largest `y(I)` actually attained so that
/// rounding in the LP cannot overstate the bound. `None` when `g` exceeds
/// [`FRACTIONAL_ORDER_LIMIT`], has more than [`FRACTIONAL_SET_LIMIT`]
/// maximal independent sets, or the LP fails.
pub fn fractional_chromatic_lower(g: &Graph) -> Option<f64> {
    let n = g.n();
    if n > FRACTIONAL_ORDER_LIMIT {
        return None;
    }
    if n == 0 {
        return Some(0.0);
    }
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let adj: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w))
        .collect();
    let free: Vec<u64> = (0..n).map(|v| full & !adj[v] & !(1 << v)).collect();
    let sets = maximal_independent_sets(&free, full, FRACTIONAL_SET_LIMIT)?;

    let mut lp = microlp::Problem::new(microlp::OptimizationDirection::Maximize);
    let y: Vec<_> = (0..n).map(|_| lp.add_var(1.0, (0.0, 1.0))).collect();
    for &set in &sets {
        let terms: Vec<_> = (0..n)
            .filter(|&v| set >> v & 1 == 1)
            .map(|v| (y[v], 1.0))
            .collect();
        lp.add_constraint(terms.as_slice(), microlp::ComparisonOp::Le, 1.0);
    }
    let solution = lp.solve().ok()?;
    let weights: Vec<f64> = y.iter().map(|&v| solution[v].max(0.0)).collect();
    let heaviest = sets
        .iter()
        .map(|&set| {
            (0..n)
                .filter(|&v| set >> v & 1 == 1)
                .map(|v| weights[v])
                .sum::<f64>()
        })
        .fold(1.0f64, f64::max);
    Some(weights.iter().sum::<f64>() / heaviest)
}

/// Bron–Kerbosch with pivoting over the "non-adjacent" relation `free`;
/// `None` once more than `limit` sets are found.
fn maximal_independent_sets(free: &[u64], full: u64, limit: usize) -> Option<Vec<u64>> {
    fn go(free: &[u64], r: u64, mut p: u64, mut x: u64, out: &mut Vec<u64>, limit: usize) -> bool {
        if p == 0 && x == 0 {
            out.push(r);
            return out.len() <= limit;
        }
        let pivot = (0..free.len())
            .filter(|&u| (p | x) >> u & 1 == 1)
            .max_by_key(|&u| (p & free[u]).count_ones())
            .expect("p or x is nonempty");
        let mut branch = p & !free[pivot];
        while branch != 0 {
            let v = branch.trailing_zeros() as usize;
            branch &= branch - 1;
            if !go(free, r | 1 << v, p & free[v], x & free[v], out, limit) {
                return false;
            }
            p &= !(1 << v);
            x |= 1 << v;
        }
        true
    }
    let mut out = Vec::new();
    go(free, 0, full, 0, &mut out, limit).then_some(out)
}

/// Tabucol: local search over complete `k`-colorings minimizing the number
/// of monochromatic edges. Seeded, so repeated calls agree. `Err(())` when
/// the deadline passes.
fn tabu_coloring(
    g: &Graph,
    k: u32,
    iterations: u64,
    deadline: Option<Instant>,
) -> std::result::Result<Option<Vec<u32>>, ()> {
    let n = g.n();
    let k = k as usize;
    if k == 0 {
        return Ok(None);
    }
    let mut rng = SplitMix64::new(0x7AB0 ^ (n as u64) << 8 ^ k as u64);
    let mut color: Vec<usize> = dsatur_greedy(g)
        .into_iter()
        .map(|c| {
            if (c as usize) <= k {
                c as usize - 1
            } else {
                rng.below(k as u64) as usize
            }
        })
        .collect();
    // gamma[v * k + c]: neighbors of v with color c.
    let mut gamma = vec![0u32; n * k];
    for v in 0..n {
        for &w in g.neighbors(v) {
            gamma[v * k + color[w]] += 1;
        }
    }
    let mut conflicts: u64 = g.edges().filter(|&(u, v)| color[u] == color[v]).count() as u64;
    let mut best = conflicts;
    let mut tabu_until = vec![0u64; n * k];
    for it in 0..iterations {
        if conflicts == 0 {
            return Ok(Some(color.into_iter().map(|c| c as u32 + 1).collect()));
        }
        if it % 1024 == 0 && deadline.is_some_and(|d| Instant::now() >= d) {
            return Err(());
        }
        let mut chosen: Option<(i64, usize, usize)> = None;
        let mut ties = 0u64;
        for v in 0..n {
            let own = gamma[v * k + color[v]];
            if own == 0 {
                continue;
            }
            for c in (0..k).filter(|&c| c != color[v]) {
                let delta = gamma[v * k + c] as i64 - own as i64;
                let allowed =
                    tabu_until[v * k + c] <= it || (conflicts as i64 + delta) < best as i64;
                if !allowed {
                    continue;
                }
                match chosen {
                    Some((d, _, _)) if delta > d => {}
                    Some((d, _, _)) if delta == d => {
                        ties += 1;
                        if rng.below(ties) == 0 {
                            chosen = Some((delta, v, c));
                        }
                    }
                    _ => {
                        ties = 1;
                        chosen = Some((delta, v, c));
                    }
                }
            }
        }
        let Some((delta, v, c)) = chosen else {
            continue;
        };
        let old = color[v];
        color[v] = c;
        for &w in g.neighbors(v) {
            gamma[w * k + old] -= 1;
            gamma[w * k + c] += 1;
        }
        conflicts = (conflicts as i64 + delta) as u64;
        best = best.min(conflicts);
        tabu_until[v * k + old] = it + 1 + rng.below(10) + conflicts * 6 / 10;
    }
    Ok((conflicts == 0).then(|| color.into_iter().map(|c| c as u32 + 1).collect()))
}

/// Decision search: is the graph `k`-colorable?
struct KColoring<'a> {
    g: &'a Graph,
    k: usize,
    color: Vec<u32>,
    /// `counts[v * (k + 1) + c]`: neighbors of `v` colored `c`.
    counts: Vec<u32>,
    saturation: Vec<usize>,
    uncolored: usize,
    nodes: u64,
    deadline: Option<Instant>,
}

impl<'a> KColoring<'a> {
    fn new(g: &'a Graph, k: u32, deadline: Option<Instant>) -> Self {
        let k = k as usize;
        Self {
            g,
            k,
            color: vec![0; g.n()],
            counts: vec![0; g.n() * (k + 1)],
            saturation: vec![0; g.n()],
            uncolored: g.n(),
            nodes: 0,
            deadline,
        }
    }

    fn assign(&mut self, v: usize, c: u32) {
        self.color[v] = c;
        self.uncolored -= 1;
        for &w in self.g.neighbors(v) {
            let slot = &mut self.counts[w * (self.k + 1) + c as usize];
            if *slot == 0 {
                self.saturation[w] += 1;
            }
            *slot += 1;
        }
    }

    fn unassign(&mut self, v: usize) {
        let c = self.color[v];
        self.color[v] = 0;
        self.uncolored += 1;
        for &w in self.g.neighbors(v) {
            let slot = &mut self.counts[w * (self.k + 1) + c as usize];
            *slot -= 1;
            if *slot == 0 {
                self.saturation[w] -= 1;
            }
        }
    }

    /// `Err(())` when the deadline passes.
    fn solve(&mut self, clique: &[usize]) -> std::result::Result<bool, ()> {
        if clique.len() > self.k {
            return Ok(false);
        }
        for (i, &v) in clique.iter().enumerate() {
            self.assign(v, i as u32 + 1);
        }
        self.search(clique.len() as u32)
    }

    fn search(&mut self, used: u32) -> std::result::Result<bool, ()> {
        if self.uncolored == 0 {
            return Ok(true);
        }
        self.nodes += 1;
        if self.nodes % 4096 == 1 {
            if let Some(deadline) = self.deadline {
                if Instant::now() >= deadline {
                    return Err(());
                }
            }
        }
        let g = self.g;
        let v = (0..g.n())
            .filter(|&v| self.color[v] == 0)
            .max_by_key(|&v| (self.saturation[v], g.degree(v), Reverse(v)))
            .expect("an uncolored vertex remains");
        if self.saturation[v] >= self.k {
            return Ok(false);
        }
        let top = (used + 1).min(self.k as u32);
        for c in 1..=top {
            if self.counts[v * (self.k + 1) + c as usize] != 0 {
                continue;
            }
            self.assign(v, c);
            if self.search(used.max(c))? {
                return Ok(true);
            }
            self.unassign(v);
        }
        Ok(false)
    }
}

/// `χ`, `χᵢ` or `χ₂` of `g` with a witness on `V(g)` valid in that mode.
pub fn chi(mode: ColoringMode, g: &Graph, budget: Option<Duration>) -> Result<(u32, Coloring)> {
    match mode {
        ColoringMode::Proper => exact_chromatic(g, budget),
        ColoringMode::Injective => exact_chromatic(&two_step(g), budget),
        ColoringMode::TwoDistance => exact_chromatic(&square(g), budget),
    }
}
