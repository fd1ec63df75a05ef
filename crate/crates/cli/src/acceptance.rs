//! The acceptance suite: ten numbered criteria plus informational checks.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::{Duration, Instant};

use serde::Serialize;

use injcolor_core::coloring::{
    chi, exact_chromatic, independence_number, is_valid, ColoringMode, DEFAULT_BUDGET,
};
use injcolor_core::corpus::{
    connected_graphs, graphs_without_isolated, random_graphs, random_trees, sample_pairs,
};
use injcolor_core::error::Result;
use injcolor_core::formulas::{chi_i_direct_cycles, corona_value_set, direct_product_bounds};
use injcolor_core::graph::{combine, complete, cycle, CombineMode, Graph};
use injcolor_core::packing::{min_partition, PackingMode};
use injcolor_core::patterns::{
    builtin, five_coloring_strong, realize, BuiltinPattern, PatternGrid,
};
use injcolor_core::products::{product, ProductKind};
use injcolor_core::transforms::{
    check_two_step_factorization, closed_neighborhood, square, two_step,
};

const CORPUS_SEED: u64 = 0x1A2B_3C4D;
const PAIR_SEED: u64 = 0x5EED_0006;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Level {
    Quick,
    Full,
}

impl std::str::FromStr for Level {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "quick" => Ok(Level::Quick),
            "full" => Ok(Level::Full),
            _ => Err(format!("unknown level {s:?}")),
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct Options {
    /// Replaces one cell of pattern A before the pattern checks.
    pub corrupt_pattern_a: bool,
    /// Criterion numbers to run; all when empty. Informational checks only
    /// run with the full list.
    pub only: Vec<u8>,
    /// Per-instance solver budget.
    pub budget: Option<Duration>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    /// Criterion number; `None` for informational checks.
    pub criterion: Option<u8>,
    pub name: &'static str,
    pub status: Status,
    pub measured: String,
    pub expected: String,
    pub elapsed_ms: u128,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub details: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct AcceptanceReport {
    pub level: Level,
    pub overall: Status,
    pub checks: Vec<Check>,
}

impl AcceptanceReport {
    pub fn passed(&self) -> bool {
        self.overall == Status::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn table(&self) -> String {
        let mut out = String::new();
        writeln!(
            out,
            "{:<4} {:<26} {:<6} {:<34} {:<34} {:>9}",
            "#", "check", "status", "measured", "expected", "ms"
        )
        .expect("write to string");
        for c in &self.checks {
            let id = c.criterion.map_or("-".to_string(), |n| n.to_string());
            let status = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skip => "SKIP",
            };
            writeln!(
                out,
                "{:<4} {:<26} {:<6} {:<34} {:<34} {:>9}",
                id, c.name, status, c.measured, c.expected, c.elapsed_ms
            )
            .expect("write to string");
            for d in &c.details {
                writeln!(out, "       {d}").expect("write to string");
            }
        }
        let overall = if self.passed() { "PASS" } else { "FAIL" };
        writeln!(out, "overall: {overall}").expect("write to string");
        out
    }
}

/// Mismatches kept per check; the count is always complete.
const DETAIL_LIMIT: usize = 10;

struct Tally {
    total: usize,
    failures: Vec<String>,
    failed: usize,
}

impl Tally {
    fn new() -> Self {
        Self {
            total: 0,
            failures: Vec::new(),
            failed: 0,
        }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.total += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < DETAIL_LIMIT {
                self.failures.push(describe());
            }
        }
    }

    fn error(&mut self, what: String, e: injcolor_core::Error) {
        self.record(false, || format!("{what}: {e}"));
    }

    fn finish(self, unit: &str) -> Outcome {
        let passed = self.total - self.failed;
        Outcome {
            ok: self.failed == 0,
            measured: format!("{passed}/{} {unit}", self.total),
            expected: format!("{}/{} {unit}", self.total, self.total),
            details: self.failures,
        }
    }
}

struct Outcome {
    ok: bool,
    measured: String,
    expected: String,
    details: Vec<String>,
}

struct Context {
    level: Level,
    budget: Option<Duration>,
    corrupt_pattern_a: bool,
}

impl Context {
    fn quick(&self) -> bool {
        self.level == Level::Quick
    }

    /// Corpus size, capped at 50 in quick mode.
    fn size(&self, full: usize) -> usize {
        if self.quick() {
            full.min(50)
        } else {
            full
        }
    }

    fn injective(&self, g: &Graph) -> Result<u32> {
        Ok(chi(ColoringMode::Injective, g, self.budget)?.0)
    }

    fn fixture(&self, name: BuiltinPattern) -> Result<PatternGrid> {
        let mut grid = builtin(name)?;
        if self.corrupt_pattern_a && name == BuiltinPattern::A {
            grid.cells[0][0] = grid.cells[0][1];
        }
        Ok(grid)
    }
}

type CheckFn = fn(&Context) -> Outcome;

const CHECKS: [(Option<u8>, &str, CheckFn); 11] = [
    (Some(1), "direct-cycles-table", direct_cycles_table),
    (Some(2), "constructive-witnesses", constructive_witnesses),
    (Some(3), "triple-equivalence", triple_equivalence),
    (Some(4), "two-step-factorization", two_step_factorization),
    (Some(5), "counterexample", counterexample),
    (Some(6), "direct-bounds", direct_bounds),
    (Some(7), "lexicographic", lexicographic),
    (Some(8), "corona", corona),
    (Some(9), "pattern-suite", pattern_suite),
    (Some(10), "small-identities", small_identities),
    (None, "component-max", component_max),
];

/// Runs the selected checks concurrently; the report lists them in order.
pub fn run_acceptance(level: Level, options: &Options) -> AcceptanceReport {
    let ctx = Context {
        level,
        budget: Some(options.budget.unwrap_or(DEFAULT_BUDGET)),
        corrupt_pattern_a: options.corrupt_pattern_a,
    };
    let selected: Vec<_> = CHECKS
        .iter()
        .filter(|(id, _, _)| match id {
            Some(n) => options.only.is_empty() || options.only.contains(n),
            None => options.only.is_empty(),
        })
        .collect();
    let checks: Vec<Check> = std::thread::scope(|scope| {
        let handles: Vec<_> = selected
            .iter()
            .map(|&&(criterion, name, f)| {
                let ctx = &ctx;
                scope.spawn(move || {
                    let start = Instant::now();
                    let outcome = f(ctx);
                    Check {
                        criterion,
                        name,
                        status: if outcome.ok {
                            Status::Pass
                        } else {
                            Status::Fail
                        },
                        measured: outcome.measured,
                        expected: outcome.expected,
                        elapsed_ms: start.elapsed().as_millis(),
                        details: outcome.details,
                    }
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("check thread panicked"))
            .collect()
    });
    let overall = if checks.iter().any(|c| c.status == Status::Fail) {
        Status::Fail
    } else {
        Status::Pass
    };
    AcceptanceReport {
        level,
        overall,
        checks,
    }
}

fn direct_cycles_table(ctx: &Context) -> Outcome {
    let top = if ctx.quick() { 8 } else { 10 };
    let mut tally = Tally::new();
    for m in 3..=top {
        for n in 3..=top {
            let g =
                product(ProductKind::Direct, &cycle(m), &cycle(n)).expect("cycles are nonempty");
            let formula = chi_i_direct_cycles(m, n)
                .expect("m, n >= 3")
                .value
                .exact()
                .expect("exact");
            match chi(ColoringMode::Injective, &g, ctx.budget) {
                Ok((value, witness)) => {
                    let valid = is_valid(ColoringMode::Injective, &g, &witness).unwrap_or(false);
                    tally.record(value == formula && valid, || {
                        format!(
                            "C{m} × C{n}: solver {value}, formula {formula}, witness valid {valid}"
                        )
                    });
                }
                Err(e) => tally.error(format!("C{m} × C{n}"), e),
            }
        }
    }
    tally.finish("pairs")
}

fn constructive_witnesses(ctx: &Context) -> Outcome {
    let top = if ctx.quick() { 8 } else { 14 };
    let mut tally = Tally::new();
    for m in 3..=top {
        for n in 3..=top {
            let formula = chi_i_direct_cycles(m, n)
                .expect("m, n >= 3")
                .value
                .exact()
                .expect("exact");
            match injcolor_core::patterns::direct_cycle_coloring(m, n) {
                Ok((g, c)) => {
                    let valid = is_valid(ColoringMode::Injective, &g, &c).unwrap_or(false);
                    let used = c.color_count() as u32;
                    tally.record(valid && used == formula, || {
                        format!("C{m} × C{n}: {used} colors, formula {formula}, valid {valid}")
                    });
                }
                Err(e) => tally.error(format!("C{m} × C{n}"), e),
            }
        }
    }
    tally.finish("pairs")
}

fn triple_equivalence(ctx: &Context) -> Outcome {
    let mut tally = Tally::new();
    for (i, g) in random_graphs(CORPUS_SEED, ctx.size(200), 8)
        .iter()
        .enumerate()
    {
        let run = || -> Result<(bool, String)> {
            let (ci, wi) = chi(ColoringMode::Injective, g, ctx.budget)?;
            let t = exact_chromatic(&two_step(g), ctx.budget)?.0;
            let po = min_partition(PackingMode::Open, g)?;
            let (c2, w2) = chi(ColoringMode::TwoDistance, g, ctx.budget)?;
            let s = exact_chromatic(&square(g), ctx.budget)?.0;
            let nc = exact_chromatic(&closed_neighborhood(g), ctx.budget)?.0;
            let p = min_partition(PackingMode::Closed, g)?;
            let ok = ci == t
                && ci as usize == po.size()
                && po.verify(g)?
                && is_valid(ColoringMode::Injective, g, &wi)?
                && c2 == s
                && c2 == nc
                && c2 as usize == p.size()
                && p.verify(g)?
                && is_valid(ColoringMode::TwoDistance, g, &w2)?;
            Ok((
                ok,
                format!(
                    "graph {i}: χᵢ {ci}, χ(N) {t}, p_o {}, χ₂ {c2}, χ(G²) {s}, χ(N_c) {nc}, p {}",
                    po.size(),
                    p.size()
                ),
            ))
        };
        match run() {
            Ok((ok, line)) => tally.record(ok, || line),
            Err(e) => tally.error(format!("graph {i}"), e),
        }
    }
    tally.finish("graphs")
}

fn two_step_factorization(ctx: &Context) -> Outcome {
    let mut tally = Tally::new();
    let graphs = random_graphs(CORPUS_SEED ^ 4, 2 * ctx.size(200), 6);
    for (i, pair) in graphs.chunks(2).enumerate() {
        match check_two_step_factorization(&pair[0], &pair[1]) {
            Ok(f) => tally.record(f.holds, || format!("pair {i}: edge sets differ")),
            Err(e) => tally.error(format!("pair {i}"), e),
        }
    }
    tally.finish("pairs")
}

fn counterexample(ctx: &Context) -> Outcome {
    let run = || -> Result<(bool, String)> {
        let ce = ctx.fixture(BuiltinPattern::Counterexample)?;
        let (g, c) = realize(&ce)?;
        let expected_graph = product(ProductKind::Lexicographic, &cycle(7), &cycle(5))?;
        let valid = g == expected_graph && is_valid(ColoringMode::TwoDistance, &g, &c)?;
        let used = c.color_count() as u32;
        let chi2_c7 = chi(ColoringMode::TwoDistance, &cycle(7), ctx.budget)?.0;
        let bound = chi2_c7 * 5;
        Ok((
            valid && used == 18 && chi2_c7 == 4 && used < bound,
            format!(
                "{used} colors{}, {used} < χ₂(C7)·5 = {bound}",
                if valid { "" } else { " (invalid)" }
            ),
        ))
    };
    match run() {
        Ok((ok, measured)) => Outcome {
            ok,
            measured,
            expected: "18 colors, 18 < χ₂(C7)·5 = 20".into(),
            details: Vec::new(),
        },
        Err(e) => failed(e, "18 colors, 18 < χ₂(C7)·5 = 20"),
    }
}

fn failed(e: injcolor_core::Error, expected: &str) -> Outcome {
    Outcome {
        ok: false,
        measured: "error".into(),
        expected: expected.into(),
        details: vec![e.to_string()],
    }
}

/// Memoized `χᵢ` keyed by position in a corpus.
struct InjectiveCache<'a> {
    ctx: &'a Context,
    values: BTreeMap<usize, u32>,
}

impl<'a> InjectiveCache<'a> {
    fn new(ctx: &'a Context) -> Self {
        Self {
            ctx,
            values: BTreeMap::new(),
        }
    }

    fn get(&mut self, i: usize, g: &Graph) -> Result<u32> {
        if let Some(&v) = self.values.get(&i) {
            return Ok(v);
        }
        let v = self.ctx.injective(g)?;
        self.values.insert(i, v);
        Ok(v)
    }
}

fn direct_bounds(ctx: &Context) -> Outcome {
    let graphs = connected_graphs(3, 6).expect("within the enumeration limit");
    let mut tally = Tally::new();
    let mut cache = InjectiveCache::new(ctx);
    for (i, j) in sample_pairs(graphs.len(), graphs.len(), ctx.size(300), PAIR_SEED) {
        let (g, h) = (&graphs[i], &graphs[j]);
        let run = |cache: &mut InjectiveCache| -> Result<(bool, String)> {
            let (cg, ch) = (cache.get(i, g)?, cache.get(j, h)?);
            let (dg, dh) = (g.max_degree() as u32, h.max_degree() as u32);
            let lower = (cg + dh).max(ch + dg);
            let upper = cg * ch;
            let value = ctx.injective(&product(ProductKind::Direct, g, h)?)?;
            let oracle = direct_product_bounds(g, h, ctx.budget)?;
            Ok((
                lower <= value && value <= upper && oracle.value.contains(value),
                format!("pair ({i}, {j}): {lower} <= {value} <= {upper} fails"),
            ))
        };
        match run(&mut cache) {
            Ok((ok, line)) => tally.record(ok, || line),
            Err(e) => tally.error(format!("pair ({i}, {j})"), e),
        }
    }
    let k2 = complete(2);
    let count = if ctx.quick() { 20 } else { 50 };
    let step = (graphs.len() / count).max(1);
    for j in (0..graphs.len()).step_by(step).take(count) {
        let h = &graphs[j];
        let run = |cache: &mut InjectiveCache| -> Result<(bool, String)> {
            let ch = cache.get(j, h)?;
            let value = ctx.injective(&product(ProductKind::Direct, &k2, h)?)?;
            Ok((value == ch, format!("K2 × H{j}: {value} vs χᵢ(H) = {ch}")))
        };
        match run(&mut cache) {
            Ok((ok, line)) => tally.record(ok, || line),
            Err(e) => tally.error(format!("K2 × H{j}"), e),
        }
    }
    tally.finish("instances")
}

fn lexicographic(ctx: &Context) -> Outcome {
    let gs = connected_graphs(2, 6).expect("within the enumeration limit");
    let hs = graphs_without_isolated(2, 4).expect("within the enumeration limit");
    let mut tally = Tally::new();
    for (i, j) in sample_pairs(gs.len(), hs.len(), ctx.size(100), PAIR_SEED ^ 7) {
        let (g, h) = (&gs[i], &hs[j]);
        let run = || -> Result<(bool, String)> {
            let p = product(ProductKind::Lexicographic, g, h)?;
            let ci = ctx.injective(&p)?;
            let c2 = chi(ColoringMode::TwoDistance, &p, ctx.budget)?.0;
            let lower = (g.max_degree() as u32 + 1) * h.n() as u32;
            let upper = chi(ColoringMode::TwoDistance, g, ctx.budget)?.0 * h.n() as u32;
            Ok((
                ci == c2 && lower <= ci && ci <= upper,
                format!("G{i} ∘ H{j}: χᵢ {ci}, χ₂ {c2}, bounds [{lower}, {upper}]"),
            ))
        };
        match run() {
            Ok((ok, line)) => tally.record(ok, || line),
            Err(e) => tally.error(format!("G{i} ∘ H{j}"), e),
        }
    }
    let trees = random_trees(CORPUS_SEED ^ 7, 20, 2, 7);
    for (i, t) in trees.iter().enumerate() {
        let h = &hs[i % hs.len()];
        let run = || -> Result<(bool, String)> {
            let value = ctx.injective(&product(ProductKind::Lexicographic, t, h)?)?;
            let expected = (t.max_degree() as u32 + 1) * h.n() as u32;
            Ok((
                value == expected,
                format!("T{i} ∘ H: {value} vs {expected}"),
            ))
        };
        match run() {
            Ok((ok, line)) => tally.record(ok, || line),
            Err(e) => tally.error(format!("T{i} ∘ H"), e),
        }
    }
    tally.finish("instances")
}

fn corona(ctx: &Context) -> Outcome {
    let gs = graphs_without_isolated(2, 6).expect("within the enumeration limit");
    let hs = graphs_without_isolated(2, 4).expect("within the enumeration limit");
    let mut tally = Tally::new();
    for (i, j) in sample_pairs(gs.len(), hs.len(), ctx.size(100), PAIR_SEED ^ 8) {
        let (g, h) = (&gs[i], &hs[j]);
        let run = || -> Result<(bool, String)> {
            let value = ctx.injective(&product(ProductKind::Corona, g, h)?)?;
            let set = corona_value_set(g, h, ctx.budget)?;
            Ok((
                set.value.contains(value),
                format!("G{i} ⊙ H{j}: {value} not in {:?}", set.value),
            ))
        };
        match run() {
            Ok((ok, line)) => tally.record(ok, || line),
            Err(e) => tally.error(format!("G{i} ⊙ H{j}"), e),
        }
    }
    for n in 3..=5 {
        for (j, h) in hs.iter().enumerate() {
            let run = || -> Result<(bool, String)> {
                let value = ctx.injective(&product(ProductKind::Corona, &complete(n), h)?)?;
                let expected = (n + h.n()) as u32;
                Ok((
                    value == expected,
                    format!("K{n} ⊙ H{j}: {value} vs {expected}"),
                ))
            };
            match run() {
                Ok((ok, line)) => tally.record(ok, || line),
                Err(e) => tally.error(format!("K{n} ⊙ H{j}"), e),
            }
        }
    }
    for (i, t) in random_trees(CORPUS_SEED ^ 8, 20, 2, 8).iter().enumerate() {
        let h = &hs[i % hs.len()];
        let run = || -> Result<(bool, String)> {
            let value = ctx.injective(&product(ProductKind::Corona, t, h)?)?;
            let expected = (h.n() + t.max_degree()) as u32;
            Ok((
                value == expected,
                format!("T{i} ⊙ H: {value} vs {expected}"),
            ))
        };
        match run() {
            Ok((ok, line)) => tally.record(ok, || line),
            Err(e) => tally.error(format!("T{i} ⊙ H"), e),
        }
    }
    tally.finish("instances")
}

fn pattern_suite(ctx: &Context) -> Outcome {
    let mut tally = Tally::new();
    let mut names = vec![
        BuiltinPattern::A,
        BuiltinPattern::B,
        BuiltinPattern::C,
        BuiltinPattern::D,
    ];
    names.extend((2..=6).map(BuiltinPattern::Pat11));
    names.extend((1..=4).flat_map(|s| (1..=4).map(move |t| BuiltinPattern::Pat44(s, t))));
    for name in names {
        let declared = match name {
            BuiltinPattern::Pat11(_) => 6,
            BuiltinPattern::Pat44(..) => 4,
            _ => 5,
        };
        match ctx
            .fixture(name)
            .and_then(|grid| Ok((grid.verify()?, grid.color_count())))
        {
            Ok((valid, used)) => tally.record(valid && used == declared, || {
                format!("{name:?}: valid {valid}, {used} colors, declared {declared}")
            }),
            Err(e) => tally.error(format!("{name:?}"), e),
        }
    }
    for k in 1..=8 {
        for n in (5..=25).step_by(2) {
            match five_coloring_strong(k, n).and_then(|grid| {
                let (g, c) = realize(&grid)?;
                Ok((is_valid(ColoringMode::Proper, &g, &c)?, c.color_count()))
            }) {
                Ok((valid, used)) => tally.record(valid && used <= 5, || {
                    format!("C{} ⊠ C{n}: valid {valid}, {used} colors", 2 * k)
                }),
                Err(e) => tally.error(format!("five_coloring_strong({k}, {n})"), e),
            }
        }
    }
    tally.finish("grids")
}

fn small_identities(ctx: &Context) -> Outcome {
    let mut tally = Tally::new();
    let strong =
        |a: &Graph, b: &Graph| product(ProductKind::Strong, a, b).expect("nonempty factors");
    let cases = [
        ("χ(C5 ⊠ C5)", strong(&cycle(5), &cycle(5)), 5),
        ("χ(C5 ⊠ C7)", strong(&cycle(5), &cycle(7)), 5),
        ("χ(K3 ⊠ C5)", strong(&complete(3), &cycle(5)), 8),
        ("χ(K2 ⊠ C3)", strong(&complete(2), &cycle(3)), 6),
    ];
    for (label, g, expected) in cases {
        match exact_chromatic(&g, ctx.budget) {
            Ok((value, _)) => tally.record(value == expected, || {
                format!("{label} = {value}, expected {expected}")
            }),
            Err(e) => tally.error(label.into(), e),
        }
    }
    for (label, g, expected) in [
        ("α(C4 ⊠ C5)", strong(&cycle(4), &cycle(5)), 4),
        ("α(C6 ⊠ C5)", strong(&cycle(6), &cycle(5)), 6),
    ] {
        let value = independence_number(&g);
        tally.record(value == expected, || {
            format!("{label} = {value}, expected {expected}")
        });
    }
    let mut corpus = random_graphs(CORPUS_SEED, ctx.size(200), 8);
    corpus.extend(connected_graphs(3, 6).expect("within the enumeration limit"));
    for (i, g) in corpus.iter().enumerate() {
        match ctx.injective(g) {
            Ok(value) => tally.record(value as usize >= g.max_degree(), || {
                format!("corpus graph {i}: χᵢ = {value} < Δ = {}", g.max_degree())
            }),
            Err(e) => tally.error(format!("corpus graph {i}"), e),
        }
    }
    tally.finish("identities")
}

/// Colors of disjoint components are reused, so `χᵢ(G + H)` is the larger
/// of the two values rather than their sum.
fn component_max(ctx: &Context) -> Outcome {
    let graphs = random_graphs(CORPUS_SEED ^ 11, 2 * ctx.size(50), 6);
    let mut tally = Tally::new();
    for (i, pair) in graphs.chunks(2).enumerate() {
        let run = || -> Result<(bool, String)> {
            let union = combine(CombineMode::DisjointUnion, &pair[0], &pair[1])?;
            let (a, b) = (ctx.injective(&pair[0])?, ctx.injective(&pair[1])?);
            let value = ctx.injective(&union)?;
            Ok((
                value == a.max(b),
                format!("pair {i}: χᵢ(G + H) = {value}, parts {a} and {b}"),
            ))
        };
        match run() {
            Ok((ok, line)) => tally.record(ok, || line),
            Err(e) => tally.error(format!("pair {i}"), e),
        }
    }
    tally.finish("unions")
}
