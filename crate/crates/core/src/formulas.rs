//! Closed forms and bounds for injective chromatic numbers of products.
//!
//! Every operation returns a [`FormulaResult`] whose trace names the
//! reduction and the case that produced the value.

use std::collections::BTreeSet;
use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::coloring::{chi, ColoringMode};
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum FormulaValue {
    Exact {
        value: u32,
    },
    Interval {
        lower: u32,
        upper: u32,
    },
    /// Sorted, nonempty, duplicate-free.
    Candidates {
        values: Vec<u32>,
    },
}

impl FormulaValue {
    /// The determined value, if the result pins one down.
    pub fn exact(&self) -> Option<u32> {
        match *self {
            FormulaValue::Exact { value } => Some(value),
            FormulaValue::Interval { lower, upper } if lower == upper => Some(lower),
            FormulaValue::Candidates { ref values } if values.len() == 1 => Some(values[0]),
            _ => None,
        }
    }

    pub fn contains(&self, x: u32) -> bool {
        match *self {
            FormulaValue::Exact { value } => value == x,
            FormulaValue::Interval { lower, upper } => (lower..=upper).contains(&x),
            FormulaValue::Candidates { ref values } => values.contains(&x),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FormulaResult {
    pub value: FormulaValue,
    pub trace: Vec<String>,
    /// Set by [`lexicographic_bounds`] when `χᵢ(G∘H) = χ₂(G∘H)` is guaranteed.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub injective_equals_two_distance: Option<bool>,
}

impl FormulaResult {
    fn new(value: FormulaValue, trace: Vec<String>) -> Self {
        Self {
            value,
            trace,
            injective_equals_two_distance: None,
        }
    }
}

/// Shape of one component of the two-step graph of a cycle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", content = "length", rename_all = "kebab-case")]
pub enum CycleFactorKind {
    /// `N(C_m) ≅ C_m` for odd `m`.
    OddCycle(usize),
    /// One of the two `C_{m/2}` components of `N(C_m)` for even `m >= 6`.
    HalfCycle(usize),
    /// One of the two `K_2` components of `N(C_4)`.
    K2,
}

impl CycleFactorKind {
    /// Reduction of the cycle `C_m`.
    pub fn of_cycle(m: usize) -> Result<Self> {
        match m {
            _ if m < 3 => Err(Error::InvalidParameter(format!(
                "cycle length must be at least 3, got {m}"
            ))),
            4 => Ok(CycleFactorKind::K2),
            _ if m % 2 == 1 => Ok(CycleFactorKind::OddCycle(m)),
            _ => Ok(CycleFactorKind::HalfCycle(m / 2)),
        }
    }

    /// Number of components of `N(C_m)`.
    pub fn component_count(self) -> usize {
        match self {
            CycleFactorKind::OddCycle(_) => 1,
            _ => 2,
        }
    }

    /// Order of the component, with `K_2` counted as the 2-cycle.
    pub fn length(self) -> usize {
        match self {
            CycleFactorKind::OddCycle(l) | CycleFactorKind::HalfCycle(l) => l,
            CycleFactorKind::K2 => 2,
        }
    }

    fn validate(self) -> Result<()> {
        match self {
            CycleFactorKind::OddCycle(l) if l < 3 || l % 2 == 0 => Err(Error::InvalidParameter(
                format!("odd-cycle factor needs an odd length >= 3, got {l}"),
            )),
            CycleFactorKind::HalfCycle(l) if l < 3 => Err(Error::InvalidParameter(format!(
                "half-cycle factor needs length >= 3, got {l}"
            ))),
            _ => Ok(()),
        }
    }

    fn describe(self) -> String {
        match self {
            CycleFactorKind::OddCycle(l) => format!("C{l}"),
            CycleFactorKind::HalfCycle(l) => format!("C{l}"),
            CycleFactorKind::K2 => "K2".into(),
        }
    }
}

/// `χ(A ⊠ B)` for two cycle components (with `K_2` as the 2-cycle).
pub fn strong_cycle_chromatic(a: CycleFactorKind, b: CycleFactorKind) -> Result<FormulaResult> {
    a.validate()?;
    b.validate()?;
    let (p, q) = (a.length(), b.length());
    let label = format!("{} ⊠ {}", a.describe(), b.describe());
    let (value, why) = match (p % 2 == 0, q % 2 == 0) {
        (true, true) => (
            4,
            "both factors even: 2x2 block tiling, clique number 4".to_string(),
        ),
        (true, false) | (false, true) => {
            let odd = if p % 2 == 1 { p } else { q };
            if odd == 3 {
                (
                    6,
                    "even factor with C3: clique number 6 attained by a 3x2 block tiling".into(),
                )
            } else {
                (5, "even factor with odd C_n, n >= 5: independence bound 5, A/B pattern 5-coloring".into())
            }
        }
        (false, false) => {
            if p >= 5 && q >= 5 {
                (
                    5,
                    "two odd cycles of length >= 5: chromatic number 5".into(),
                )
            } else {
                let other = if p == 3 { q } else { p };
                if other == 3 {
                    (9, "C3 ⊠ C3 = K9".into())
                } else {
                    let t = (other - 1) / 2;
                    let v = 6 + 3u32.div_ceil(t as u32);
                    (v, format!("K3 ⊠ C{other}: 2m + ⌈m/n⌉ with m = 3, n = {t}"))
                }
            }
        }
    };
    Ok(FormulaResult::new(
        FormulaValue::Exact { value },
        vec![format!("χ({label}) = {value}: {why}")],
    ))
}

/// The case of the closed-form direct-cycles table that literally applies
/// to `(m, n)`, if any, reading its `t ∈ {3, 6}` as `n ∈ {3, 6}`.
pub fn table_direct_cycles_case(m: usize, n: usize) -> Option<(u32, &'static str)> {
    fn one_way(m: usize, n: usize) -> Option<(u32, &'static str)> {
        let odd = |x: usize| x % 2 == 1;
        if m.is_multiple_of(4) && n.is_multiple_of(4) {
            return Some((4, "m, n ≡ 0 (mod 4)"));
        }
        if m.is_multiple_of(2) && m != 6 && odd(n) && n >= 5 {
            return Some((5, "m ≠ 6 even and n >= 5 odd"));
        }
        if odd(m) && odd(n) && m >= 5 && n >= 5 {
            return Some((5, "both m, n >= 5 odd"));
        }
        if m % 4 == 2 && n % 4 == 2 && m >= 10 && n >= 10 {
            return Some((5, "(m, n) = (4s+2, 4t+2) with s, t >= 2"));
        }
        if m == 4 && n % 4 == 2 && n >= 10 {
            return Some((5, "(m, n) = (4, 4t+2) with t >= 2"));
        }
        if m.is_multiple_of(4) && (n == 3 || n == 6) {
            return Some((6, "m = 4s and n ∈ {3, 6}"));
        }
        if (m == 3 || m == 6) && odd(n) && n >= 7 {
            return Some((7, "m ∈ {3, 6} and n = 2t+1 with t >= 3"));
        }
        if (m == 3 || m == 6) && n == 5 {
            return Some((8, "m ∈ {3, 6} and n = 5"));
        }
        if (m == 3 || m == 6) && n == 3 {
            return Some((9, "m ∈ {3, 6} and n = 3"));
        }
        None
    }
    one_way(m, n).or_else(|| one_way(n, m))
}

/// `χᵢ(C_m × C_n)` for all `m, n >= 3`.
///
/// Each cycle is replaced by a component of its two-step graph and the
/// value is the chromatic number of their strong product; all components
/// of the product are isomorphic, so no sum over components arises.
pub fn chi_i_direct_cycles(m: usize, n: usize) -> Result<FormulaResult> {
    let a = CycleFactorKind::of_cycle(m)?;
    let b = CycleFactorKind::of_cycle(n)?;
    let mut trace = vec![
        format!(
            "N(C{m}) = {} copy(ies) of {}",
            a.component_count(),
            a.describe()
        ),
        format!(
            "N(C{n}) = {} copy(ies) of {}",
            b.component_count(),
            b.describe()
        ),
        format!(
            "N(C{m} × C{n}) = N(C{m}) ⊠ N(C{n}), {} isomorphic component(s) of {} ⊠ {}",
            a.component_count() * b.component_count(),
            a.describe(),
            b.describe()
        ),
    ];
    let strong = strong_cycle_chromatic(a, b)?;
    let value = strong.value.exact().expect("strong table is exact");
    trace.extend(strong.trace);
    match table_direct_cycles_case(m, n) {
        Some((v, case)) if v == value => {
            trace.push(format!("agrees with the table case \"{case}\""))
        }
        Some((v, case)) => trace.push(format!(
            "table case \"{case}\" gives {v}, the reduction gives {value}"
        )),
        None => trace.push(format!(
            "no table case covers ({m}, {n}); the value follows from the reduction"
        )),
    }
    Ok(FormulaResult::new(FormulaValue::Exact { value }, trace))
}

fn require_connected(name: &str, g: &Graph) -> Result<()> {
    if g.n() < 2 {
        return Err(Error::Precondition(format!(
            "{name} needs at least two vertices"
        )));
    }
    if !g.is_connected() {
        return Err(Error::Precondition(format!("{name} must be connected")));
    }
    Ok(())
}

fn injective(g: &Graph, budget: Option<Duration>) -> Result<u32> {
    Ok(chi(ColoringMode::Injective, g, budget)?.0)
}

fn two_distance(g: &Graph, budget: Option<Duration>) -> Result<u32> {
    Ok(chi(ColoringMode::TwoDistance, g, budget)?.0)
}

/// Bounds on `χᵢ(G × H)` for connected factors of order at least two.
pub fn direct_product_bounds(
    g: &Graph,
    h: &Graph,
    budget: Option<Duration>,
) -> Result<FormulaResult> {
    require_connected("G", g)?;
    require_connected("H", h)?;
    let (ci_g, ci_h) = (injective(g, budget)?, injective(h, budget)?);
    let mut trace = vec![format!("χᵢ(G) = {ci_g}, χᵢ(H) = {ci_h}")];
    let value = if g.n() == 2 || h.n() == 2 {
        let v = ci_g.max(ci_h);
        trace.push(format!(
            "a factor is K2: χᵢ(G × H) = max{{χᵢ(G), χᵢ(H)}} = {v}"
        ));
        FormulaValue::Interval { lower: v, upper: v }
    } else {
        let (dg, dh) = (g.max_degree() as u32, h.max_degree() as u32);
        let lower = (ci_g + dh).max(ci_h + dg);
        let upper = ci_g * ci_h;
        trace.push(format!(
            "Δ(G) = {dg}, Δ(H) = {dh} >= 2: max{{χᵢ(G)+Δ(H), χᵢ(H)+Δ(G)}} = {lower} <= χᵢ(G × H) <= χᵢ(G)χᵢ(H) = {upper}"
        ));
        FormulaValue::Interval { lower, upper }
    };
    Ok(FormulaResult::new(value, trace))
}

/// Bounds on `χᵢ(G ∘ H)` for connected `G` of order at least two.
///
/// The upper bound holds for every `H`. When `H` has no isolated vertices
/// the lower bound is `(Δ(G)+1)|V(H)|` and `χᵢ(G∘H) = χ₂(G∘H)`; otherwise
/// the lower bound falls back to `Δ(G∘H) = |V(H)|Δ(G) + Δ(H)`.
pub fn lexicographic_bounds(
    g: &Graph,
    h: &Graph,
    budget: Option<Duration>,
) -> Result<FormulaResult> {
    require_connected("G", g)?;
    if h.is_empty() {
        return Err(Error::Precondition("H needs at least one vertex".into()));
    }
    let (c2, ci) = (two_distance(g, budget)?, injective(g, budget)?);
    let order = h.n() as u32;
    let isolated = h.isolated_vertices().len() as u32;
    let upper = c2 * order - isolated * (c2 - ci);
    let dg = g.max_degree() as u32;
    let mut trace = vec![
        format!("χ₂(G) = {c2}, χᵢ(G) = {ci}, |V(H)| = {order}, i_H = {isolated}"),
        format!("upper: χ₂(G)|V(H)| − i_H(χ₂(G) − χᵢ(G)) = {upper}"),
    ];
    let mut result = if isolated == 0 {
        let lower = (dg + 1) * order;
        trace.push(format!(
            "H has no isolated vertices: lower (Δ(G)+1)|V(H)| = {lower}"
        ));
        trace.push("every edge of G∘H lies on a triangle, so χᵢ(G∘H) = χ₂(G∘H)".into());
        let mut r = FormulaResult::new(FormulaValue::Interval { lower, upper }, trace);
        r.injective_equals_two_distance = Some(true);
        r
    } else {
        let lower = order * dg + h.max_degree() as u32;
        trace.push(format!("H has isolated vertices: lower Δ(G∘H) = {lower}"));
        FormulaResult::new(FormulaValue::Interval { lower, upper }, trace)
    };
    if let FormulaValue::Interval { lower, upper } = result.value {
        if lower == upper {
            result.trace.push(format!("bounds meet: χᵢ(G∘H) = {lower}"));
        }
    }
    Ok(result)
}

/// The three possible values of `χᵢ(G ⊙ H)` for graphs without isolated vertices.
pub fn corona_value_set(g: &Graph, h: &Graph, budget: Option<Duration>) -> Result<FormulaResult> {
    for (name, x) in [("G", g), ("H", h)] {
        if x.is_empty() {
            return Err(Error::Precondition(format!(
                "{name} needs at least one vertex"
            )));
        }
        if !x.isolated_vertices().is_empty() {
            return Err(Error::Precondition(format!("{name} has isolated vertices")));
        }
    }
    let ci = injective(g, budget)?;
    let order = h.n() as u32;
    let dg = g.max_degree() as u32;
    let values: Vec<u32> = BTreeSet::from([ci, order + dg, order + dg + 1])
        .into_iter()
        .collect();
    let mut trace = vec![format!("χᵢ(G) = {ci}, |V(H)| = {order}, Δ(G) = {dg}")];
    let slack = ci as i64 - dg as i64;
    let n = order as i64;
    if n < slack {
        trace.push(format!(
            "|V(H)| <= χᵢ(G) − Δ(G) − 1: χᵢ(G ⊙ H) = χᵢ(G) = {ci}"
        ));
    } else if n == slack {
        trace.push(
            "|V(H)| = χᵢ(G) − Δ(G): the value depends on the color classes at maximum-degree vertices"
                .into(),
        );
    } else {
        trace.push(format!(
            "|V(H)| > χᵢ(G) − Δ(G): value in {{{}, {}}}",
            order + dg,
            order + dg + 1
        ));
    }
    Ok(FormulaResult::new(
        FormulaValue::Candidates { values },
        trace,
    ))
}

/// `Δ(G)`, a lower bound on `χᵢ(G)`.
pub fn degree_lower_bound(g: &Graph) -> u32 {
    g.max_degree() as u32
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SylvesterResult {
    pub member: bool,
    /// `(α, β)` with `t = αr + βs`, smallest `α` first.
    pub witness: Option<(u64, u64)>,
}

/// Membership of `t` in `{αr + βs : α, β >= 0}`.
pub fn sylvester(r: u64, s: u64, t: u64) -> SylvesterResult {
    let max_alpha = t.checked_div(r).unwrap_or(0);
    let witness = (0..=max_alpha).find_map(|alpha| {
        let rest = t - alpha * r;
        match s {
            0 => (rest == 0).then_some((alpha, 0)),
            _ => rest.is_multiple_of(s).then_some((alpha, rest / s)),
        }
    });
    SylvesterResult {
        member: witness.is_some(),
        witness,
    }
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Checks the two guarantee clauses for coprime `r, s >= 2`: `(r−1)(s−1) − 1`
/// is not representable, and neither is any gap at or above `(r−1)(s−1)`.
/// The second clause reduces to the `r` consecutive values starting at
/// `(r−1)(s−1)`, since membership is closed under adding `r`.
pub fn sylvester_guarantee(r: u64, s: u64) -> Result<bool> {
    if r < 2 || s < 2 || gcd(r, s) != 1 {
        return Err(Error::Precondition(format!(
            "need coprime r, s >= 2, got ({r}, {s})"
        )));
    }
    let conductor = (r - 1) * (s - 1);
    let gap_missing = !sylvester(r, s, conductor - 1).member;
    let window = (conductor..conductor + r).all(|t| sylvester(r, s, t).member);
    Ok(gap_missing && window)
}
