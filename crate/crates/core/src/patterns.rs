//! Periodic coloring grids for products of cycles.
//!
//! A grid with `r` rows and `c` columns colors a product whose first factor
//! is the row cycle `C_r` and second factor the column cycle `C_c`; cell
//! `(i, j)` is the color of vertex `i * c + j` under the row-major codec. A
//! cycle length of 2 stands for `K_2`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::coloring::{is_valid, Coloring, ColoringMode};
use crate::error::{Error, Result};
use crate::formulas::{chi_i_direct_cycles, sylvester, CycleFactorKind};
use crate::graph::{complete, cycle, Graph};
use crate::products::{encode, product, ProductKind};

/// Arrangements tried by [`five_coloring_strong`] before giving up.
pub const COMPOSITION_SEARCH_LIMIT: usize = 512;

/// What a grid colors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternTarget {
    pub product: ProductKind,
    pub row_cycle: usize,
    pub col_cycle: usize,
    pub mode: ColoringMode,
    /// Declared number of distinct colors.
    pub colors: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternGrid {
    pub rows: usize,
    pub cols: usize,
    pub cells: Vec<Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub target: Option<PatternTarget>,
}

/// The graph `C_len`, `K_2` for `len == 2`, `K_1` for `len == 1`.
pub fn cycle_factor(len: usize) -> Result<Graph> {
    match len {
        0 => Err(Error::InvalidParameter("cycle length 0".into())),
        1 | 2 => Ok(complete(len)),
        _ => Ok(cycle(len)),
    }
}

impl PatternGrid {
    pub fn new(cells: Vec<Vec<u32>>, target: Option<PatternTarget>) -> Result<Self> {
        let rows = cells.len();
        let cols = cells.first().map_or(0, Vec::len);
        if cells.iter().any(|r| r.len() != cols) {
            return Err(Error::InvalidParameter("ragged pattern rows".into()));
        }
        if cells.iter().flatten().any(|&c| c == 0) {
            return Err(Error::InvalidParameter("pattern colors are 1-based".into()));
        }
        if let Some(t) = target {
            if t.row_cycle != rows || t.col_cycle != cols {
                return Err(Error::TargetMismatch(format!(
                    "grid is {rows}x{cols} but the target is C{} x C{}",
                    t.row_cycle, t.col_cycle
                )));
            }
        }
        Ok(Self {
            rows,
            cols,
            cells,
            target,
        })
    }

    fn from_columns(columns: &[[u32; 4]]) -> Vec<Vec<u32>> {
        (0..4)
            .map(|r| columns.iter().map(|c| c[r]).collect())
            .collect()
    }

    pub fn color_count(&self) -> usize {
        self.cells.iter().flatten().collect::<BTreeSet<_>>().len()
    }

    pub fn transpose(&self) -> PatternGrid {
        let cells = (0..self.cols)
            .map(|j| (0..self.rows).map(|i| self.cells[i][j]).collect())
            .collect();
        PatternGrid {
            rows: self.cols,
            cols: self.rows,
            cells,
            target: self.target.map(|t| PatternTarget {
                row_cycle: t.col_cycle,
                col_cycle: t.row_cycle,
                ..t
            }),
        }
    }

    /// Realizes the target product and checks the grid in its mode with
    /// exactly the declared number of colors.
    pub fn verify(&self) -> Result<bool> {
        let target = self
            .target
            .ok_or_else(|| Error::TargetMismatch("grid has no target".into()))?;
        let (g, c) = realize(self)?;
        Ok(is_valid(target.mode, &g, &c)? && c.color_count() as u32 == target.colors)
    }
}

/// The built-in grids.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BuiltinPattern {
    A,
    B,
    C,
    D,
    /// 3 x 2k, alternating columns (1,2,3) and (4,5,6).
    Pat11(usize),
    /// The block [[1,2],[3,4]] tiled to 2s x 2t.
    Pat44(usize, usize),
    /// 18-color 2-distance coloring of `C_7 ∘ C_5`.
    Counterexample,
}

impl std::str::FromStr for BuiltinPattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::UnknownPattern(s.to_string());
        let upper = s.trim().to_ascii_uppercase();
        let args = |prefix: &str| -> Result<Vec<usize>> {
            let inner = upper
                .strip_prefix(prefix)
                .and_then(|r| r.strip_prefix('('))
                .and_then(|r| r.strip_suffix(')'))
                .ok_or_else(unknown)?;
            inner
                .split(',')
                .map(|x| x.trim().parse().map_err(|_| unknown()))
                .collect()
        };
        match upper.as_str() {
            "A" => Ok(BuiltinPattern::A),
            "B" => Ok(BuiltinPattern::B),
            "C" => Ok(BuiltinPattern::C),
            "D" => Ok(BuiltinPattern::D),
            "CE" => Ok(BuiltinPattern::Counterexample),
            _ if upper.starts_with("PAT11") => match args("PAT11")?.as_slice() {
                [k] => Ok(BuiltinPattern::Pat11(*k)),
                _ => Err(unknown()),
            },
            _ if upper.starts_with("PAT44") => match args("PAT44")?.as_slice() {
                [s, t] => Ok(BuiltinPattern::Pat44(*s, *t)),
                _ => Err(unknown()),
            },
            _ => Err(unknown()),
        }
    }
}

const A_COLUMNS: [[u32; 4]; 5] = [
    [1, 3, 5, 3],
    [2, 4, 1, 4],
    [3, 5, 2, 5],
    [4, 1, 3, 1],
    [5, 2, 4, 2],
];
const B_COLUMNS: [[u32; 4]; 4] = [[4, 1, 3, 1], [5, 2, 4, 2], [4, 1, 3, 1], [5, 2, 4, 2]];
const PAIR_COLUMNS: [[u32; 4]; 2] = [[4, 1, 3, 1], [5, 2, 4, 2]];
const COUNTEREXAMPLE: [[u32; 5]; 7] = [
    [1, 5, 8, 12, 15],
    [2, 6, 9, 13, 16],
    [3, 7, 10, 14, 17],
    [1, 4, 8, 11, 15],
    [2, 5, 9, 12, 16],
    [3, 6, 10, 13, 17],
    [4, 7, 11, 14, 18],
];

fn strong_target(rows: usize, cols: usize, colors: u32) -> PatternTarget {
    PatternTarget {
        product: ProductKind::Strong,
        row_cycle: rows,
        col_cycle: cols,
        mode: ColoringMode::Proper,
        colors,
    }
}

fn four_row(columns: Vec<[u32; 4]>) -> PatternGrid {
    let n = columns.len();
    PatternGrid::new(
        PatternGrid::from_columns(&columns),
        Some(strong_target(4, n, 5)),
    )
    .expect("four-row pattern is well formed")
}

fn pat11(k: usize) -> PatternGrid {
    let cells = (0..3)
        .map(|r| {
            (0..2 * k)
                .map(|j| if j % 2 == 0 { r + 1 } else { r + 4 } as u32)
                .collect()
        })
        .collect();
    PatternGrid::new(cells, Some(strong_target(3, 2 * k, 6))).expect("well formed")
}

fn pat44(s: usize, t: usize) -> PatternGrid {
    let cells = (0..2 * s)
        .map(|i| {
            (0..2 * t)
                .map(|j| (1 + 2 * (i % 2) + j % 2) as u32)
                .collect()
        })
        .collect();
    PatternGrid::new(cells, Some(strong_target(2 * s, 2 * t, 4))).expect("well formed")
}

pub fn builtin(name: BuiltinPattern) -> Result<PatternGrid> {
    Ok(match name {
        BuiltinPattern::A => four_row(A_COLUMNS.to_vec()),
        BuiltinPattern::B => four_row(B_COLUMNS.to_vec()),
        BuiltinPattern::C => four_row([&A_COLUMNS[..], &PAIR_COLUMNS[..]].concat()),
        BuiltinPattern::D => {
            let mut cols = A_COLUMNS.to_vec();
            for _ in 0..3 {
                cols.extend_from_slice(&PAIR_COLUMNS);
            }
            four_row(cols)
        }
        BuiltinPattern::Pat11(k) => {
            if k < 2 {
                return Err(Error::InvalidParameter(format!(
                    "PAT11 needs k >= 2, got {k}"
                )));
            }
            pat11(k)
        }
        BuiltinPattern::Pat44(s, t) => {
            if s < 1 || t < 1 {
                return Err(Error::InvalidParameter(format!(
                    "PAT44 needs s, t >= 1, got ({s}, {t})"
                )));
            }
            pat44(s, t)
        }
        BuiltinPattern::Counterexample => PatternGrid::new(
            COUNTEREXAMPLE.iter().map(|r| r.to_vec()).collect(),
            Some(PatternTarget {
                product: ProductKind::Lexicographic,
                row_cycle: 7,
                col_cycle: 5,
                mode: ColoringMode::TwoDistance,
                colors: 18,
            }),
        )?,
    })
}

/// Builds the target product and the coloring `c[(i, j)] = cells[i][j]`.
pub fn realize(grid: &PatternGrid) -> Result<(Graph, Coloring)> {
    let target = grid
        .target
        .ok_or_else(|| Error::TargetMismatch("grid has no target".into()))?;
    if target.row_cycle != grid.rows || target.col_cycle != grid.cols {
        return Err(Error::TargetMismatch(format!(
            "grid is {}x{} but the target is C{} x C{}",
            grid.rows, grid.cols, target.row_cycle, target.col_cycle
        )));
    }
    let g = product(
        target.product,
        &cycle_factor(target.row_cycle)?,
        &cycle_factor(target.col_cycle)?,
    )?;
    let colors = grid.cells.iter().flatten().copied().collect();
    Ok((g, Coloring::new(colors)?))
}

/// Distinct arrangements of `alpha` A-blocks and `beta` B-blocks in
/// lexicographic order (`false` = A, `true` = B).
fn arrangements(alpha: usize, beta: usize, limit: usize) -> Vec<Vec<bool>> {
    fn go(a: usize, b: usize, cur: &mut Vec<bool>, out: &mut Vec<Vec<bool>>, limit: usize) {
        if out.len() >= limit {
            return;
        }
        if a == 0 && b == 0 {
            out.push(cur.clone());
            return;
        }
        if a > 0 {
            cur.push(false);
            go(a - 1, b, cur, out, limit);
            cur.pop();
        }
        if b > 0 {
            cur.push(true);
            go(a, b - 1, cur, out, limit);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(alpha, beta, &mut Vec::new(), &mut out, limit);
    out
}

/// A verified 4-row 5-coloring of `C_4 ⊠ C_n` for odd `n >= 5`.
fn base_four_row(n: usize) -> Result<PatternGrid> {
    let fixed = match n {
        5 => Some(builtin(BuiltinPattern::A)?),
        7 => Some(builtin(BuiltinPattern::C)?),
        9 => Some(four_row([&A_COLUMNS[..], &B_COLUMNS[..]].concat())),
        11 => Some(builtin(BuiltinPattern::D)?),
        _ => None,
    };
    if let Some(grid) = fixed {
        return Ok(grid);
    }
    let split = sylvester(5, 4, n as u64)
        .witness
        .ok_or_else(|| Error::CompositionFailure(format!("{n} is not 5α + 4β")))?;
    let (alpha, beta) = (split.0 as usize, split.1 as usize);
    for order in arrangements(alpha, beta, COMPOSITION_SEARCH_LIMIT) {
        let cols: Vec<[u32; 4]> = order
            .iter()
            .flat_map(|&is_b| {
                if is_b {
                    B_COLUMNS.to_vec()
                } else {
                    A_COLUMNS.to_vec()
                }
            })
            .collect();
        let grid = four_row(cols);
        if grid.verify()? {
            return Ok(grid);
        }
    }
    Err(Error::CompositionFailure(format!(
        "no arrangement of {alpha} A and {beta} B blocks colors C4 ⊠ C{n}"
    )))
}

/// A verified 5-coloring of `C_{2k} ⊠ C_n` (`K_2 ⊠ C_n` when `k = 1`) for odd `n >= 5`.
///
/// The 4-row base pattern is stacked `⌊2k/4⌋` times; when `2k ≡ 2 (mod 4)`
/// its first two rows are appended.
pub fn five_coloring_strong(k: usize, n: usize) -> Result<PatternGrid> {
    if k < 1 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    if n < 5 || n.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!(
            "n must be odd and >= 5, got {n}"
        )));
    }
    let base = base_four_row(n)?;
    let rows = 2 * k;
    let mut cells: Vec<Vec<u32>> = Vec::with_capacity(rows);
    for _ in 0..rows / 4 {
        cells.extend(base.cells.iter().cloned());
    }
    if rows % 4 == 2 {
        cells.extend(base.cells[..2].iter().cloned());
    }
    let grid = PatternGrid::new(cells, Some(strong_target(rows, n, 5)))?;
    if !grid.verify()? {
        return Err(Error::CompositionFailure(format!(
            "stacked pattern does not color C{rows} ⊠ C{n}"
        )));
    }
    Ok(grid)
}

/// Closed walk positions with steps ±1 (mod 5) whose values cover 0..5
/// when `len >= 5`. Valid for `len == 2`, even `len`, and odd `len >= 5`.
fn unit_step_walk(len: usize) -> Vec<u32> {
    if len.is_multiple_of(2) {
        return (0..len).map(|i| (i % 2) as u32).collect();
    }
    let mut walk: Vec<u32> = (0..5).collect();
    walk.extend((0..len - 5).map(|i| if i % 2 == 0 { 3 } else { 4 }));
    walk
}

/// `(a_i + 2 b_j) mod 5` 5-coloring of `C_p ⊠ C_q` for odd `p, q >= 5`.
fn linear_five(p: usize, q: usize) -> PatternGrid {
    let (a, b) = (unit_step_walk(p), unit_step_walk(q));
    let cells = a
        .iter()
        .map(|&x| b.iter().map(|&y| (x + 2 * y) % 5 + 1).collect())
        .collect();
    PatternGrid::new(cells, Some(strong_target(p, q, 5))).expect("well formed")
}

/// Coloring of `C_3 ⊠ C_q` for odd `q`: column `j` takes the three colors
/// `{3w, 3w+1, 3w+2} mod c` of a closed walk `w` so adjacent columns get
/// disjoint triples (9 colors for `q = 3`, 8 for `q = 5`, 7 otherwise).
fn triangle_columns(q: usize) -> PatternGrid {
    let (modulus, walk): (u32, Vec<u32>) = match q {
        3 => (9, vec![0, 1, 2]),
        5 => (8, (0..5).collect()),
        _ => {
            let mut w: Vec<u32> = (0..7).collect();
            w.extend((0..q - 7).map(|i| if i % 2 == 0 { 5 } else { 6 }));
            (7, w)
        }
    };
    let cells = (0..3)
        .map(|r| walk.iter().map(|&w| (3 * w + r) % modulus + 1).collect())
        .collect();
    PatternGrid::new(cells, Some(strong_target(3, q, modulus.min(9)))).expect("well formed")
}

/// An optimal proper coloring grid of `C_p ⊠ C_q` with `C_2 = K_2`.
fn optimal_strong_grid(p: usize, q: usize) -> Result<PatternGrid> {
    let even = |x: usize| x.is_multiple_of(2);
    Ok(match (even(p), even(q)) {
        (true, true) => pat44(p / 2, q / 2),
        (true, false) if q == 3 => pat11(p / 2).transpose(),
        (true, false) => five_coloring_strong(p / 2, q)?,
        (false, true) => optimal_strong_grid(q, p)?.transpose(),
        (false, false) if p == 3 => triangle_columns(q),
        (false, false) if q == 3 => triangle_columns(p).transpose(),
        (false, false) => linear_five(p, q),
    })
}

/// Position of each vertex of `C_m` within its component of `N(C_m)`.
fn two_step_positions(m: usize) -> Vec<usize> {
    if m % 2 == 1 {
        // i = 2p (mod m)
        (0..m).map(|i| i * (m + 1) / 2 % m).collect()
    } else {
        (0..m).map(|i| i / 2).collect()
    }
}

/// An injective coloring of `C_m × C_n` with exactly
/// [`chi_i_direct_cycles`]`(m, n)` colors.
///
/// `(g, h)` gets the color of its two-step component coordinates in an
/// optimal grid for the strong product of the two component shapes; every
/// component of the two-step graph reuses the same grid.
pub fn direct_cycle_coloring(m: usize, n: usize) -> Result<(Graph, Coloring)> {
    let a = CycleFactorKind::of_cycle(m)?;
    let b = CycleFactorKind::of_cycle(n)?;
    let grid = optimal_strong_grid(a.length(), b.length())?;
    let (pg, ph) = (two_step_positions(m), two_step_positions(n));
    let mut colors = vec![0; m * n];
    for g in 0..m {
        for h in 0..n {
            colors[encode(g, h, n)] = grid.cells[pg[g]][ph[h]];
        }
    }
    let graph = product(ProductKind::Direct, &cycle(m), &cycle(n))?;
    let coloring = Coloring::new(colors)?;
    let expected = chi_i_direct_cycles(m, n)?.value.exact().expect("exact");
    if !is_valid(ColoringMode::Injective, &graph, &coloring)?
        || coloring.color_count() as u32 != expected
    {
        return Err(Error::CompositionFailure(format!(
            "grid for C{m} × C{n} does not give an injective {expected}-coloring"
        )));
    }
    Ok((graph, coloring))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pattern_a_first_row() {
        let a = builtin(BuiltinPattern::A).unwrap();
        assert_eq!(a.cells[0], vec![1, 2, 3, 4, 5]);
        assert_eq!((a.rows, a.cols), (4, 5));
        assert!(a.verify().unwrap());
    }

    #[test]
    fn counterexample_has_18_colors() {
        let ce = builtin(BuiltinPattern::Counterexample).unwrap();
        assert_eq!(ce.color_count(), 18);
        let (g, c) = realize(&ce).unwrap();
        assert_eq!(g.n(), 35);
        assert!(is_valid(ColoringMode::TwoDistance, &g, &c).unwrap());
    }

    #[test]
    fn pat44_unit_block() {
        assert_eq!(
            builtin(BuiltinPattern::Pat44(1, 1)).unwrap().cells,
            vec![vec![1, 2], vec![3, 4]]
        );
        let (g, c) = realize(&builtin(BuiltinPattern::Pat44(2, 3)).unwrap()).unwrap();
        assert_eq!(g.n(), 24);
        assert!(is_valid(ColoringMode::Proper, &g, &c).unwrap());
    }

    #[test]
    fn pat11_colors_c3_c4() {
        let grid = builtin(BuiltinPattern::Pat11(2)).unwrap();
        let (g, c) = realize(&grid).unwrap();
        assert_eq!(g.n(), 12);
        assert!(is_valid(ColoringMode::Proper, &g, &c).unwrap());
        assert_eq!(c.color_count(), 6);
        assert!(builtin(BuiltinPattern::Pat11(1)).is_err());
    }

    #[test]
    fn parse_names() {
        assert_eq!("A".parse::<BuiltinPattern>().unwrap(), BuiltinPattern::A);
        assert_eq!(
            "pat44(2, 3)".parse::<BuiltinPattern>().unwrap(),
            BuiltinPattern::Pat44(2, 3)
        );
        assert_eq!(
            "PAT11(4)".parse::<BuiltinPattern>().unwrap(),
            BuiltinPattern::Pat11(4)
        );
        assert_eq!(
            "CE".parse::<BuiltinPattern>().unwrap(),
            BuiltinPattern::Counterexample
        );
        assert!("E".parse::<BuiltinPattern>().is_err());
        assert!("PAT44(2)".parse::<BuiltinPattern>().is_err());
    }

    #[test]
    fn five_coloring_examples() {
        let g = five_coloring_strong(2, 7).unwrap();
        assert_eq!(g.cells, builtin(BuiltinPattern::C).unwrap().cells);
        let g = five_coloring_strong(3, 5).unwrap();
        assert_eq!(g.rows, 6);
        let a = builtin(BuiltinPattern::A).unwrap();
        assert_eq!(g.cells[4..], a.cells[..2]);
        let g = five_coloring_strong(4, 13).unwrap();
        assert_eq!((g.rows, g.cols), (8, 13));
        assert!(g.verify().unwrap());
        assert!(five_coloring_strong(2, 8).is_err());
        assert!(five_coloring_strong(2, 3).is_err());
    }

    #[test]
    fn direct_cycle_examples() {
        for (m, n, k) in [
            (4, 4, 4),
            (5, 5, 5),
            (3, 3, 9),
            (6, 6, 9),
            (3, 7, 7),
            (6, 10, 8),
        ] {
            let (g, c) = direct_cycle_coloring(m, n).unwrap();
            assert!(is_valid(ColoringMode::Injective, &g, &c).unwrap());
            assert_eq!(c.color_count(), k, "({m}, {n})");
        }
    }

    #[test]
    fn corrupted_grid_fails() {
        let mut a = builtin(BuiltinPattern::A).unwrap();
        a.cells[0][0] = 2;
        assert!(!a.verify().unwrap());
    }

    #[test]
    fn target_mismatch() {
        let mut a = builtin(BuiltinPattern::A).unwrap();
        a.cells.pop();
        a.rows = 3;
        assert!(matches!(realize(&a), Err(Error::TargetMismatch(_))));
        let untargeted = PatternGrid::new(vec![vec![1]], None).unwrap();
        assert!(realize(&untargeted).is_err());
    }
}
