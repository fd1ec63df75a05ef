//! Brute-force packings, open packings and minimum packing partitions.
//!
//! Everything here works directly on neighborhood bitmasks of the input
//! graph. Nothing is routed through the two-step graph, the square or the
//! coloring solver, so these results serve as an independent check of them.

use std::cmp::Reverse;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Order limit for [`max_packing`].
pub const MAX_PACKING_LIMIT: usize = 24;
/// Order limit for [`min_partition`].
pub const MIN_PARTITION_LIMIT: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PackingMode {
    /// Pairwise disjoint open neighborhoods.
    Open,
    /// Pairwise disjoint closed neighborhoods.
    Closed,
}

impl std::str::FromStr for PackingMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "open" => Ok(PackingMode::Open),
            "closed" => Ok(PackingMode::Closed),
            _ => Err(Error::InvalidParameter(format!(
                "unknown packing mode {s:?}"
            ))),
        }
    }
}

/// A partition of `V(G)` into packings of one mode.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionCertificate {
    pub mode: PackingMode,
    /// Each class sorted; classes ordered by smallest member.
    pub classes: Vec<Vec<usize>>,
}

impl PartitionCertificate {
    pub fn size(&self) -> usize {
        self.classes.len()
    }

    /// Re-checks disjointness, coverage and the packing property of every class.
    pub fn verify(&self, g: &Graph) -> Result<bool> {
        let mut seen = vec![false; g.n()];
        for class in &self.classes {
            for &v in class {
                if v >= g.n() {
                    return Err(Error::VertexOutOfRange {
                        vertex: v,
                        n: g.n(),
                    });
                }
                if std::mem::replace(&mut seen[v], true) {
                    return Ok(false);
                }
            }
            if !is_packing(self.mode, g, class)? {
                return Ok(false);
            }
        }
        Ok(seen.into_iter().all(|s| s))
    }

    /// The coloring assigning color `i + 1` to class `i`.
    pub fn to_colors(&self, n: usize) -> Vec<u32> {
        let mut colors = vec![0; n];
        for (i, class) in self.classes.iter().enumerate() {
            for &v in class {
                colors[v] = i as u32 + 1;
            }
        }
        colors
    }
}

/// Neighborhood masks; bit `w` of `masks[v]` is set iff `w ∈ N(v)` (or `N[v]`).
fn masks(mode: PackingMode, g: &Graph) -> Vec<u32> {
    (0..g.n())
        .map(|v| {
            let mut m = g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w);
            if mode == PackingMode::Closed {
                m |= 1 << v;
            }
            m
        })
        .collect()
}

fn check_limit(what: &'static str, limit: usize, n: usize) -> Result<()> {
    if n > limit {
        return Err(Error::TooLarge {
            what,
            limit,
            actual: n,
        });
    }
    Ok(())
}

/// Whether `set` is a packing of the given mode. Works for any order.
pub fn is_packing(mode: PackingMode, g: &Graph, set: &[usize]) -> Result<bool> {
    if let Some(&v) = set.iter().find(|&&v| v >= g.n()) {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            n: g.n(),
        });
    }
    let closed = |v: usize| -> Vec<usize> {
        let mut nb = g.neighbors(v).to_vec();
        if mode == PackingMode::Closed {
            nb.push(v);
            nb.sort_unstable();
        }
        nb
    };
    for (i, &u) in set.iter().enumerate() {
        let nu = closed(u);
        for &v in &set[i + 1..] {
            if u == v {
                continue;
            }
            if closed(v).iter().any(|w| nu.binary_search(w).is_ok()) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `ρ(G)` or `ρ_o(G)` with the lexicographically least maximum witness.
pub fn max_packing(mode: PackingMode, g: &Graph) -> Result<(usize, Vec<usize>)> {
    check_limit("maximum packing", MAX_PACKING_LIMIT, g.n())?;
    let masks = masks(mode, g);
    let mut best: (usize, u32) = (0, 0);
    // Include-first depth-first search meets sets of equal size in
    // lexicographic order, so keeping only strict improvements yields the
    // least witness.
    fn dfs(
        v: usize,
        masks: &[u32],
        chosen: u32,
        covered: u32,
        size: usize,
        best: &mut (usize, u32),
    ) {
        let n = masks.len();
        if size + (n - v) <= best.0 {
            return;
        }
        if v == n {
            *best = (size, chosen);
            return;
        }
        if masks[v] & covered == 0 {
            dfs(
                v + 1,
                masks,
                chosen | 1 << v,
                covered | masks[v],
                size + 1,
                best,
            );
        }
        dfs(v + 1, masks, chosen, covered, size, best);
    }
    dfs(0, &masks, 0, 0, 0, &mut best);
    let witness = (0..g.n()).filter(|&v| best.1 >> v & 1 == 1).collect();
    Ok((best.0, witness))
}

/// `p(G)` or `p_o(G)`: a minimum partition of `V(G)` into packings.
///
/// Backtracking over vertex-to-class assignments with vertices taken in
/// decreasing degree order; a branch is abandoned as soon as it needs as
/// many classes as the incumbent.
pub fn min_partition(mode: PackingMode, g: &Graph) -> Result<PartitionCertificate> {
    check_limit("minimum packing partition", MIN_PARTITION_LIMIT, g.n())?;
    let n = g.n();
    let masks = masks(mode, g);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (Reverse(g.degree(v)), v));

    let mut search = PartitionSearch {
        masks: &masks,
        order: &order,
        members: Vec::new(),
        covered: Vec::new(),
        best: (0..n).map(|v| 1u32 << v).collect(),
    };
    search.run(0);

    let mut classes: Vec<Vec<usize>> = search
        .best
        .iter()
        .map(|&m| (0..n).filter(|&v| m >> v & 1 == 1).collect())
        .collect();
    classes.sort();
    Ok(PartitionCertificate { mode, classes })
}

struct PartitionSearch<'a> {
    masks: &'a [u32],
    order: &'a [usize],
    /// Member mask per open class.
    members: Vec<u32>,
    /// Union of member neighborhoods per open class.
    covered: Vec<u32>,
    best: Vec<u32>,
}

impl PartitionSearch<'_> {
    fn run(&mut self, i: usize) {
        if self.members.len() >= self.best.len() {
            return;
        }
        if i == self.order.len() {
            self.best = self.members.clone();
            return;
        }
        let v = self.order[i];
        let mask = self.masks[v];
        for c in 0..self.members.len() {
            if self.covered[c] & mask == 0 {
                self.members[c] |= 1 << v;
                self.covered[c] |= mask;
                self.run(i + 1);
                self.members[c] &= !(1 << v);
                self.covered[c] &= !mask;
                // Neighborhoods within a class are disjoint, so clearing
                // `mask` restores the previous union exactly.
            }
        }
        if self.members.len() + 1 < self.best.len() {
            self.members.push(1 << v);
            self.covered.push(mask);
            self.run(i + 1);
            self.members.pop();
            self.covered.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path, Graph};

    #[test]
    fn is_packing_examples() {
        let p3 = path(3);
        assert!(!is_packing(PackingMode::Open, &p3, &[0, 2]).unwrap());
        assert!(is_packing(PackingMode::Open, &cycle(4), &[0, 1]).unwrap());
        assert!(!is_packing(PackingMode::Closed, &cycle(4), &[0, 1]).unwrap());
        assert!(is_packing(PackingMode::Open, &p3, &[]).unwrap());
        assert!(is_packing(PackingMode::Closed, &p3, &[1]).unwrap());
        assert!(is_packing(PackingMode::Open, &path(2), &[0, 1]).unwrap());
        assert!(is_packing(PackingMode::Open, &p3, &[5]).is_err());
    }

    #[test]
    fn max_packing_examples() {
        assert_eq!(
            max_packing(PackingMode::Open, &complete(2)).unwrap(),
            (2, vec![0, 1])
        );
        assert_eq!(
            max_packing(PackingMode::Open, &cycle(4)).unwrap(),
            (2, vec![0, 1])
        );
        assert_eq!(
            max_packing(PackingMode::Closed, &cycle(4)).unwrap(),
            (1, vec![0])
        );
        assert_eq!(
            max_packing(PackingMode::Closed, &Graph::empty(0)).unwrap(),
            (0, vec![])
        );
        assert!(max_packing(PackingMode::Open, &cycle(25)).is_err());
    }

    #[test]
    fn min_partition_examples() {
        let c4 = min_partition(PackingMode::Open, &cycle(4)).unwrap();
        assert_eq!(c4.classes, vec![vec![0, 1], vec![2, 3]]);
        assert!(c4.verify(&cycle(4)).unwrap());

        assert_eq!(
            min_partition(PackingMode::Open, &cycle(7)).unwrap().size(),
            3
        );
        assert_eq!(
            min_partition(PackingMode::Closed, &path(4)).unwrap().size(),
            3
        );
        assert_eq!(
            min_partition(PackingMode::Open, &Graph::empty(0))
                .unwrap()
                .size(),
            0
        );
        assert_eq!(
            min_partition(PackingMode::Open, &Graph::empty(3))
                .unwrap()
                .size(),
            1
        );
        assert!(min_partition(PackingMode::Open, &cycle(13)).is_err());
    }

    #[test]
    fn certificate_rejects_bad_partitions() {
        let cert = PartitionCertificate {
            mode: PackingMode::Open,
            classes: vec![vec![0, 2], vec![1, 3]],
        };
        assert!(!cert.verify(&cycle(4)).unwrap());
        let missing = PartitionCertificate {
            mode: PackingMode::Open,
            classes: vec![vec![0, 1]],
        };
        assert!(!missing.verify(&cycle(4)).unwrap());
    }
}
