//! Oscillating tableaux, ascents, strict partitions and double diagrams, and
//! the binomial sums that count ASMs and DPPs by `ν`.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{binom, Integer};
use crate::error::{Error, Result};

/// A Young diagram given by its weakly decreasing positive row lengths.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidTableau(format!("{parts:?} is not a partition")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn row_len(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Rows (0-based) where a square can be added.
    fn addable(&self) -> impl Iterator<Item = usize> + '_ {
        (0..=self.0.len()).filter(|&i| i == 0 || self.row_len(i - 1) > self.row_len(i))
    }

    /// Rows (0-based) whose last square can be removed.
    fn removable(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.0.len()).filter(|&i| self.row_len(i) > self.row_len(i + 1))
    }

    fn with_added(&self, i: usize) -> Partition {
        let mut p = self.0.clone();
        if i == p.len() {
            p.push(1);
        } else {
            p[i] += 1;
        }
        Partition(p)
    }

    fn with_removed(&self, i: usize) -> Partition {
        let mut p = self.0.clone();
        p[i] -= 1;
        if p[i] == 0 {
            p.pop();
        }
        Partition(p)
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

/// Strictly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct StrictPartition(Vec<u32>);

impl StrictPartition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::InvalidTableau(format!("{parts:?} is not a strict partition")));
        }
        Ok(StrictPartition(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl TryFrom<Vec<u32>> for StrictPartition {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        StrictPartition::new(v)
    }
}

impl From<StrictPartition> for Vec<u32> {
    fn from(p: StrictPartition) -> Self {
        p.0
    }
}

/// An oscillating tableau: diagrams `η_0 = ∅, …, η_l`, each differing from
/// the previous by one square. `changes[k]` is the 1-based `(row, column)` of
/// the square added or removed at step `k + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OscTab {
    diagrams: Vec<Partition>,
    changes: Vec<(u32, u32)>,
}

impl OscTab {
    /// Builds a tableau from its diagram sequence, recording the change log.
    pub fn new(diagrams: Vec<Partition>) -> Result<Self> {
        let bad = |m: String| Err(Error::InvalidTableau(m));
        match diagrams.first() {
            Some(p) if p.is_empty() => {}
            _ => return bad("an oscillating tableau starts at the empty diagram".into()),
        }
        let mut changes = Vec::with_capacity(diagrams.len() - 1);
        for (k, w) in diagrams.windows(2).enumerate() {
            let (a, b) = (&w[0], &w[1]);
            let rows = a.0.len().max(b.0.len());
            let diff: Vec<(usize, i64)> = (0..rows)
                .map(|i| (i, b.row_len(i) as i64 - a.row_len(i) as i64))
                .filter(|&(_, d)| d != 0)
                .collect();
            match diff[..] {
                [(i, 1)] => changes.push((i as u32 + 1, b.row_len(i))),
                [(i, -1)] => changes.push((i as u32 + 1, a.row_len(i))),
                _ => return bad(format!("steps {k} and {} differ by more than one square", k + 1)),
            }
        }
        Ok(OscTab { diagrams, changes })
    }

    pub fn diagrams(&self) -> &[Partition] {
        &self.diagrams
    }

    pub fn changes(&self) -> &[(u32, u32)] {
        &self.changes
    }

    pub fn length(&self) -> usize {
        self.changes.len()
    }

    pub fn shape(&self) -> &Partition {
        self.diagrams.last().expect("nonempty")
    }

    /// Contents `j_k - i_k` of the changed squares.
    pub fn contents(&self) -> impl Iterator<Item = i64> + '_ {
        self.changes.iter().map(|&(i, j)| j as i64 - i as i64)
    }

    pub fn ascent_count(&self) -> usize {
        let c: Vec<i64> = self.contents().collect();
        c.windows(2).filter(|w| content_order(w[0], w[1]) == Ordering::Less).count()
    }
}

/// The order `… ≺ -2 ≺ 2 ≺ -1 ≺ 1 ≺ 0` on contents.
pub fn content_order(d: i64, e: i64) -> Ordering {
    e.abs().cmp(&d.abs()).then(d.cmp(&e))
}

pub fn ascent_count(t: &OscTab) -> usize {
    t.ascent_count()
}

/// All oscillating tableaux of the given shape and length.
pub fn enumerate_oscillating(shape: &Partition, length: usize) -> Vec<OscTab> {
    let mut out = Vec::new();
    let size = shape.size() as usize;
    if length < size || (length - size) % 2 == 1 {
        return out;
    }
    let mut path = vec![Partition::empty()];
    walk(shape, length, &mut path, &mut out);
    out
}

fn walk(shape: &Partition, length: usize, path: &mut Vec<Partition>, out: &mut Vec<OscTab>) {
    let cur = path.last().expect("nonempty").clone();
    let left = length + 1 - path.len();
    if left == 0 {
        if &cur == shape {
            out.push(OscTab::new(path.clone()).expect("valid by construction"));
        }
        return;
    }
    // Distance to the target bounds the remaining steps.
    let dist = |p: &Partition| {
        let rows = p.0.len().max(shape.0.len());
        (0..rows).map(|i| p.row_len(i).abs_diff(shape.row_len(i)) as usize).sum::<usize>()
    };
    let nexts: Vec<Partition> =
        cur.addable().map(|i| cur.with_added(i)).chain(cur.removable().map(|i| cur.with_removed(i))).collect();
    for next in nexts {
        if dist(&next) < left {
            path.push(next);
            walk(shape, length, path, out);
            path.pop();
        }
    }
}

/// The double diagram: `r` diagonal squares, `κ_i` squares right of the
/// diagonal in row `i` and `κ_i - 1` below it in column `i`.
pub fn delta_diagram(k: &StrictPartition) -> Partition {
    let kappa = k.parts();
    let r = kappa.len();
    let mut rows: Vec<u32> = Vec::new();
    for (i, &ki) in kappa.iter().enumerate() {
        rows.push(i as u32 + 1 + ki);
    }
    // Column i (0-based) extends to row i + κ_i - 1 (0-based).
    let depth = kappa.iter().enumerate().map(|(i, &ki)| i + ki as usize).max().unwrap_or(0);
    for row in r..depth {
        let len = kappa.iter().enumerate().filter(|&(i, &ki)| i + ki as usize > row).count();
        rows.push(len as u32);
    }
    Partition::new(rows).expect("double diagrams are partitions")
}

/// Strict partitions of `p`, in lexicographically decreasing order.
pub fn strict_partitions(p: u32) -> Vec<StrictPartition> {
    fn go(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<StrictPartition>) {
        if rest == 0 {
            out.push(StrictPartition(cur.clone()));
            return;
        }
        for part in (1..=max.min(rest)).rev() {
            cur.push(part);
            go(rest - part, part - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(p, p, &mut Vec::new(), &mut out);
    out
}

/// Tableaux of length `2p` ending at `∅`.
pub fn asm_side_tableaux(p: u32) -> Vec<OscTab> {
    enumerate_oscillating(&Partition::empty(), 2 * p as usize)
}

/// Tableaux of length `2p` ending at some `Δ(κ)` with `κ` a strict partition of `p`.
pub fn dpp_side_tableaux(p: u32) -> Vec<OscTab> {
    strict_partitions(p)
        .iter()
        .flat_map(|k| enumerate_oscillating(&delta_diagram(k), 2 * p as usize))
        .collect()
}

/// `counts[s]` is the number of tableaux with `s` ascents.
pub fn ascent_distribution(tabs: &[OscTab]) -> Vec<u64> {
    let mut counts = Vec::new();
    for t in tabs {
        let s = t.ascent_count();
        if counts.len() <= s {
            counts.resize(s + 1, 0);
        }
        counts[s] += 1;
    }
    counts
}

fn binomial_sum(n: usize, p: u32, tabs: &[OscTab]) -> Integer {
    tabs.iter().map(|t| binom((n + t.ascent_count()) as i64, 2 * p as i64)).sum()
}

/// `(Σ_η C(n + asc η, 2p))` over the ASM-side and DPP-side tableaux.
pub fn osc_counts(n: usize, p: u32) -> (Integer, Integer) {
    (binomial_sum(n, p, &asm_side_tableaux(p)), binomial_sum(n, p, &dpp_side_tableaux(p)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn tab(ds: &[&[u32]]) -> OscTab {
        OscTab::new(ds.iter().map(|d| part(d)).collect()).unwrap()
    }

    #[test]
    fn double_factorial_sizes() {
        let sizes: Vec<usize> = (0..=4).map(|p| asm_side_tableaux(p).len()).collect();
        assert_eq!(sizes, [1, 1, 3, 15, 105]);
        let sizes: Vec<usize> = (0..=4).map(|p| dpp_side_tableaux(p).len()).collect();
        assert_eq!(sizes, [1, 1, 3, 15, 105]);
    }

    #[test]
    fn listed_ascents() {
        assert_eq!(tab(&[&[], &[1], &[], &[1], &[]]).ascent_count(), 0);
        assert_eq!(tab(&[&[], &[1], &[2], &[1], &[]]).ascent_count(), 1);
        assert_eq!(tab(&[&[], &[1], &[1, 1], &[1], &[]]).ascent_count(), 1);
        assert_eq!(tab(&[&[], &[1], &[2], &[1], &[]]).changes(), [(1, 1), (1, 2), (1, 2), (1, 1)]);
    }

    #[test]
    fn rejects_bad_sequences() {
        assert!(OscTab::new(vec![part(&[1])]).is_err());
        assert!(OscTab::new(vec![part(&[]), part(&[2])]).is_err());
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(StrictPartition::new(vec![2, 2]).is_err());
    }

    #[test]
    fn order_chain() {
        let chain = [-3, 3, -2, 2, -1, 1, 0];
        for w in chain.windows(2) {
            assert_eq!(content_order(w[0], w[1]), Ordering::Less);
        }
    }

    #[test]
    fn double_diagrams() {
        let d = |v: &[u32]| delta_diagram(&StrictPartition::new(v.to_vec()).unwrap());
        assert_eq!(d(&[1]), part(&[2]));
        assert_eq!(d(&[2]), part(&[3, 1]));
        assert_eq!(d(&[2, 1]), part(&[3, 3]));
        for p in 1..=5 {
            for k in strict_partitions(p) {
                assert_eq!(delta_diagram(&k).size(), 2 * p);
            }
        }
    }

    #[test]
    fn small_shapes() {
        assert_eq!(enumerate_oscillating(&part(&[]), 0).len(), 1);
        assert!(enumerate_oscillating(&part(&[1]), 2).is_empty());
        assert_eq!(enumerate_oscillating(&part(&[1]), 3).len(), 3);
    }

    #[test]
    fn p2_closed_form() {
        for n in 0..10 {
            let expect: Integer = binom(n, 4) + binom(n + 1, 4) * 2;
            let (a, d) = osc_counts(n as usize, 2);
            assert_eq!((a, d), (expect.clone(), expect));
        }
        assert_eq!(osc_counts(5, 0), (1.into(), 1.into()));
    }
}
