//! Descending plane partitions: validation, enumeration, the statistics
//! `(ν, μ, ρ)`, and brute-force generating functions.
//!
//! Row `i` (1-based) of a DPP occupies absolute columns `i .. i + λ_i - 1`,
//! so part `D_ij` sits in absolute column `j`. It is special when
//! `D_ij ≤ j - i`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::{MultiPoly, Var, NVARS};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<u32>>", into = "Vec<Vec<u32>>")]
pub struct Dpp {
    rows: Vec<Vec<u32>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DppStats {
    pub nu: u32,
    pub mu: u32,
    pub rho: u32,
    pub parts_sum: u32,
    pub row_count: u32,
}

impl Dpp {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let d = Dpp { rows };
        d.validate()?;
        Ok(d)
    }

    pub fn empty() -> Self {
        Dpp { rows: Vec::new() }
    }

    fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidDpp(m));
        for (r, row) in self.rows.iter().enumerate() {
            let i = r + 1;
            if row.is_empty() {
                return bad(format!("row {i} is empty"));
            }
            if row.contains(&0) {
                return bad(format!("row {i} has a zero part"));
            }
            if row.windows(2).any(|w| w[0] < w[1]) {
                return bad(format!("row {i} is not weakly decreasing"));
            }
            // D_ii > λ_i >= D_{i+1,i+1}.
            let len = row.len() as u32;
            if row[0] <= len {
                return bad(format!("D_{i}{i} = {} does not exceed the row length {len}", row[0]));
            }
            if let Some(next) = self.rows.get(r + 1) {
                if next.first().is_some_and(|&d| d > len) {
                    return bad(format!("row {} starts above the length of row {i}", i + 1));
                }
                // Column j = i + 1 + k holds next[k] under row[k + 1].
                for (k, &d) in next.iter().enumerate() {
                    match row.get(k + 1) {
                        Some(&above) if above > d => {}
                        _ => return bad(format!("column {} is not strictly decreasing", i + 1 + k)),
                    }
                }
            }
        }
        Ok(())
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Parts as `(i, j, D_ij)` with 1-based row and absolute column.
    pub fn parts(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().enumerate().map(move |(k, &d)| (r + 1, r + 1 + k, d)))
    }

    pub fn max_part(&self) -> u32 {
        self.rows.first().map_or(0, |r| r[0])
    }

    pub fn parts_sum(&self) -> u32 {
        self.rows.iter().flatten().sum()
    }

    /// Statistics as an element of DPP(n).
    pub fn stats(&self, n: usize) -> Result<DppStats> {
        if self.max_part() as usize > n {
            return Err(Error::OutOfRange(format!("largest part {} exceeds n = {n}", self.max_part())));
        }
        let mut s = DppStats { nu: 0, mu: 0, rho: 0, parts_sum: 0, row_count: self.rows.len() as u32 };
        for (i, j, d) in self.parts() {
            if d as usize <= j - i {
                s.mu += 1;
            } else {
                s.nu += 1;
            }
            if d as usize == n {
                s.rho += 1;
            }
            s.parts_sum += d;
        }
        Ok(s)
    }
}

impl TryFrom<Vec<Vec<u32>>> for Dpp {
    type Error = Error;
    fn try_from(rows: Vec<Vec<u32>>) -> Result<Self> {
        Dpp::new(rows)
    }
}

impl From<Dpp> for Vec<Vec<u32>> {
    fn from(d: Dpp) -> Self {
        d.rows
    }
}

impl fmt::Debug for Dpp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Dpp({self})")
    }
}

/// Rows as space-separated parts joined by ` / `; the empty DPP is `()`.
impl fmt::Display for Dpp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return f.write_str("()");
        }
        let rows: Vec<String> =
            self.rows.iter().map(|r| r.iter().map(u32::to_string).collect::<Vec<_>>().join(" ")).collect();
        f.write_str(&rows.join(" / "))
    }
}

impl FromStr for Dpp {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "()" || s.is_empty() {
            return Ok(Dpp::empty());
        }
        let rows = s
            .split('/')
            .map(|r| {
                r.split_whitespace()
                    .map(|p| p.parse::<u32>().map_err(|_| Error::Parse(format!("bad part {p:?}"))))
                    .collect::<Result<Vec<u32>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Dpp::new(rows)
    }
}

struct Builder<'a> {
    n: u32,
    rows: Vec<Vec<u32>>,
    out: &'a mut Vec<Dpp>,
}

impl Builder<'_> {
    /// Emits the current DPP, then every extension by further rows.
    fn extend(&mut self) {
        self.out.push(Dpp { rows: self.rows.clone() });
        let (max_first, above): (u32, Vec<u32>) = match self.rows.last() {
            None => (self.n, Vec::new()),
            Some(prev) => (prev.len() as u32, prev[1..].to_vec()),
        };
        let first_cap = above.first().map_or(max_first, |&a| max_first.min(a.saturating_sub(1)));
        for first in 2..=first_cap {
            for len in 1..first {
                if !self.rows.is_empty() && len as usize > above.len() {
                    break;
                }
                let mut row = vec![first];
                self.fill(&mut row, len as usize, &above);
            }
        }
    }

    fn fill(&mut self, row: &mut Vec<u32>, len: usize, above: &[u32]) {
        if row.len() == len {
            self.rows.push(row.clone());
            self.extend();
            self.rows.pop();
            return;
        }
        let k = row.len();
        let mut cap = row[k - 1];
        if let Some(&a) = above.get(k) {
            cap = cap.min(a - 1);
        } else if !self.rows.is_empty() {
            return;
        }
        for d in 1..=cap {
            row.push(d);
            self.fill(row, len, above);
            row.pop();
        }
    }
}

/// Sort key fixing the enumeration order: row count, diagonal parts, row
/// lengths, then all parts row by row.
fn order_key(d: &Dpp) -> (usize, Vec<u32>, Vec<usize>, Vec<u32>) {
    (
        d.rows.len(),
        d.rows.iter().map(|r| r[0]).collect(),
        d.rows.iter().map(Vec::len).collect(),
        d.rows.iter().flatten().copied().collect(),
    )
}

/// All DPPs with parts at most `n`, ordered by row count, then diagonal
/// parts, then row lengths, then the remaining parts.
pub fn enumerate_dpps(n: usize) -> Result<Vec<Dpp>> {
    if n == 0 {
        return Err(Error::EmptyOrder);
    }
    crate::check_enum_limit("DPP enumeration", n)?;
    let mut out = Vec::new();
    Builder { n: n as u32, rows: Vec::new(), out: &mut out }.extend();
    out.sort_by_cached_key(order_key);
    Ok(out)
}

fn collect_poly(n: usize, mut exps: impl FnMut(&DppStats) -> Vec<u32>) -> Result<MultiPoly> {
    let mut h: HashMap<Vec<u32>, u64> = HashMap::new();
    for d in enumerate_dpps(n)? {
        *h.entry(exps(&d.stats(n)?)).or_insert(0) += 1;
    }
    MultiPoly::from_terms(NVARS, h.into_iter().map(|(e, c)| (e, c.into())))
}

/// `Σ_{D ∈ DPP(n)} x^ν y^μ z^ρ`.
pub fn z_dpp_brute(n: usize) -> Result<MultiPoly> {
    collect_poly(n, |s| vec![s.nu, s.mu, s.rho, 0, 0])
}

/// `Σ_{D ∈ DPP(n)} w^{rows + 1} x^ν y^μ z^ρ`.
pub fn z_dpp_brute_w(n: usize) -> Result<MultiPoly> {
    collect_poly(n, |s| vec![s.nu, s.mu, s.rho, s.row_count + 1, 0])
}

/// `Σ_{D ∈ DPP(n)} q^{|D|}`, in the variable `q`.
pub fn q_sum_of_parts(n: usize) -> Result<MultiPoly> {
    let mut e = [0u32; NVARS];
    collect_poly(n, |s| {
        e[Var::Q.index()] = s.parts_sum;
        e.to_vec()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example() -> Dpp {
        Dpp::new(vec![vec![6, 6, 6, 5, 2], vec![4, 4, 1], vec![3]]).unwrap()
    }

    #[test]
    fn worked_example_statistics() {
        let s = example().stats(6).unwrap();
        assert_eq!((s.nu, s.mu, s.rho), (7, 2, 3));
        assert_eq!(s.parts_sum, 37);
        assert_eq!(s.row_count, 3);
        assert!(example().stats(5).is_err());
    }

    #[test]
    fn rejects_invalid() {
        assert!(Dpp::new(vec![vec![2, 2]]).is_err());
        assert!(Dpp::new(vec![vec![3, 3], vec![3]]).is_err());
        assert!(Dpp::new(vec![vec![3, 1], vec![2]]).is_err());
        assert!(Dpp::new(vec![vec![2, 3]]).is_err());
        assert!(Dpp::new(vec![vec![]]).is_err());
        assert!(Dpp::new(vec![vec![4, 4, 1], vec![3, 2]]).is_err());
    }

    #[test]
    fn counts_and_listing() {
        let counts: Vec<usize> = (1..=6).map(|n| enumerate_dpps(n).unwrap().len()).collect();
        assert_eq!(counts, [1, 2, 7, 42, 429, 7436]);
        let listed: Vec<String> = enumerate_dpps(3).unwrap().iter().map(Dpp::to_string).collect();
        assert_eq!(listed, ["()", "2", "3", "3 1", "3 2", "3 3", "3 3 / 2"]);
    }

    #[test]
    fn text_and_json_roundtrip() {
        for d in enumerate_dpps(5).unwrap() {
            assert_eq!(d.to_string().parse::<Dpp>().unwrap(), d);
            let j = serde_json::to_string(&d).unwrap();
            assert_eq!(serde_json::from_str::<Dpp>(&j).unwrap(), d);
        }
        assert_eq!(serde_json::to_string(&example()).unwrap(), "[[6,6,6,5,2],[4,4,1],[3]]");
    }

    #[test]
    fn brute_z3() {
        let z: MultiPoly = "1+x^3z^2+x+x^2z^2+xz+x^2z+xyz".parse().unwrap();
        assert_eq!(z_dpp_brute(3).unwrap(), z);
    }
}
